#pragma once

#include <memory>
#include <string>

#include "json.hpp"
#include "mixedcode/code.hpp"
#include "mixedcode/gray.hpp"

namespace mixedcode {

using Json = nlohmann::json;

// Ring specifications:
//   {"family": "galois_ring" | "quasi_galois_ring", "p": 2, "s": 3, "m": 2,
//    "e": 1, "modulus": [1, 1, 1]}
// with "e" and "modulus" optional (table default).
Json ring_spec_to_json(const RingSpec& spec);
RingSpec ring_spec_from_json(const Json& j);

// Elements serialize as coordinate arrays in the canonical representation:
// galois_ring -> m residues mod p^s, quasi_galois_ring -> s coefficient
// arrays over F_p (bare integers accepted where unambiguous).
Json relem_to_json(const Ring& ring, RElem v);
RElem relem_from_json(const Ring& ring, const Json& j);

Json ring_mat_to_json(const RingMat& m);
RingMat ring_mat_from_json(std::shared_ptr<const Ring> ring, std::uint32_t cols, const Json& j);

// Mixed matrices: {"x": [[..]], "y": [[..]]}
Json mixed_mat_to_json(const MixedMat& m);
MixedMat mixed_mat_from_json(const MixedSpace& sp, const Json& j);

// Code files: {"ring": spec, "r": 1, "alpha": 3, "beta": 2,
//              "generators": {"x": [[..]], "y": [[..]]}}
Json code_to_json(const MixedCode& c);
MixedCode code_from_json(const Json& j);

// Field codes: {"field": {"p", "k", "modulus"}, "n": 7, "generators": [[..]]}
Json field_code_to_json(const FieldCode& c);
FieldCode field_code_from_json(const Json& j);

Json gray_image_to_json(const MixedSpace& sp, const GrayImage& img);

Json code_type_to_json(const CodeType& t);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace mixedcode
