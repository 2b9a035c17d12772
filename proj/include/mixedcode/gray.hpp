#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "mixedcode/code.hpp"

namespace mixedcode {

// Linear code over a finite field with cached reduced row echelon basis.
class FieldCode {
  public:
    FieldCode(std::shared_ptr<const Field> field, std::uint32_t n, std::vector<std::vector<FElem>> generators);

    const Field& field() const { return *field_; }
    std::shared_ptr<const Field> field_ptr() const { return field_; }
    std::uint32_t length() const { return n_; }
    std::uint32_t dim() const { return static_cast<std::uint32_t>(basis_.size()); }
    const std::vector<std::vector<FElem>>& generators() const { return gens_; }
    const std::vector<std::vector<FElem>>& basis() const { return basis_; }  // unique RREF

    bool contains(const std::vector<FElem>& w) const;
    std::vector<std::vector<FElem>> enumerate(std::uint64_t cap = std::uint64_t(1) << 20) const;
    bool row_space_equal(const FieldCode& o) const;

  private:
    std::shared_ptr<const Field> field_;
    std::uint32_t n_;
    std::vector<std::vector<FElem>> gens_;
    std::vector<std::vector<FElem>> basis_;
    std::vector<std::uint32_t> pivot_cols_;
};

// Twisted dual with respect to <u, v> = sum u_j v_j^(p^frob).
FieldCode field_dual(const FieldCode& c, std::uint32_t frob = 0);
// Generator-Gram criterion: G conj(G)^T invertible.
bool field_is_lcd(const FieldCode& c, std::uint32_t frob = 0);
std::uint64_t min_distance(const FieldCode& c, std::uint64_t cap = std::uint64_t(1) << 20);
std::vector<std::uint64_t> weight_distribution(const FieldCode& c, std::uint64_t cap = std::uint64_t(1) << 20);

// Generator matrix of the first order generalized Reed-Muller code of length
// size(field)^(t-1): rows are tensor powers of the all-ones vector around the
// column labelling vector (0, 1, eps, eps^2, ...). t = 1 yields the 1x1
// identity block used by passthrough coordinates.
std::vector<std::vector<FElem>> rm_generator(const Field& f, std::uint32_t t);

// Digit-expansion Gray encoding: each x coordinate expands through the
// length-q^(m(r-1)) block, each y coordinate through the length-q^(m(s-1))
// block. An isometry from homogeneous distance to Hamming distance.
std::vector<FElem> gray_map(const MixedSpace& sp, const MixedVec& v);
std::uint32_t gray_length(const MixedSpace& sp);

struct GrayImage {
    std::vector<std::vector<FElem>> words;  // sorted lexicographically
    bool linear = false;
    std::optional<FieldCode> as_code;  // present when linear
};
GrayImage gray_image(const MixedCode& c, std::uint64_t cap = std::uint64_t(1) << 16);

// Whether the generalized Reed-Muller self-orthogonality bound applies to the
// space: (r - 1)(q^m - 1) >= 3.
bool gray_self_orth_applicable(const MixedSpace& sp);
// Checks gray(C) subset of gray(C)^perp_h by all pairwise products.
bool gray_self_orthogonal(const MixedCode& c, std::uint32_t h, std::uint64_t cap = std::uint64_t(1) << 12);

// ----- alphabet change between Z_{q^2} and F_q[t]/(t^2), q in {2, 3} -----

struct DigitAlphabetPair {
    MixedSpace zspace;  // over Z_{q^2}
    MixedSpace fspace;  // over F_q[t]/(t^2)
    std::uint32_t q;
};
DigitAlphabetPair make_digit_alphabet_pair(std::uint32_t q, std::uint32_t alpha, std::uint32_t beta);

// b + q c  ->  b + t c, digitwise bijection between the two chain rings.
RElem digit_reencode_elem(const DigitAlphabetPair& pair, RElem zelem);
RElem digit_reencode_elem_inv(const DigitAlphabetPair& pair, RElem felem);
MixedVec digit_reencode_vec(const DigitAlphabetPair& pair, const MixedVec& v);
MixedVec digit_reencode_vec_inv(const DigitAlphabetPair& pair, const MixedVec& v);

MixedVec componentwise_product(const MixedSpace& sp, const MixedVec& u, const MixedVec& v);
MixedVec componentwise_power(const MixedSpace& sp, const MixedVec& u, std::uint32_t e);

// The obstruction set { q * (u^(q-1) star v^(q-1)) : u in C, v in dual(C) }.
struct ObstructionSet {
    std::vector<MixedVec> elems;  // deduplicated
    bool zero_only = false;
};
ObstructionSet linearity_obstruction_set(const MixedCode& c, std::uint64_t cap = std::uint64_t(1) << 16);

// X-block projection of a Z_q Z_{q^2} code as a code over F_q.
FieldCode puncture_x(const MixedCode& c);

// Full duality-transfer report for a Z_q Z_{q^2} code, q in {2, 3}.
struct TransferReport {
    std::uint32_t q = 0;
    bool obstruction_zero = false;  // transfer machinery applicable
    bool source_lcd = false;
    bool reencoded_linear = false;
    std::optional<bool> reencoded_lcd;
    std::optional<bool> gray_linear;      // q = 2
    std::optional<bool> binary_lcd;       // q = 2
    std::optional<FieldCode> gray_code;   // q = 2
    std::optional<bool> puncture_lcd;     // q = 3
    bool dual_reencode_match = false;     // reencode(dual) == dual(reencode)
    std::optional<bool> gray_dual_match;  // q = 2: gray(reencode(dual)) == dual(gray image)
    // biconditionals among the computed verdicts, reported one by one: the
    // reencoding and binary transfers are theorems under the obstruction
    // condition; the ternary puncture direction admits counterexamples whose
    // hull sits inside the socle of the y block, so it is reported, not
    // assumed.
    std::optional<bool> reencode_biconditional;
    std::optional<bool> gray_biconditional;      // q = 2
    std::optional<bool> puncture_biconditional;  // q = 3
    bool verdicts_consistent = false;            // provable transfers only
};
TransferReport lcd_transfer(const MixedCode& c, std::uint64_t cap = std::uint64_t(1) << 16);

}  // namespace mixedcode
