#include "mixedcode/json_io.hpp"

#include <fstream>

namespace mixedcode {

Json ring_spec_to_json(const RingSpec& spec) {
    Json j;
    j["family"] = spec.family == RingFamily::GaloisRing ? "galois_ring" : "quasi_galois_ring";
    j["p"] = spec.p;
    j["s"] = spec.s;
    j["m"] = spec.m;
    if (spec.e != 1) j["e"] = spec.e;
    j["modulus"] = spec.modulus;
    return j;
}

RingSpec ring_spec_from_json(const Json& j) {
    RingSpec spec;
    std::string fam = j.at("family").get<std::string>();
    if (fam == "galois_ring")
        spec.family = RingFamily::GaloisRing;
    else if (fam == "quasi_galois_ring")
        spec.family = RingFamily::QuasiGaloisRing;
    else
        throw std::invalid_argument("unknown ring family: " + fam);
    spec.p = j.at("p").get<std::uint32_t>();
    spec.s = j.at("s").get<std::uint32_t>();
    spec.m = j.at("m").get<std::uint32_t>();
    spec.e = j.value("e", 1u);
    if (j.contains("modulus")) spec.modulus = j["modulus"].get<std::vector<std::uint32_t>>();
    return spec;
}

Json relem_to_json(const Ring& ring, RElem v) {
    Json j = Json::array();
    if (ring.family() == RingFamily::GaloisRing) {
        RElem rem = v;
        std::uint64_t base = 1;
        for (std::uint32_t i = 0; i < ring.s(); ++i) base *= ring.p();
        for (std::uint32_t i = 0; i < ring.m(); ++i) {
            j.push_back(rem % base);
            rem = static_cast<RElem>(rem / base);
        }
        return j;
    }
    auto digits = ring.theta_adic(v);
    for (auto d : digits) j.push_back(ring.residue_field().coeffs(d));
    return j;
}

RElem relem_from_json(const Ring& ring, const Json& j) {
    if (ring.family() == RingFamily::GaloisRing) {
        std::uint64_t base = 1;
        for (std::uint32_t i = 0; i < ring.s(); ++i) base *= ring.p();
        std::vector<std::uint64_t> digits;
        if (j.is_number_unsigned() || j.is_number_integer()) {
            digits.push_back(j.get<std::uint64_t>());
        } else {
            digits = j.get<std::vector<std::uint64_t>>();
        }
        if (digits.size() > ring.m()) throw std::invalid_argument("too many element coordinates");
        digits.resize(ring.m(), 0);
        RElem v = 0;
        for (std::uint32_t i = ring.m(); i-- > 0;) {
            if (digits[i] >= base) throw std::invalid_argument("element coordinate not reduced mod p^s");
            v = static_cast<RElem>(v * base + digits[i]);
        }
        return v;
    }
    const Field& f = ring.residue_field();
    std::vector<FElem> digits;
    if (j.is_number_unsigned() || j.is_number_integer()) {
        std::uint64_t v = j.get<std::uint64_t>();
        if (v >= f.size()) throw std::invalid_argument("element value out of field range");
        digits.push_back(static_cast<FElem>(v));
    } else if (j.is_array()) {
        for (const auto& item : j) {
            if (item.is_number_unsigned() || item.is_number_integer()) {
                std::uint64_t v = item.get<std::uint64_t>();
                if (v >= f.size()) throw std::invalid_argument("element digit out of field range");
                digits.push_back(static_cast<FElem>(v));
            } else {
                digits.push_back(f.from_coeffs(item.get<std::vector<std::uint32_t>>()));
            }
        }
    } else {
        throw std::invalid_argument("element must be an integer or array");
    }
    if (digits.size() > ring.s()) throw std::invalid_argument("too many element digits");
    digits.resize(ring.s(), 0);
    return ring.from_theta_adic(digits);
}

Json ring_mat_to_json(const RingMat& m) {
    Json rows = Json::array();
    for (std::uint32_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::uint32_t j = 0; j < m.cols(); ++j) row.push_back(relem_to_json(m.ring(), m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

RingMat ring_mat_from_json(std::shared_ptr<const Ring> ring, std::uint32_t cols, const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("matrix must be an array of rows");
    RingMat m(ring, static_cast<std::uint32_t>(j.size()), cols);
    for (std::uint32_t i = 0; i < j.size(); ++i) {
        const auto& row = j[i];
        if (!row.is_array() || row.size() != cols) throw std::invalid_argument("matrix row width mismatch");
        for (std::uint32_t c = 0; c < cols; ++c) m.set(i, c, relem_from_json(*ring, row[c]));
    }
    return m;
}

Json mixed_mat_to_json(const MixedMat& m) {
    Json j;
    j["x"] = ring_mat_to_json(m.x);
    j["y"] = ring_mat_to_json(m.y);
    return j;
}

MixedMat mixed_mat_from_json(const MixedSpace& sp, const Json& j) {
    RingMat x = ring_mat_from_json(sp.bar_ptr(), sp.alpha(), j.at("x"));
    RingMat y = ring_mat_from_json(sp.ring_ptr(), sp.beta(), j.at("y"));
    if (x.rows() != y.rows()) throw std::invalid_argument("mixed matrix blocks disagree on row count");
    return {x, y};
}

Json code_to_json(const MixedCode& c) {
    Json j;
    j["ring"] = ring_spec_to_json(c.space().ring().spec());
    j["r"] = c.space().r();
    j["alpha"] = c.space().alpha();
    j["beta"] = c.space().beta();
    j["generators"] = mixed_mat_to_json(c.generators());
    return j;
}

MixedCode code_from_json(const Json& j) {
    RingSpec spec = ring_spec_from_json(j.at("ring"));
    auto ring = Ring::make(spec);
    std::uint32_t r = j.at("r").get<std::uint32_t>();
    std::uint32_t alpha = j.at("alpha").get<std::uint32_t>();
    std::uint32_t beta = j.at("beta").get<std::uint32_t>();
    MixedSpace sp(ring, r, alpha, beta);
    MixedMat g = mixed_mat_from_json(sp, j.at("generators"));
    return MixedCode(sp, g);
}

Json field_code_to_json(const FieldCode& c) {
    Json j;
    const auto& spec = c.field().spec();
    j["field"] = {{"p", spec.p}, {"k", spec.k}, {"modulus", spec.modulus}};
    j["n"] = c.length();
    Json rows = Json::array();
    for (const auto& row : c.generators()) {
        Json jr = Json::array();
        for (auto v : row) {
            if (spec.k == 1)
                jr.push_back(v);
            else
                jr.push_back(c.field().coeffs(v));
        }
        rows.push_back(jr);
    }
    j["generators"] = rows;
    return j;
}

FieldCode field_code_from_json(const Json& j) {
    const auto& jf = j.at("field");
    FieldSpec spec;
    spec.p = jf.at("p").get<std::uint32_t>();
    spec.k = jf.value("k", 1u);
    if (jf.contains("modulus")) spec.modulus = jf["modulus"].get<std::vector<std::uint32_t>>();
    auto field = std::make_shared<Field>(spec);
    std::uint32_t n = j.at("n").get<std::uint32_t>();
    std::vector<std::vector<FElem>> rows;
    for (const auto& jr : j.at("generators")) {
        std::vector<FElem> row;
        for (const auto& item : jr) {
            if (item.is_array())
                row.push_back(field->from_coeffs(item.get<std::vector<std::uint32_t>>()));
            else
                row.push_back(static_cast<FElem>(item.get<std::uint64_t>()));
        }
        if (row.size() != n) throw std::invalid_argument("field code row width mismatch");
        rows.push_back(std::move(row));
    }
    return FieldCode(field, n, rows);
}

Json gray_image_to_json(const MixedSpace& sp, const GrayImage& img) {
    Json j;
    j["linear"] = img.linear;
    if (img.linear) {
        j["code"] = field_code_to_json(*img.as_code);
    } else {
        const auto& spec = sp.ring().residue_field().spec();
        j["field"] = {{"p", spec.p}, {"k", spec.k}, {"modulus", spec.modulus}};
        Json words = Json::array();
        for (const auto& w : img.words) {
            Json jw = Json::array();
            for (auto v : w) jw.push_back(v);
            words.push_back(jw);
        }
        j["words"] = words;
    }
    return j;
}

Json code_type_to_json(const CodeType& t) {
    Json j;
    j["alpha"] = t.alpha;
    j["beta"] = t.beta;
    j["k"] = t.k;
    j["ell"] = t.ell;
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    Json j;
    in >> j;
    return j;
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << j.dump(2) << "\n";
}

}  // namespace mixedcode
