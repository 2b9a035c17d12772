#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace mixedcode {

// Packed element of F_{p^k}: value = sum c_i * p^i with coefficients c_i < p.
using FElem = std::uint32_t;

struct FieldSpec {
    std::uint32_t p = 2;
    std::uint32_t k = 1;
    // Monic irreducible polynomial over F_p, coefficients low-to-high, size k+1.
    // Empty selects the built-in default for (p, k).
    std::vector<std::uint32_t> modulus;

    bool operator==(const FieldSpec& o) const { return p == o.p && k == o.k && modulus == o.modulus; }
};

// Exact arithmetic in F_{p^k} = F_p[X]/(modulus). Immutable after construction;
// safe to share across threads.
class Field {
  public:
    explicit Field(FieldSpec spec);

    std::uint32_t p() const { return spec_.p; }
    std::uint32_t degree() const { return spec_.k; }
    std::uint32_t size() const { return size_; }
    const FieldSpec& spec() const { return spec_; }
    bool same(const Field& o) const { return spec_ == o.spec_; }

    FElem zero() const { return 0; }
    FElem one() const { return 1; }

    FElem add(FElem a, FElem b) const;
    FElem sub(FElem a, FElem b) const;
    FElem neg(FElem a) const;
    FElem mul(FElem a, FElem b) const;
    FElem inv(FElem a) const;  // throws std::domain_error on zero
    FElem pow(FElem a, std::uint64_t e) const;
    // x -> x^(p^times)
    FElem frobenius(FElem a, std::uint32_t times) const;

    FElem from_coeffs(const std::vector<std::uint32_t>& c) const;
    std::vector<std::uint32_t> coeffs(FElem a) const;
    FElem from_int(std::uint64_t v) const { return static_cast<FElem>(v % p()); }

    // Least packed value generating the multiplicative group.
    FElem primitive_element() const { return primitive_; }

    // Multiplicative order of a nonzero element.
    std::uint64_t order(FElem a) const;

  private:
    FieldSpec spec_;
    std::uint32_t size_ = 0;
    FElem primitive_ = 0;
    bool tables_ = false;
    std::vector<FElem> exp_;        // exp_[i] = g^i, i < size-1
    std::vector<std::uint32_t> log_;

    FElem mul_poly(FElem a, FElem b) const;
};

// Pinned default irreducible polynomials; throws std::invalid_argument when
// no entry exists for (p, k). k == 1 always yields X.
std::vector<std::uint32_t> default_field_modulus(std::uint32_t p, std::uint32_t k);

}  // namespace mixedcode
