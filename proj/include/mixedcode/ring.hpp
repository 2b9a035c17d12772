#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "mixedcode/field.hpp"

namespace mixedcode {

// Packed element of a finite chain ring; value < ring size.
//   Galois ring GR(p^s, m):  value = sum coeff_i * (p^s)^i, coefficients of the
//                            representative polynomial modulo f.
//   F_{q^m}[t]/(t^s):        value = sum digit_j * (q^m)^j, digit_j a packed
//                            element of the coefficient field.
using RElem = std::uint32_t;

constexpr int kDegNegInf = -1;  // degree of zero in the digit expansion

enum class RingFamily { GaloisRing, QuasiGaloisRing };

struct RingSpec {
    RingFamily family = RingFamily::GaloisRing;
    std::uint32_t p = 2;
    std::uint32_t e = 1;  // subring residue field F_q, q = p^e (quasi family only)
    std::uint32_t s = 1;  // nilpotency index
    std::uint32_t m = 1;  // extension degree over the distinguished subring
    // GaloisRing: monic degree-m polynomial over Z_{p^s} whose reduction mod p
    // is irreducible. QuasiGaloisRing: degree-(e*m) modulus over F_p for the
    // coefficient field F_{q^m}. Empty selects the built-in default.
    std::vector<std::uint32_t> modulus;

    bool operator==(const RingSpec& o) const {
        return family == o.family && p == o.p && e == o.e && s == o.s && m == o.m && modulus == o.modulus;
    }
};

// A finite chain ring from one of the two constructible families, together
// with its residue field, Teichmueller lifts, digit decompositions, Galois
// automorphisms and subring structure. Immutable after construction; all
// caches are built in the constructor.
class Ring {
  public:
    static std::shared_ptr<const Ring> make(const RingSpec& spec);

    const RingSpec& spec() const { return spec_; }
    RingFamily family() const { return spec_.family; }
    std::uint32_t p() const { return spec_.p; }
    std::uint32_t q() const { return q_; }  // p^e
    std::uint32_t s() const { return spec_.s; }
    std::uint32_t m() const { return spec_.m; }
    std::uint32_t size() const { return size_; }
    std::uint32_t residue_size() const { return residue_->size(); }  // q^m
    const Field& residue_field() const { return *residue_; }
    bool same(const Ring& o) const { return spec_ == o.spec_; }

    RElem zero() const { return 0; }
    RElem one() const { return 1; }
    RElem theta() const { return theta_; }

    RElem add(RElem a, RElem b) const;
    RElem sub(RElem a, RElem b) const;
    RElem neg(RElem a) const;
    RElem mul(RElem a, RElem b) const;
    RElem pow(RElem a, std::uint64_t e) const;
    RElem inv_unit(RElem a) const;  // throws std::domain_error on non-units
    bool is_unit(RElem a) const { return valuation(a) == 0; }

    // max t with a in (theta^t); s for zero.
    std::uint32_t valuation(RElem a) const;
    // canonical y with theta^t * y == a; requires valuation(a) >= t.
    RElem div_theta_pow(RElem a, std::uint32_t t) const;
    RElem mul_theta_pow(RElem a, std::uint32_t t) const;

    FElem residue(RElem a) const;         // projection onto F_{q^m}
    RElem teichmuller_lift(FElem a) const;
    std::vector<FElem> theta_adic(RElem a) const;  // s digits
    RElem from_theta_adic(const std::vector<FElem>& digits) const;
    int deg_theta(RElem a) const;  // kDegNegInf for zero

    // Galois automorphism generator applied h times: every digit gamma is
    // replaced by gamma^(q^h). frobenius(a, m) == a.
    RElem frobenius(RElem a, std::uint32_t h) const;
    RElem trace(RElem a) const;  // sum of frobenius(a, i), i < m
    bool in_subring(RElem a) const;

    // Quotient ring S/(theta^r) of the same family (r = 1..s).
    std::shared_ptr<const Ring> quotient_ring(std::uint32_t r) const;
    // Reduction onto a quotient ring previously produced by quotient_ring.
    RElem reduce_to(const Ring& bar, RElem a) const;
    // Section of reduce_to with digit expansion of degree < bar.s().
    RElem digit_lift_from(const Ring& bar, RElem abar) const;
    // theta^(s-r) * digit_lift_from: the canonical module embedding of the
    // quotient onto the ideal (theta^(s-r)).
    RElem quotient_embed_from(const Ring& bar, RElem abar) const;

    // Distinguished subring R with rank_R(S) = m (Z_{p^s}, resp. F_q[t]/(t^s)).
    std::shared_ptr<const Ring> subring() const;
    RElem embed_subring(const Ring& sub, RElem a) const;
    RElem project_subring(const Ring& sub, RElem a) const;  // requires in_subring
    // Coordinates of an element in the fixed R-basis of S (size m, entries are
    // elements of the subring); basis element 0 is the ring unit.
    std::vector<RElem> subring_coords(const Ring& sub, RElem a) const;
    RElem from_subring_coords(const Ring& sub, const std::vector<RElem>& coords) const;

    // All elements with deg_theta <= maxDeg, in a fixed order; maxDeg = -1
    // yields {0}. Size q^(m*(maxDeg+1)).
    std::vector<RElem> digit_bounded_elements(int maxDeg) const;

    RElem elem_at(std::uint64_t idx) const;  // enumeration by packed value

  private:
    explicit Ring(const RingSpec& spec);
    void validate_and_init();
    void init_teichmuller();
    void init_subring_support();

    std::vector<std::uint64_t> unpack(RElem a) const;  // family-specific digits
    RElem pack(const std::vector<std::uint64_t>& d) const;

    RingSpec spec_;
    std::uint32_t q_ = 2;
    std::uint32_t size_ = 0;
    std::uint32_t psq_ = 0;  // p^s (Galois coefficient modulus)
    RElem theta_ = 0;
    std::shared_ptr<const Field> residue_;
    std::vector<RElem> teich_;  // indexed by residue field value

    // Subring support (built eagerly). For the quasi family: the coefficient
    // field of R, the embedding F_q -> F_{q^m}, and the F_q-basis of F_{q^m}.
    std::shared_ptr<const Field> subfield_;       // F_q (quasi family)
    std::vector<FElem> subfield_embed_;           // F_q value -> F_{q^m} value
    std::vector<std::uint32_t> subfield_project_; // F_{q^m} value -> F_q value + 1, 0 if outside
    std::vector<FElem> module_basis_;             // F_q-basis of F_{q^m}, basis[0] = 1
    std::vector<std::uint32_t> coord_matrix_inv_; // K x K over F_p, row-major
};

}  // namespace mixedcode
