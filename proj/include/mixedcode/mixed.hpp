#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "mixedcode/linalg.hpp"
#include "mixedcode/ring.hpp"

namespace mixedcode {

// Vector over the mixed alphabet: x-block over S/(theta^r), y-block over S.
struct MixedVec {
    std::vector<RElem> x, y;
    bool operator==(const MixedVec& o) const { return x == o.x && y == o.y; }
};

// The ambient module S_bar^alpha x S^beta with its scalar action
// a * (x || y) = (bar(a) x || a y) and the twisted inner products.
class MixedSpace {
  public:
    MixedSpace(std::shared_ptr<const Ring> s, std::uint32_t r, std::uint32_t alpha, std::uint32_t beta);

    const Ring& ring() const { return *s_; }
    const Ring& bar() const { return *sbar_; }
    std::shared_ptr<const Ring> ring_ptr() const { return s_; }
    std::shared_ptr<const Ring> bar_ptr() const { return sbar_; }
    std::uint32_t r() const { return r_; }
    std::uint32_t s() const { return s_->s(); }
    std::uint32_t m() const { return s_->m(); }
    std::uint32_t alpha() const { return alpha_; }
    std::uint32_t beta() const { return beta_; }
    bool same(const MixedSpace& o) const {
        return s_->same(*o.s_) && r_ == o.r_ && alpha_ == o.alpha_ && beta_ == o.beta_;
    }

    MixedVec zero_vec() const { return {std::vector<RElem>(alpha_, 0), std::vector<RElem>(beta_, 0)}; }
    bool is_zero(const MixedVec& v) const;
    MixedVec add(const MixedVec& u, const MixedVec& v) const;
    MixedVec sub(const MixedVec& u, const MixedVec& v) const;
    MixedVec neg(const MixedVec& v) const;
    MixedVec scalar_mul(RElem a, const MixedVec& v) const;  // a in S
    MixedVec frobenius_vec(const MixedVec& v, std::uint32_t h) const;

    // h-twisted inner product with values in S.
    RElem inner_product(const MixedVec& u, const MixedVec& v, std::uint32_t h) const;

    // log_q |ambient| = m (r alpha + s beta)
    std::uint64_t ambient_log_q() const;
    std::uint64_t ambient_size(std::uint64_t cap) const;  // throws CapExceeded beyond cap
    MixedVec vec_at(std::uint64_t idx) const;
    std::uint64_t index_of(const MixedVec& v) const;

    // Module embedding into S^(alpha+beta): x-block scaled onto theta^(s-r)S.
    std::vector<RElem> chi_embed(const MixedVec& v) const;
    // Surjection of S^(alpha+beta) onto the ambient reading x coordinates mod
    // theta^r; satisfies rho_project(w) = chi_unembed(D w) for the
    // theta^(s-r)-scaled x block.
    MixedVec rho_project(const std::vector<RElem>& w) const;
    // Inverse of chi_embed on its image (x coordinates must have valuation
    // >= s - r).
    MixedVec chi_unembed(const std::vector<RElem>& w) const;

    std::uint64_t hom_weight(const MixedVec& v) const;
    std::uint64_t hom_distance(const MixedVec& u, const MixedVec& v) const;

  private:
    std::shared_ptr<const Ring> s_;
    std::shared_ptr<const Ring> sbar_;
    std::uint32_t r_, alpha_, beta_;
};

// Homogeneous weight of a single chain ring element.
std::uint64_t hom_weight_elem(const Ring& ring, RElem a);

// Pair of blocks (X || Y): X over the quotient ring, Y over the full ring,
// with equal row counts.
struct MixedMat {
    RingMat x, y;
    std::uint32_t rows() const { return x.rows(); }
};

MixedMat zero_mixed(const MixedSpace& sp, std::uint32_t rows);
MixedVec mixed_row(const MixedMat& m, std::uint32_t i);
void set_mixed_row(MixedMat& m, std::uint32_t i, const MixedVec& v);
MixedMat mixed_from_rows(const MixedSpace& sp, const std::vector<MixedVec>& rows);
MixedMat stack_mixed(const MixedMat& a, const MixedMat& b);
MixedMat frobenius_mixed(const MixedMat& m, std::uint32_t h);
bool mixed_equal(const MixedMat& a, const MixedMat& b);

// P * (X || Y) = (bar(P) X || P Y) for P over S.
MixedMat scalar_act(const RingMat& p, const MixedMat& m);

// Type array (alpha, beta; k_0..k_{r-1}; l_0..l_{s-1}) of a code.
struct CodeType {
    std::uint32_t alpha = 0, beta = 0;
    std::vector<std::uint32_t> k;    // size r
    std::vector<std::uint32_t> ell;  // size s
    bool operator==(const CodeType& o) const {
        return alpha == o.alpha && beta == o.beta && k == o.k && ell == o.ell;
    }
    std::uint32_t rank() const;
    // log_q |C| = m (sum (r-t) k_t + sum (s-t) l_t)
    std::uint64_t log_q_size(std::uint32_t m, std::uint32_t r, std::uint32_t s) const;
    bool weakly_free() const;
    CodeType dual_type() const;
};

struct StandardPivot {
    bool in_x = false;
    std::uint32_t col = 0;    // original column index within its block
    std::uint32_t group = 0;  // valuation of the pivot in its block ring
    std::uint32_t order = 0;  // elimination order; later pivots have cleared
                              // columns in every earlier staircase row
};

// Generator matrix reduction onto the standard block staircase. `standard`
// holds the nonzero rows in original column order; P is the mu x mu
// transformation with P * G = standard rows followed by zero rows. perm_x /
// perm_y list the columns with pivot columns first.
struct StandardForm {
    MixedMat standard;
    RingMat p;
    std::vector<std::uint32_t> perm_x, perm_y;
    std::vector<StandardPivot> pivots;  // one per row of `standard`
    CodeType type;
};

StandardForm mixed_standard_form(const MixedSpace& sp, const MixedMat& g);

// The staircase blocks viewed through the column permutations.
MixedMat permuted_standard(const MixedSpace& sp, const StandardForm& sf);

}  // namespace mixedcode
