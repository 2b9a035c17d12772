#include "mixedcode/mixed.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "mixedcode/support.hpp"

namespace mixedcode {

MixedSpace::MixedSpace(std::shared_ptr<const Ring> s, std::uint32_t r, std::uint32_t alpha, std::uint32_t beta)
    : s_(std::move(s)), r_(r), alpha_(alpha), beta_(beta) {
    if (r < 1 || r > s_->s()) throw std::invalid_argument("mixed space: r out of range");
    sbar_ = s_->quotient_ring(r);
}

bool MixedSpace::is_zero(const MixedVec& v) const {
    for (auto e : v.x)
        if (e != 0) return false;
    for (auto e : v.y)
        if (e != 0) return false;
    return true;
}

MixedVec MixedSpace::add(const MixedVec& u, const MixedVec& v) const {
    MixedVec out = zero_vec();
    for (std::uint32_t i = 0; i < alpha_; ++i) out.x[i] = sbar_->add(u.x[i], v.x[i]);
    for (std::uint32_t i = 0; i < beta_; ++i) out.y[i] = s_->add(u.y[i], v.y[i]);
    return out;
}

MixedVec MixedSpace::sub(const MixedVec& u, const MixedVec& v) const { return add(u, neg(v)); }

MixedVec MixedSpace::neg(const MixedVec& v) const {
    MixedVec out = zero_vec();
    for (std::uint32_t i = 0; i < alpha_; ++i) out.x[i] = sbar_->neg(v.x[i]);
    for (std::uint32_t i = 0; i < beta_; ++i) out.y[i] = s_->neg(v.y[i]);
    return out;
}

MixedVec MixedSpace::scalar_mul(RElem a, const MixedVec& v) const {
    MixedVec out = zero_vec();
    RElem abar = s_->reduce_to(*sbar_, a);
    for (std::uint32_t i = 0; i < alpha_; ++i) out.x[i] = sbar_->mul(abar, v.x[i]);
    for (std::uint32_t i = 0; i < beta_; ++i) out.y[i] = s_->mul(a, v.y[i]);
    return out;
}

MixedVec MixedSpace::frobenius_vec(const MixedVec& v, std::uint32_t h) const {
    MixedVec out = zero_vec();
    for (std::uint32_t i = 0; i < alpha_; ++i) out.x[i] = sbar_->frobenius(v.x[i], h);
    for (std::uint32_t i = 0; i < beta_; ++i) out.y[i] = s_->frobenius(v.y[i], h);
    return out;
}

RElem MixedSpace::inner_product(const MixedVec& u, const MixedVec& v, std::uint32_t h) const {
    RElem acc = s_->zero();
    for (std::uint32_t i = 0; i < alpha_; ++i) {
        RElem prod = sbar_->mul(u.x[i], sbar_->frobenius(v.x[i], h));
        acc = s_->add(acc, s_->quotient_embed_from(*sbar_, prod));
    }
    for (std::uint32_t i = 0; i < beta_; ++i) {
        acc = s_->add(acc, s_->mul(u.y[i], s_->frobenius(v.y[i], h)));
    }
    return acc;
}

std::uint64_t MixedSpace::ambient_log_q() const {
    return std::uint64_t(m()) * (std::uint64_t(r_) * alpha_ + std::uint64_t(s()) * beta_);
}

std::uint64_t MixedSpace::ambient_size(std::uint64_t cap) const {
    std::uint64_t size = 1;
    for (std::uint32_t i = 0; i < alpha_; ++i) {
        size *= sbar_->size();
        if (size > cap) throw CapExceeded("ambient enumeration exceeds cap");
    }
    for (std::uint32_t i = 0; i < beta_; ++i) {
        size *= s_->size();
        if (size > cap) throw CapExceeded("ambient enumeration exceeds cap");
    }
    return size;
}

MixedVec MixedSpace::vec_at(std::uint64_t idx) const {
    MixedVec out = zero_vec();
    for (std::uint32_t i = 0; i < alpha_; ++i) {
        out.x[i] = static_cast<RElem>(idx % sbar_->size());
        idx /= sbar_->size();
    }
    for (std::uint32_t i = 0; i < beta_; ++i) {
        out.y[i] = static_cast<RElem>(idx % s_->size());
        idx /= s_->size();
    }
    return out;
}

std::uint64_t MixedSpace::index_of(const MixedVec& v) const {
    std::uint64_t idx = 0;
    for (std::uint32_t i = beta_; i-- > 0;) idx = idx * s_->size() + v.y[i];
    for (std::uint32_t i = alpha_; i-- > 0;) idx = idx * sbar_->size() + v.x[i];
    return idx;
}

std::vector<RElem> MixedSpace::chi_embed(const MixedVec& v) const {
    std::vector<RElem> w(alpha_ + beta_, 0);
    for (std::uint32_t i = 0; i < alpha_; ++i) w[i] = s_->quotient_embed_from(*sbar_, v.x[i]);
    for (std::uint32_t i = 0; i < beta_; ++i) w[alpha_ + i] = v.y[i];
    return w;
}

MixedVec MixedSpace::rho_project(const std::vector<RElem>& w) const {
    if (w.size() != alpha_ + beta_) throw std::invalid_argument("rho_project: width mismatch");
    MixedVec out = zero_vec();
    for (std::uint32_t i = 0; i < alpha_; ++i) out.x[i] = s_->reduce_to(*sbar_, w[i]);
    for (std::uint32_t i = 0; i < beta_; ++i) out.y[i] = w[alpha_ + i];
    return out;
}

MixedVec MixedSpace::chi_unembed(const std::vector<RElem>& w) const {
    if (w.size() != alpha_ + beta_) throw std::invalid_argument("chi_unembed: width mismatch");
    MixedVec out = zero_vec();
    for (std::uint32_t i = 0; i < alpha_; ++i)
        out.x[i] = s_->reduce_to(*sbar_, s_->div_theta_pow(w[i], s_->s() - r_));
    for (std::uint32_t i = 0; i < beta_; ++i) out.y[i] = w[alpha_ + i];
    return out;
}

std::uint64_t hom_weight_elem(const Ring& ring, RElem a) {
    if (a == 0) return 0;
    std::uint32_t s = ring.s();
    if (s == 1) return 1;  // Hamming weight on the residue field
    std::uint32_t qm = ring.residue_size();
    std::uint32_t v = ring.valuation(a);
    if (v == s - 1) return checked_pow_u64(qm, s - 1);
    return (qm - 1) * checked_pow_u64(qm, s - 2);
}

std::uint64_t MixedSpace::hom_weight(const MixedVec& v) const {
    std::uint64_t acc = 0;
    for (auto e : v.x) acc += hom_weight_elem(*sbar_, e);
    for (auto e : v.y) acc += hom_weight_elem(*s_, e);
    return acc;
}

std::uint64_t MixedSpace::hom_distance(const MixedVec& u, const MixedVec& v) const { return hom_weight(sub(u, v)); }

MixedMat zero_mixed(const MixedSpace& sp, std::uint32_t rows) {
    return {RingMat(sp.bar_ptr(), rows, sp.alpha()), RingMat(sp.ring_ptr(), rows, sp.beta())};
}

MixedVec mixed_row(const MixedMat& m, std::uint32_t i) {
    MixedVec v;
    v.x = m.x.row(i);
    v.y = m.y.row(i);
    return v;
}

void set_mixed_row(MixedMat& m, std::uint32_t i, const MixedVec& v) {
    m.x.set_row(i, v.x);
    m.y.set_row(i, v.y);
}

MixedMat mixed_from_rows(const MixedSpace& sp, const std::vector<MixedVec>& rows) {
    MixedMat m = zero_mixed(sp, static_cast<std::uint32_t>(rows.size()));
    for (std::uint32_t i = 0; i < rows.size(); ++i) set_mixed_row(m, i, rows[i]);
    return m;
}

MixedMat stack_mixed(const MixedMat& a, const MixedMat& b) {
    return {stack_rows(a.x, b.x), stack_rows(a.y, b.y)};
}

MixedMat frobenius_mixed(const MixedMat& m, std::uint32_t h) { return {conj(m.x, h), conj(m.y, h)}; }

bool mixed_equal(const MixedMat& a, const MixedMat& b) { return a.x == b.x && a.y == b.y; }

MixedMat scalar_act(const RingMat& p, const MixedMat& m) {
    const Ring& S = p.ring();
    const Ring& Sbar = m.x.ring();
    RingMat pbar(m.x.ring_ptr(), p.rows(), p.cols());
    for (std::uint32_t i = 0; i < p.rows(); ++i)
        for (std::uint32_t j = 0; j < p.cols(); ++j) pbar.set(i, j, S.reduce_to(Sbar, p.at(i, j)));
    return {mat_mul(pbar, m.x), mat_mul(p, m.y)};
}

std::uint32_t CodeType::rank() const {
    std::uint32_t n = 0;
    for (auto v : k) n += v;
    for (auto v : ell) n += v;
    return n;
}

std::uint64_t CodeType::log_q_size(std::uint32_t m, std::uint32_t r, std::uint32_t s) const {
    std::uint64_t e = 0;
    for (std::uint32_t t = 0; t < k.size(); ++t) e += std::uint64_t(r - t) * k[t];
    for (std::uint32_t t = 0; t < ell.size(); ++t) e += std::uint64_t(s - t) * ell[t];
    return e * m;
}

bool CodeType::weakly_free() const {
    for (std::uint32_t t = 1; t < k.size(); ++t)
        if (k[t] != 0) return false;
    for (std::uint32_t t = 1; t < ell.size(); ++t)
        if (ell[t] != 0) return false;
    return true;
}

CodeType CodeType::dual_type() const {
    CodeType d;
    d.alpha = alpha;
    d.beta = beta;
    std::uint32_t sk = 0, sl = 0;
    for (auto v : k) sk += v;
    for (auto v : ell) sl += v;
    d.k.assign(k.size(), 0);
    d.ell.assign(ell.size(), 0);
    d.k[0] = alpha - sk;
    for (std::uint32_t t = 1; t < k.size(); ++t) d.k[t] = k[k.size() - t];
    d.ell[0] = beta - sl;
    for (std::uint32_t t = 1; t < ell.size(); ++t) d.ell[t] = ell[ell.size() - t];
    return d;
}

namespace {

struct WorkPivot {
    bool in_x;
    std::uint32_t col;
    std::uint32_t group;
    std::uint32_t row;  // position during elimination
};

}  // namespace

StandardForm mixed_standard_form(const MixedSpace& sp, const MixedMat& g) {
    if (g.x.cols() != sp.alpha() || g.y.cols() != sp.beta() || g.x.rows() != g.y.rows())
        throw std::invalid_argument("standard form: shape mismatch");
    if (!g.x.ring().same(sp.bar()) || !g.y.ring().same(sp.ring()))
        throw std::invalid_argument("standard form: ring mismatch");
    const Ring& S = sp.ring();
    const Ring& B = sp.bar();
    const std::uint32_t mu = g.rows();
    const std::uint32_t s = sp.s(), r = sp.r();

    MixedMat a = g;
    RingMat p = RingMat::identity(sp.ring_ptr(), mu);
    std::vector<WorkPivot> pivots;
    std::vector<bool> x_used(sp.alpha(), false), y_used(sp.beta(), false);

    auto apply_axpy = [&](std::uint32_t i, RElem c, std::uint32_t j) {
        // row_i -= c * row_j under the scalar action
        RElem cbar = S.reduce_to(B, c);
        for (std::uint32_t col = 0; col < sp.alpha(); ++col)
            a.x.set(i, col, B.sub(a.x.at(i, col), B.mul(cbar, a.x.at(j, col))));
        for (std::uint32_t col = 0; col < sp.beta(); ++col)
            a.y.set(i, col, S.sub(a.y.at(i, col), S.mul(c, a.y.at(j, col))));
        p.row_axpy(i, c, j);
    };
    auto apply_scale = [&](std::uint32_t i, RElem c) {
        RElem cbar = S.reduce_to(B, c);
        for (std::uint32_t col = 0; col < sp.alpha(); ++col) a.x.set(i, col, B.mul(cbar, a.x.at(i, col)));
        for (std::uint32_t col = 0; col < sp.beta(); ++col) a.y.set(i, col, S.mul(c, a.y.at(i, col)));
        p.scale_row(i, c);
    };
    auto swap_rows = [&](std::uint32_t i, std::uint32_t j) {
        a.x.swap_rows(i, j);
        a.y.swap_rows(i, j);
        p.swap_rows(i, j);
        for (auto& pv : pivots) {
            if (pv.row == i)
                pv.row = j;
            else if (pv.row == j)
                pv.row = i;
        }
    };

    std::uint32_t used = 0;
    while (used < mu) {
        // candidate of minimal embedded valuation; ties by row, X block, column
        using Key = std::tuple<std::uint32_t, std::uint32_t, int, std::uint32_t>;
        bool found = false;
        Key best{};
        std::uint32_t brow = 0, bcol = 0;
        bool bx = false;
        std::uint32_t bchiv = 0;
        auto consider = [&](std::uint32_t chiv, std::uint32_t row, bool inX, std::uint32_t col) {
            Key key{chiv, row, inX ? 0 : 1, col};
            if (!found || key < best) {
                found = true;
                best = key;
                bchiv = chiv;
                brow = row;
                bx = inX;
                bcol = col;
            }
        };
        for (std::uint32_t i = used; i < mu; ++i) {
            for (std::uint32_t col = 0; col < sp.alpha(); ++col) {
                if (x_used[col]) continue;
                RElem e = a.x.at(i, col);
                if (e == 0) continue;
                consider(s - r + B.valuation(e), i, true, col);
            }
            for (std::uint32_t col = 0; col < sp.beta(); ++col) {
                if (y_used[col]) continue;
                RElem e = a.y.at(i, col);
                if (e == 0) continue;
                consider(S.valuation(e), i, false, col);
            }
        }
        if (!found) break;
        std::uint32_t group = bx ? bchiv - (s - r) : bchiv;

        swap_rows(brow, used);
        if (bx) {
            RElem e = a.x.at(used, bcol);
            RElem unit = B.div_theta_pow(e, group);
            RElem c = S.digit_lift_from(B, B.inv_unit(unit));
            apply_scale(used, c);
            for (std::uint32_t i = 0; i < mu; ++i) {
                if (i == used) continue;
                RElem e2 = a.x.at(i, bcol);
                if (e2 == 0) continue;
                if (B.valuation(e2) < group) continue;  // earlier staircase rows keep their entry
                RElem w = B.div_theta_pow(e2, group);
                apply_axpy(i, S.digit_lift_from(B, w), used);
            }
            x_used[bcol] = true;
        } else {
            RElem e = a.y.at(used, bcol);
            RElem unit = S.div_theta_pow(e, group);
            apply_scale(used, S.inv_unit(unit));
            for (std::uint32_t i = 0; i < mu; ++i) {
                if (i == used) continue;
                RElem e2 = a.y.at(i, bcol);
                if (e2 == 0) continue;
                if (S.valuation(e2) < group) continue;
                apply_axpy(i, S.div_theta_pow(e2, group), used);
            }
            y_used[bcol] = true;
        }
        pivots.push_back({bx, bcol, group, used});
        ++used;
    }

    // reorder: X-block staircase rows first by group, then Y-block rows
    std::vector<std::uint32_t> order(pivots.size());
    for (std::uint32_t i = 0; i < pivots.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t lhs, std::uint32_t rhs) {
        const auto& a1 = pivots[lhs];
        const auto& a2 = pivots[rhs];
        if (a1.in_x != a2.in_x) return a1.in_x;
        return a1.group < a2.group;
    });

    StandardForm sf{zero_mixed(sp, static_cast<std::uint32_t>(pivots.size())),
                    RingMat(sp.ring_ptr(), mu, mu),
                    {},
                    {},
                    {},
                    {}};
    RingMat prows(sp.ring_ptr(), mu, mu);
    for (std::uint32_t i = 0; i < pivots.size(); ++i) {
        const auto& pv = pivots[order[i]];
        set_mixed_row(sf.standard, i, mixed_row(a, pv.row));
        for (std::uint32_t j = 0; j < mu; ++j) prows.set(i, j, p.at(pv.row, j));
        sf.pivots.push_back({pv.in_x, pv.col, pv.group, order[i]});
    }
    // zero rows of P keep the transformation square and invertible
    std::vector<bool> taken(mu, false);
    for (const auto& pv : pivots) taken[pv.row] = true;
    std::uint32_t fill = static_cast<std::uint32_t>(pivots.size());
    for (std::uint32_t i = 0; i < mu; ++i) {
        if (taken[i]) continue;
        for (std::uint32_t j = 0; j < mu; ++j) prows.set(fill, j, p.at(i, j));
        ++fill;
    }
    sf.p = prows;

    sf.type.alpha = sp.alpha();
    sf.type.beta = sp.beta();
    sf.type.k.assign(r, 0);
    sf.type.ell.assign(s, 0);
    for (const auto& pv : sf.pivots) {
        if (pv.in_x)
            ++sf.type.k[pv.group];
        else
            ++sf.type.ell[pv.group];
    }

    // pivot columns first, remaining columns in ascending order
    std::vector<bool> xp(sp.alpha(), false), yp(sp.beta(), false);
    for (const auto& pv : sf.pivots) {
        if (pv.in_x) {
            sf.perm_x.push_back(pv.col);
            xp[pv.col] = true;
        } else {
            sf.perm_y.push_back(pv.col);
            yp[pv.col] = true;
        }
    }
    for (std::uint32_t c = 0; c < sp.alpha(); ++c)
        if (!xp[c]) sf.perm_x.push_back(c);
    for (std::uint32_t c = 0; c < sp.beta(); ++c)
        if (!yp[c]) sf.perm_y.push_back(c);
    return sf;
}

MixedMat permuted_standard(const MixedSpace& sp, const StandardForm& sf) {
    MixedMat out = zero_mixed(sp, sf.standard.rows());
    for (std::uint32_t i = 0; i < sf.standard.rows(); ++i) {
        for (std::uint32_t c = 0; c < sp.alpha(); ++c) out.x.set(i, c, sf.standard.x.at(i, sf.perm_x[c]));
        for (std::uint32_t c = 0; c < sp.beta(); ++c) out.y.set(i, c, sf.standard.y.at(i, sf.perm_y[c]));
    }
    return out;
}

}  // namespace mixedcode
