#include "mixedcode/linalg.hpp"

#include <stdexcept>

namespace mixedcode {

RingMat::RingMat(std::shared_ptr<const Ring> ring, std::uint32_t rows, std::uint32_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, 0) {}

RingMat RingMat::identity(std::shared_ptr<const Ring> ring, std::uint32_t n) {
    RingMat m(ring, n, n);
    for (std::uint32_t i = 0; i < n; ++i) m.set(i, i, ring->one());
    return m;
}

std::vector<RElem> RingMat::row(std::uint32_t i) const {
    return std::vector<RElem>(a_.begin() + std::size_t(i) * cols_, a_.begin() + std::size_t(i + 1) * cols_);
}

void RingMat::set_row(std::uint32_t i, const std::vector<RElem>& r) {
    if (r.size() != cols_) throw std::invalid_argument("set_row: width mismatch");
    std::copy(r.begin(), r.end(), a_.begin() + std::size_t(i) * cols_);
}

void RingMat::swap_rows(std::uint32_t i, std::uint32_t j) {
    if (i == j) return;
    for (std::uint32_t c = 0; c < cols_; ++c) std::swap(a_[std::size_t(i) * cols_ + c], a_[std::size_t(j) * cols_ + c]);
}

void RingMat::swap_cols(std::uint32_t i, std::uint32_t j) {
    if (i == j) return;
    for (std::uint32_t r = 0; r < rows_; ++r) std::swap(a_[std::size_t(r) * cols_ + i], a_[std::size_t(r) * cols_ + j]);
}

void RingMat::row_axpy(std::uint32_t i, RElem c, std::uint32_t j) {
    for (std::uint32_t k = 0; k < cols_; ++k) set(i, k, ring_->sub(at(i, k), ring_->mul(c, at(j, k))));
}

void RingMat::scale_row(std::uint32_t i, RElem c) {
    for (std::uint32_t k = 0; k < cols_; ++k) set(i, k, ring_->mul(c, at(i, k)));
}

void RingMat::col_axpy(std::uint32_t i, RElem c, std::uint32_t j) {
    for (std::uint32_t k = 0; k < rows_; ++k) set(k, i, ring_->sub(at(k, i), ring_->mul(at(k, j), c)));
}

void RingMat::scale_col(std::uint32_t i, RElem c) {
    for (std::uint32_t k = 0; k < rows_; ++k) set(k, i, ring_->mul(at(k, i), c));
}

RingMat mat_mul(const RingMat& a, const RingMat& b) {
    if (!a.ring().same(b.ring())) throw std::invalid_argument("mat_mul: ring mismatch");
    if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: dimension mismatch");
    const Ring& R = a.ring();
    RingMat out(a.ring_ptr(), a.rows(), b.cols());
    for (std::uint32_t i = 0; i < a.rows(); ++i) {
        for (std::uint32_t k = 0; k < a.cols(); ++k) {
            RElem av = a.at(i, k);
            if (av == 0) continue;
            for (std::uint32_t j = 0; j < b.cols(); ++j) {
                out.set(i, j, R.add(out.at(i, j), R.mul(av, b.at(k, j))));
            }
        }
    }
    return out;
}

RingMat mat_add(const RingMat& a, const RingMat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("mat_add: shape mismatch");
    RingMat out(a.ring_ptr(), a.rows(), a.cols());
    for (std::uint32_t i = 0; i < a.rows(); ++i)
        for (std::uint32_t j = 0; j < a.cols(); ++j) out.set(i, j, a.ring().add(a.at(i, j), b.at(i, j)));
    return out;
}

RingMat mat_sub(const RingMat& a, const RingMat& b) { return mat_add(a, mat_neg(b)); }

RingMat mat_neg(const RingMat& a) {
    RingMat out(a.ring_ptr(), a.rows(), a.cols());
    for (std::uint32_t i = 0; i < a.rows(); ++i)
        for (std::uint32_t j = 0; j < a.cols(); ++j) out.set(i, j, a.ring().neg(a.at(i, j)));
    return out;
}

RingMat transpose(const RingMat& a) {
    RingMat out(a.ring_ptr(), a.cols(), a.rows());
    for (std::uint32_t i = 0; i < a.rows(); ++i)
        for (std::uint32_t j = 0; j < a.cols(); ++j) out.set(j, i, a.at(i, j));
    return out;
}

RingMat conj(const RingMat& a, std::uint32_t h) {
    RingMat out(a.ring_ptr(), a.rows(), a.cols());
    for (std::uint32_t i = 0; i < a.rows(); ++i)
        for (std::uint32_t j = 0; j < a.cols(); ++j) out.set(i, j, a.ring().frobenius(a.at(i, j), h));
    return out;
}

RingMat stack_rows(const RingMat& a, const RingMat& b) {
    if (a.cols() != b.cols() || !a.ring().same(b.ring())) throw std::invalid_argument("stack_rows: mismatch");
    RingMat out(a.ring_ptr(), a.rows() + b.rows(), a.cols());
    for (std::uint32_t i = 0; i < a.rows(); ++i)
        for (std::uint32_t j = 0; j < a.cols(); ++j) out.set(i, j, a.at(i, j));
    for (std::uint32_t i = 0; i < b.rows(); ++i)
        for (std::uint32_t j = 0; j < b.cols(); ++j) out.set(a.rows() + i, j, b.at(i, j));
    return out;
}

bool is_zero(const RingMat& a) {
    for (std::uint32_t i = 0; i < a.rows(); ++i)
        for (std::uint32_t j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != 0) return false;
    return true;
}

Diagonalization diagonalize(const RingMat& m) {
    const Ring& R = m.ring();
    std::uint32_t s = R.s();
    RingMat a = m;
    RingMat p = RingMat::identity(m.ring_ptr(), m.rows());
    RingMat q = RingMat::identity(m.ring_ptr(), m.cols());
    std::vector<std::uint32_t> d;
    std::uint32_t n = std::min(m.rows(), m.cols());
    for (std::uint32_t pos = 0; pos < n; ++pos) {
        // minimum valuation pivot, ties by lowest (row, column)
        std::uint32_t bestV = s;
        std::uint32_t bi = 0, bj = 0;
        for (std::uint32_t i = pos; i < m.rows(); ++i) {
            for (std::uint32_t j = pos; j < m.cols(); ++j) {
                std::uint32_t v = R.valuation(a.at(i, j));
                if (v < bestV) {
                    bestV = v;
                    bi = i;
                    bj = j;
                }
            }
        }
        if (bestV >= s) break;
        a.swap_rows(pos, bi);
        p.swap_rows(pos, bi);
        a.swap_cols(pos, bj);
        q.swap_cols(pos, bj);
        RElem piv = a.at(pos, pos);
        RElem unit = R.div_theta_pow(piv, bestV);
        RElem uinv = R.inv_unit(unit);
        a.scale_row(pos, uinv);
        p.scale_row(pos, uinv);
        for (std::uint32_t i = pos + 1; i < m.rows(); ++i) {
            RElem e = a.at(i, pos);
            if (e == 0) continue;
            RElem f = R.div_theta_pow(e, bestV);
            a.row_axpy(i, f, pos);
            p.row_axpy(i, f, pos);
        }
        for (std::uint32_t j = pos + 1; j < m.cols(); ++j) {
            RElem e = a.at(pos, j);
            if (e == 0) continue;
            RElem f = R.div_theta_pow(e, bestV);
            a.col_axpy(j, f, pos);
            q.col_axpy(j, f, pos);
        }
        d.push_back(bestV);
    }
    return {p, q, d};
}

bool is_invertible(const RingMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("is_invertible: matrix not square");
    auto diag = diagonalize(m);
    if (diag.d.size() != m.rows()) return false;
    for (auto v : diag.d)
        if (v != 0) return false;
    return true;
}

RingMat inverse(const RingMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
    const Ring& R = m.ring();
    RingMat a = m;
    RingMat inv = RingMat::identity(m.ring_ptr(), m.rows());
    for (std::uint32_t col = 0; col < m.cols(); ++col) {
        std::uint32_t piv = col;
        while (piv < m.rows() && !R.is_unit(a.at(piv, col))) ++piv;
        if (piv == m.rows()) throw std::domain_error("inverse: matrix is singular");
        a.swap_rows(col, piv);
        inv.swap_rows(col, piv);
        RElem c = R.inv_unit(a.at(col, col));
        a.scale_row(col, c);
        inv.scale_row(col, c);
        for (std::uint32_t i = 0; i < m.rows(); ++i) {
            if (i == col) continue;
            RElem e = a.at(i, col);
            if (e == 0) continue;
            a.row_axpy(i, e, col);
            inv.row_axpy(i, e, col);
        }
    }
    return inv;
}

RingMat kernel(const RingMat& m) {
    const Ring& R = m.ring();
    std::uint32_t s = R.s();
    auto diag = diagonalize(m);
    std::uint32_t t = static_cast<std::uint32_t>(diag.d.size());
    std::vector<std::vector<RElem>> gens;
    for (std::uint32_t i = 0; i < t; ++i) {
        if (diag.d[i] == 0) continue;
        auto r = diag.p.row(i);
        for (auto& v : r) v = R.mul_theta_pow(v, s - diag.d[i]);
        gens.push_back(std::move(r));
    }
    for (std::uint32_t i = t; i < m.rows(); ++i) gens.push_back(diag.p.row(i));
    RingMat out(m.ring_ptr(), static_cast<std::uint32_t>(gens.size()), m.rows());
    for (std::uint32_t i = 0; i < gens.size(); ++i) out.set_row(i, gens[i]);
    return out;
}

std::optional<std::vector<RElem>> solve_left(const RingMat& m, const std::vector<RElem>& b) {
    if (b.size() != m.cols()) throw std::invalid_argument("solve_left: width mismatch");
    const Ring& R = m.ring();
    auto diag = diagonalize(m);
    // w * D = b * Q, then x = w * P
    std::vector<RElem> bq(m.cols(), 0);
    for (std::uint32_t j = 0; j < m.cols(); ++j) {
        RElem acc = 0;
        for (std::uint32_t i = 0; i < m.cols(); ++i) acc = R.add(acc, R.mul(b[i], diag.q.at(i, j)));
        bq[j] = acc;
    }
    std::uint32_t t = static_cast<std::uint32_t>(diag.d.size());
    std::vector<RElem> w(m.rows(), 0);
    for (std::uint32_t j = 0; j < m.cols(); ++j) {
        if (j < t) {
            if (R.valuation(bq[j]) < diag.d[j]) return std::nullopt;
            w[j] = R.div_theta_pow(bq[j], diag.d[j]);
        } else if (bq[j] != 0) {
            return std::nullopt;
        }
    }
    std::vector<RElem> x(m.rows(), 0);
    for (std::uint32_t j = 0; j < m.rows(); ++j) {
        RElem acc = 0;
        for (std::uint32_t i = 0; i < m.rows(); ++i) acc = R.add(acc, R.mul(w[i], diag.p.at(i, j)));
        x[j] = acc;
    }
    return x;
}

bool in_row_span(const RingMat& m, const std::vector<RElem>& b) { return solve_left(m, b).has_value(); }

}  // namespace mixedcode
