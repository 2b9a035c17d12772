#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "mixedcode/ring.hpp"

namespace mixedcode {

// Dense row-major matrix over a chain ring. 0 x n and n x 0 shapes are valid.
class RingMat {
  public:
    RingMat(std::shared_ptr<const Ring> ring, std::uint32_t rows, std::uint32_t cols);
    static RingMat identity(std::shared_ptr<const Ring> ring, std::uint32_t n);

    std::uint32_t rows() const { return rows_; }
    std::uint32_t cols() const { return cols_; }
    const Ring& ring() const { return *ring_; }
    std::shared_ptr<const Ring> ring_ptr() const { return ring_; }

    RElem at(std::uint32_t i, std::uint32_t j) const { return a_[std::size_t(i) * cols_ + j]; }
    void set(std::uint32_t i, std::uint32_t j, RElem v) { a_[std::size_t(i) * cols_ + j] = v; }

    std::vector<RElem> row(std::uint32_t i) const;
    void set_row(std::uint32_t i, const std::vector<RElem>& r);

    bool operator==(const RingMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    void swap_rows(std::uint32_t i, std::uint32_t j);
    void swap_cols(std::uint32_t i, std::uint32_t j);
    // row i -= c * row j
    void row_axpy(std::uint32_t i, RElem c, std::uint32_t j);
    void scale_row(std::uint32_t i, RElem c);
    // col i -= c * col j
    void col_axpy(std::uint32_t i, RElem c, std::uint32_t j);
    void scale_col(std::uint32_t i, RElem c);

  private:
    std::shared_ptr<const Ring> ring_;
    std::uint32_t rows_, cols_;
    std::vector<RElem> a_;
};

RingMat mat_mul(const RingMat& a, const RingMat& b);
RingMat mat_add(const RingMat& a, const RingMat& b);
RingMat mat_sub(const RingMat& a, const RingMat& b);
RingMat mat_neg(const RingMat& a);
RingMat transpose(const RingMat& a);
// sigma^h applied entrywise
RingMat conj(const RingMat& a, std::uint32_t h);
RingMat stack_rows(const RingMat& a, const RingMat& b);
bool is_zero(const RingMat& a);

// P * M * Q = diag(theta^{d_0}, ..., theta^{d_{t-1}}, 0, ...), d nondecreasing
// with d_i < s; P and Q invertible. The diagonal exponents are the module
// invariants of the row space.
struct Diagonalization {
    RingMat p, q;
    std::vector<std::uint32_t> d;
};
Diagonalization diagonalize(const RingMat& m);

bool is_invertible(const RingMat& m);  // throws std::invalid_argument if not square
RingMat inverse(const RingMat& m);     // throws std::domain_error if singular

// Generators of { v : v * M = 0 } as rows; complete at every size.
RingMat kernel(const RingMat& m);

// One x with x * M = b, if any.
std::optional<std::vector<RElem>> solve_left(const RingMat& m, const std::vector<RElem>& b);

// Does b lie in the row span of M (as an S-module)?
bool in_row_span(const RingMat& m, const std::vector<RElem>& b);

}  // namespace mixedcode
