#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "mixedcode/mixed.hpp"

namespace mixedcode {

// A linear code over the mixed alphabet: the module generated by the rows of
// a mixed matrix under the scalar action. Standard form, type and size are
// computed eagerly; instances are immutable.
class MixedCode {
  public:
    MixedCode(MixedSpace space, MixedMat generators);

    const MixedSpace& space() const { return space_; }
    const MixedMat& generators() const { return gens_; }
    const StandardForm& standard_form() const { return sf_; }
    const CodeType& type() const { return sf_.type; }
    std::uint32_t rank() const { return sf_.standard.rows(); }
    std::uint64_t log_q_size() const { return logq_; }
    std::uint64_t size(std::uint64_t cap = std::uint64_t(1) << 16) const;  // throws CapExceeded

    bool contains(const MixedVec& v) const;
    std::vector<MixedVec> enumerate(std::uint64_t cap = std::uint64_t(1) << 16) const;

    bool subcode_of(const MixedCode& other) const;
    bool equals(const MixedCode& other) const;

  private:
    MixedSpace space_;
    MixedMat gens_;
    StandardForm sf_;
    std::uint64_t logq_ = 0;
};

// Entry (i, j) is the h-twisted inner product of row i of g1 with row j of g2.
RingMat gram(const MixedSpace& sp, const MixedMat& g1, const MixedMat& g2, std::uint32_t h);

MixedCode dual(const MixedCode& c, std::uint32_t h);
MixedCode sum_codes(const MixedCode& a, const MixedCode& b);
MixedCode intersect_codes(const MixedCode& a, const MixedCode& b);
MixedCode hull(const MixedCode& c, std::uint32_t h);

enum class LcdMethod { Oracle, Structural, Both };

struct LcdReport {
    bool lcd = false;
    std::optional<bool> oracle;
    std::optional<bool> structural;
    bool weakly_free = false;
    bool hypothesis_checked = false;  // structural route attempted
    bool hypothesis_holds = false;
    bool fell_back_to_oracle = false;
    // Invertible witness with gram(G,G)_h * P = diag(theta^(s-r) I, I) when
    // the structural verdict is positive.
    std::optional<RingMat> witness;
};

LcdReport is_lcd(const MixedCode& c, std::uint32_t h, LcdMethod method = LcdMethod::Both);

bool is_self_orthogonal(const MixedCode& c, std::uint32_t h);
bool is_self_dual(const MixedCode& c, std::uint32_t h);
bool is_weakly_free(const MixedCode& c);

struct SeparabilityReport {
    bool separable = false;
    std::optional<MixedCode> cx;  // over (alpha, 0)
    std::optional<MixedCode> cy;  // over (0, beta)
};
SeparabilityReport separate(const MixedCode& c);

// Projection codes onto the two blocks.
MixedCode project_x(const MixedCode& c);
MixedCode project_y(const MixedCode& c);

}  // namespace mixedcode
