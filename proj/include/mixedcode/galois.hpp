#pragma once

#include <cstdint>
#include <optional>

#include "mixedcode/code.hpp"

namespace mixedcode {

// The cyclic Galois action on a mixed ambient space, together with the
// subring ambient over the fixed ring: invariance, cores, subring subcodes,
// trace codes and extension codes.
class GaloisContext {
  public:
    explicit GaloisContext(MixedSpace space);

    const MixedSpace& space() const { return space_; }
    const MixedSpace& subspace() const { return subspace_; }
    std::uint32_t group_order() const { return space_.m(); }

    MixedCode sigma_code(const MixedCode& c, std::uint32_t h) const;
    bool is_invariant(const MixedCode& c) const;
    MixedCode g_core(const MixedCode& c) const;

    // C intersected with the subring ambient, as a code over the subring pair.
    MixedCode res_subcode(const MixedCode& c) const;
    // Coordinatewise trace closure of C over the subring pair.
    MixedCode trace_code(const MixedCode& c) const;
    // Module generated over the big ring by a code over the subring pair.
    MixedCode ext_code(const MixedCode& d) const;

    // trace(dual(C, h)) == dual_0(res(C)) computed on both sides.
    bool delsarte_check(const MixedCode& c, std::uint32_t h) const;

    // Generators of C with all entries fixed by the Galois action, when C is
    // invariant; nullopt otherwise. The matrix lives over the subring pair.
    std::optional<MixedMat> subring_generator_matrix(const MixedCode& c) const;

    // Maps between the two ambients.
    MixedVec embed_vec(const MixedVec& v) const;     // subspace -> space
    MixedVec project_vec(const MixedVec& v) const;   // space -> subspace, entries must be fixed

  private:
    MixedSpace space_;
    std::shared_ptr<const Ring> subring_;
    std::shared_ptr<const Ring> subbar_;
    MixedSpace subspace_;
};

}  // namespace mixedcode
