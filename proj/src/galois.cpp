#include "mixedcode/galois.hpp"

#include <stdexcept>

namespace mixedcode {

GaloisContext::GaloisContext(MixedSpace space)
    : space_(std::move(space)),
      subring_(space_.ring().subring()),
      subbar_(space_.bar().subring()),
      subspace_(subring_, space_.r(), space_.alpha(), space_.beta()) {}

MixedCode GaloisContext::sigma_code(const MixedCode& c, std::uint32_t h) const {
    return MixedCode(space_, frobenius_mixed(c.generators(), h));
}

bool GaloisContext::is_invariant(const MixedCode& c) const {
    return sigma_code(c, 1).equals(c);
}

MixedCode GaloisContext::g_core(const MixedCode& c) const {
    MixedCode core = c;
    for (std::uint32_t i = 1; i < group_order(); ++i) core = intersect_codes(core, sigma_code(c, i));
    return core;
}

MixedVec GaloisContext::embed_vec(const MixedVec& v) const {
    MixedVec out = space_.zero_vec();
    for (std::uint32_t i = 0; i < space_.alpha(); ++i) out.x[i] = space_.bar().embed_subring(*subbar_, v.x[i]);
    for (std::uint32_t i = 0; i < space_.beta(); ++i) out.y[i] = space_.ring().embed_subring(*subring_, v.y[i]);
    return out;
}

MixedVec GaloisContext::project_vec(const MixedVec& v) const {
    MixedVec out = subspace_.zero_vec();
    for (std::uint32_t i = 0; i < space_.alpha(); ++i) out.x[i] = space_.bar().project_subring(*subbar_, v.x[i]);
    for (std::uint32_t i = 0; i < space_.beta(); ++i) out.y[i] = space_.ring().project_subring(*subring_, v.y[i]);
    return out;
}

MixedCode GaloisContext::res_subcode(const MixedCode& c) const {
    const Ring& S = space_.ring();
    const Ring& R = *subring_;
    std::uint32_t m = space_.m();
    std::uint32_t n = space_.alpha() + space_.beta();
    const MixedMat& g = c.standard_form().standard;
    std::uint32_t mu = g.rows();

    // R-module generators of chi(C): basis multiples of the S-generators,
    // written in R-coordinates (m per ambient coordinate).
    std::vector<RElem> basis_elems(m);
    {
        std::vector<RElem> coords(m, R.zero());
        for (std::uint32_t i = 0; i < m; ++i) {
            std::fill(coords.begin(), coords.end(), R.zero());
            coords[i] = R.one();
            basis_elems[i] = S.from_subring_coords(R, coords);
        }
    }
    RingMat expanded(subring_, mu * m, n * m);
    for (std::uint32_t gi = 0; gi < mu; ++gi) {
        auto w = space_.chi_embed(mixed_row(g, gi));
        for (std::uint32_t bi = 0; bi < m; ++bi) {
            for (std::uint32_t cj = 0; cj < n; ++cj) {
                RElem scaled = S.mul(basis_elems[bi], w[cj]);
                auto coords = S.subring_coords(R, scaled);
                for (std::uint32_t t = 0; t < m; ++t) expanded.set(gi * m + bi, cj * m + t, coords[t]);
            }
        }
    }
    // intersect with the submodule supported on the basis-0 coordinates
    RingMat base(subring_, n, n * m);
    for (std::uint32_t cj = 0; cj < n; ++cj) base.set(cj, cj * m, R.one());
    RingMat stacked = stack_rows(expanded, base);
    RingMat ker = kernel(stacked);
    // rows (u, v) with u * expanded = -v * base: collect u * expanded
    std::vector<MixedVec> gens;
    for (std::uint32_t i = 0; i < ker.rows(); ++i) {
        std::vector<RElem> w(n, R.zero());
        bool in_base = true;
        std::vector<RElem> full(n * m, R.zero());
        for (std::uint32_t j = 0; j < n * m; ++j) {
            RElem acc = R.zero();
            for (std::uint32_t t = 0; t < mu * m; ++t) acc = R.add(acc, R.mul(ker.at(i, t), expanded.at(t, j)));
            full[j] = acc;
        }
        for (std::uint32_t cj = 0; cj < n; ++cj) {
            w[cj] = full[cj * m];
            for (std::uint32_t t = 1; t < m; ++t)
                if (full[cj * m + t] != 0) in_base = false;
        }
        if (!in_base) throw std::logic_error("res_subcode: intersection left the base coordinates");
        gens.push_back(subspace_.chi_unembed(w));
    }
    return MixedCode(subspace_, mixed_from_rows(subspace_, gens));
}

MixedCode GaloisContext::trace_code(const MixedCode& c) const {
    const Ring& S = space_.ring();
    const Ring& Sb = space_.bar();
    const Ring& R = *subring_;
    const Ring& Rb = *subbar_;
    std::uint32_t m = space_.m();
    const MixedMat& g = c.standard_form().standard;

    std::vector<RElem> basis_elems(m);
    {
        std::vector<RElem> coords(m, R.zero());
        for (std::uint32_t i = 0; i < m; ++i) {
            std::fill(coords.begin(), coords.end(), R.zero());
            coords[i] = R.one();
            basis_elems[i] = S.from_subring_coords(R, coords);
        }
    }
    std::vector<MixedVec> gens;
    for (std::uint32_t gi = 0; gi < g.rows(); ++gi) {
        for (std::uint32_t bi = 0; bi < m; ++bi) {
            MixedVec scaled = space_.scalar_mul(basis_elems[bi], mixed_row(g, gi));
            MixedVec tr = subspace_.zero_vec();
            for (std::uint32_t j = 0; j < space_.alpha(); ++j)
                tr.x[j] = Sb.project_subring(Rb, Sb.trace(scaled.x[j]));
            for (std::uint32_t j = 0; j < space_.beta(); ++j) tr.y[j] = S.project_subring(R, S.trace(scaled.y[j]));
            gens.push_back(std::move(tr));
        }
    }
    return MixedCode(subspace_, mixed_from_rows(subspace_, gens));
}

MixedCode GaloisContext::ext_code(const MixedCode& d) const {
    if (!d.space().same(subspace_)) throw std::invalid_argument("ext_code: expected a code over the subring pair");
    const MixedMat& g = d.generators();
    std::vector<MixedVec> gens;
    for (std::uint32_t i = 0; i < g.rows(); ++i) gens.push_back(embed_vec(mixed_row(g, i)));
    return MixedCode(space_, mixed_from_rows(space_, gens));
}

bool GaloisContext::delsarte_check(const MixedCode& c, std::uint32_t h) const {
    MixedCode lhs = trace_code(dual(c, h));
    MixedCode rhs = dual(res_subcode(c), 0);
    return lhs.equals(rhs);
}

std::optional<MixedMat> GaloisContext::subring_generator_matrix(const MixedCode& c) const {
    if (!is_invariant(c)) return std::nullopt;
    MixedCode res = res_subcode(c);
    return res.standard_form().standard;
}

}  // namespace mixedcode
