#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "mixedcode/mixed.hpp"
#include "oracle.hpp"

using namespace mixedcode;

namespace {

MixedMat mixed_from_values(const MixedSpace& sp, std::uint32_t rows, std::vector<RElem> xv, std::vector<RElem> yv) {
    MixedMat m = zero_mixed(sp, rows);
    for (std::uint32_t i = 0; i < rows; ++i) {
        for (std::uint32_t j = 0; j < sp.alpha(); ++j) m.x.set(i, j, xv[i * sp.alpha() + j]);
        for (std::uint32_t j = 0; j < sp.beta(); ++j) m.y.set(i, j, yv[i * sp.beta() + j]);
    }
    return m;
}

// Block staircase predicates of the standard shape.
void check_staircase_shape(const MixedSpace& sp, const StandardForm& sf) {
    const Ring& S = sp.ring();
    const Ring& B = sp.bar();
    // row order: X pivots by group, then Y pivots by group
    for (std::uint32_t i = 0; i + 1 < sf.pivots.size(); ++i) {
        const auto& a = sf.pivots[i];
        const auto& b = sf.pivots[i + 1];
        if (!a.in_x) CHECK(!b.in_x);
        if (a.in_x == b.in_x) CHECK(a.group <= b.group);
    }
    for (std::uint32_t i = 0; i < sf.pivots.size(); ++i) {
        const auto& pv = sf.pivots[i];
        if (pv.in_x) {
            CHECK(sf.standard.x.at(i, pv.col) == B.mul_theta_pow(B.one(), pv.group));
            // every divisible entry in the pivot column is cleared; what
            // remains has strictly smaller valuation (staircase residue)
            for (std::uint32_t i2 = 0; i2 < sf.standard.rows(); ++i2) {
                if (i2 == i) continue;
                RElem e = sf.standard.x.at(i2, pv.col);
                bool cleared_or_residue = e == 0 || B.valuation(e) < pv.group;
                CHECK(cleared_or_residue);
            }
            for (std::uint32_t c = 0; c < sp.alpha(); ++c)
                CHECK(B.valuation(sf.standard.x.at(i, c)) >= pv.group);
            for (std::uint32_t c = 0; c < sp.beta(); ++c)
                CHECK(S.valuation(sf.standard.y.at(i, c)) >= sp.s() - sp.r() + pv.group);
        } else {
            CHECK(sf.standard.y.at(i, pv.col) == S.mul_theta_pow(S.one(), pv.group));
            for (std::uint32_t i2 = 0; i2 < sf.standard.rows(); ++i2) {
                if (i2 == i) continue;
                RElem e = sf.standard.y.at(i2, pv.col);
                bool cleared_or_residue = e == 0 || S.valuation(e) < pv.group;
                CHECK(cleared_or_residue);
            }
            for (std::uint32_t c = 0; c < sp.beta(); ++c)
                CHECK(S.valuation(sf.standard.y.at(i, c)) >= pv.group);
            std::uint32_t minx = pv.group > sp.s() - sp.r() ? pv.group - (sp.s() - sp.r()) : 0;
            for (std::uint32_t c = 0; c < sp.alpha(); ++c)
                CHECK(B.valuation(sf.standard.x.at(i, c)) >= minx);
        }
    }
    // weakly-free codes reach the four-block split with clean cross columns
    if (sf.type.weakly_free()) {
        for (std::uint32_t i = 0; i < sf.pivots.size(); ++i) {
            for (std::uint32_t i2 = 0; i2 < sf.pivots.size(); ++i2) {
                if (i2 == i) continue;
                if (sf.pivots[i].in_x)
                    CHECK(sf.standard.x.at(i2, sf.pivots[i].col) == 0);
                else
                    CHECK(sf.standard.y.at(i2, sf.pivots[i].col) == 0);
            }
        }
    }
}

void check_full_contract(const MixedSpace& sp, const MixedMat& g) {
    StandardForm sf = mixed_standard_form(sp, g);
    // exact transformation: P * G = standard rows ++ zero rows
    MixedMat pg = scalar_act(sf.p, g);
    for (std::uint32_t i = 0; i < sf.standard.rows(); ++i) {
        CHECK(mixed_row(pg, i) == mixed_row(sf.standard, i));
    }
    for (std::uint32_t i = sf.standard.rows(); i < g.rows(); ++i) CHECK(sp.is_zero(mixed_row(pg, i)));
    CHECK(is_invertible(sf.p));
    check_staircase_shape(sp, sf);
    // span preserved (two-way membership against the closure oracle)
    auto span_g = oracle::span_closure(sp, g);
    auto span_s = oracle::span_closure(sp, sf.standard);
    CHECK(span_g == span_s);
    // cardinality from the type matches the enumerated span
    std::uint64_t logq = sf.type.log_q_size(sp.m(), sp.r(), sp.s());
    std::uint64_t expected = 1;
    for (std::uint64_t i = 0; i < logq; ++i) expected *= sp.ring().q();
    CHECK(span_g.size() == expected);
    CHECK(sf.type.rank() == sf.standard.rows());
    // idempotence on its own output
    StandardForm sf2 = mixed_standard_form(sp, sf.standard);
    CHECK(sf2.type == sf.type);
}

}  // namespace

TEST_CASE("scalar action pinned values") {
    auto z4 = oracle::z_ring(2, 2);
    MixedSpace sp(z4, 1, 1, 1);
    RingMat p(z4, 1, 1);
    p.set(0, 0, 3);
    MixedMat m = mixed_from_values(sp, 1, {1}, {2});
    MixedMat res = scalar_act(p, m);
    CHECK(res.x.at(0, 0) == 1);
    CHECK(res.y.at(0, 0) == 2);

    RingMat id = RingMat::identity(z4, 1);
    CHECK(mixed_equal(scalar_act(id, m), m));
}

TEST_CASE("standard form of the full space") {
    auto z8 = oracle::z_ring(2, 3);
    MixedSpace sp(z8, 2, 2, 1);
    MixedMat g = zero_mixed(sp, 3);
    g.x.set(0, 0, 1);
    g.x.set(1, 1, 1);
    g.y.set(2, 0, 1);
    StandardForm sf = mixed_standard_form(sp, g);
    CHECK(sf.type.k == std::vector<std::uint32_t>{2, 0});
    CHECK(sf.type.ell == std::vector<std::uint32_t>{1, 0, 0});
}

TEST_CASE("standard form of the published 4x(3||4) example") {
    auto z8 = oracle::z_ring(2, 3);
    MixedSpace sp(z8, 2, 3, 4);
    MixedMat g = mixed_from_values(sp, 4,
                                   {2, 1, 0,  //
                                    0, 2, 0,  //
                                    1, 1, 1,  //
                                    2, 1, 2},
                                   {2, 6, 3, 5,  //
                                    1, 2, 4, 0,  //
                                    0, 4, 0, 4,  //
                                    4, 2, 6, 0});
    StandardForm sf = mixed_standard_form(sp, g);
    CHECK(sf.type.alpha == 3);
    CHECK(sf.type.beta == 4);
    CHECK(sf.type.k == std::vector<std::uint32_t>{2, 0});
    CHECK(sf.type.ell == std::vector<std::uint32_t>{2, 0, 0});
    CHECK(sf.type.log_q_size(1, 2, 3) == 10);
    CHECK(sf.type.weakly_free());

    // the published standard matrix, x entries reduced mod 4 and its y column
    // permutation (columns 2 and 3 swapped) undone, spans the same module
    MixedMat pub = mixed_from_values(sp, 4,
                                     {1, 0, 1,  //
                                      0, 1, 0,  //
                                      0, 0, 0,  //
                                      0, 0, 2},
                                     {0, 6, 0, 6,  //
                                      0, 6, 0, 6,  //
                                      1, 6, 0, 0,  //
                                      0, 0, 1, 1});
    auto span_g = oracle::span_closure(sp, g);
    auto span_pub = oracle::span_closure(sp, pub);
    CHECK(span_g == span_pub);
    CHECK(span_g.size() == 1024);

    check_full_contract(sp, g);
}

TEST_CASE("standard form of degenerate inputs") {
    auto z4 = oracle::z_ring(2, 2);
    MixedSpace sp(z4, 1, 2, 1);
    MixedMat zero = zero_mixed(sp, 3);
    StandardForm sf = mixed_standard_form(sp, zero);
    CHECK(sf.standard.rows() == 0);
    CHECK(sf.type.rank() == 0);
    CHECK(sf.type.k == std::vector<std::uint32_t>{0});
    CHECK(sf.type.ell == std::vector<std::uint32_t>{0, 0});

    MixedMat empty = zero_mixed(sp, 0);
    CHECK(mixed_standard_form(sp, empty).type.rank() == 0);

    // duplicated and dependent rows are fine
    MixedMat dup = mixed_from_values(sp, 3, {1, 0, 1, 0, 2, 0}, {1, 1, 2});
    check_full_contract(sp, dup);
}

TEST_CASE("type assignment follows the module structure") {
    auto z4 = oracle::z_ring(2, 2);
    MixedSpace sp(z4, 1, 1, 1);
    // (1 || 1) generates a module of size 4: a single y staircase row
    MixedMat g1 = mixed_from_values(sp, 1, {1}, {1});
    StandardForm s1 = mixed_standard_form(sp, g1);
    CHECK(s1.type.k == std::vector<std::uint32_t>{0});
    CHECK(s1.type.ell == std::vector<std::uint32_t>{1, 0});
    CHECK(oracle::span_closure(sp, g1).size() == 4);

    // (1 || 2) generates a module of size 2: an x staircase row
    MixedMat g2 = mixed_from_values(sp, 1, {1}, {2});
    StandardForm s2 = mixed_standard_form(sp, g2);
    CHECK(s2.type.k == std::vector<std::uint32_t>{1});
    CHECK(s2.type.ell == std::vector<std::uint32_t>{0, 0});
    CHECK(oracle::span_closure(sp, g2).size() == 2);
}

TEST_CASE("random standard form contracts") {
    std::mt19937_64 rng(20240817);
    struct Config {
        std::shared_ptr<const Ring> ring;
        std::uint32_t r, alpha, beta;
    };
    std::vector<Config> configs = {
        {oracle::z_ring(2, 2), 1, 2, 1},
        {oracle::z_ring(2, 2), 1, 1, 2},
        {oracle::z_ring(2, 3), 2, 2, 1},
        {oracle::z_ring(2, 3), 1, 1, 1},
        {oracle::z_ring(3, 2), 1, 1, 1},
        {oracle::theta_ring(2, 1, 1, 2), 1, 2, 1},
        {oracle::theta_ring(2, 1, 1, 3), 2, 1, 1},
        {oracle::galois_ring(2, 2, 2), 1, 1, 1},
        {oracle::z_ring(2, 2), 2, 1, 1},  // r = s
    };
    for (const auto& cfg : configs) {
        MixedSpace sp(cfg.ring, cfg.r, cfg.alpha, cfg.beta);
        for (int trial = 0; trial < 12; ++trial) {
            std::uint32_t rows = rng() % 4;
            MixedMat g = oracle::random_mixed(sp, rows, rng);
            check_full_contract(sp, g);
        }
    }
}

TEST_CASE("type invariance under invertible scalar action") {
    std::mt19937_64 rng(99);
    for (auto ring : {oracle::z_ring(2, 3), oracle::galois_ring(2, 2, 2)}) {
        MixedSpace sp(ring, 1, 2, 1);
        for (int trial = 0; trial < 15; ++trial) {
            std::uint32_t rows = 1 + rng() % 3;
            MixedMat g = oracle::random_mixed(sp, rows, rng);
            CodeType t = mixed_standard_form(sp, g).type;
            RingMat u = oracle::random_invertible(ring, rows, rng);
            CHECK(mixed_standard_form(sp, scalar_act(u, g)).type == t);
        }
    }
}

TEST_CASE("enumeration bijection via the message space") {
    std::mt19937_64 rng(5150);
    for (auto ring : {oracle::z_ring(2, 2), oracle::z_ring(3, 2)}) {
        MixedSpace sp(ring, 1, 2, 1);
        for (int trial = 0; trial < 10; ++trial) {
            MixedMat g = oracle::random_mixed(sp, 1 + rng() % 3, rng);
            StandardForm sf = mixed_standard_form(sp, g);
            auto span = oracle::span_closure(sp, g);
            std::set<std::uint64_t> seen;
            std::vector<std::vector<RElem>> msgs(sf.pivots.size());
            for (std::uint32_t i = 0; i < sf.pivots.size(); ++i) {
                const auto& pv = sf.pivots[i];
                int bound = pv.in_x ? static_cast<int>(sp.r()) - static_cast<int>(pv.group) - 1
                                    : static_cast<int>(sp.s()) - static_cast<int>(pv.group) - 1;
                msgs[i] = ring->digit_bounded_elements(bound);
            }
            std::vector<std::uint32_t> idx(sf.pivots.size(), 0);
            if (idx.empty()) {
                CHECK(span.size() == 1);
                continue;
            }
            while (true) {
                MixedVec w = sp.zero_vec();
                for (std::uint32_t i = 0; i < sf.pivots.size(); ++i)
                    w = sp.add(w, sp.scalar_mul(msgs[i][idx[i]], mixed_row(sf.standard, i)));
                CHECK(seen.insert(sp.index_of(w)).second);
                std::uint32_t carry = static_cast<std::uint32_t>(idx.size());
                for (std::uint32_t i = static_cast<std::uint32_t>(idx.size()); i-- > 0;) {
                    if (++idx[i] < msgs[i].size()) {
                        carry = i;
                        break;
                    }
                    idx[i] = 0;
                }
                if (carry == idx.size()) break;
            }
            CHECK(seen == span);
        }
    }
}
