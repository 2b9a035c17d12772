// Acceptance suite: reproduces the published worked examples exactly and runs
// the exhaustive/randomized property checks, one reported line per criterion.
// Exit code is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mixedcode/galois.hpp"
#include "mixedcode/gray.hpp"
#include "oracle.hpp"

using namespace mixedcode;

namespace {

int g_failures = 0;

struct Criterion {
    std::string id;
    bool ok = true;
    long checks = 0;
    std::string note;

    Criterion(std::string id_) : id(std::move(id_)) {}
    void expect(bool cond, const char* what = nullptr) {
        ++checks;
        if (!cond) {
            ok = false;
            if (what && note.empty()) note = what;
        }
    }
    void finish(const std::string& detail) {
        std::printf("%-7s %s  %s (%ld checks%s%s)\n", id.c_str(), ok ? "PASS" : "FAIL", detail.c_str(), checks,
                    note.empty() ? "" : "; first failure: ", note.c_str());
        if (!ok) ++g_failures;
    }
};

MixedMat mixed_from_values(const MixedSpace& sp, std::uint32_t rows, std::vector<RElem> xv, std::vector<RElem> yv) {
    MixedMat m = zero_mixed(sp, rows);
    for (std::uint32_t i = 0; i < rows; ++i) {
        for (std::uint32_t j = 0; j < sp.alpha(); ++j) m.x.set(i, j, xv[i * sp.alpha() + j]);
        for (std::uint32_t j = 0; j < sp.beta(); ++j) m.y.set(i, j, yv[i * sp.beta() + j]);
    }
    return m;
}

MixedCode z2z4_sample_code() {
    auto z4 = oracle::z_ring(2, 2);
    MixedSpace sp(z4, 1, 3, 2);
    return MixedCode(sp, mixed_from_values(sp, 2, {1, 1, 1, 0, 0, 0}, {0, 2, 1, 2}));
}

MixedCode z3z9_pair_code(std::uint32_t alpha) {
    auto z9 = oracle::z_ring(3, 2);
    MixedSpace sp(z9, 1, alpha, alpha);
    MixedMat g = zero_mixed(sp, alpha);
    for (std::uint32_t i = 0; i < alpha; ++i) {
        g.x.set(i, i, 1);
        g.y.set(i, i, 3);
    }
    return MixedCode(sp, g);
}

void criterion_1() {
    Criterion c("ACC-1");
    auto z8 = oracle::z_ring(2, 3);
    MixedSpace sp(z8, 2, 3, 4);
    MixedMat g = mixed_from_values(sp, 4, {2, 1, 0, 0, 2, 0, 1, 1, 1, 2, 1, 2},
                                   {2, 6, 3, 5, 1, 2, 4, 0, 0, 4, 0, 4, 4, 2, 6, 0});
    MixedCode code(sp, g);
    c.expect(code.type().alpha == 3 && code.type().beta == 4, "block length");
    c.expect(code.type().k == std::vector<std::uint32_t>{2, 0}, "k array");
    c.expect(code.type().ell == std::vector<std::uint32_t>{2, 0, 0}, "l array");
    c.expect(code.log_q_size() == 10 && code.size() == 1024, "|C| = 2^10");
    // the published standard matrix: x entries reduced mod 4, its y column
    // permutation (pivot columns 1 and 3 listed first) undone
    MixedMat pub = mixed_from_values(sp, 4, {1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 2},
                                     {0, 6, 0, 6, 0, 6, 0, 6, 1, 6, 0, 0, 0, 0, 1, 1});
    auto span_std = oracle::span_closure(sp, code.standard_form().standard);
    auto span_pub = oracle::span_closure(sp, pub);
    auto span_g = oracle::span_closure(sp, g);
    c.expect(span_std == span_g, "standard form span");
    c.expect(span_pub == span_g, "published display span");
    c.finish("4x(3||4) generator: type (3,4;2,0;2,0,0), |C| = 2^10, span matches the display");
}

void criterion_2() {
    Criterion c("ACC-2");
    MixedCode code = z2z4_sample_code();
    const MixedSpace& sp = code.space();
    LcdReport rep = is_lcd(code, 0, LcdMethod::Both);
    c.expect(rep.lcd, "verdict");
    c.expect(rep.structural.has_value() && *rep.structural, "staircase criterion");
    c.expect(rep.hypothesis_holds, "criterion hypothesis");
    // brute-force hull: enumerate the 8 codewords, scan the ambient for the
    // dual word set, intersect
    auto words = oracle::span_closure(sp, code.generators());
    c.expect(words.size() == 8, "|C| = 8");
    auto dual_words = oracle::brute_dual(sp, words, 0);
    auto hull_words = oracle::intersect(words, dual_words);
    c.expect(hull_words.size() == 1 && hull_words.count(sp.index_of(sp.zero_vec())) == 1, "hull = {0}");
    c.finish("(1,1,1||0,2), (0,0,0||1,2) over Z2Z4 is complementary-dual by both routes");
}

void criterion_3() {
    Criterion c("ACC-3");
    MixedCode code = z2z4_sample_code();
    TransferReport tr = lcd_transfer(code);
    c.expect(tr.obstruction_zero, "obstruction set");
    c.expect(tr.gray_linear.has_value() && *tr.gray_linear, "binary image linear");
    c.expect(tr.binary_lcd.has_value() && *tr.binary_lcd, "binary verdict");
    c.expect(tr.gray_code.has_value(), "image code");
    if (tr.gray_code) {
        auto f2 = tr.gray_code->field_ptr();
        FieldCode published(f2, 7, {{1, 1, 1, 0, 0, 1, 1}, {0, 0, 0, 0, 1, 1, 1}, {0, 0, 0, 1, 0, 1, 1}});
        c.expect(tr.gray_code->row_space_equal(published), "3x7 row space");
        FieldCode gd = field_dual(*tr.gray_code, 0);
        c.expect(gd.dim() == 4, "dual dimension 4");
        bool ortho = true;
        for (const auto& w : gd.enumerate())
            for (const auto& b : tr.gray_code->basis()) {
                FElem acc = 0;
                for (size_t t = 0; t < w.size(); ++t) acc = f2->add(acc, f2->mul(w[t], b[t]));
                ortho &= acc == 0;
            }
        c.expect(ortho, "orthogonality");
        c.expect(min_distance(gd) == 2, "dual distance 2");
    }
    c.finish("binary image of the Z2Z4 example: published 3x7 row space, 4-dim dual of distance 2, LCD");
}

void criterion_4() {
    Criterion c("ACC-4");
    std::vector<std::uint64_t> dist_dual_of_image, dist_image_of_dual;
    for (std::uint32_t alpha : {1u, 2u}) {
        MixedCode code = z3z9_pair_code(alpha);
        auto ob = linearity_obstruction_set(code);
        c.expect(ob.zero_only, "obstruction zero");
        c.expect(is_lcd(code, 0).lcd, "source verdict");
        TransferReport tr = lcd_transfer(code);
        c.expect(tr.puncture_lcd.has_value() && *tr.puncture_lcd, "puncture verdict");
        c.expect(tr.puncture_biconditional.has_value() && *tr.puncture_biconditional, "puncture transfer");

        auto pair = make_digit_alphabet_pair(3, alpha, alpha);
        // image of C: weight distribution equal to the repetition structure
        std::vector<MixedVec> fwords;
        for (const auto& w : code.enumerate()) fwords.push_back(digit_reencode_vec(pair, w));
        MixedCode fcode(pair.fspace, mixed_from_rows(pair.fspace, fwords));
        GrayImage img = gray_image(fcode);
        c.expect(img.linear, "image linear");
        auto f3 = img.as_code->field_ptr();
        std::vector<std::vector<FElem>> rep_rows(alpha, std::vector<FElem>(4 * alpha, 0));
        for (std::uint32_t i = 0; i < alpha; ++i)
            for (std::uint32_t b = 0; b < 4; ++b) rep_rows[i][b * alpha + i] = 1;
        FieldCode repetition(f3, 4 * alpha, rep_rows);
        c.expect(weight_distribution(*img.as_code) == weight_distribution(repetition), "weight distribution");

        // distances pinned by the enumeration oracle: 2 and 3
        FieldCode dual_of_image = field_dual(*img.as_code, 0);
        std::uint64_t d1 = min_distance(dual_of_image);
        dist_dual_of_image.push_back(d1);
        c.expect(d1 == 2, "distance of the image dual");

        MixedCode zdual = dual(code, 0);
        std::vector<MixedVec> dwords;
        for (const auto& w : zdual.enumerate()) dwords.push_back(digit_reencode_vec(pair, w));
        MixedCode fdual(pair.fspace, mixed_from_rows(pair.fspace, dwords));
        GrayImage dimg = gray_image(fdual);
        c.expect(dimg.linear, "dual image linear");
        std::uint64_t d2 = min_distance(*dimg.as_code);
        dist_image_of_dual.push_back(d2);
        c.expect(d2 == 3, "distance of the dual image");
    }
    c.finish("ternary example (alpha = 1, 2): obstruction zero, LCD, repetition weight profile, "
             "dual distances pinned at 2 and 3");

    // the published label claims the value 4 for exactly one of the two
    // distances; the enumeration oracle refutes it, and locates 4 as the
    // distance of the image of the misprinted parity-check span
    Criterion cb("ACC-4b");
    bool exactly_one_is_4 = false;
    for (size_t i = 0; i < dist_dual_of_image.size(); ++i) {
        exactly_one_is_4 |= (dist_dual_of_image[i] == 4) != (dist_image_of_dual[i] == 4);
    }
    cb.expect(exactly_one_is_4, "neither distance equals 4");
    {
        auto pair = make_digit_alphabet_pair(3, 1, 1);
        MixedMat pg = mixed_from_values(pair.zspace, 1, {2}, {3});
        MixedCode claimed(pair.zspace, pg);
        std::vector<MixedVec> words;
        for (const auto& w : claimed.enumerate()) words.push_back(digit_reencode_vec(pair, w));
        GrayImage img = gray_image(MixedCode(pair.fspace, mixed_from_rows(pair.fspace, words)));
        cb.expect(img.linear && min_distance(*img.as_code) == 4, "misprinted span image distance");
    }
    cb.finish("published label: the value 4 belongs to the image of the misprinted parity-check span, "
              "not to either computed dual (known erratum; expected FAIL)");
}

void criterion_5() {
    Criterion c("ACC-5");
    std::mt19937_64 rng(50505);
    struct Config {
        std::shared_ptr<const Ring> ring;
        std::uint32_t r, alpha, beta;
    };
    std::vector<Config> configs = {
        {oracle::z_ring(2, 2), 1, 3, 2},           {oracle::z_ring(2, 3), 2, 2, 2},
        {oracle::z_ring(2, 3), 1, 3, 1},           {oracle::z_ring(3, 2), 1, 2, 2},
        {oracle::theta_ring(2, 1, 1, 2), 1, 3, 2}, {oracle::theta_ring(2, 1, 1, 3), 2, 2, 2},
        {oracle::theta_ring(3, 1, 1, 2), 1, 2, 2}, {oracle::galois_ring(2, 2, 2), 1, 2, 1},
        {oracle::theta_ring(2, 1, 2, 2), 1, 2, 1},
    };
    int codes = 0;
    long formula_checked = 0, formula_failed_outside = 0;
    for (const auto& cfg : configs) {
        MixedSpace sp(cfg.ring, cfg.r, cfg.alpha, cfg.beta);
        std::uint32_t m = sp.m();
        for (int trial = 0; trial < 24; ++trial) {
            MixedCode code(sp, oracle::random_mixed(sp, rng() % 5, rng));
            ++codes;
            for (std::uint32_t h = 0; h < m; ++h) {
                MixedCode d = dual(code, h);
                c.expect(code.log_q_size() + d.log_q_size() == sp.ambient_log_q(), "size product");
                c.expect(dual(d, (m - h) % m).equals(code), "double dual");
                // the printed reversal formula is sound for weakly-free codes
                // and one-step quotients; beyond that the dual type is not a
                // function of the type (ACC-5b pins the counterexample)
                bool formula_domain = code.type().weakly_free() || sp.s() - sp.r() == 1;
                if (formula_domain) {
                    c.expect(d.type() == code.type().dual_type(), "dual type formula");
                    ++formula_checked;
                } else if (!(d.type() == code.type().dual_type())) {
                    ++formula_failed_outside;
                }
                c.expect(d.log_q_size() == code.type().dual_type().log_q_size(sp.m(), sp.r(), sp.s()),
                         "dual type size");
                MixedCode shifted(sp, frobenius_mixed(code.generators(), h));
                c.expect(dual(shifted, 0).equals(d), "twist shift");
            }
        }
    }
    c.finish("duality suite over 9 ring pairs, " + std::to_string(codes) + " random codes; type formula on " +
             std::to_string(formula_checked) + " codes in its domain");

    Criterion cb("ACC-5b");
    // the unrestricted reversal formula: two codes of the same type over
    // Z_2 x Z_8 whose duals are non-isomorphic modules
    auto z8 = oracle::z_ring(2, 3);
    MixedSpace sp(z8, 1, 3, 1);
    MixedMat coupled = zero_mixed(sp, 3);
    coupled.x.set(0, 1, 1);
    coupled.y.set(0, 0, 4);
    coupled.x.set(1, 1, 1);
    coupled.x.set(1, 2, 1);
    coupled.y.set(1, 0, 6);
    coupled.x.set(2, 0, 1);
    coupled.y.set(2, 0, 4);
    MixedCode c1(sp, coupled);
    MixedMat split = zero_mixed(sp, 3);
    split.x.set(0, 0, 1);
    split.x.set(1, 1, 1);
    split.y.set(2, 0, 2);
    MixedCode c2(sp, split);
    cb.expect(c1.type() == c2.type(), "equal types");
    MixedCode d1 = dual(c1, 0);
    cb.expect(oracle::code_words(d1) == oracle::brute_dual(sp, oracle::span_closure(sp, coupled), 0),
              "brute dual agreement");
    cb.expect(d1.type() == c1.type().dual_type(), "printed formula on the coupled code");
    cb.expect(formula_failed_outside == 0, "no failures outside the domain either");
    cb.finish("unrestricted dual-type formula: the coupled Z2Z8 code refutes it "
              "(known erratum; expected FAIL)");
}

void criterion_6() {
    Criterion c("ACC-6");
    std::mt19937_64 rng(60606);
    struct Config {
        std::shared_ptr<const Ring> ring;
        std::uint32_t r, alpha, beta;
    };
    std::vector<Config> configs = {
        {oracle::z_ring(2, 2), 1, 3, 2},           {oracle::z_ring(2, 3), 2, 2, 2},
        {oracle::z_ring(3, 2), 1, 2, 2},           {oracle::theta_ring(2, 1, 1, 2), 1, 2, 2},
        {oracle::galois_ring(2, 2, 2), 1, 2, 1},   {oracle::theta_ring(2, 1, 2, 2), 1, 1, 2},
    };
    int agreed = 0, witnesses = 0;
    for (const auto& cfg : configs) {
        MixedSpace sp(cfg.ring, cfg.r, cfg.alpha, cfg.beta);
        for (int trial = 0; trial < 90 && agreed < 240; ++trial) {
            MixedCode code(sp, oracle::random_mixed(sp, 1 + rng() % 3, rng));
            if (!code.type().weakly_free()) continue;
            for (std::uint32_t h = 0; h < sp.m(); ++h) {
                LcdReport rep = is_lcd(code, h, LcdMethod::Both);
                if (!rep.hypothesis_holds || rep.fell_back_to_oracle) continue;
                c.expect(rep.oracle.has_value() && rep.structural.has_value(), "both verdicts");
                c.expect(*rep.oracle == *rep.structural, "verdict agreement");
                ++agreed;
                if (*rep.structural) {
                    c.expect(rep.witness.has_value(), "witness present");
                    const MixedMat& gstd = code.standard_form().standard;
                    RingMat gr = gram(sp, gstd, gstd, h);
                    RingMat prod = mat_mul(gr, *rep.witness);
                    std::uint32_t kx = 0;
                    for (const auto& pv : code.standard_form().pivots)
                        if (pv.in_x) ++kx;
                    const Ring& S = sp.ring();
                    RingMat expect(sp.ring_ptr(), code.rank(), code.rank());
                    for (std::uint32_t i = 0; i < code.rank(); ++i)
                        expect.set(i, i, i < kx ? S.mul_theta_pow(S.one(), sp.s() - sp.r()) : S.one());
                    c.expect(prod == expect, "witness product");
                    c.expect(is_invertible(*rep.witness), "witness invertible");
                    ++witnesses;
                }
            }
        }
    }
    c.expect(agreed >= 200, "sample size");
    c.expect(witnesses >= 40, "witness sample size");
    c.finish("criterion equivalence on " + std::to_string(agreed) + " weakly-free codes, " +
             std::to_string(witnesses) + " exact witnesses");
}

void criterion_7() {
    Criterion c("ACC-7");
    std::mt19937_64 rng(70707);
    struct Config {
        std::shared_ptr<const Ring> ring;
        std::uint32_t r, alpha, beta;
    };
    std::vector<Config> configs = {
        {oracle::galois_ring(2, 2, 2), 1, 1, 1},
        {oracle::galois_ring(2, 2, 2), 1, 2, 1},
        {oracle::theta_ring(2, 1, 2, 2), 1, 1, 1},
        {oracle::theta_ring(2, 1, 2, 2), 1, 2, 2},
    };
    int codes = 0, invariant = 0;
    for (const auto& cfg : configs) {
        MixedSpace sp(cfg.ring, cfg.r, cfg.alpha, cfg.beta);
        GaloisContext ctx(sp);
        for (int trial = 0; trial < 22; ++trial) {
            MixedCode code(sp, oracle::random_mixed(sp, 1 + rng() % 2, rng));
            ++codes;
            for (std::uint32_t h = 0; h < sp.m(); ++h) c.expect(ctx.delsarte_check(code, h), "delsarte");
            MixedCode res = ctx.res_subcode(code);
            c.expect(ctx.g_core(code).equals(ctx.ext_code(res)), "core = ext(res)");
            bool inv = ctx.is_invariant(code);
            c.expect(ctx.subring_generator_matrix(code).has_value() == inv, "subring generators iff invariant");
            if (inv) {
                ++invariant;
                c.expect(res.equals(ctx.trace_code(code)), "res = trace");
                MixedCode d0 = dual(code, 0);
                for (std::uint32_t h = 1; h < sp.m(); ++h) c.expect(dual(code, h).equals(d0), "dual twist free");
            }
        }
        // seeded invariant codes
        for (int trial = 0; trial < 8; ++trial) {
            MixedCode d(ctx.subspace(), oracle::random_mixed(ctx.subspace(), 1 + rng() % 2, rng));
            MixedCode code = ctx.ext_code(d);
            ++codes;
            ++invariant;
            c.expect(ctx.is_invariant(code), "ext invariant");
            c.expect(ctx.res_subcode(code).equals(ctx.trace_code(code)), "res = trace");
            for (std::uint32_t h = 0; h < sp.m(); ++h) c.expect(ctx.delsarte_check(code, h), "delsarte");
            MixedCode d0 = dual(code, 0);
            for (std::uint32_t h = 1; h < sp.m(); ++h) c.expect(dual(code, h).equals(d0), "dual twist free");
        }
    }
    c.expect(codes >= 100, "sample size");
    c.finish("galois suite over the two quadratic extensions: " + std::to_string(codes) + " codes, " +
             std::to_string(invariant) + " invariant");
}

void criterion_8() {
    Criterion c("ACC-8");
    // exhaustive isometry on the (2,1) ambient over Z2Z4
    auto z4 = oracle::z_ring(2, 2);
    MixedSpace sp(z4, 1, 2, 1);
    std::uint64_t total = sp.ambient_size(1 << 16);
    for (std::uint64_t i = 0; i < total; ++i)
        for (std::uint64_t j = 0; j < total; ++j) {
            MixedVec u = sp.vec_at(i), v = sp.vec_at(j);
            auto gu = gray_map(sp, u), gv = gray_map(sp, v);
            std::uint64_t dh = 0;
            for (size_t t = 0; t < gu.size(); ++t) dh += gu[t] != gv[t];
            c.expect(sp.hom_distance(u, v) == dh, "exhaustive isometry");
        }
    // sampled pairs elsewhere
    std::mt19937_64 rng(80808);
    struct Config {
        std::shared_ptr<const Ring> ring;
        std::uint32_t r, alpha, beta;
    };
    long sampled = 0;
    for (const auto& cfg : std::vector<Config>{{oracle::z_ring(2, 3), 2, 2, 1},
                                               {oracle::z_ring(3, 2), 1, 2, 1},
                                               {oracle::galois_ring(2, 2, 2), 1, 1, 1},
                                               {oracle::theta_ring(2, 1, 1, 4), 4, 1, 1},
                                               {oracle::theta_ring(2, 1, 2, 2), 1, 1, 1}}) {
        MixedSpace spc(cfg.ring, cfg.r, cfg.alpha, cfg.beta);
        std::uint64_t count = spc.ambient_size(std::uint64_t(1) << 30);
        for (int trial = 0; trial < 2100; ++trial) {
            MixedVec u = spc.vec_at(rng() % count), v = spc.vec_at(rng() % count);
            auto gu = gray_map(spc, u), gv = gray_map(spc, v);
            std::uint64_t dh = 0;
            for (size_t t = 0; t < gu.size(); ++t) dh += gu[t] != gv[t];
            c.expect(spc.hom_distance(u, v) == dh, "sampled isometry");
            ++sampled;
        }
    }
    // weight tables
    std::vector<std::uint64_t> w4, w8, w9;
    for (RElem v = 0; v < 4; ++v) w4.push_back(hom_weight_elem(*oracle::z_ring(2, 2), v));
    for (RElem v = 0; v < 8; ++v) w8.push_back(hom_weight_elem(*oracle::z_ring(2, 3), v));
    for (RElem v = 0; v < 9; ++v) w9.push_back(hom_weight_elem(*oracle::z_ring(3, 2), v));
    c.expect(w4 == std::vector<std::uint64_t>{0, 1, 2, 1}, "Z4 weights");
    c.expect(w8 == std::vector<std::uint64_t>{0, 2, 2, 2, 4, 2, 2, 2}, "Z8 weights");
    c.expect(w9 == std::vector<std::uint64_t>{0, 2, 2, 3, 2, 2, 3, 2, 2}, "Z9 weights");
    c.finish("isometry exhaustive on 256 pairs plus " + std::to_string(sampled) + " sampled pairs; weight tables");
}

void criterion_9() {
    Criterion c("ACC-9");
    for (std::uint32_t q : {2u, 3u}) {
        // exhaustive alpha = beta = 1
        auto pair = make_digit_alphabet_pair(q, 1, 1);
        const MixedSpace& zs = pair.zspace;
        const MixedSpace& fs = pair.fspace;
        const Field& fq = fs.ring().residue_field();
        std::uint64_t total = zs.ambient_size(1 << 16);
        for (std::uint64_t i = 0; i < total; ++i) {
            for (std::uint64_t j = 0; j < total; ++j) {
                MixedVec u = zs.vec_at(i), v = zs.vec_at(j);
                MixedVec fu = digit_reencode_vec(pair, u), fv = digit_reencode_vec(pair, v);
                c.expect(zs.hom_distance(u, v) == fs.hom_distance(fu, fv), "distance");
                MixedVec cond = zs.scalar_mul(zs.ring().theta(),
                                              componentwise_product(zs, componentwise_power(zs, u, q - 1),
                                                                    componentwise_power(zs, v, q - 1)));
                if (!zs.is_zero(cond)) continue;
                // star morphism and the addition defect
                c.expect(digit_reencode_vec(pair, componentwise_product(zs, u, v)) ==
                             componentwise_product(fs, fu, fv),
                         "product");
                c.expect(digit_reencode_vec(pair, zs.add(u, v)) ==
                             fs.add(fs.add(fu, fv), digit_reencode_vec(pair, cond)),
                         "sum defect");
                // scalar twist on carry-free vectors
                for (const MixedVec* w : {&u, &v}) {
                    MixedVec wcond = zs.scalar_mul(zs.ring().theta(),
                                                   componentwise_product(zs, componentwise_power(zs, *w, q - 1),
                                                                         componentwise_power(zs, *w, q - 1)));
                    if (q != 2 && !zs.is_zero(wcond)) continue;
                    for (std::uint32_t x = 0; x < q; ++x)
                        for (std::uint32_t y = 0; y < q; ++y) {
                            RElem za = static_cast<RElem>(x + q * y);
                            RElem fa = fs.ring().from_theta_adic({x, y});
                            c.expect(digit_reencode_vec(pair, zs.scalar_mul(za, *w)) ==
                                         fs.scalar_mul(fa, digit_reencode_vec(pair, *w)),
                                     "scalar twist");
                        }
                }
                // inner-product transfer identities under the vanishing condition
                RElem zip = zs.inner_product(u, v, 0);
                RElem fip = fs.inner_product(fu, fv, 0);
                c.expect(digit_reencode_elem(pair, zip) == fip, "ip transfer");
                auto gu = gray_map(fs, fu), gv = gray_map(fs, fv);
                FElem gip = 0;
                for (size_t t = 0; t < gu.size(); ++t) gip = fq.add(gip, fq.mul(gu[t], gv[t]));
                if (q == 2) {
                    RElem expected = fs.ring().mul(fs.ring().theta(), fs.ring().from_theta_adic({gip}));
                    c.expect(fip == expected, "binary gray ip");
                } else {
                    FElem xip = 0;
                    const Field& f3 = fs.bar().residue_field();
                    for (std::uint32_t t = 0; t < zs.alpha(); ++t) xip = f3.add(xip, f3.mul(u.x[t], v.x[t]));
                    c.expect(gip == xip, "ternary gray ip");
                }
            }
        }
        // random larger blocks
        std::mt19937_64 rng(90909 + q);
        for (auto shape : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 3}, {3, 1}, {1, 2}}) {
            auto p3 = make_digit_alphabet_pair(q, shape.first, shape.second);
            std::uint64_t count = p3.zspace.ambient_size(std::uint64_t(1) << 30);
            for (int trial = 0; trial < 700; ++trial) {
                MixedVec u = p3.zspace.vec_at(rng() % count), v = p3.zspace.vec_at(rng() % count);
                MixedVec fu = digit_reencode_vec(p3, u), fv = digit_reencode_vec(p3, v);
                c.expect(p3.zspace.hom_distance(u, v) == p3.fspace.hom_distance(fu, fv), "distance");
                MixedVec cond = p3.zspace.scalar_mul(
                    p3.zspace.ring().theta(),
                    componentwise_product(p3.zspace, componentwise_power(p3.zspace, u, q - 1),
                                          componentwise_power(p3.zspace, v, q - 1)));
                if (!p3.zspace.is_zero(cond)) continue;
                c.expect(digit_reencode_vec(p3, componentwise_product(p3.zspace, u, v)) ==
                             componentwise_product(p3.fspace, fu, fv),
                         "product");
                c.expect(digit_reencode_vec(p3, p3.zspace.add(u, v)) ==
                             p3.fspace.add(p3.fspace.add(fu, fv), digit_reencode_vec(p3, cond)),
                         "sum defect");
                RElem zip = p3.zspace.inner_product(u, v, 0);
                c.expect(digit_reencode_elem(p3, zip) == p3.fspace.inner_product(fu, fv, 0), "ip transfer");
            }
        }
    }
    c.finish("alphabet-change identities and inner-product transfers under the vanishing condition");
}

void criterion_10() {
    Criterion c("ACC-10");
    std::mt19937_64 rng(101010);
    int checked = 0;
    for (auto ring : {oracle::theta_ring(2, 1, 1, 4), oracle::z_ring(2, 4)}) {
        for (auto shape : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{1, 1}, {2, 1}, {0, 1}, {1, 0}}) {
            MixedSpace sp(ring, 4, shape.first, shape.second);
            c.expect(gray_self_orth_applicable(sp), "bound applies");
            for (int trial = 0; trial < 8; ++trial) {
                MixedCode code(sp, oracle::random_mixed(sp, 1 + rng() % 2, rng));
                if (code.log_q_size() > 9) continue;
                c.expect(gray_self_orthogonal(code, 0), "image self-orthogonal");
                ++checked;
            }
        }
    }
    c.expect(checked >= 50, "sample size");
    c.finish("socle-length-4 images: " + std::to_string(checked) + " random codes all self-orthogonal");
}

}  // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    auto t1 = std::chrono::steady_clock::now();
    double secs = std::chrono::duration<double>(t1 - t0).count();
    std::printf("---\n%d criterion(s) failed; %.1f s total\n", g_failures, secs);
    std::printf("note: ACC-4b and ACC-5b track published misprints and are expected to stay red; "
                "the computed values are pinned by the enumeration oracles above\n");
    return g_failures;
}
