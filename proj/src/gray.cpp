#include "mixedcode/gray.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "mixedcode/support.hpp"

namespace mixedcode {

namespace {

// rref over the field; returns pivot columns.
std::vector<std::uint32_t> rref(const Field& f, std::vector<std::vector<FElem>>& rows) {
    std::vector<std::uint32_t> pivots;
    if (rows.empty()) return pivots;
    std::uint32_t n = static_cast<std::uint32_t>(rows[0].size());
    std::uint32_t rank = 0;
    for (std::uint32_t col = 0; col < n && rank < rows.size(); ++col) {
        std::uint32_t piv = rank;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        FElem c = f.inv(rows[rank][col]);
        for (auto& v : rows[rank]) v = f.mul(v, c);
        for (std::uint32_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            FElem w = rows[i][col];
            for (std::uint32_t j = 0; j < n; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(w, rows[rank][j]));
        }
        pivots.push_back(col);
        ++rank;
    }
    rows.resize(rank);
    return pivots;
}

}  // namespace

FieldCode::FieldCode(std::shared_ptr<const Field> field, std::uint32_t n, std::vector<std::vector<FElem>> generators)
    : field_(std::move(field)), n_(n), gens_(std::move(generators)) {
    for (const auto& r : gens_) {
        if (r.size() != n_) throw std::invalid_argument("field code: generator width mismatch");
        for (auto v : r)
            if (v >= field_->size()) throw std::invalid_argument("field code: entry out of range");
    }
    basis_ = gens_;
    pivot_cols_ = rref(*field_, basis_);
}

bool FieldCode::contains(const std::vector<FElem>& w) const {
    if (w.size() != n_) throw std::invalid_argument("field code contains: width mismatch");
    std::vector<FElem> res = w;
    for (std::uint32_t i = 0; i < basis_.size(); ++i) {
        FElem c = res[pivot_cols_[i]];
        if (c == 0) continue;
        for (std::uint32_t j = 0; j < n_; ++j) res[j] = field_->sub(res[j], field_->mul(c, basis_[i][j]));
    }
    for (auto v : res)
        if (v != 0) return false;
    return true;
}

std::vector<std::vector<FElem>> FieldCode::enumerate(std::uint64_t cap) const {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < dim(); ++i) {
        count *= field_->size();
        if (count > cap) throw CapExceeded("field code enumeration exceeds cap");
    }
    std::vector<std::vector<FElem>> words;
    words.reserve(count);
    std::vector<FElem> msg(dim(), 0);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::uint64_t rem = idx;
        for (std::uint32_t i = 0; i < dim(); ++i) {
            msg[i] = static_cast<FElem>(rem % field_->size());
            rem /= field_->size();
        }
        std::vector<FElem> w(n_, 0);
        for (std::uint32_t i = 0; i < dim(); ++i) {
            if (msg[i] == 0) continue;
            for (std::uint32_t j = 0; j < n_; ++j) w[j] = field_->add(w[j], field_->mul(msg[i], basis_[i][j]));
        }
        words.push_back(std::move(w));
    }
    return words;
}

bool FieldCode::row_space_equal(const FieldCode& o) const {
    return n_ == o.n_ && field_->same(*o.field_) && basis_ == o.basis_;
}

FieldCode field_dual(const FieldCode& c, std::uint32_t frob) {
    const Field& f = c.field();
    std::uint32_t n = c.length();
    // nullspace of conj(G)^T: rows conjugated, then standard RREF back-solve
    std::vector<std::vector<FElem>> rows = c.basis();
    for (auto& r : rows)
        for (auto& v : r) v = f.frobenius(v, frob);
    auto piv = rref(f, rows);
    std::vector<bool> is_piv(n, false);
    for (auto p : piv) is_piv[p] = true;
    std::vector<std::vector<FElem>> duals;
    for (std::uint32_t col = 0; col < n; ++col) {
        if (is_piv[col]) continue;
        std::vector<FElem> w(n, 0);
        w[col] = f.one();
        for (std::uint32_t i = 0; i < rows.size(); ++i) w[piv[i]] = f.neg(rows[i][col]);
        duals.push_back(std::move(w));
    }
    return FieldCode(c.field_ptr(), n, duals);
}

bool field_is_lcd(const FieldCode& c, std::uint32_t frob) {
    const Field& f = c.field();
    std::uint32_t k = c.dim();
    if (k == 0) return true;
    std::vector<std::vector<FElem>> g = c.basis();
    std::vector<std::vector<FElem>> m(k, std::vector<FElem>(k, 0));
    for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = 0; j < k; ++j) {
            FElem acc = 0;
            for (std::uint32_t t = 0; t < c.length(); ++t)
                acc = f.add(acc, f.mul(g[i][t], f.frobenius(g[j][t], frob)));
            m[i][j] = acc;
        }
    rref(f, m);
    return m.size() == k;
}

std::uint64_t min_distance(const FieldCode& c, std::uint64_t cap) {
    if (c.dim() == 0) return 0;
    auto words = c.enumerate(cap);
    std::uint64_t best = c.length() + 1;
    for (const auto& w : words) {
        std::uint64_t wt = 0;
        for (auto v : w) wt += v != 0;
        if (wt != 0) best = std::min(best, wt);
    }
    return best;
}

std::vector<std::uint64_t> weight_distribution(const FieldCode& c, std::uint64_t cap) {
    std::vector<std::uint64_t> dist(c.length() + 1, 0);
    for (const auto& w : c.enumerate(cap)) {
        std::uint64_t wt = 0;
        for (auto v : w) wt += v != 0;
        ++dist[wt];
    }
    return dist;
}

std::vector<std::vector<FElem>> rm_generator(const Field& f, std::uint32_t t) {
    if (t < 1) throw std::invalid_argument("rm_generator: t must be >= 1");
    std::uint32_t q = f.size();
    if (t == 1) return {{f.one()}};
    std::uint64_t len = checked_pow_u64(q, t - 1);
    // column labels: (0, 1, eps, eps^2, ...)
    std::vector<FElem> labels(q, 0);
    labels[1] = f.one();
    for (std::uint32_t i = 2; i < q; ++i) labels[i] = f.mul(labels[i - 1], f.primitive_element());
    std::vector<std::vector<FElem>> rows(t, std::vector<FElem>(len, f.one()));
    // row tt < t-1: tensor product with the label vector at slot tt (counted
    // from the fastest-varying position); last row stays all ones.
    for (std::uint32_t tt = 0; tt + 1 < t; ++tt) {
        std::uint64_t period = checked_pow_u64(q, tt);
        for (std::uint64_t col = 0; col < len; ++col) {
            std::uint32_t digit = static_cast<std::uint32_t>(col / period % q);
            rows[tt][col] = labels[digit];
        }
    }
    return rows;
}

std::uint32_t gray_length(const MixedSpace& sp) {
    std::uint32_t qm = sp.ring().residue_size();
    return static_cast<std::uint32_t>(sp.alpha() * checked_pow_u64(qm, sp.r() - 1) +
                                      sp.beta() * checked_pow_u64(qm, sp.s() - 1));
}

std::vector<FElem> gray_map(const MixedSpace& sp, const MixedVec& v) {
    const Field& f = sp.ring().residue_field();
    auto gx = rm_generator(f, sp.r());
    auto gy = rm_generator(f, sp.s());
    std::vector<FElem> out;
    out.reserve(gray_length(sp));
    auto encode = [&](const std::vector<FElem>& digits, const std::vector<std::vector<FElem>>& gen) {
        std::uint32_t len = static_cast<std::uint32_t>(gen[0].size());
        for (std::uint32_t col = 0; col < len; ++col) {
            FElem acc = 0;
            for (std::uint32_t row = 0; row < gen.size(); ++row) acc = f.add(acc, f.mul(digits[row], gen[row][col]));
            out.push_back(acc);
        }
    };
    for (std::uint32_t i = 0; i < sp.alpha(); ++i) encode(sp.bar().theta_adic(v.x[i]), gx);
    for (std::uint32_t i = 0; i < sp.beta(); ++i) encode(sp.ring().theta_adic(v.y[i]), gy);
    return out;
}

GrayImage gray_image(const MixedCode& c, std::uint64_t cap) {
    GrayImage img;
    auto words = c.enumerate(cap);
    img.words.reserve(words.size());
    for (const auto& w : words) img.words.push_back(gray_map(c.space(), w));
    std::sort(img.words.begin(), img.words.end());
    img.words.erase(std::unique(img.words.begin(), img.words.end()), img.words.end());
    if (img.words.size() != words.size()) throw std::logic_error("gray map failed to be injective");
    // linear iff the span has no more words than the image
    const Field& f = c.space().ring().residue_field();
    auto field = std::make_shared<Field>(f.spec());
    std::vector<std::vector<FElem>> basis = img.words;
    rref(f, basis);
    std::uint64_t span_log = basis.size();
    std::uint64_t img_log = 0;
    {
        std::uint64_t n = img.words.size();
        while (n > 1) {
            n /= f.size();
            ++img_log;
        }
    }
    img.linear = span_log == img_log;
    if (img.linear) img.as_code = FieldCode(field, gray_length(c.space()), img.words);
    return img;
}

bool gray_self_orth_applicable(const MixedSpace& sp) {
    return (std::uint64_t(sp.r()) - 1) * (sp.ring().residue_size() - 1) >= 3;
}

bool gray_self_orthogonal(const MixedCode& c, std::uint32_t h, std::uint64_t cap) {
    if (!gray_self_orth_applicable(c.space())) throw std::invalid_argument("self-orthogonality bound does not apply");
    const Field& f = c.space().ring().residue_field();
    auto words = c.enumerate(cap);
    std::vector<std::vector<FElem>> imgs;
    imgs.reserve(words.size());
    for (const auto& w : words) imgs.push_back(gray_map(c.space(), w));
    // sigma on the residue field is x -> x^q = x^(p^e)
    std::uint32_t steps = 0;
    {
        std::uint32_t q = c.space().ring().q(), p = c.space().ring().p();
        while (q > 1) {
            q /= p;
            ++steps;
        }
        steps *= h;
    }
    for (const auto& u : imgs) {
        for (const auto& v : imgs) {
            FElem acc = 0;
            for (std::uint32_t j = 0; j < u.size(); ++j) acc = f.add(acc, f.mul(u[j], f.frobenius(v[j], steps)));
            if (acc != 0) return false;
        }
    }
    return true;
}

DigitAlphabetPair make_digit_alphabet_pair(std::uint32_t q, std::uint32_t alpha, std::uint32_t beta) {
    if (q != 2 && q != 3) throw std::invalid_argument("digit alphabet pair requires q in {2, 3}");
    RingSpec zs;
    zs.family = RingFamily::GaloisRing;
    zs.p = q;
    zs.s = 2;
    zs.m = 1;
    zs.modulus = {0, 1};
    RingSpec fs;
    fs.family = RingFamily::QuasiGaloisRing;
    fs.p = q;
    fs.e = 1;
    fs.s = 2;
    fs.m = 1;
    fs.modulus = {0, 1};
    return {MixedSpace(Ring::make(zs), 1, alpha, beta), MixedSpace(Ring::make(fs), 1, alpha, beta), q};
}

RElem digit_reencode_elem(const DigitAlphabetPair& pair, RElem zelem) {
    std::uint32_t q = pair.q;
    FElem b = zelem % q, c = zelem / q;
    return pair.fspace.ring().from_theta_adic({b, c});
}

RElem digit_reencode_elem_inv(const DigitAlphabetPair& pair, RElem felem) {
    auto d = pair.fspace.ring().theta_adic(felem);
    return d[0] + pair.q * d[1];
}

MixedVec digit_reencode_vec(const DigitAlphabetPair& pair, const MixedVec& v) {
    MixedVec out = pair.fspace.zero_vec();
    for (std::uint32_t i = 0; i < pair.zspace.alpha(); ++i) out.x[i] = v.x[i];  // identity on F_q values
    for (std::uint32_t i = 0; i < pair.zspace.beta(); ++i) out.y[i] = digit_reencode_elem(pair, v.y[i]);
    return out;
}

MixedVec digit_reencode_vec_inv(const DigitAlphabetPair& pair, const MixedVec& v) {
    MixedVec out = pair.zspace.zero_vec();
    for (std::uint32_t i = 0; i < pair.zspace.alpha(); ++i) out.x[i] = v.x[i];
    for (std::uint32_t i = 0; i < pair.zspace.beta(); ++i) out.y[i] = digit_reencode_elem_inv(pair, v.y[i]);
    return out;
}

MixedVec componentwise_product(const MixedSpace& sp, const MixedVec& u, const MixedVec& v) {
    MixedVec out = sp.zero_vec();
    for (std::uint32_t i = 0; i < sp.alpha(); ++i) out.x[i] = sp.bar().mul(u.x[i], v.x[i]);
    for (std::uint32_t i = 0; i < sp.beta(); ++i) out.y[i] = sp.ring().mul(u.y[i], v.y[i]);
    return out;
}

MixedVec componentwise_power(const MixedSpace& sp, const MixedVec& u, std::uint32_t e) {
    if (e < 1) throw std::invalid_argument("componentwise_power: exponent must be >= 1");
    MixedVec out = u;
    for (std::uint32_t i = 1; i < e; ++i) out = componentwise_product(sp, out, u);
    return out;
}

ObstructionSet linearity_obstruction_set(const MixedCode& c, std::uint64_t cap) {
    const MixedSpace& sp = c.space();
    std::uint32_t q = sp.ring().p();
    if (sp.ring().family() != RingFamily::GaloisRing || sp.ring().m() != 1 || sp.s() != 2 || sp.r() != 1 ||
        (q != 2 && q != 3))
        throw std::invalid_argument("obstruction set requires a Z_q Z_{q^2} code, q in {2, 3}");
    MixedCode cd = dual(c, 0);
    auto cw = c.enumerate(cap);
    auto dw = cd.enumerate(cap);
    if (cw.size() * dw.size() > cap * 16)
        throw CapExceeded("obstruction set enumeration exceeds cap");
    RElem qelem = sp.ring().theta();  // q as an element of Z_{q^2}
    std::set<std::vector<RElem>> seen;
    ObstructionSet out;
    for (const auto& u : cw) {
        MixedVec up = componentwise_power(sp, u, q - 1);
        for (const auto& v : dw) {
            MixedVec vp = componentwise_power(sp, v, q - 1);
            MixedVec prod = sp.scalar_mul(qelem, componentwise_product(sp, up, vp));
            std::vector<RElem> kv = prod.x;
            kv.insert(kv.end(), prod.y.begin(), prod.y.end());
            if (seen.insert(kv).second) out.elems.push_back(prod);
        }
    }
    out.zero_only = out.elems.size() == 1 && sp.is_zero(out.elems[0]);
    if (out.elems.empty()) out.zero_only = true;  // zero code against zero dual
    return out;
}

FieldCode puncture_x(const MixedCode& c) {
    const MixedSpace& sp = c.space();
    if (sp.bar().s() != 1) throw std::invalid_argument("puncture_x: x block must live over a field");
    auto field = std::make_shared<Field>(sp.bar().residue_field().spec());
    std::vector<std::vector<FElem>> rows;
    const MixedMat& g = c.standard_form().standard;
    for (std::uint32_t i = 0; i < g.rows(); ++i) {
        std::vector<FElem> row(sp.alpha(), 0);
        for (std::uint32_t j = 0; j < sp.alpha(); ++j) row[j] = sp.bar().residue(g.x.at(i, j));
        rows.push_back(std::move(row));
    }
    return FieldCode(field, sp.alpha(), rows);
}

namespace {

// Build the mixed code generated by a set of vectors over the theta alphabet.
MixedCode code_from_words(const MixedSpace& sp, const std::vector<MixedVec>& words) {
    return MixedCode(sp, mixed_from_rows(sp, words));
}

}  // namespace

TransferReport lcd_transfer(const MixedCode& c, std::uint64_t cap) {
    TransferReport rep;
    const MixedSpace& sp = c.space();
    rep.q = sp.ring().p();
    DigitAlphabetPair pair = make_digit_alphabet_pair(rep.q, sp.alpha(), sp.beta());
    if (!pair.zspace.same(sp)) throw std::invalid_argument("lcd_transfer: expected a Z_q Z_{q^2} code");

    auto obstruction = linearity_obstruction_set(c, cap);
    rep.obstruction_zero = obstruction.zero_only;

    rep.source_lcd = is_lcd(c, 0).lcd;

    // re-encoded word set over F_q F_q[t]
    auto cw = c.enumerate(cap);
    std::vector<MixedVec> fw;
    fw.reserve(cw.size());
    for (const auto& w : cw) fw.push_back(digit_reencode_vec(pair, w));
    MixedCode fcode = code_from_words(pair.fspace, fw);
    rep.reencoded_linear = fcode.log_q_size() == c.log_q_size();
    if (rep.reencoded_linear) rep.reencoded_lcd = is_lcd(fcode, 0).lcd;

    MixedCode cdual = dual(c, 0);
    {
        // reencode(dual(C)) == dual(reencode(C)) as word sets
        auto dw = cdual.enumerate(cap);
        std::set<std::vector<RElem>> lhs;
        for (const auto& w : dw) {
            MixedVec t = digit_reencode_vec(pair, w);
            std::vector<RElem> kv = t.x;
            kv.insert(kv.end(), t.y.begin(), t.y.end());
            lhs.insert(kv);
        }
        MixedCode fdual = dual(fcode, 0);
        auto fdw = fdual.enumerate(cap);
        std::set<std::vector<RElem>> rhs;
        for (const auto& w : fdw) {
            std::vector<RElem> kv = w.x;
            kv.insert(kv.end(), w.y.begin(), w.y.end());
            rhs.insert(kv);
        }
        rep.dual_reencode_match = lhs == rhs;
    }

    if (rep.q == 2) {
        GrayImage img = gray_image(fcode, cap);
        rep.gray_linear = img.linear;
        if (img.linear) {
            rep.binary_lcd = field_is_lcd(*img.as_code, 0);
            rep.gray_code = img.as_code;
            // gray(reencode(dual)) == dual(gray image) as word sets
            auto dw = cdual.enumerate(cap);
            std::set<std::vector<FElem>> lhs;
            for (const auto& w : dw) lhs.insert(gray_map(pair.fspace, digit_reencode_vec(pair, w)));
            FieldCode gd = field_dual(*img.as_code, 0);
            auto gw = gd.enumerate(std::uint64_t(1) << 20);
            std::set<std::vector<FElem>> rhs(gw.begin(), gw.end());
            rep.gray_dual_match = lhs == rhs;
        }
    } else {
        rep.puncture_lcd = field_is_lcd(puncture_x(c), 0);
    }

    if (rep.obstruction_zero) {
        if (rep.reencoded_lcd.has_value()) rep.reencode_biconditional = *rep.reencoded_lcd == rep.source_lcd;
        if (rep.binary_lcd.has_value()) rep.gray_biconditional = *rep.binary_lcd == rep.source_lcd;
        if (rep.puncture_lcd.has_value()) rep.puncture_biconditional = *rep.puncture_lcd == rep.source_lcd;
        bool consistent = true;
        if (rep.reencode_biconditional.has_value()) consistent &= *rep.reencode_biconditional;
        if (rep.gray_biconditional.has_value()) consistent &= *rep.gray_biconditional;
        if (rep.reencoded_linear) consistent &= rep.dual_reencode_match;
        if (rep.gray_dual_match.has_value()) consistent &= *rep.gray_dual_match;
        rep.verdicts_consistent = consistent;
    }
    return rep;
}

}  // namespace mixedcode
