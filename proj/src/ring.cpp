#include "mixedcode/ring.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mixedcode/support.hpp"

namespace mixedcode {

namespace {

// F_p linear algebra helpers for the subring coordinate machinery.

// Solve M * x = b over F_p by Gauss-Jordan; M is n x n row-major. Returns the
// inverse matrix (throws if singular).
std::vector<std::uint32_t> invert_fp_matrix(std::vector<std::uint32_t> mat, std::uint32_t n, std::uint32_t p) {
    std::vector<std::uint32_t> inv(n * n, 0);
    for (std::uint32_t i = 0; i < n; ++i) inv[i * n + i] = 1;
    auto inv_mod = [&](std::uint32_t a) {
        std::uint64_t r = 1, base = a, e = p - 2;
        while (e) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return static_cast<std::uint32_t>(r);
    };
    for (std::uint32_t col = 0; col < n; ++col) {
        std::uint32_t piv = col;
        while (piv < n && mat[piv * n + col] == 0) ++piv;
        if (piv == n) throw std::logic_error("singular coordinate matrix");
        if (piv != col) {
            for (std::uint32_t j = 0; j < n; ++j) {
                std::swap(mat[piv * n + j], mat[col * n + j]);
                std::swap(inv[piv * n + j], inv[col * n + j]);
            }
        }
        std::uint32_t c = inv_mod(mat[col * n + col]);
        for (std::uint32_t j = 0; j < n; ++j) {
            mat[col * n + j] = static_cast<std::uint32_t>(std::uint64_t(mat[col * n + j]) * c % p);
            inv[col * n + j] = static_cast<std::uint32_t>(std::uint64_t(inv[col * n + j]) * c % p);
        }
        for (std::uint32_t i = 0; i < n; ++i) {
            if (i == col) continue;
            std::uint32_t f = mat[i * n + col];
            if (f == 0) continue;
            for (std::uint32_t j = 0; j < n; ++j) {
                mat[i * n + j] =
                    static_cast<std::uint32_t>((mat[i * n + j] + std::uint64_t(p - f) * mat[col * n + j]) % p);
                inv[i * n + j] =
                    static_cast<std::uint32_t>((inv[i * n + j] + std::uint64_t(p - f) * inv[col * n + j]) % p);
            }
        }
    }
    return inv;
}

std::uint32_t vp_u64(std::uint64_t v, std::uint32_t p, std::uint32_t cap) {
    if (v == 0) return cap;
    std::uint32_t t = 0;
    while (t < cap && v % p == 0) {
        v /= p;
        ++t;
    }
    return t;
}

}  // namespace

std::shared_ptr<const Ring> Ring::make(const RingSpec& spec) {
    return std::shared_ptr<const Ring>(new Ring(spec));
}

Ring::Ring(const RingSpec& spec) : spec_(spec) {
    validate_and_init();
    init_teichmuller();
    init_subring_support();
}

void Ring::validate_and_init() {
    if (!is_prime_u32(spec_.p)) throw std::invalid_argument("ring characteristic base must be prime");
    if (spec_.s < 1) throw std::invalid_argument("nilpotency index must be >= 1");
    if (spec_.m < 1) throw std::invalid_argument("extension degree must be >= 1");
    if (spec_.e < 1) throw std::invalid_argument("subring field degree must be >= 1");
    if (spec_.family == RingFamily::GaloisRing && spec_.e != 1)
        throw std::invalid_argument("galois_ring family requires e = 1");
    q_ = static_cast<std::uint32_t>(checked_pow_u64(spec_.p, spec_.e));

    std::uint64_t sz = checked_pow_u64(q_, std::uint64_t(spec_.m) * spec_.s);
    if (sz > (std::uint64_t(1) << 24)) throw std::invalid_argument("ring size exceeds 2^24");
    size_ = static_cast<std::uint32_t>(sz);

    if (spec_.family == RingFamily::GaloisRing) {
        psq_ = static_cast<std::uint32_t>(checked_pow_u64(spec_.p, spec_.s));
        if (spec_.modulus.empty()) {
            spec_.modulus = default_field_modulus(spec_.p, spec_.m);  // lifted coefficientwise
        }
        if (spec_.modulus.size() != spec_.m + 1) throw std::invalid_argument("ring modulus must have degree m");
        if (spec_.modulus.back() != 1) throw std::invalid_argument("ring modulus must be monic");
        for (auto c : spec_.modulus)
            if (c >= psq_) throw std::invalid_argument("ring modulus coefficients must be reduced mod p^s");
        // residue field F_{p^m} with modulus f mod p; irreducibility is
        // checked by the Field constructor (basic irreducibility of f).
        std::vector<std::uint32_t> fbar(spec_.modulus.size());
        for (size_t i = 0; i < fbar.size(); ++i) fbar[i] = spec_.modulus[i] % spec_.p;
        residue_ = std::make_shared<Field>(FieldSpec{spec_.p, spec_.m, fbar});
        theta_ = spec_.s == 1 ? 0 : spec_.p;
    } else {
        std::uint32_t k = spec_.e * spec_.m;
        if (spec_.modulus.empty()) spec_.modulus = default_field_modulus(spec_.p, k);
        residue_ = std::make_shared<Field>(FieldSpec{spec_.p, k, spec_.modulus});
        theta_ = spec_.s == 1 ? 0 : residue_->size();  // digit 1 at position 1
    }
}

void Ring::init_teichmuller() {
    std::uint32_t rs = residue_size();
    teich_.resize(rs);
    if (spec_.family == RingFamily::QuasiGaloisRing || spec_.s == 1) {
        for (std::uint32_t a = 0; a < rs; ++a) teich_[a] = a;  // constants
        return;
    }
    for (std::uint32_t a = 0; a < rs; ++a) {
        // lift coefficients and iterate y -> y^(q^m) until fixed
        auto c = residue_->coeffs(a);
        std::vector<std::uint64_t> digits(spec_.m, 0);
        for (std::uint32_t i = 0; i < spec_.m; ++i) digits[i] = c[i];
        RElem y = pack(digits);
        for (std::uint32_t it = 0; it <= spec_.s; ++it) y = pow(y, rs);
        if (pow(y, rs) != y || residue(y) != a) throw std::logic_error("teichmuller iteration failed");
        teich_[a] = y;
    }
}

std::vector<std::uint64_t> Ring::unpack(RElem a) const {
    if (spec_.family == RingFamily::GaloisRing) {
        std::vector<std::uint64_t> d(spec_.m);
        for (std::uint32_t i = 0; i < spec_.m; ++i) {
            d[i] = a % psq_;
            a /= psq_;
        }
        return d;
    }
    std::uint32_t rs = residue_size();
    std::vector<std::uint64_t> d(spec_.s);
    for (std::uint32_t i = 0; i < spec_.s; ++i) {
        d[i] = a % rs;
        a /= rs;
    }
    return d;
}

RElem Ring::pack(const std::vector<std::uint64_t>& d) const {
    if (spec_.family == RingFamily::GaloisRing) {
        std::uint64_t v = 0;
        for (size_t i = d.size(); i-- > 0;) v = v * psq_ + d[i] % psq_;
        return static_cast<RElem>(v);
    }
    std::uint32_t rs = residue_size();
    std::uint64_t v = 0;
    for (size_t i = d.size(); i-- > 0;) v = v * rs + d[i] % rs;
    return static_cast<RElem>(v);
}

RElem Ring::add(RElem a, RElem b) const {
    auto da = unpack(a), db = unpack(b);
    if (spec_.family == RingFamily::GaloisRing) {
        for (size_t i = 0; i < da.size(); ++i) da[i] = (da[i] + db[i]) % psq_;
    } else {
        for (size_t i = 0; i < da.size(); ++i)
            da[i] = residue_->add(static_cast<FElem>(da[i]), static_cast<FElem>(db[i]));
    }
    return pack(da);
}

RElem Ring::neg(RElem a) const {
    auto da = unpack(a);
    if (spec_.family == RingFamily::GaloisRing) {
        for (auto& v : da) v = (psq_ - v) % psq_;
    } else {
        for (auto& v : da) v = residue_->neg(static_cast<FElem>(v));
    }
    return pack(da);
}

RElem Ring::sub(RElem a, RElem b) const { return add(a, neg(b)); }

RElem Ring::mul(RElem a, RElem b) const {
    auto da = unpack(a), db = unpack(b);
    if (spec_.family == RingFamily::GaloisRing) {
        std::vector<std::uint64_t> conv(2 * spec_.m, 0);
        for (std::uint32_t i = 0; i < spec_.m; ++i) {
            if (da[i] == 0) continue;
            for (std::uint32_t j = 0; j < spec_.m; ++j) conv[i + j] = (conv[i + j] + da[i] * db[j]) % psq_;
        }
        for (size_t i = conv.size(); i-- > spec_.m;) {
            std::uint64_t c = conv[i];
            if (c == 0) continue;
            conv[i] = 0;
            for (std::uint32_t j = 0; j < spec_.m; ++j) {
                conv[i - spec_.m + j] = (conv[i - spec_.m + j] + c * (psq_ - spec_.modulus[j])) % psq_;
            }
        }
        conv.resize(spec_.m);
        return pack(conv);
    }
    std::vector<std::uint64_t> out(spec_.s, 0);
    for (std::uint32_t i = 0; i < spec_.s; ++i) {
        if (da[i] == 0) continue;
        for (std::uint32_t j = 0; i + j < spec_.s; ++j) {
            if (db[j] == 0) continue;
            FElem prod = residue_->mul(static_cast<FElem>(da[i]), static_cast<FElem>(db[j]));
            out[i + j] = residue_->add(static_cast<FElem>(out[i + j]), prod);
        }
    }
    return pack(out);
}

RElem Ring::pow(RElem a, std::uint64_t e) const {
    RElem r = one(), base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

std::uint32_t Ring::valuation(RElem a) const {
    if (a == 0) return spec_.s;
    auto d = unpack(a);
    if (spec_.family == RingFamily::GaloisRing) {
        std::uint32_t v = spec_.s;
        for (auto c : d) v = std::min(v, vp_u64(c, spec_.p, spec_.s));
        return v;
    }
    for (std::uint32_t i = 0; i < spec_.s; ++i)
        if (d[i] != 0) return i;
    return spec_.s;
}

RElem Ring::div_theta_pow(RElem a, std::uint32_t t) const {
    if (t == 0) return a;
    if (valuation(a) < t) throw std::domain_error("div_theta_pow: valuation too small");
    auto d = unpack(a);
    if (spec_.family == RingFamily::GaloisRing) {
        std::uint64_t pt = 1;
        for (std::uint32_t i = 0; i < t; ++i) pt *= spec_.p;
        for (auto& c : d) c /= pt;
        return pack(d);
    }
    std::vector<std::uint64_t> out(spec_.s, 0);
    for (std::uint32_t i = t; i < spec_.s; ++i) out[i - t] = d[i];
    return pack(out);
}

RElem Ring::mul_theta_pow(RElem a, std::uint32_t t) const {
    RElem r = a;
    for (std::uint32_t i = 0; i < t; ++i) r = mul(r, theta_);
    return r;
}

RElem Ring::inv_unit(RElem a) const {
    if (valuation(a) != 0) throw std::domain_error("inv_unit: element is not a unit");
    // Newton lift of the residue field inverse: y <- y(2 - a y).
    FElem rbar = residue_->inv(residue(a));
    RElem y = teichmuller_lift(rbar);
    RElem two = add(one(), one());
    for (std::uint32_t it = 0; it < spec_.s + 2; ++it) {
        RElem ay = mul(a, y);
        if (ay == one()) return y;
        y = mul(y, sub(two, ay));
    }
    if (mul(a, y) != one()) throw std::logic_error("inv_unit: lift failed");
    return y;
}

FElem Ring::residue(RElem a) const {
    if (spec_.family == RingFamily::QuasiGaloisRing) return static_cast<FElem>(unpack(a)[0]);
    auto d = unpack(a);
    std::vector<std::uint32_t> c(spec_.m);
    for (std::uint32_t i = 0; i < spec_.m; ++i) c[i] = static_cast<std::uint32_t>(d[i] % spec_.p);
    return residue_->from_coeffs(c);
}

RElem Ring::teichmuller_lift(FElem a) const { return teich_.at(a); }

std::vector<FElem> Ring::theta_adic(RElem a) const {
    std::vector<FElem> digits(spec_.s, 0);
    if (spec_.family == RingFamily::QuasiGaloisRing) {
        auto d = unpack(a);
        for (std::uint32_t i = 0; i < spec_.s; ++i) digits[i] = static_cast<FElem>(d[i]);
        return digits;
    }
    RElem cur = a;
    for (std::uint32_t t = 0; t < spec_.s; ++t) {
        FElem g = residue(cur);
        digits[t] = g;
        cur = sub(cur, teichmuller_lift(g));
        if (t + 1 < spec_.s) cur = div_theta_pow(cur, 1);
    }
    return digits;
}

RElem Ring::from_theta_adic(const std::vector<FElem>& digits) const {
    if (digits.size() > spec_.s) throw std::invalid_argument("too many digits");
    RElem acc = zero();
    RElem tp = one();
    for (size_t t = 0; t < digits.size(); ++t) {
        acc = add(acc, mul(teichmuller_lift(digits[t]), tp));
        tp = mul(tp, theta_);
    }
    return acc;
}

int Ring::deg_theta(RElem a) const {
    auto d = theta_adic(a);
    for (int t = static_cast<int>(spec_.s) - 1; t >= 0; --t)
        if (d[t] != 0) return t;
    return kDegNegInf;
}

RElem Ring::frobenius(RElem a, std::uint32_t h) const {
    h %= spec_.m;
    if (h == 0) return a;
    auto d = theta_adic(a);
    for (auto& g : d) g = residue_->frobenius(g, spec_.e * h);
    return from_theta_adic(d);
}

RElem Ring::trace(RElem a) const {
    RElem acc = zero();
    for (std::uint32_t i = 0; i < spec_.m; ++i) acc = add(acc, frobenius(a, i));
    return acc;
}

bool Ring::in_subring(RElem a) const { return frobenius(a, 1) == a; }

std::shared_ptr<const Ring> Ring::quotient_ring(std::uint32_t r) const {
    if (r < 1 || r > spec_.s) throw std::invalid_argument("quotient exponent out of range");
    RingSpec qs = spec_;
    qs.s = r;
    if (spec_.family == RingFamily::GaloisRing) {
        std::uint64_t pr = checked_pow_u64(spec_.p, r);
        for (auto& c : qs.modulus) c = static_cast<std::uint32_t>(c % pr);
    }
    return make(qs);
}

RElem Ring::reduce_to(const Ring& bar, RElem a) const {
    if (bar.spec_.family != spec_.family || bar.spec_.p != spec_.p || bar.spec_.e != spec_.e ||
        bar.spec_.m != spec_.m || bar.spec_.s > spec_.s)
        throw std::invalid_argument("reduce_to: not a quotient of this ring");
    if (spec_.family == RingFamily::GaloisRing) {
        auto d = unpack(a);
        for (auto& c : d) c %= bar.psq_;
        return bar.pack(d);
    }
    auto d = unpack(a);
    d.resize(bar.spec_.s);
    return bar.pack(d);
}

RElem Ring::digit_lift_from(const Ring& bar, RElem abar) const {
    auto digits = bar.theta_adic(abar);
    digits.resize(spec_.s, 0);
    return from_theta_adic(digits);
}

RElem Ring::quotient_embed_from(const Ring& bar, RElem abar) const {
    return mul_theta_pow(digit_lift_from(bar, abar), spec_.s - bar.spec_.s);
}

void Ring::init_subring_support() {
    if (spec_.family == RingFamily::GaloisRing) return;  // power-basis coordinates
    const Field& F = *residue_;
    std::uint32_t K = F.degree();
    std::uint32_t p = spec_.p;
    std::uint32_t e = spec_.e;

    // F_q inside F_{q^m} as the fixed set of x -> x^(p^e); compute a basis of
    // the kernel of (Frob_e - id) over F_p.
    std::vector<std::vector<std::uint32_t>> frob_cols(K);
    for (std::uint32_t i = 0; i < K; ++i) {
        std::vector<std::uint32_t> mono(K, 0);
        mono[i] = 1;
        FElem xi = F.from_coeffs(mono);
        FElem fx = F.frobenius(xi, e);
        frob_cols[i] = F.coeffs(fx);
    }
    // rows of (Frob - I)^T gathered as K x K matrix acting on coefficient
    // column vectors; kernel by row reduction of the transpose system.
    std::vector<std::vector<std::uint32_t>> M(K, std::vector<std::uint32_t>(K, 0));
    for (std::uint32_t i = 0; i < K; ++i)
        for (std::uint32_t j = 0; j < K; ++j) {
            std::uint32_t v = frob_cols[j][i];
            if (i == j) v = (v + p - 1) % p;
            M[i][j] = v;
        }
    // kernel of M (column vectors) over F_p
    std::vector<std::vector<std::uint32_t>> A = M;
    std::vector<int> pivot_col_of_row(K, -1);
    std::uint32_t rank = 0;
    auto inv_mod = [&](std::uint32_t a) {
        std::uint64_t r = 1, base = a, ex = p - 2;
        while (ex) {
            if (ex & 1) r = r * base % p;
            base = base * base % p;
            ex >>= 1;
        }
        return static_cast<std::uint32_t>(r);
    };
    std::vector<bool> col_is_pivot(K, false);
    for (std::uint32_t col = 0; col < K && rank < K; ++col) {
        std::uint32_t piv = rank;
        while (piv < K && A[piv][col] == 0) ++piv;
        if (piv == K) continue;
        std::swap(A[piv], A[rank]);
        std::uint32_t c = inv_mod(A[rank][col]);
        for (auto& v : A[rank]) v = static_cast<std::uint32_t>(std::uint64_t(v) * c % p);
        for (std::uint32_t i = 0; i < K; ++i) {
            if (i == rank || A[i][col] == 0) continue;
            std::uint32_t f = A[i][col];
            for (std::uint32_t j = 0; j < K; ++j)
                A[i][j] = static_cast<std::uint32_t>((A[i][j] + std::uint64_t(p - f) * A[rank][j]) % p);
        }
        pivot_col_of_row[rank] = static_cast<int>(col);
        col_is_pivot[col] = true;
        ++rank;
    }
    std::vector<FElem> subfield_elems;
    std::vector<std::vector<std::uint32_t>> kernel_basis;
    for (std::uint32_t col = 0; col < K; ++col) {
        if (col_is_pivot[col]) continue;
        std::vector<std::uint32_t> vec(K, 0);
        vec[col] = 1;
        for (std::uint32_t rw = 0; rw < rank; ++rw) {
            int pc = pivot_col_of_row[rw];
            vec[pc] = (p - A[rw][col] % p) % p;
        }
        kernel_basis.push_back(vec);
    }
    if (kernel_basis.size() != e) throw std::logic_error("subfield dimension mismatch");

    // Standalone F_q and its embedding: least root of the F_q modulus among
    // the subfield elements.
    subfield_ = std::make_shared<Field>(FieldSpec{p, e, default_field_modulus(p, e)});
    auto g = subfield_->spec().modulus;
    // enumerate subfield elements
    std::uint32_t qcount = subfield_->size();
    std::vector<FElem> sub_elems;
    sub_elems.reserve(qcount);
    for (std::uint32_t idx = 0; idx < qcount; ++idx) {
        std::vector<std::uint32_t> acc(K, 0);
        std::uint32_t rem = idx;
        for (std::uint32_t b = 0; b < e; ++b) {
            std::uint32_t coef = rem % p;
            rem /= p;
            if (coef == 0) continue;
            for (std::uint32_t j = 0; j < K; ++j)
                acc[j] = static_cast<std::uint32_t>((acc[j] + std::uint64_t(coef) * kernel_basis[b][j]) % p);
        }
        sub_elems.push_back(F.from_coeffs(acc));
    }
    FElem root = 0;
    bool found = false;
    std::vector<FElem> sorted = sub_elems;
    std::sort(sorted.begin(), sorted.end());
    for (FElem cand : sorted) {
        FElem acc = 0, xp = 1;
        for (size_t j = 0; j < g.size(); ++j) {
            FElem coef = static_cast<FElem>(g[j] % p);  // prime subfield constant
            acc = F.add(acc, F.mul(coef, xp));
            xp = F.mul(xp, cand);
        }
        if (acc == 0) {
            root = cand;
            found = true;
            break;
        }
    }
    if (!found) throw std::logic_error("no embedding root for subring field");

    subfield_embed_.assign(qcount, 0);
    subfield_project_.assign(residue_size(), 0);
    for (std::uint32_t a = 0; a < qcount; ++a) {
        auto c = subfield_->coeffs(a);
        FElem acc = 0, rp = 1;
        for (std::uint32_t j = 0; j < e; ++j) {
            std::vector<std::uint32_t> cc(K, 0);
            cc[0] = c[j];  // F_p scalar as a constant of F_{q^m}
            acc = F.add(acc, F.mul(F.from_coeffs(cc), rp));
            rp = F.mul(rp, root);
        }
        subfield_embed_[a] = acc;
        subfield_project_[acc] = a + 1;
    }

    // Greedy F_q-basis of F_{q^m} from monomials, starting with 1.
    module_basis_.clear();
    std::vector<std::vector<std::uint32_t>> span_rows;  // row echelon over F_p
    auto reduce_against = [&](std::vector<std::uint32_t> v) {
        for (auto& row : span_rows) {
            std::uint32_t lead = 0;
            while (lead < K && row[lead] == 0) ++lead;
            if (lead < K && v[lead] != 0) {
                std::uint32_t f = static_cast<std::uint32_t>(std::uint64_t(v[lead]) * inv_mod(row[lead]) % p);
                for (std::uint32_t j = 0; j < K; ++j)
                    v[j] = static_cast<std::uint32_t>((v[j] + std::uint64_t(p - f) * row[j]) % p);
            }
        }
        return v;
    };
    auto insert_row = [&](const std::vector<std::uint32_t>& v) {
        auto red = reduce_against(v);
        bool nonzero = false;
        for (auto c : red) nonzero |= (c != 0);
        if (nonzero) span_rows.push_back(red);
        return nonzero;
    };
    for (std::uint32_t mono = 0; mono < K && module_basis_.size() < spec_.m; ++mono) {
        std::vector<std::uint32_t> mc(K, 0);
        mc[mono] = 1;
        FElem cand = F.from_coeffs(mc);
        if (reduce_against(F.coeffs(cand)) == std::vector<std::uint32_t>(K, 0)) continue;
        module_basis_.push_back(cand);
        for (std::uint32_t a = 1; a < qcount; ++a) insert_row(F.coeffs(F.mul(subfield_embed_[a], cand)));
    }
    if (module_basis_.size() != spec_.m) throw std::logic_error("module basis construction failed");
    if (module_basis_[0] != F.one()) throw std::logic_error("module basis must start at 1");

    // coordinate matrix: columns are F_p-coordinates of basis[i] * root^j
    std::vector<std::uint32_t> cm(K * K, 0);
    std::uint32_t colidx = 0;
    for (std::uint32_t i = 0; i < spec_.m; ++i) {
        for (std::uint32_t j = 0; j < e; ++j, ++colidx) {
            FElem val = F.mul(module_basis_[i], F.pow(root, j));
            auto cc = F.coeffs(val);
            for (std::uint32_t rrow = 0; rrow < K; ++rrow) cm[rrow * K + colidx] = cc[rrow];
        }
    }
    coord_matrix_inv_ = invert_fp_matrix(cm, K, p);
}

std::shared_ptr<const Ring> Ring::subring() const {
    RingSpec rs;
    rs.p = spec_.p;
    rs.s = spec_.s;
    rs.m = 1;
    if (spec_.family == RingFamily::GaloisRing) {
        rs.family = RingFamily::GaloisRing;
        rs.e = 1;
        rs.modulus = {0, 1};
    } else {
        rs.family = RingFamily::QuasiGaloisRing;
        rs.e = spec_.e;
        rs.modulus = default_field_modulus(spec_.p, spec_.e);
    }
    return make(rs);
}

RElem Ring::embed_subring(const Ring& sub, RElem a) const {
    if (spec_.family == RingFamily::GaloisRing) {
        return static_cast<RElem>(a % psq_);  // constant polynomial
    }
    auto d = sub.unpack(a);  // s digits over F_q
    std::vector<std::uint64_t> out(spec_.s, 0);
    for (std::uint32_t t = 0; t < spec_.s; ++t) out[t] = subfield_embed_.at(d[t]);
    return pack(out);
}

RElem Ring::project_subring(const Ring& sub, RElem a) const {
    if (spec_.family == RingFamily::GaloisRing) {
        auto d = unpack(a);
        for (std::uint32_t i = 1; i < spec_.m; ++i)
            if (d[i] != 0) throw std::domain_error("project_subring: element not in subring");
        return static_cast<RElem>(d[0]);
    }
    auto d = unpack(a);
    std::vector<std::uint64_t> out(spec_.s, 0);
    for (std::uint32_t t = 0; t < spec_.s; ++t) {
        std::uint32_t pr = subfield_project_.at(d[t]);
        if (pr == 0 && d[t] != 0) throw std::domain_error("project_subring: element not in subring");
        out[t] = pr == 0 ? 0 : pr - 1;
    }
    return sub.pack(out);
}

std::vector<RElem> Ring::subring_coords(const Ring& sub, RElem a) const {
    std::vector<RElem> coords(spec_.m, 0);
    if (spec_.family == RingFamily::GaloisRing) {
        auto d = unpack(a);
        for (std::uint32_t i = 0; i < spec_.m; ++i) coords[i] = static_cast<RElem>(d[i]);
        return coords;
    }
    const Field& F = *residue_;
    std::uint32_t K = F.degree();
    auto digits = unpack(a);  // s field digits
    // per digit: K F_p coords -> coordinates in the basis {b_i * root^j}
    std::vector<std::vector<std::uint64_t>> rdigits(spec_.m, std::vector<std::uint64_t>(spec_.s, 0));
    for (std::uint32_t t = 0; t < spec_.s; ++t) {
        auto cc = F.coeffs(static_cast<FElem>(digits[t]));
        for (std::uint32_t i = 0; i < spec_.m; ++i) {
            std::vector<std::uint32_t> qc(spec_.e, 0);
            for (std::uint32_t j = 0; j < spec_.e; ++j) {
                std::uint64_t acc = 0;
                std::uint32_t row = i * spec_.e + j;
                for (std::uint32_t col = 0; col < K; ++col)
                    acc += std::uint64_t(coord_matrix_inv_[row * K + col]) * cc[col];
                qc[j] = static_cast<std::uint32_t>(acc % spec_.p);
            }
            rdigits[i][t] = subfield_->from_coeffs(qc);
        }
    }
    for (std::uint32_t i = 0; i < spec_.m; ++i) coords[i] = sub.pack(rdigits[i]);
    return coords;
}

RElem Ring::from_subring_coords(const Ring& sub, const std::vector<RElem>& coords) const {
    if (coords.size() != spec_.m) throw std::invalid_argument("subring coordinate count mismatch");
    if (spec_.family == RingFamily::GaloisRing) {
        std::vector<std::uint64_t> d(spec_.m);
        for (std::uint32_t i = 0; i < spec_.m; ++i) d[i] = coords[i] % psq_;
        return pack(d);
    }
    RElem acc = zero();
    // basis elements are field constants: multiply coordinate (embedded in S)
    // by the constant basis element.
    for (std::uint32_t i = 0; i < spec_.m; ++i) {
        RElem ci = embed_subring(sub, coords[i]);
        std::vector<std::uint64_t> bd(spec_.s, 0);
        bd[0] = module_basis_[i];
        acc = add(acc, mul(ci, pack(bd)));
    }
    return acc;
}

std::vector<RElem> Ring::digit_bounded_elements(int maxDeg) const {
    if (maxDeg < kDegNegInf || maxDeg >= static_cast<int>(spec_.s))
        throw std::invalid_argument("digit bound out of range");
    if (maxDeg == kDegNegInf) return {zero()};
    std::uint64_t count = checked_pow_u64(residue_size(), maxDeg + 1);
    std::vector<RElem> out;
    out.reserve(count);
    std::vector<FElem> digits(maxDeg + 1, 0);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::uint64_t rem = idx;
        for (int t = 0; t <= maxDeg; ++t) {
            digits[t] = static_cast<FElem>(rem % residue_size());
            rem /= residue_size();
        }
        out.push_back(from_theta_adic(digits));
    }
    return out;
}

RElem Ring::elem_at(std::uint64_t idx) const {
    if (idx >= size_) throw std::invalid_argument("element index out of range");
    return static_cast<RElem>(idx);
}

}  // namespace mixedcode
