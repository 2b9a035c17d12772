#include "mixedcode/field.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mixedcode/support.hpp"

namespace mixedcode {

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients low-to-high over F_p

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly poly_sub(const Poly& a, const Poly& b, std::uint32_t p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        std::uint64_t av = i < a.size() ? a[i] : 0;
        std::uint64_t bv = i < b.size() ? b[i] : 0;
        r[i] = static_cast<std::uint32_t>((av + p - bv) % p);
    }
    trim(r);
    return r;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
        }
    }
    // f monic of degree k
    size_t k = f.size() - 1;
    for (size_t i = r.size(); i-- > k;) {
        std::uint32_t c = r[i];
        if (c == 0) continue;
        r[i] = 0;
        for (size_t j = 0; j < k; ++j) {
            r[i - k + j] = static_cast<std::uint32_t>((r[i - k + j] + std::uint64_t(c) * (p - f[j])) % p);
        }
    }
    r.resize(k);
    trim(r);
    return r;
}

Poly poly_pow_mod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
    Poly r = {1};
    while (e) {
        if (e & 1) r = poly_mul_mod(r, base, f, p);
        base = poly_mul_mod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

Poly poly_mod(Poly a, const Poly& f, std::uint32_t p) {
    size_t k = f.size() - 1;
    for (size_t i = a.size(); i-- > k;) {
        std::uint32_t c = a[i];
        if (c == 0) continue;
        a[i] = 0;
        for (size_t j = 0; j < k; ++j) {
            a[i - k + j] = static_cast<std::uint32_t>((a[i - k + j] + std::uint64_t(c) * (p - f[j])) % p);
        }
    }
    trim(a);
    return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b: make b monic first
        std::uint32_t lead = b.back();
        if (lead != 1) {
            // scale b by lead^-1
            std::uint64_t inv = 1, base = lead, e = p - 2;
            while (e) {
                if (e & 1) inv = inv * base % p;
                base = base * base % p;
                e >>= 1;
            }
            for (auto& c : b) c = static_cast<std::uint32_t>(c * inv % p);
        }
        Poly r = poly_mod(a, b, p);
        a = b;
        b = r;
    }
    return a;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
    int k = deg(f);
    if (k < 1) return false;
    if (k == 1) return true;
    Poly x = {0, 1};
    // x^(p^j) mod f for j = 1..k
    std::vector<Poly> xq(k + 1);
    xq[0] = x;
    for (int j = 1; j <= k; ++j) xq[j] = poly_pow_mod(xq[j - 1], p, f, p);
    if (poly_sub(xq[k], x, p) != Poly{}) return false;
    for (int d = 2; d <= k; ++d) {
        if (k % d != 0) continue;
        bool prime = true;
        for (int t = 2; t * t <= d; ++t)
            if (d % t == 0) prime = false;
        if (!prime) continue;
        Poly g = poly_gcd(poly_sub(xq[k / d], x, p), f, p);
        if (deg(g) != 0) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

std::vector<std::uint32_t> default_field_modulus(std::uint32_t p, std::uint32_t k) {
    if (k == 1) return {0, 1};  // X
    if (p == 2) {
        switch (k) {
            case 2: return {1, 1, 1};
            case 3: return {1, 1, 0, 1};
            case 4: return {1, 1, 0, 0, 1};
            case 5: return {1, 0, 1, 0, 0, 1};
            case 6: return {1, 1, 0, 0, 0, 0, 1};
        }
    } else if (p == 3) {
        switch (k) {
            case 2: return {1, 0, 1};
            case 3: return {1, 2, 0, 1};
            case 4: return {2, 1, 0, 0, 1};
            case 5: return {1, 2, 0, 0, 0, 1};
            case 6: return {2, 1, 0, 0, 0, 0, 1};
        }
    } else if (p == 5) {
        switch (k) {
            case 2: return {2, 0, 1};
            case 3: return {1, 1, 0, 1};
            case 4: return {2, 0, 0, 0, 1};
            case 5: return {1, 4, 0, 0, 0, 1};
            case 6: return {2, 1, 0, 0, 0, 0, 1};
        }
    }
    throw std::invalid_argument("no default modulus for p=" + std::to_string(p) + ", k=" + std::to_string(k));
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
    if (!is_prime_u32(spec_.p)) throw std::invalid_argument("field characteristic must be prime");
    if (spec_.k < 1) throw std::invalid_argument("field extension degree must be >= 1");
    std::uint64_t sz = checked_pow_u64(spec_.p, spec_.k);
    if (sz > (std::uint64_t(1) << 24)) throw std::invalid_argument("field size exceeds 2^24");
    size_ = static_cast<std::uint32_t>(sz);
    if (spec_.modulus.empty()) spec_.modulus = default_field_modulus(spec_.p, spec_.k);
    if (spec_.modulus.size() != spec_.k + 1) throw std::invalid_argument("modulus must have degree k");
    for (auto c : spec_.modulus)
        if (c >= spec_.p) throw std::invalid_argument("modulus coefficients must be reduced mod p");
    if (spec_.modulus.back() != 1) throw std::invalid_argument("modulus must be monic");
    Poly f(spec_.modulus.begin(), spec_.modulus.end());
    if (!is_irreducible(f, spec_.p)) throw std::invalid_argument("modulus is reducible over F_p");

    // least multiplicative generator
    auto factors = prime_factors(size_ - 1);
    auto is_primitive = [&](FElem g) {
        for (auto r : factors) {
            // mul_poly-based pow (tables not built yet)
            auto gc = coeffs(g);
            Poly gp(gc.begin(), gc.end());
            trim(gp);
            Poly acc = {1};
            Poly base(gp);
            std::uint64_t e = (size_ - 1) / r;
            while (e) {
                if (e & 1) acc = poly_mul_mod(acc, base, f, spec_.p);
                base = poly_mul_mod(base, base, f, spec_.p);
                e >>= 1;
            }
            FElem v = 0;
            for (size_t i = acc.size(); i-- > 0;) v = v * spec_.p + acc[i];
            if (v == 1) return false;
        }
        return true;
    };
    primitive_ = 0;
    if (size_ == 2) {
        primitive_ = 1;
    } else {
        for (FElem g = 2; g < size_; ++g) {
            if (is_primitive(g)) {
                primitive_ = g;
                break;
            }
        }
    }
    if (primitive_ == 0 && size_ > 2) throw std::logic_error("no primitive element found");

    if (size_ <= (1u << 16)) {
        tables_ = true;
        exp_.resize(size_ - 1);
        log_.assign(size_, 0);
        FElem cur = 1;
        for (std::uint32_t i = 0; i + 1 < size_; ++i) {
            exp_[i] = cur;
            log_[cur] = i;
            cur = mul_poly(cur, primitive_);
        }
        if (cur != 1) throw std::logic_error("primitive element order mismatch");
    }
}

FElem Field::add(FElem a, FElem b) const {
    if (p() == 2) return a ^ b;
    FElem r = 0, mult = 1;
    for (std::uint32_t i = 0; i < degree(); ++i) {
        r += (a % p() + b % p()) % p() * mult;
        a /= p();
        b /= p();
        mult *= p();
    }
    return r;
}

FElem Field::neg(FElem a) const {
    if (p() == 2) return a;
    FElem r = 0, mult = 1;
    for (std::uint32_t i = 0; i < degree(); ++i) {
        r += (p() - a % p()) % p() * mult;
        a /= p();
        mult *= p();
    }
    return r;
}

FElem Field::sub(FElem a, FElem b) const { return add(a, neg(b)); }

FElem Field::mul_poly(FElem a, FElem b) const {
    auto ca = coeffs(a), cb = coeffs(b);
    Poly pa(ca.begin(), ca.end());
    Poly pb(cb.begin(), cb.end());
    trim(pa);
    trim(pb);
    Poly f(spec_.modulus.begin(), spec_.modulus.end());
    Poly r = poly_mul_mod(pa, pb, f, p());
    FElem v = 0;
    for (size_t i = r.size(); i-- > 0;) v = v * p() + r[i];
    return v;
}

FElem Field::mul(FElem a, FElem b) const {
    if (a == 0 || b == 0) return 0;
    if (tables_) {
        std::uint64_t s = std::uint64_t(log_[a]) + log_[b];
        return exp_[s % (size_ - 1)];
    }
    return mul_poly(a, b);
}

FElem Field::inv(FElem a) const {
    if (a == 0) throw std::domain_error("inverse of zero field element");
    if (tables_) return exp_[(size_ - 1 - log_[a]) % (size_ - 1)];
    return pow(a, size_ - 2);
}

FElem Field::pow(FElem a, std::uint64_t e) const {
    if (size_ > 1) {
        if (a == 0) return e == 0 ? 1 : 0;
        if (tables_) {
            std::uint64_t s = std::uint64_t(log_[a]) * (e % (size_ - 1)) % (size_ - 1);
            return exp_[s];
        }
    }
    FElem r = 1;
    FElem base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

FElem Field::frobenius(FElem a, std::uint32_t times) const {
    FElem r = a;
    for (std::uint32_t i = 0; i < times; ++i) r = pow(r, p());
    return r;
}

FElem Field::from_coeffs(const std::vector<std::uint32_t>& c) const {
    if (c.size() > degree()) throw std::invalid_argument("too many field coefficients");
    FElem v = 0;
    for (size_t i = c.size(); i-- > 0;) {
        if (c[i] >= p()) throw std::invalid_argument("field coefficient not reduced mod p");
        v = v * p() + c[i];
    }
    return v;
}

std::vector<std::uint32_t> Field::coeffs(FElem a) const {
    std::vector<std::uint32_t> c(degree());
    for (std::uint32_t i = 0; i < degree(); ++i) {
        c[i] = a % p();
        a /= p();
    }
    return c;
}

std::uint64_t Field::order(FElem a) const {
    if (a == 0) throw std::domain_error("order of zero");
    std::uint64_t n = 1;
    FElem cur = a;
    while (cur != 1) {
        cur = mul(cur, a);
        ++n;
        if (n > size_) throw std::logic_error("order computation diverged");
    }
    return n;
}

}  // namespace mixedcode
