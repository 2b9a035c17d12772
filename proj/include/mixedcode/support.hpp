#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mixedcode {

// Thrown when an enumeration or brute-force request exceeds its size cap.
class CapExceeded : public std::runtime_error {
  public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// p^e with overflow guard; throws std::invalid_argument beyond 2^63.
inline std::uint64_t checked_pow_u64(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && r > (std::uint64_t(1) << 62) / base) {
            throw std::invalid_argument("checked_pow_u64: overflow");
        }
        r *= base;
    }
    return r;
}

inline bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

}  // namespace mixedcode
