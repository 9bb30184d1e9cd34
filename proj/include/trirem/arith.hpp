#pragma once

// Exact unsigned arithmetic used throughout the search: 64-bit values,
// 128-bit intermediates, and an explicit error instead of wraparound.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace trirem {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

/// Raised whenever a value or intermediate leaves the representable range.
/// `value()` names the first offending quantity in decimal form.
class BoundExceeded : public std::overflow_error {
public:
    explicit BoundExceeded(std::string value);
    const std::string& value() const noexcept { return value_; }

private:
    std::string value_;
};

std::string to_string(u128 v);

u64 checked_add(u64 a, u64 b);
u64 checked_mul(u64 a, u64 b);
u128 checked_add(u128 a, u128 b);

inline u128 square(u64 v) { return static_cast<u128>(v) * v; }

/// floor(sqrt(n)); always fits in 64 bits.
u64 isqrt(u128 n);

inline bool is_perfect_square(u128 n)
{
    const u64 s = isqrt(n);
    return square(s) == n;
}

u64 gcd3(u64 a, u64 b, u64 c);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(u64 n);

} // namespace trirem
