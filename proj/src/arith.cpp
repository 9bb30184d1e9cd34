#include "trirem/arith.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>

namespace trirem {

BoundExceeded::BoundExceeded(std::string value)
    : std::overflow_error("bound exceeded: " + value), value_(std::move(value))
{
}

std::string to_string(u128 v)
{
    if (v == 0)
        return "0";
    std::string out;
    while (v != 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

u64 checked_add(u64 a, u64 b)
{
    u64 out;
    if (__builtin_add_overflow(a, b, &out))
        throw BoundExceeded(std::to_string(a) + " + " + std::to_string(b));
    return out;
}

u64 checked_mul(u64 a, u64 b)
{
    u64 out;
    if (__builtin_mul_overflow(a, b, &out))
        throw BoundExceeded(std::to_string(a) + " * " + std::to_string(b));
    return out;
}

u128 checked_add(u128 a, u128 b)
{
    u128 out;
    if (__builtin_add_overflow(a, b, &out))
        throw BoundExceeded(to_string(a) + " + " + to_string(b));
    return out;
}

u64 isqrt(u128 n)
{
    if (n == 0)
        return 0;
    constexpr u64 top = std::numeric_limits<u64>::max();
    // long double carries a 64-bit mantissa on x86, so the estimate is within
    // a step or two of the true root; the loops below make it exact.
    const long double est = std::sqrt(static_cast<long double>(n));
    u64 s = est >= static_cast<long double>(top) ? top : static_cast<u64>(est);
    while (square(s) > n)
        --s;
    while (s != top && square(s + 1) <= n)
        ++s;
    return s;
}

u64 gcd3(u64 a, u64 b, u64 c) { return std::gcd(std::gcd(a, b), c); }

namespace {

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m)
{
    u64 result = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1)
            result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

} // namespace

bool is_prime(u64 n)
{
    if (n < 2)
        return false;
    static constexpr std::array<u64, 12> witnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 p : witnesses) {
        if (n % p == 0)
            return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : witnesses) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

} // namespace trirem
