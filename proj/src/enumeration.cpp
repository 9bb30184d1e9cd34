#include "trirem/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <thread>

namespace trirem {

unsigned default_thread_count() noexcept { return std::max(1u, std::thread::hardware_concurrency()); }

EnumerationBound EnumerationBound::hypotenuse(u64 value)
{
    if (value == 0)
        throw std::invalid_argument("max_hypotenuse must be positive");
    return {Mode::max_hypotenuse, value};
}

EnumerationBound EnumerationBound::leg(u64 value)
{
    if (value == 0)
        throw std::invalid_argument("max_leg must be positive");
    return {Mode::max_leg, value};
}

bool EnumerationBound::admits(const RemainderCoords& coords) const noexcept
{
    const u128 r = coords.r();
    if (mode_ == Mode::max_hypotenuse)
        return r + coords.x() + coords.y() <= value_;
    return r + coords.x() <= value_ && r + coords.y() <= value_;
}

u64 EnumerationBound::max_half_remainder() const
{
    // For r = 2m, x*y = 2m^2 forces x + y >= 2*sqrt(2)*m and the larger
    // deficit >= sqrt(2)*m. Both conditions are monotone in m.
    const u64 factor = mode_ == Mode::max_hypotenuse ? 8 : 2;
    auto feasible = [&](u64 m) {
        const u128 r = u128{2} * m;
        if (r >= value_)
            return false;
        const u128 slack = value_ - r;
        return slack * slack >= factor * square(m);
    };
    u64 lo = 0;
    u64 hi = value_ / 2;
    while (lo < hi) {
        const u64 mid = lo + (hi - lo + 1) / 2;
        if (feasible(mid))
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

namespace {

void faces_with_half_remainder(u64 m, const EnumerationBound& bound, std::vector<RemainderCoords>& out)
{
    const u64 r = checked_mul(m, 2);
    const u64 product = checked_mul(checked_mul(m, m), 2);
    if (r >= bound.value())
        return;
    // Largest admissible x; the smaller deficit is at least 1.
    const u64 max_x = bound.mode() == EnumerationBound::Mode::max_hypotenuse ? bound.value() - r - 1
                                                                             : bound.value() - r;
    if (max_x == 0)
        return;

    const std::size_t first = out.size();
    const u64 lo = std::max<u64>(1, product / max_x + (product % max_x != 0 ? 1 : 0));
    const u64 hi = isqrt(product);
    for (u64 y = lo; y <= hi; ++y) {
        if (product % y != 0)
            continue;
        RemainderCoords coords{r, product / y, y};
        if (bound.admits(coords))
            out.push_back(coords);
    }
    // Divisors came out with y ascending, i.e. x descending.
    std::reverse(out.begin() + static_cast<std::ptrdiff_t>(first), out.end());
}

} // namespace

std::vector<RemainderCoords> enumerate_faces(const EnumerationBound& bound, unsigned threads)
{
    const u64 last = checked_add(bound.max_half_remainder(), 1);
    return partitioned_collect<RemainderCoords>(1, last, threads, [&](u64 lo, u64 hi, auto& out) {
        for (u64 m = lo; m < hi; ++m)
            faces_with_half_remainder(m, bound, out);
    });
}

std::vector<RemainderCoords> euclid_oracle(const EnumerationBound& bound)
{
    const bool by_hypotenuse = bound.mode() == EnumerationBound::Mode::max_hypotenuse;
    const u64 limit = bound.value();
    std::vector<RemainderCoords> out;

    auto fits = [&](u64 a, u64 b, u64 c) { return by_hypotenuse ? c <= limit : a <= limit && b <= limit; };

    for (u64 m = 2;; ++m) {
        // Smallest triple for this m: n = m - 1 in leg mode, n = 1 by hypotenuse.
        const u128 min_hyp = square(m) + 1;
        const u128 min_leg = 2 * u128{m} - 1;
        if (by_hypotenuse ? min_hyp > limit : min_leg > limit)
            break;
        for (u64 n = 1; n < m; ++n) {
            if ((m - n) % 2 == 0 || std::gcd(m, n) != 1)
                continue;
            const u64 a = checked_mul(m, m) - n * n;
            const u64 b = checked_mul(checked_mul(m, n), 2);
            const u64 c = checked_add(checked_mul(m, m), n * n);
            if (!fits(a, b, c)) {
                if (by_hypotenuse)
                    break;
                continue;
            }
            for (u64 k = 1;; ++k) {
                u64 ka, kb, kc;
                if (__builtin_mul_overflow(k, a, &ka) || __builtin_mul_overflow(k, b, &kb)
                    || __builtin_mul_overflow(k, c, &kc) || !fits(ka, kb, kc))
                    break;
                out.push_back(to_remainder_coords(Face{ka, kb, kc}).canonical());
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace trirem
