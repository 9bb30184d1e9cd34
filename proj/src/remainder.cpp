#include "trirem/remainder.hpp"

#include <algorithm>
#include <string>

namespace trirem {

namespace {

std::string triple_text(u64 p, u64 q, u64 s)
{
    return "(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(s) + ")";
}

} // namespace

Face::Face(u64 a, u64 b, u64 c) : a_(a), b_(b), c_(c)
{
    if (a == 0 || b == 0 || c <= std::max(a, b))
        throw MalformedFace("not a positive right triangle: " + triple_text(a, b, c));
    u128 legs;
    if (__builtin_add_overflow(square(a), square(b), &legs) || legs != square(c))
        throw MalformedFace("a^2 + b^2 != c^2 for " + triple_text(a, b, c));
}

bool identity_holds(u64 r, u64 x, u64 y) noexcept
{
    if (r == 0 || x == 0 || y == 0)
        return false;
    u128 twice_xy;
    if (__builtin_mul_overflow(static_cast<u128>(x) * y, u128{2}, &twice_xy))
        return false;
    return square(r) == twice_xy;
}

RemainderCoords::RemainderCoords(u64 r, u64 x, u64 y) : r_(r), x_(x), y_(y)
{
    if (!identity_holds(r, x, y))
        throw InvalidCoords("r^2 != 2xy for (r,x,y) = " + triple_text(r, x, y));
}

RemainderCoords to_remainder_coords(const Face& face)
{
    // c > b, so a + b - c == a - (c - b) without forming a + b.
    return {face.a() - (face.c() - face.b()), face.c() - face.a(), face.c() - face.b()};
}

Face from_remainder_coords(const RemainderCoords& coords)
{
    const u64 a = checked_add(coords.r(), coords.x());
    const u64 b = checked_add(coords.r(), coords.y());
    return {a, b, checked_add(a, coords.y())};
}

u64 content(const RemainderCoords& coords) noexcept { return gcd3(coords.r(), coords.x(), coords.y()); }

bool is_primitive(const RemainderCoords& coords) noexcept { return content(coords) == 1; }

RemainderCoords scale(const RemainderCoords& coords, u64 lambda)
{
    if (lambda == 0)
        throw std::invalid_argument("scale factor must be positive");
    return {checked_mul(coords.r(), lambda), checked_mul(coords.x(), lambda),
            checked_mul(coords.y(), lambda)};
}

RemainderCoords divide_exact(const RemainderCoords& coords, u64 g)
{
    if (g == 0 || coords.r() % g != 0 || coords.x() % g != 0 || coords.y() % g != 0)
        throw std::invalid_argument(std::to_string(g) + " does not divide "
                                    + triple_text(coords.r(), coords.x(), coords.y()));
    return {coords.r() / g, coords.x() / g, coords.y() / g};
}

} // namespace trirem
