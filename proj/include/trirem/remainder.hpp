#pragma once

// Pythagorean faces and their triangular remainder coordinates.
//
// A face (a, b, c) with a^2 + b^2 = c^2 maps to r = a + b - c, x = c - a,
// y = c - b, and back through (a, b, c) = (r + x, r + y, r + x + y). Under
// that change of variables the Pythagorean relation becomes r^2 = 2xy.

#include "trirem/arith.hpp"

#include <compare>
#include <concepts>
#include <stdexcept>

namespace trirem {

class MalformedFace : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InvalidCoords : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A Pythagorean triple (legs a, b; hypotenuse c). Leg order is significant.
class Face {
public:
    /// Throws MalformedFace unless a, b >= 1, c > max(a, b) and a^2 + b^2 = c^2.
    Face(u64 a, u64 b, u64 c);

    u64 a() const noexcept { return a_; }
    u64 b() const noexcept { return b_; }
    u64 c() const noexcept { return c_; }

    friend auto operator<=>(const Face&, const Face&) = default;

private:
    u64 a_;
    u64 b_;
    u64 c_;
};

/// Positive (r, x, y) with r^2 = 2xy. Consequently r is even and at least
/// one of x, y is even.
class RemainderCoords {
public:
    /// Throws InvalidCoords if any component is zero or the identity fails.
    RemainderCoords(u64 r, u64 x, u64 y);

    u64 r() const noexcept { return r_; }
    u64 x() const noexcept { return x_; }
    u64 y() const noexcept { return y_; }

    /// (r, y, x): the same face with its legs exchanged.
    RemainderCoords swapped() const noexcept { return {r_, y_, x_, Unchecked{}}; }
    /// Orientation with x >= y (x == y never occurs).
    RemainderCoords canonical() const noexcept { return x_ >= y_ ? *this : swapped(); }
    bool is_canonical() const noexcept { return x_ >= y_; }

    friend auto operator<=>(const RemainderCoords&, const RemainderCoords&) = default;

private:
    struct Unchecked {};
    RemainderCoords(u64 r, u64 x, u64 y, Unchecked) noexcept : r_(r), x_(x), y_(y) {}

    u64 r_;
    u64 x_;
    u64 y_;
};

/// r^2 = 2xy with r, x, y all strictly positive. Never throws.
bool identity_holds(u64 r, u64 x, u64 y) noexcept;

template <std::signed_integral T>
bool identity_holds(T r, T x, T y) noexcept
{
    if (r <= 0 || x <= 0 || y <= 0)
        return false;
    return identity_holds(static_cast<u64>(r), static_cast<u64>(x), static_cast<u64>(y));
}

/// (a + b - c, c - a, c - b). No canonicalization: x always comes from leg a.
RemainderCoords to_remainder_coords(const Face& face);

/// (r + x, r + y, r + x + y). Throws BoundExceeded if the hypotenuse does not fit.
Face from_remainder_coords(const RemainderCoords& coords);

/// gcd(r, x, y) == 1, which is the same as gcd(a, b, c) == 1.
bool is_primitive(const RemainderCoords& coords) noexcept;

u64 content(const RemainderCoords& coords) noexcept;

/// (lambda r, lambda x, lambda y). Throws std::invalid_argument for lambda == 0
/// and BoundExceeded on overflow.
RemainderCoords scale(const RemainderCoords& coords, u64 lambda);

/// Exact inverse of scale; throws std::invalid_argument unless g divides all three.
RemainderCoords divide_exact(const RemainderCoords& coords, u64 g);

} // namespace trirem
