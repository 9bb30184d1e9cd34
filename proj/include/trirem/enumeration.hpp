#pragma once

#include "trirem/parallel.hpp"
#include "trirem/remainder.hpp"

#include <vector>

namespace trirem {

/// Search region for faces: either c <= max_hypotenuse or both legs <= max_leg.
class EnumerationBound {
public:
    enum class Mode { max_hypotenuse, max_leg };

    /// Throw std::invalid_argument for a zero bound. Bounds below the
    /// smallest triple (c = 5, legs 3 and 4) are valid and admit nothing.
    static EnumerationBound hypotenuse(u64 value);
    static EnumerationBound leg(u64 value);

    Mode mode() const noexcept { return mode_; }
    u64 value() const noexcept { return value_; }

    bool admits(const RemainderCoords& coords) const noexcept;

    /// Largest m such that some face with r = 2m can satisfy the bound.
    u64 max_half_remainder() const;

private:
    EnumerationBound(Mode mode, u64 value) : mode_(mode), value_(value) {}

    Mode mode_;
    u64 value_;
};

/// Every face within the bound, inverted from r^2 = 2xy: for each r = 2m the
/// divisor pairs {x, y} of 2m^2. Canonical x >= y, sorted by (r, x, y).
/// The result is identical for every thread count.
std::vector<RemainderCoords> enumerate_faces(const EnumerationBound& bound, unsigned threads = 1);

/// Same contract as enumerate_faces, produced from Euclid's parametrization
/// k(m^2 - n^2), 2kmn, k(m^2 + n^2). Used as an independent cross-check.
std::vector<RemainderCoords> euclid_oracle(const EnumerationBound& bound);

} // namespace trirem
