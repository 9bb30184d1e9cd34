#pragma once

// Gluing three Pythagorean faces around a common vertex.
//
// With edges A, B, C issuing from the vertex, face 1 spans (A, C), face 2
// spans (B, C) and face 3 spans (A, B). In remainder coordinates the shared
// edges must agree:
//
//     A = r1 + x1 = r3 + y3
//     B = r2 + x2 = r3 + x3
//     C = r1 + y1 = r2 + y2
//
// Any solution is an Euler brick (integer edges and face diagonals).

#include "trirem/remainder.hpp"

#include <array>
#include <string_view>
#include <vector>

namespace trirem {

/// A face placed in the edge system. Stores the canonical (x > y) coordinates
/// and whether the placement exchanges x and y.
class OrientedFace {
public:
    OrientedFace(RemainderCoords canonical, bool swapped);
    static OrientedFace from_oriented(const RemainderCoords& coords)
    {
        return {coords.canonical(), !coords.is_canonical()};
    }

    const RemainderCoords& canonical() const noexcept { return canonical_; }
    bool swapped() const noexcept { return swapped_; }

    /// Coordinates as used in the edge equations.
    RemainderCoords coords() const noexcept { return swapped_ ? canonical_.swapped() : canonical_; }
    u64 r() const noexcept { return canonical_.r(); }
    u64 x() const noexcept { return swapped_ ? canonical_.y() : canonical_.x(); }
    u64 y() const noexcept { return swapped_ ? canonical_.x() : canonical_.y(); }

    /// r + x and r + y: the two edges this face contributes.
    u64 x_leg() const { return checked_add(r(), x()); }
    u64 y_leg() const { return checked_add(r(), y()); }
    u64 diagonal() const { return checked_add(x_leg(), y()); }

    friend auto operator<=>(const OrientedFace&, const OrientedFace&) = default;

private:
    RemainderCoords canonical_;
    bool swapped_;
};

/// Three oriented faces with claimed shared edges. Not validated on
/// construction; see check_edge_compat.
struct GluedConfig {
    OrientedFace face1;
    OrientedFace face2;
    OrientedFace face3;
    u64 A;
    u64 B;
    u64 C;

    /// The unique configuration with the given edge labels. Throws
    /// std::invalid_argument unless all three pairwise sums of squares are squares.
    static GluedConfig from_edges(u64 A, u64 B, u64 C);

    friend bool operator==(const GluedConfig&, const GluedConfig&) = default;
};

/// All six edge equalities hold.
bool check_edge_compat(const GluedConfig& config) noexcept;

/// Multiply every face and edge by lambda (lambda >= 1).
GluedConfig scale(const GluedConfig& config, u64 lambda);

struct BrickCandidate {
    std::array<u64, 3> edges;      // ascending
    std::array<u64, 3> diagonals;  // d1, d2, d3 of face1..face3
    bool perfect;
    std::array<bool, 3> primitive_faces;
    GluedConfig config;            // labelled so that A < B < C

    friend bool operator==(const BrickCandidate&, const BrickCandidate&) = default;
};

/// Relabel so that A < B < C and derive the remaining fields.
BrickCandidate make_candidate(const GluedConfig& config);

enum class GlueMode { rigid, flexible };

std::string_view to_string(GlueMode mode) noexcept;

/// Every labelled solution of the edge system found by joining faces 1 and 2
/// on C and solving for face 3. Each brick appears once per edge labelling.
std::vector<GluedConfig> labelled_configs(u64 max_edge, GlueMode mode, unsigned threads = 1);

/// Every Euler brick with all edges <= max_edge reachable by gluing enumerated
/// faces, one candidate per edge set, sorted by edges. Rigid mode restricts all
/// three faces to primitive coordinates. Requires max_edge >= 3.
std::vector<BrickCandidate> glue_search(u64 max_edge, GlueMode mode, unsigned threads = 1);

/// All faces with r3 + y3 = A, r3 + x3 = B. Empty means the cycle cannot close.
std::vector<OrientedFace> solve_third_face(u64 A, u64 B);

/// All oriented faces with r + y = leg.
std::vector<OrientedFace> faces_with_y_leg(u64 leg);

/// A^2 + B^2 + C^2 is a perfect square. Throws BoundExceeded on overflow.
bool space_diagonal_is_perfect(u64 A, u64 B, u64 C);

} // namespace trirem
