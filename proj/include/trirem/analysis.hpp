#pragma once

// Mechanized checks of the structural claims about gluing: the symmetric
// closure obstruction, the absence of solutions to r^2 = 2x^2, parity of
// remainder coordinates, and gcd descent with divisibility propagation.

#include "trirem/enumeration.hpp"
#include "trirem/gluing.hpp"

#include <bitset>
#include <optional>
#include <string_view>
#include <vector>

namespace trirem {

/// True iff no 1 <= x <= limit, 1 <= r <= 2*limit satisfies r^2 = 2x^2.
bool verify_no_sqrt2(u64 limit);

enum class ClosureHypothesis {
    shared_edge, // r1 + x1 = r2 + x2 together with edge C: r1 + y1 = r2 + y2
    bare,        // r1 + x1 = r2 + x2 alone
};

std::string_view to_string(ClosureHypothesis hypothesis) noexcept;

struct FacePair {
    OrientedFace face1;
    OrientedFace face2;
};

struct ClosureViolation {
    OrientedFace face1;
    OrientedFace face2;
    OrientedFace face3;
};

struct ClosureScan {
    ClosureHypothesis hypothesis;
    std::vector<FacePair> examined;
    std::vector<ClosureViolation> violations; // expected to stay empty
};

/// All face pairs with legs <= max_edge meeting the hypothesis, each followed
/// by an attempt to close the cycle with solve_third_face(A, A).
ClosureScan scan_symmetric_closures(u64 max_edge, ClosureHypothesis hypothesis = ClosureHypothesis::shared_edge,
                                    GlueMode mode = GlueMode::flexible, unsigned threads = 1);

struct ClosureAttempt {
    OrientedFace face2;
    u64 A;
    u64 B;
    std::vector<OrientedFace> third_faces;
};

struct RigidWalkthrough {
    OrientedFace face1;
    u64 C;                                  // r1 + y1
    std::vector<OrientedFace> face2_solutions; // all faces with r2 + y2 = C
    std::vector<ClosureAttempt> attempts;   // one per face2 solution

    bool face2_unique() const noexcept { return face2_solutions.size() == 1; }
    bool closes() const noexcept;
};

/// Start from face1, solve for every face2 sharing edge C, then try to close
/// the cycle. Defaults to the (3, 4, 5) face in coordinates (2, 2, 1).
RigidWalkthrough reproduce_rigid_walkthrough(const OrientedFace& face1 = OrientedFace{RemainderCoords{2, 2, 1}, false});

template <class T>
struct DescentStep {
    u64 lambda;
    T result;
};

template <class T>
struct DescentTrace {
    T initial;
    std::vector<DescentStep<T>> steps;
    T terminal;

    u64 total_factor() const
    {
        u64 f = 1;
        for (const auto& s : steps)
            f = checked_mul(f, s.lambda);
        return f;
    }
};

/// Divide out the full gcd until the object is primitive.
DescentTrace<RemainderCoords> descend(const RemainderCoords& coords);
/// Same over all nine face parameters; the config must pass check_edge_compat.
DescentTrace<GluedConfig> descend(const GluedConfig& config);

u64 content(const GluedConfig& config) noexcept;

/// The twelve quantities of a glued configuration, in this order.
enum class Param : unsigned { r1, x1, y1, r2, x2, y2, r3, x3, y3, A, B, C };
inline constexpr std::size_t param_count = 12;
using ParamSet = std::bitset<param_count>;

std::string_view param_name(Param p) noexcept;
u64 param_value(const GluedConfig& config, Param p) noexcept;

/// Parameters divisible by p.
ParamSet divisible_params(const GluedConfig& config, u64 p);

/// Closure of `known` under the sound implications available for a prime p:
///   - in each edge equality s = u + v, any two divisible members force the third;
///   - from r^2 = 2xy, p | x or p | y forces p | r.
ParamSet close_divisibility(ParamSet known);

struct PropagationReport {
    u64 prime;
    ParamSet initial;
    ParamSet closure;
    bool reached_all;
    /// Faces i with p | r_i: the identity then forces p^2 | 2 x_i y_i, which
    /// is a disjunction and does not close over single parameters.
    std::vector<int> forced_products;
};

/// Throws std::invalid_argument unless p is prime.
PropagationReport divisibility_propagation(const GluedConfig& config, u64 p);

struct ParityCensus {
    u64 total = 0;
    u64 r_even = 0;
    u64 x_even = 0;
    u64 y_even = 0;
    u64 both_deficits_even = 0;

    friend bool operator==(const ParityCensus&, const ParityCensus&) = default;
};

ParityCensus tally_parity(const std::vector<RemainderCoords>& faces);

/// Parity tallies over enumerate_faces(bound). Throws std::logic_error if an
/// odd remainder or an all-odd face ever appears.
ParityCensus parity_census(const EnumerationBound& bound, unsigned threads = 1);

} // namespace trirem
