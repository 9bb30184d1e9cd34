#include "trirem/analysis.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace trirem {

bool verify_no_sqrt2(u64 limit)
{
    const u128 max_r = u128{2} * limit;
    for (u64 x = 1; x <= limit && x != 0; ++x) {
        const u128 target = checked_add(square(x), square(x));
        const u64 r = isqrt(target);
        if (r <= max_r && square(r) == target)
            return false;
    }
    return true;
}

std::string_view to_string(ClosureHypothesis hypothesis) noexcept
{
    return hypothesis == ClosureHypothesis::shared_edge ? "shared_edge" : "bare";
}

namespace {

struct PairGroupOutput {
    std::vector<FacePair> examined;
    std::vector<ClosureViolation> violations;
};

} // namespace

ClosureScan scan_symmetric_closures(u64 max_edge, ClosureHypothesis hypothesis, GlueMode mode, unsigned threads)
{
    if (max_edge < 3)
        throw std::invalid_argument("max_edge must be at least 3, got " + std::to_string(max_edge));

    auto faces = enumerate_faces(EnumerationBound::leg(max_edge), threads);
    if (mode == GlueMode::rigid)
        std::erase_if(faces, [](const RemainderCoords& f) { return !is_primitive(f); });

    // Key: the x-leg, plus the y-leg when edge C must also be shared.
    std::map<std::pair<u64, u64>, std::vector<OrientedFace>> groups;
    for (const auto& f : faces) {
        for (bool swapped : {false, true}) {
            OrientedFace placed{f, swapped};
            const u64 second = hypothesis == ClosureHypothesis::shared_edge ? placed.y_leg() : 0;
            groups[{placed.x_leg(), second}].push_back(placed);
        }
    }
    std::vector<const std::vector<OrientedFace>*> members;
    for (const auto& [key, group] : groups)
        members.push_back(&group);

    auto parts = partitioned_collect<PairGroupOutput>(0, members.size(), threads, [&](u64 lo, u64 hi, auto& out) {
        PairGroupOutput part;
        for (u64 i = lo; i < hi; ++i) {
            for (const auto& face1 : *members[i]) {
                for (const auto& face2 : *members[i]) {
                    part.examined.push_back({face1, face2});
                    const u64 A = face1.x_leg();
                    for (const auto& face3 : solve_third_face(A, A))
                        part.violations.push_back({face1, face2, face3});
                }
            }
        }
        out.push_back(std::move(part));
    });

    ClosureScan scan{hypothesis, {}, {}};
    for (auto& part : parts) {
        scan.examined.insert(scan.examined.end(), part.examined.begin(), part.examined.end());
        scan.violations.insert(scan.violations.end(), part.violations.begin(), part.violations.end());
    }
    return scan;
}

bool RigidWalkthrough::closes() const noexcept
{
    return std::any_of(attempts.begin(), attempts.end(),
                       [](const ClosureAttempt& a) { return !a.third_faces.empty(); });
}

RigidWalkthrough reproduce_rigid_walkthrough(const OrientedFace& face1)
{
    RigidWalkthrough walk{face1, face1.y_leg(), faces_with_y_leg(face1.y_leg()), {}};
    const u64 A = face1.x_leg();
    for (const auto& face2 : walk.face2_solutions) {
        const u64 B = face2.x_leg();
        walk.attempts.push_back({face2, A, B, solve_third_face(A, B)});
    }
    return walk;
}

DescentTrace<RemainderCoords> descend(const RemainderCoords& coords)
{
    DescentTrace<RemainderCoords> trace{coords, {}, coords};
    for (u64 g = content(coords); g > 1; g = content(trace.terminal)) {
        trace.terminal = divide_exact(trace.terminal, g);
        trace.steps.push_back({g, trace.terminal});
    }
    return trace;
}

u64 content(const GluedConfig& config) noexcept
{
    u64 g = 0;
    for (const auto* f : {&config.face1, &config.face2, &config.face3})
        g = std::gcd(g, content(f->canonical()));
    return g;
}

namespace {

GluedConfig divide_exact(const GluedConfig& config, u64 g)
{
    auto divided = [&](const OrientedFace& f) { return OrientedFace{divide_exact(f.canonical(), g), f.swapped()}; };
    return {divided(config.face1), divided(config.face2), divided(config.face3),
            config.A / g, config.B / g, config.C / g};
}

} // namespace

DescentTrace<GluedConfig> descend(const GluedConfig& config)
{
    if (!check_edge_compat(config))
        throw std::invalid_argument("descent requires an edge-compatible configuration");
    DescentTrace<GluedConfig> trace{config, {}, config};
    for (u64 g = content(config); g > 1; g = content(trace.terminal)) {
        trace.terminal = divide_exact(trace.terminal, g);
        trace.steps.push_back({g, trace.terminal});
    }
    return trace;
}

std::string_view param_name(Param p) noexcept
{
    static constexpr std::array<std::string_view, param_count> names{
        "r1", "x1", "y1", "r2", "x2", "y2", "r3", "x3", "y3", "A", "B", "C"};
    return names[static_cast<unsigned>(p)];
}

u64 param_value(const GluedConfig& g, Param p) noexcept
{
    switch (p) {
    case Param::r1: return g.face1.r();
    case Param::x1: return g.face1.x();
    case Param::y1: return g.face1.y();
    case Param::r2: return g.face2.r();
    case Param::x2: return g.face2.x();
    case Param::y2: return g.face2.y();
    case Param::r3: return g.face3.r();
    case Param::x3: return g.face3.x();
    case Param::y3: return g.face3.y();
    case Param::A: return g.A;
    case Param::B: return g.B;
    case Param::C: return g.C;
    }
    return 0;
}

ParamSet divisible_params(const GluedConfig& config, u64 p)
{
    if (p == 0)
        throw std::invalid_argument("divisor must be positive");
    ParamSet out;
    for (std::size_t i = 0; i < param_count; ++i)
        out[i] = param_value(config, static_cast<Param>(i)) % p == 0;
    return out;
}

ParamSet close_divisibility(ParamSet known)
{
    using enum Param;
    // s = u + v for each of the six edge equalities.
    static constexpr std::array<std::array<Param, 3>, 6> sums{{
        {A, r1, x1}, {A, r3, y3}, {B, r2, x2}, {B, r3, x3}, {C, r1, y1}, {C, r2, y2},
    }};
    // deficit -> remainder of the same face.
    static constexpr std::array<std::pair<Param, Param>, 6> deficits{{
        {x1, r1}, {y1, r1}, {x2, r2}, {y2, r2}, {x3, r3}, {y3, r3},
    }};
    auto bit = [&](Param p) { return known[static_cast<unsigned>(p)]; };

    for (bool changed = true; changed;) {
        const ParamSet before = known;
        for (const auto& [s, u, v] : sums) {
            if (bit(s) + bit(u) + bit(v) == 2) {
                known.set(static_cast<unsigned>(s));
                known.set(static_cast<unsigned>(u));
                known.set(static_cast<unsigned>(v));
            }
        }
        for (const auto& [deficit, remainder] : deficits) {
            if (bit(deficit))
                known.set(static_cast<unsigned>(remainder));
        }
        changed = known != before;
    }
    return known;
}

PropagationReport divisibility_propagation(const GluedConfig& config, u64 p)
{
    if (!is_prime(p))
        throw std::invalid_argument(std::to_string(p) + " is not prime");
    PropagationReport report{p, divisible_params(config, p), {}, false, {}};
    report.closure = close_divisibility(report.initial);
    report.reached_all = report.closure.all();
    for (int face = 0; face < 3; ++face) {
        if (report.closure[static_cast<std::size_t>(3 * face)])
            report.forced_products.push_back(face + 1);
    }
    return report;
}

ParityCensus tally_parity(const std::vector<RemainderCoords>& faces)
{
    ParityCensus census;
    for (const auto& f : faces) {
        const bool x_even = f.x() % 2 == 0;
        const bool y_even = f.y() % 2 == 0;
        ++census.total;
        census.r_even += f.r() % 2 == 0;
        census.x_even += x_even;
        census.y_even += y_even;
        census.both_deficits_even += x_even && y_even;
    }
    return census;
}

ParityCensus parity_census(const EnumerationBound& bound, unsigned threads)
{
    const auto faces = enumerate_faces(bound, threads);
    const ParityCensus census = tally_parity(faces);
    if (census.r_even != census.total)
        throw std::logic_error("odd triangular remainder encountered");
    for (const auto& f : faces) {
        if (f.x() % 2 == 1 && f.y() % 2 == 1)
            throw std::logic_error("face with both deficits odd encountered");
    }
    return census;
}

} // namespace trirem
