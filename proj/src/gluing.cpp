#include "trirem/gluing.hpp"

#include "trirem/enumeration.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace trirem {

OrientedFace::OrientedFace(RemainderCoords canonical, bool swapped) : canonical_(canonical), swapped_(swapped)
{
    if (!canonical.is_canonical())
        throw std::invalid_argument("OrientedFace expects canonical coordinates (x > y)");
}

namespace {

// The face whose x-leg is p and y-leg is q.
OrientedFace face_on(u64 p, u64 q)
{
    const u128 sum = checked_add(square(p), square(q));
    const u64 d = isqrt(sum);
    if (square(d) != sum)
        throw std::invalid_argument(std::to_string(p) + "^2 + " + std::to_string(q) + "^2 is not a square");
    return OrientedFace::from_oriented(RemainderCoords{p - (d - q), d - q, d - p});
}

} // namespace

GluedConfig GluedConfig::from_edges(u64 A, u64 B, u64 C)
{
    return {face_on(A, C), face_on(B, C), face_on(B, A), A, B, C};
}

bool check_edge_compat(const GluedConfig& g) noexcept
{
    auto leg = [](u64 r, u64 d) { return u128{r} + d; };
    return leg(g.face1.r(), g.face1.x()) == g.A && leg(g.face3.r(), g.face3.y()) == g.A
        && leg(g.face2.r(), g.face2.x()) == g.B && leg(g.face3.r(), g.face3.x()) == g.B
        && leg(g.face1.r(), g.face1.y()) == g.C && leg(g.face2.r(), g.face2.y()) == g.C;
}

GluedConfig scale(const GluedConfig& config, u64 lambda)
{
    auto scaled = [&](const OrientedFace& f) { return OrientedFace{scale(f.canonical(), lambda), f.swapped()}; };
    return {scaled(config.face1),
            scaled(config.face2),
            scaled(config.face3),
            checked_mul(config.A, lambda),
            checked_mul(config.B, lambda),
            checked_mul(config.C, lambda)};
}

BrickCandidate make_candidate(const GluedConfig& config)
{
    if (!check_edge_compat(config))
        throw std::invalid_argument("configuration violates edge compatibility");
    std::array<u64, 3> edges{config.A, config.B, config.C};
    std::sort(edges.begin(), edges.end());
    const GluedConfig canonical = GluedConfig::from_edges(edges[0], edges[1], edges[2]);
    return {edges,
            {canonical.face1.diagonal(), canonical.face2.diagonal(), canonical.face3.diagonal()},
            space_diagonal_is_perfect(edges[0], edges[1], edges[2]),
            {is_primitive(canonical.face1.canonical()), is_primitive(canonical.face2.canonical()),
             is_primitive(canonical.face3.canonical())},
            canonical};
}

std::string_view to_string(GlueMode mode) noexcept
{
    return mode == GlueMode::rigid ? "rigid" : "flexible";
}

std::vector<GluedConfig> labelled_configs(u64 max_edge, GlueMode mode, unsigned threads)
{
    if (max_edge < 3)
        throw std::invalid_argument("max_edge must be at least 3, got " + std::to_string(max_edge));

    auto faces = enumerate_faces(EnumerationBound::leg(max_edge), threads);
    if (mode == GlueMode::rigid)
        std::erase_if(faces, [](const RemainderCoords& f) { return !is_primitive(f); });

    // Faces 1 and 2 meet along C through their y-legs.
    std::map<u64, std::vector<OrientedFace>> by_shared_edge;
    for (const auto& f : faces) {
        for (bool swapped : {false, true}) {
            OrientedFace placed{f, swapped};
            by_shared_edge[placed.y_leg()].push_back(placed);
        }
    }
    std::vector<const std::pair<const u64, std::vector<OrientedFace>>*> groups;
    for (const auto& entry : by_shared_edge)
        groups.push_back(&entry);

    return partitioned_collect<GluedConfig>(0, groups.size(), threads, [&](u64 lo, u64 hi, auto& out) {
        for (u64 i = lo; i < hi; ++i) {
            const auto& [C, members] = *groups[i];
            for (const auto& face1 : members) {
                for (const auto& face2 : members) {
                    const u64 A = face1.x_leg();
                    const u64 B = face2.x_leg();
                    for (const auto& face3 : solve_third_face(A, B)) {
                        if (mode == GlueMode::rigid && !is_primitive(face3.canonical()))
                            continue;
                        out.push_back({face1, face2, face3, A, B, C});
                    }
                }
            }
        }
    });
}

std::vector<BrickCandidate> glue_search(u64 max_edge, GlueMode mode, unsigned threads)
{
    std::vector<std::array<u64, 3>> edge_sets;
    for (const auto& config : labelled_configs(max_edge, mode, threads)) {
        std::array<u64, 3> edges{config.A, config.B, config.C};
        std::sort(edges.begin(), edges.end());
        edge_sets.push_back(edges);
    }
    std::sort(edge_sets.begin(), edge_sets.end());
    edge_sets.erase(std::unique(edge_sets.begin(), edge_sets.end()), edge_sets.end());

    std::vector<BrickCandidate> out;
    out.reserve(edge_sets.size());
    for (const auto& e : edge_sets)
        out.push_back(make_candidate(GluedConfig::from_edges(e[0], e[1], e[2])));
    return out;
}

std::vector<OrientedFace> solve_third_face(u64 A, u64 B)
{
    std::vector<OrientedFace> out;
    const u64 top = std::min(A, B);
    for (u64 r = 2; r < top; r += 2) {
        if (identity_holds(r, B - r, A - r))
            out.push_back(OrientedFace::from_oriented(RemainderCoords{r, B - r, A - r}));
    }
    return out;
}

std::vector<OrientedFace> faces_with_y_leg(u64 leg)
{
    std::vector<OrientedFace> out;
    for (u64 r = 2; r < leg; r += 2) {
        const u64 y = leg - r;
        const u128 twice_y = u128{2} * y;
        const u128 rr = square(r);
        if (rr % twice_y != 0)
            continue;
        const u128 x = rr / twice_y;
        if (x > ~u64{0})
            throw BoundExceeded(to_string(x));
        out.push_back(OrientedFace::from_oriented(RemainderCoords{r, static_cast<u64>(x), y}));
    }
    return out;
}

bool space_diagonal_is_perfect(u64 A, u64 B, u64 C)
{
    return is_perfect_square(checked_add(checked_add(square(A), square(B)), square(C)));
}

} // namespace trirem
