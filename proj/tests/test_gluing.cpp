#include "trirem/gluing.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <limits>
#include <map>

using namespace trirem;

namespace {

OrientedFace placed(u64 r, u64 x, u64 y) { return OrientedFace::from_oriented(RemainderCoords{r, x, y}); }

GluedConfig known_brick()
{
    return {placed(36, 81, 8), placed(40, 200, 4), placed(90, 150, 27), 117, 240, 44};
}

std::vector<std::array<u64, 3>> edge_sets(const std::vector<BrickCandidate>& cs)
{
    std::vector<std::array<u64, 3>> out;
    for (const auto& c : cs)
        out.push_back(c.edges);
    return out;
}

} // namespace

TEST_CASE("oriented faces")
{
    const auto f = placed(2, 1, 2);
    CHECK(f.swapped());
    CHECK(f.canonical() == RemainderCoords{2, 2, 1});
    CHECK(f.coords() == RemainderCoords{2, 1, 2});
    CHECK(f.x_leg() == 3);
    CHECK(f.y_leg() == 4);
    CHECK(f.diagonal() == 5);
    CHECK_THROWS_AS(OrientedFace(RemainderCoords{2, 1, 2}, false), std::invalid_argument);
}

TEST_CASE("check_edge_compat")
{
    CHECK(check_edge_compat(known_brick()));

    const auto unit = placed(2, 2, 1);
    CHECK_FALSE(check_edge_compat({unit, unit, unit, 4, 4, 3}));

    for (u64 GluedConfig::*edge : {&GluedConfig::A, &GluedConfig::B, &GluedConfig::C}) {
        auto perturbed = known_brick();
        perturbed.*edge += 1;
        CHECK_FALSE(check_edge_compat(perturbed));
    }
    auto wrong_face = known_brick();
    wrong_face.face3 = placed(90, 27, 150);
    CHECK_FALSE(check_edge_compat(wrong_face));
}

TEST_CASE("from_edges rebuilds the known configuration")
{
    CHECK(GluedConfig::from_edges(117, 240, 44) == known_brick());
    CHECK_THROWS_AS(GluedConfig::from_edges(1, 2, 3), std::invalid_argument);
}

TEST_CASE("solve_third_face")
{
    CHECK(solve_third_face(4, 4).empty());
    CHECK(solve_third_face(3, 3).empty());
    const auto faces = solve_third_face(117, 240);
    REQUIRE(faces.size() == 1);
    CHECK(faces.front().coords() == RemainderCoords{90, 150, 27});
    CHECK(solve_third_face(0, 5).empty());
    CHECK(solve_third_face(2, 2).empty());
}

TEST_CASE("solve_third_face agrees with the sum-of-squares criterion")
{
    // A third face exists exactly when A^2 + B^2 is a square; it is then unique.
    for (u64 A = 1; A <= 120; ++A) {
        for (u64 B = 1; B <= 120; ++B) {
            const auto faces = solve_third_face(A, B);
            const bool expected = is_perfect_square(square(A) + square(B));
            REQUIRE(faces.size() == (expected ? 1u : 0u));
            for (const auto& f : faces) {
                CHECK(f.y_leg() == A);
                CHECK(f.x_leg() == B);
            }
        }
    }
}

TEST_CASE("faces_with_y_leg")
{
    const auto three = faces_with_y_leg(3);
    REQUIRE(three.size() == 1);
    CHECK(three.front().coords() == RemainderCoords{2, 2, 1});
    for (u64 leg = 1; leg <= 200; ++leg) {
        for (const auto& f : faces_with_y_leg(leg)) {
            CHECK(f.y_leg() == leg);
            CHECK(is_perfect_square(square(f.x_leg()) + square(leg)));
        }
    }
}

TEST_CASE("space_diagonal_is_perfect")
{
    CHECK(space_diagonal_is_perfect(1, 2, 2));
    CHECK(space_diagonal_is_perfect(3, 4, 12));
    CHECK_FALSE(space_diagonal_is_perfect(44, 117, 240));
    constexpr u64 top = std::numeric_limits<u64>::max();
    CHECK_THROWS_AS(space_diagonal_is_perfect(top, top, top), BoundExceeded);
}

TEST_CASE("glue_search examples")
{
    const auto found = glue_search(240, GlueMode::flexible);
    REQUIRE(found.size() == 1);
    const auto& brick = found.front();
    CHECK(brick.edges == std::array<u64, 3>{44, 117, 240});
    auto diagonals = brick.diagonals;
    std::sort(diagonals.begin(), diagonals.end());
    CHECK(diagonals == std::array<u64, 3>{125, 244, 267});
    CHECK_FALSE(brick.perfect);
    CHECK(check_edge_compat(brick.config));
    CHECK(brick.config.A == 44);
    CHECK(brick.config.B == 117);
    CHECK(brick.config.C == 240);

    CHECK(glue_search(200, GlueMode::flexible).empty());
    CHECK(glue_search(240, GlueMode::rigid).empty());
    CHECK_THROWS_AS(glue_search(2, GlueMode::flexible), std::invalid_argument);
}

TEST_CASE("primitivity flags of the (44, 117, 240) brick")
{
    const auto c = make_candidate(known_brick());
    // Faces (44,240), (117,240), (44,117): only the last one is primitive.
    CHECK(c.primitive_faces == std::array<bool, 3>{false, false, true});
    CHECK(is_primitive(RemainderCoords{36, 81, 8}));
    CHECK_FALSE(is_primitive(RemainderCoords{40, 200, 4}));
    CHECK_FALSE(is_primitive(RemainderCoords{90, 150, 27}));
}

TEST_CASE("glue_search agrees with the naive brick oracle up to 300")
{
    for (u64 max_edge : {3, 50, 150, 239, 240, 274, 275, 300}) {
        CAPTURE(max_edge);
        CHECK(edge_sets(glue_search(max_edge, GlueMode::flexible)) == oracle::brute_force_bricks(max_edge));
    }
}

TEST_CASE("every candidate is a consistent brick")
{
    for (const auto& c : glue_search(1000, GlueMode::flexible)) {
        CHECK(check_edge_compat(c.config));
        CHECK(std::is_sorted(c.edges.begin(), c.edges.end()));
        for (const auto* f : {&c.config.face1, &c.config.face2, &c.config.face3})
            CHECK(identity_holds(f->r(), f->x(), f->y()));
        CHECK(c.diagonals[0] == c.config.face1.diagonal());
        CHECK(c.perfect == space_diagonal_is_perfect(c.edges[0], c.edges[1], c.edges[2]));
    }
}

TEST_CASE("rigid results are a subset of flexible results")
{
    for (u64 max_edge : {240, 600, 1500}) {
        const auto flexible = glue_search(max_edge, GlueMode::flexible);
        const auto rigid = glue_search(max_edge, GlueMode::rigid);
        for (const auto& c : rigid) {
            CHECK(std::find(flexible.begin(), flexible.end(), c) != flexible.end());
            CHECK(c.primitive_faces == std::array<bool, 3>{true, true, true});
        }
        for (const auto& c : flexible) {
            const bool all_primitive = c.primitive_faces == std::array<bool, 3>{true, true, true};
            CHECK(all_primitive == (std::find(rigid.begin(), rigid.end(), c) != rigid.end()));
        }
    }
}

TEST_CASE("every edge labelling canonicalizes to the same candidate")
{
    const auto labelled = labelled_configs(800, GlueMode::flexible);
    std::map<std::array<u64, 3>, int> labellings;
    for (const auto& g : labelled) {
        CHECK(check_edge_compat(g));
        labellings[make_candidate(g).edges] += 1;
    }
    const auto candidates = glue_search(800, GlueMode::flexible);
    CHECK(labellings.size() == candidates.size());
    for (const auto& c : candidates) {
        // all six orderings of three distinct edges are found by the join
        CHECK(labellings[c.edges] == 6);
        std::array<u64, 3> e = c.edges;
        do {
            CHECK(make_candidate(GluedConfig::from_edges(e[0], e[1], e[2])) == c);
        } while (std::next_permutation(e.begin(), e.end()));
    }
}

TEST_CASE("glue_search is independent of the thread count")
{
    const auto single = glue_search(1200, GlueMode::flexible, 1);
    CHECK_FALSE(single.empty());
    for (unsigned t : {2u, 5u, 8u})
        CHECK(glue_search(1200, GlueMode::flexible, t) == single);
}

TEST_CASE("scaled configurations stay compatible")
{
    const auto g = known_brick();
    const auto tripled = scale(g, 3);
    CHECK(check_edge_compat(tripled));
    CHECK(tripled.A == 351);
    CHECK(tripled.face1.coords() == RemainderCoords{108, 243, 24});
    CHECK_THROWS_AS(scale(g, 0), std::invalid_argument);
}
