// Acceptance suite: one line per criterion, exit status 1 if any fails.

#include "trirem/analysis.hpp"
#include "trirem/cli.hpp"
#include "trirem/report.hpp"

#include "oracles.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

using namespace trirem;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void expect(bool condition, const std::string& what)
    {
        if (!condition) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

struct CliResult {
    int code;
    std::string out;
};

CliResult cli_run(std::vector<std::string> args)
{
    args.insert(args.begin(), "trirem");
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str()};
}

int failures = 0;

void criterion(int id, const char* title, double limit_seconds, const std::function<void(Outcome&)>& body)
{
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(outcome);
    } catch (const std::exception& e) {
        outcome.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char limit[64];
    std::snprintf(limit, sizeof limit, "%.3fs (limit %gs)", seconds, limit_seconds);
    outcome.expect(seconds < limit_seconds, std::string("time ") + limit);
    if (!outcome.ok)
        ++failures;
    std::cout << (outcome.ok ? "PASS" : "FAIL") << "  AC" << id << "  " << title << "  [" << limit << "]";
    if (!outcome.ok)
        std::cout << "  -- " << outcome.detail;
    std::cout << std::endl;
}

} // namespace

int main()
{
    criterion(1, "(3,4,5) -> (2,2,1) and 2^2 = 2*2*1", 0.001, [](Outcome& o) {
        const auto q = to_remainder_coords(Face{3, 4, 5});
        o.expect(q == RemainderCoords{2, 2, 1}, "coords");
        o.expect(identity_holds(q.r(), q.x(), q.y()), "identity");
        o.expect(square(2) == 2 * 2 * 1, "arithmetic");
    });

    criterion(2, "(36,24,27) -> (60,63,87), gcd 3, one descent step to (12,8,9)", 0.001, [](Outcome& o) {
        const Face f = from_remainder_coords(RemainderCoords{36, 24, 27});
        o.expect(f == Face{60, 63, 87}, "face");
        o.expect(gcd3(f.a(), f.b(), f.c()) == 3, "gcd");
        const auto trace = descend(RemainderCoords{36, 24, 27});
        o.expect(trace.steps.size() == 1 && trace.steps[0].lambda == 3, "single lambda=3 step");
        o.expect(trace.terminal == RemainderCoords{12, 8, 9}, "terminal");
    });

    criterion(3, "walkthrough: unique face2 (2,2,1), A=B=4, third face infeasible, byte-identical", 0.001,
              [](Outcome& o) {
                  const auto walk = reproduce_rigid_walkthrough();
                  o.expect(walk.face2_unique(), "face2 unique");
                  o.expect(!walk.face2_solutions.empty()
                               && walk.face2_solutions.front().coords() == RemainderCoords{2, 2, 1},
                           "face2 = (2,2,1)");
                  o.expect(walk.attempts.size() == 1 && walk.attempts[0].A == 4 && walk.attempts[0].B == 4, "A=B=4");
                  o.expect(!walk.closes(), "infeasible");
                  const auto first = report::render(report::walkthrough_document(walk), report::Format::json);
                  const auto second = report::render(report::walkthrough_document(reproduce_rigid_walkthrough()),
                                                     report::Format::json);
                  o.expect(first == second, "byte-identical");
              });

    criterion(4, "verify-lemma --max-edge 500 has zero violations; verify_no_sqrt2(10^6)", 10.0, [](Outcome& o) {
        const auto r = cli_run({"verify-lemma", "--max-edge", "500", "--sqrt2-limit", "1"});
        o.expect(r.code == 0, "exit code");
        const auto j = nlohmann::json::parse(r.out);
        o.expect(j["violations"] == 0, "violations: " + j["violations"].dump());
        o.expect(verify_no_sqrt2(1'000'000), "sqrt2 scan");
    });

    criterion(5, "enumerate_faces == euclid_oracle for max_hypotenuse 13, 100, 1000, 5000", 30.0, [](Outcome& o) {
        for (u64 b : {13, 100, 1000, 5000}) {
            const auto bound = EnumerationBound::hypotenuse(b);
            o.expect(enumerate_faces(bound, 1) == euclid_oracle(bound), "mismatch at " + std::to_string(b));
        }
    });

    criterion(6, "every r even and at least one even deficit over enumerate_faces(5000)", 30.0, [](Outcome& o) {
        const auto faces = enumerate_faces(EnumerationBound::hypotenuse(5000), 1);
        o.expect(!faces.empty(), "nonempty");
        for (const auto& f : faces) {
            if (f.r() % 2 != 0 || (f.x() % 2 != 0 && f.y() % 2 != 0)) {
                o.expect(false, "parity violated");
                break;
            }
        }
    });

    criterion(7, "glue_search(flexible) matches the naive brick oracle at 250 and 200", 60.0, [](Outcome& o) {
        for (u64 max_edge : {250, 200}) {
            std::vector<std::array<u64, 3>> found;
            for (const auto& c : glue_search(max_edge, GlueMode::flexible, 1))
                found.push_back(c.edges);
            const auto expected = oracle::brute_force_bricks(max_edge);
            o.expect(found == expected, "set mismatch at " + std::to_string(max_edge));
            if (max_edge == 250)
                o.expect(expected == std::vector<std::array<u64, 3>>{{44, 117, 240}}, "oracle set at 250");
            else
                o.expect(expected.empty(), "oracle empty at 200");
        }
    });

    criterion(8, "space diagonal: (44,117,240) no, (3,4,12) yes, (1,2,2) yes", 0.001, [](Outcome& o) {
        o.expect(!space_diagonal_is_perfect(44, 117, 240), "(44,117,240)");
        o.expect(space_diagonal_is_perfect(3, 4, 12), "(3,4,12)");
        o.expect(space_diagonal_is_perfect(1, 2, 2), "(1,2,2)");
    });

    criterion(9, "criteria 5 and 7 outputs byte-identical for 1, 2, 8 threads", 120.0, [](Outcome& o) {
        const std::vector<std::vector<std::string>> runs{
            {"enumerate", "--max-hypotenuse", "13"},   {"enumerate", "--max-hypotenuse", "100"},
            {"enumerate", "--max-hypotenuse", "1000"}, {"enumerate", "--max-hypotenuse", "5000"},
            {"glue", "--max-edge", "250"},             {"glue", "--max-edge", "200"},
        };
        for (const auto& base : runs) {
            for (const char* format : {"json", "csv"}) {
                std::string reference;
                for (const char* threads : {"1", "2", "8"}) {
                    auto args = base;
                    args.insert(args.end(), {"--threads", threads, "--format", format});
                    const auto r = cli_run(args);
                    o.expect(r.code == 0, "exit code");
                    if (reference.empty())
                        reference = r.out;
                    else
                        o.expect(r.out == reference, base.front() + " " + base.back() + " differs at " + threads);
                }
            }
        }
    });

    std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
