#include "trirem/cli.hpp"

#include "trirem/manifest.hpp"
#include "trirem/report.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>

namespace trirem::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

u64 parse_u64(std::string_view flag, std::string_view text)
{
    u64 value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec == std::errc::result_out_of_range)
        throw BoundExceeded(std::string(text));
    if (ec != std::errc{} || ptr != end || text.empty())
        throw UsageError("invalid value for " + std::string(flag) + ": '" + std::string(text) + "'");
    return value;
}

std::vector<u64> parse_list(std::string_view flag, std::string_view text, std::size_t expected)
{
    std::vector<u64> values;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        values.push_back(parse_u64(flag, text.substr(start, comma - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    if (values.size() != expected)
        throw UsageError(std::string(flag) + " expects " + std::to_string(expected)
                         + " comma-separated values, got '" + std::string(text) + "'");
    return values;
}

GlueMode parse_mode(const std::string& text)
{
    if (text == "rigid")
        return GlueMode::rigid;
    if (text == "flexible")
        return GlueMode::flexible;
    throw UsageError("invalid value for --mode: '" + text + "'");
}

struct BoundFlags {
    std::string max_hypotenuse;
    std::string max_leg;
    CLI::Option* hyp = nullptr;
    CLI::Option* leg = nullptr;

    void attach(CLI::App* sub)
    {
        hyp = sub->add_option("--max-hypotenuse", max_hypotenuse, "Bound on the hypotenuse c");
        leg = sub->add_option("--max-leg", max_leg, "Bound on both legs");
        hyp->excludes(leg);
        leg->excludes(hyp);
    }

    EnumerationBound resolve() const
    {
        if (hyp->count() > 0)
            return EnumerationBound::hypotenuse(parse_u64("--max-hypotenuse", max_hypotenuse));
        if (leg->count() > 0)
            return EnumerationBound::leg(parse_u64("--max-leg", max_leg));
        throw UsageError("one of --max-hypotenuse or --max-leg is required");
    }
};

std::map<std::string, std::string> given_parameters(const CLI::App& app, const CLI::App& sub)
{
    std::map<std::string, std::string> params;
    for (const CLI::App* scope : {&app, &sub}) {
        for (const CLI::Option* opt : scope->get_options()) {
            if (opt->count() == 0 || opt->get_name() == "--help")
                continue;
            const auto& results = opt->results();
            std::string joined = results.empty() ? "true" : results.front();
            for (std::size_t i = 1; i < results.size(); ++i)
                joined += "," + results[i];
            std::string key = opt->get_name();
            key.erase(0, key.find_first_not_of('-'));
            params[key] = joined;
        }
    }
    return params;
}

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Triangular remainder search and verification toolkit"};
    app.set_version_flag("--version", std::string(tool_version));
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    std::string output;
    std::string threads_text;
    std::string manifest_path;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--output", output, "Write results to this path instead of stdout");
    app.add_option("--threads", threads_text, "Worker count (default: hardware concurrency)");
    app.add_option("--manifest", manifest_path, "Write a run manifest to this path");

    BoundFlags enumerate_bound;
    auto* enumerate = app.add_subcommand("enumerate", "List faces within a bound");
    enumerate_bound.attach(enumerate);

    BoundFlags census_bound;
    auto* census = app.add_subcommand("census", "Parity tallies over enumerated faces");
    census_bound.attach(census);

    std::string max_edge;
    std::string mode = "flexible";
    auto* glue = app.add_subcommand("glue", "Search glued face configurations (Euler bricks)");
    glue->add_option("--max-edge", max_edge, "Largest cuboid edge")->required();
    glue->add_option("--mode", mode, "rigid or flexible");

    std::string sqrt2_limit = "1000000";
    auto* lemma = app.add_subcommand("verify-lemma", "Scan symmetric closures for third faces");
    lemma->add_option("--max-edge", max_edge, "Largest cuboid edge")->required();
    lemma->add_option("--mode", mode, "rigid or flexible");
    lemma->add_option("--sqrt2-limit", sqrt2_limit, "Exhaustive bound for r^2 = 2x^2");

    bool swapped = false;
    auto* walkthrough = app.add_subcommand("walkthrough", "Rigid gluing starting from the (3,4,5) face");
    walkthrough->add_flag("--swapped", swapped, "Start from the leg-swapped orientation (2,1,2)");

    std::string coords_text;
    std::string lambda_text = "1";
    auto* descend_cmd = app.add_subcommand("descend", "gcd descent of remainder coordinates");
    descend_cmd->add_option("--coords", coords_text, "r,x,y")->required();
    descend_cmd->add_option("--lambda", lambda_text, "Scale the coordinates first");

    std::string edges_text;
    auto* perfect = app.add_subcommand("check-perfect", "Test the space diagonal for integrality");
    perfect->add_option("--edges", edges_text, "A,B,C")->required();

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e, out, err);
        err << "usage error: " << e.what() << '\n';
        return usage_error;
    }

    unsigned threads = default_thread_count();
    if (!threads_text.empty()) {
        const u64 t = parse_u64("--threads", threads_text);
        if (t == 0 || t > 4096)
            throw UsageError("invalid value for --threads: '" + threads_text + "'");
        threads = static_cast<unsigned>(t);
    }
    const auto fmt = format == "csv" ? report::Format::csv : report::Format::json;
    const std::string started = utc_timestamp();

    CLI::App* chosen = app.get_subcommands().front();
    report::Document doc;
    if (chosen == enumerate) {
        const auto bound = enumerate_bound.resolve();
        doc = report::faces_document(bound, enumerate_faces(bound, threads));
    } else if (chosen == census) {
        const auto bound = census_bound.resolve();
        doc = report::census_document(bound, parity_census(bound, threads));
    } else if (chosen == glue) {
        const u64 edge = parse_u64("--max-edge", max_edge);
        const GlueMode m = parse_mode(mode);
        if (edge < 3)
            throw UsageError("--max-edge must be at least 3");
        doc = report::candidates_document(edge, m, glue_search(edge, m, threads));
    } else if (chosen == lemma) {
        const u64 edge = parse_u64("--max-edge", max_edge);
        const GlueMode m = parse_mode(mode);
        const u64 limit = parse_u64("--sqrt2-limit", sqrt2_limit);
        if (edge < 3)
            throw UsageError("--max-edge must be at least 3");
        doc = report::lemma_document(edge, m, scan_symmetric_closures(edge, ClosureHypothesis::shared_edge, m, threads),
                                     scan_symmetric_closures(edge, ClosureHypothesis::bare, m, threads), limit,
                                     verify_no_sqrt2(limit));
    } else if (chosen == walkthrough) {
        const OrientedFace start{RemainderCoords{2, 2, 1}, swapped};
        doc = report::walkthrough_document(reproduce_rigid_walkthrough(start));
    } else if (chosen == descend_cmd) {
        const auto v = parse_list("--coords", coords_text, 3);
        const u64 lambda = parse_u64("--lambda", lambda_text);
        const RemainderCoords input{v[0], v[1], v[2]};
        doc = report::descent_document(input, lambda, descend(scale(input, lambda)));
    } else {
        const auto e = parse_list("--edges", edges_text, 3);
        if (e[0] == 0 || e[1] == 0 || e[2] == 0)
            throw UsageError("--edges must be positive");
        doc = report::perfect_document(e[0], e[1], e[2]);
    }

    const std::string payload = report::render(doc, fmt);
    if (output.empty()) {
        out << payload;
    } else {
        std::ofstream file(output, std::ios::binary);
        if (!(file << payload))
            throw std::runtime_error("cannot write " + output);
    }

    if (!manifest_path.empty()) {
        const RunManifest manifest{chosen->get_name(),       given_parameters(app, *chosen),
                                   std::string(tool_version), started,
                                   utc_timestamp(),           sha256_hex(payload)};
        std::ofstream file(manifest_path, std::ios::binary);
        if (!(file << manifest.to_json()))
            throw std::runtime_error("cannot write " + manifest_path);
    }
    return ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    try {
        return execute(args, out, err);
    } catch (const BoundExceeded& e) {
        err << "bound exceeded: " << e.value() << '\n';
        return bound_exceeded;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return failure;
    }
}

} // namespace trirem::cli
