#include "trirem/report.hpp"

#include <json.hpp>

#include <sstream>

namespace trirem::report {

namespace {

std::string bound_mode_name(const EnumerationBound& bound)
{
    return bound.mode() == EnumerationBound::Mode::max_hypotenuse ? "max_hypotenuse" : "max_leg";
}

nlohmann::ordered_json to_json(const Cell& cell)
{
    return std::visit([](const auto& v) { return nlohmann::ordered_json(v); }, cell);
}

std::string csv_field(const std::string& text)
{
    if (text.find_first_of(",\"\n") == std::string::npos)
        return text;
    std::string quoted = "\"";
    for (char ch : text) {
        if (ch == '"')
            quoted += '"';
        quoted += ch;
    }
    return quoted + "\"";
}

void append_face(std::vector<Cell>& row, const OrientedFace& f)
{
    row.insert(row.end(), {Cell{f.r()}, Cell{f.x()}, Cell{f.y()}});
}

} // namespace

std::string cell_text(const Cell& cell)
{
    if (const auto* n = std::get_if<u64>(&cell))
        return std::to_string(*n);
    if (const auto* b = std::get_if<bool>(&cell))
        return *b ? "true" : "false";
    return std::get<std::string>(cell);
}

std::string render(const Document& doc, Format format)
{
    if (format == Format::json) {
        nlohmann::ordered_json out;
        out["command"] = doc.command;
        for (const auto& [key, value] : doc.meta)
            out[key] = to_json(value);
        out["count"] = doc.rows.size();
        out["empty"] = doc.rows.empty();
        out["columns"] = doc.columns;
        auto rows = nlohmann::ordered_json::array();
        for (const auto& row : doc.rows) {
            nlohmann::ordered_json obj = nlohmann::ordered_json::object();
            for (std::size_t i = 0; i < doc.columns.size(); ++i)
                obj[doc.columns[i]] = to_json(row[i]);
            rows.push_back(std::move(obj));
        }
        out["rows"] = std::move(rows);
        return out.dump(2) + "\n";
    }

    std::ostringstream out;
    out << "# command: " << doc.command << '\n';
    for (const auto& [key, value] : doc.meta)
        out << "# " << key << ": " << cell_text(value) << '\n';
    for (std::size_t i = 0; i < doc.columns.size(); ++i)
        out << (i ? "," : "") << csv_field(doc.columns[i]);
    out << '\n';
    for (const auto& row : doc.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << csv_field(cell_text(row[i]));
        out << '\n';
    }
    if (doc.rows.empty())
        out << "# empty\n";
    return out.str();
}

Document faces_document(const EnumerationBound& bound, const std::vector<RemainderCoords>& faces)
{
    Document doc{"enumerate",
                 {{"bound_mode", bound_mode_name(bound)}, {"bound", bound.value()}},
                 {"r", "x", "y", "a", "b", "c", "primitive"},
                 {}};
    for (const auto& f : faces) {
        const Face face = from_remainder_coords(f);
        doc.rows.push_back({f.r(), f.x(), f.y(), face.a(), face.b(), face.c(), is_primitive(f)});
    }
    return doc;
}

Document candidates_document(u64 max_edge, GlueMode mode, const std::vector<BrickCandidate>& candidates)
{
    Document doc{"glue",
                 {{"max_edge", max_edge}, {"mode", std::string(to_string(mode))}},
                 {"A", "B", "C", "d1", "d2", "d3", "perfect", "r1", "x1", "y1", "r2", "x2", "y2", "r3", "x3",
                  "y3", "primitive1", "primitive2", "primitive3"},
                 {}};
    for (const auto& c : candidates) {
        std::vector<Cell> row{c.edges[0],     c.edges[1],     c.edges[2], c.diagonals[0],
                              c.diagonals[1], c.diagonals[2], c.perfect};
        append_face(row, c.config.face1);
        append_face(row, c.config.face2);
        append_face(row, c.config.face3);
        for (bool p : c.primitive_faces)
            row.emplace_back(p);
        doc.rows.push_back(std::move(row));
    }
    return doc;
}

Document lemma_document(u64 max_edge, GlueMode mode, const ClosureScan& shared, const ClosureScan& bare,
                        u64 sqrt2_limit, bool sqrt2_holds)
{
    Document doc{"verify-lemma",
                 {{"max_edge", max_edge},
                  {"mode", std::string(to_string(mode))},
                  {"shared_edge_pairs_examined", u64{shared.examined.size()}},
                  {"bare_pairs_examined", u64{bare.examined.size()}},
                  {"sqrt2_limit", sqrt2_limit},
                  {"sqrt2_holds", sqrt2_holds},
                  {"violations", u64{shared.violations.size() + bare.violations.size()}}},
                 {"hypothesis", "r1", "x1", "y1", "r2", "x2", "y2", "r3", "x3", "y3"},
                 {}};
    for (const auto* scan : {&shared, &bare}) {
        for (const auto& v : scan->violations) {
            std::vector<Cell> row{std::string(to_string(scan->hypothesis))};
            append_face(row, v.face1);
            append_face(row, v.face2);
            append_face(row, v.face3);
            doc.rows.push_back(std::move(row));
        }
    }
    return doc;
}

Document walkthrough_document(const RigidWalkthrough& walk)
{
    Document doc{"walkthrough",
                 {{"C", walk.face1.y_leg()},
                  {"face2_solutions", u64{walk.face2_solutions.size()}},
                  {"face2_unique", walk.face2_unique()}},
                 {"role", "r", "x", "y", "x_leg", "y_leg"},
                 {}};
    if (walk.attempts.size() == 1) {
        doc.meta.emplace_back("A", walk.attempts.front().A);
        doc.meta.emplace_back("B", walk.attempts.front().B);
    }
    doc.meta.emplace_back("third_face", std::string(walk.closes() ? "feasible" : "infeasible"));

    auto add = [&](const char* role, const OrientedFace& f) {
        doc.rows.push_back({std::string(role), f.r(), f.x(), f.y(), f.x_leg(), f.y_leg()});
    };
    add("face1", walk.face1);
    for (const auto& attempt : walk.attempts) {
        add("face2", attempt.face2);
        for (const auto& face3 : attempt.third_faces)
            add("face3", face3);
    }
    return doc;
}

Document descent_document(const RemainderCoords& input, u64 lambda, const DescentTrace<RemainderCoords>& trace)
{
    Document doc{"descend",
                 {{"input", std::to_string(input.r()) + " " + std::to_string(input.x()) + " "
                                + std::to_string(input.y())},
                  {"lambda", lambda},
                  {"steps", u64{trace.steps.size()}},
                  {"total_factor", trace.total_factor()}},
                 {"step", "lambda", "r", "x", "y", "primitive"},
                 {}};
    doc.rows.push_back({u64{0}, u64{1}, trace.initial.r(), trace.initial.x(), trace.initial.y(),
                        is_primitive(trace.initial)});
    u64 step = 0;
    for (const auto& s : trace.steps)
        doc.rows.push_back({++step, s.lambda, s.result.r(), s.result.x(), s.result.y(), is_primitive(s.result)});
    return doc;
}

Document census_document(const EnumerationBound& bound, const ParityCensus& census)
{
    return {"census",
            {{"bound_mode", bound_mode_name(bound)}, {"bound", bound.value()}},
            {"total", "r_even", "x_even", "y_even", "both_deficits_even"},
            {{census.total, census.r_even, census.x_even, census.y_even, census.both_deficits_even}}};
}

Document perfect_document(u64 A, u64 B, u64 C)
{
    const u128 sum = checked_add(checked_add(square(A), square(B)), square(C));
    const bool perfect = space_diagonal_is_perfect(A, B, C);
    return {"check-perfect",
            {},
            {"A", "B", "C", "sum_of_squares", "perfect", "space_diagonal"},
            {{A, B, C, to_string(sum), perfect, perfect ? std::to_string(isqrt(sum)) : std::string("irrational")}}};
}

} // namespace trirem::report
