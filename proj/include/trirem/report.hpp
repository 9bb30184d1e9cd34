#pragma once

// Tabular result documents shared by every CLI command. A document is an
// ordered set of scalar metadata plus a table; it renders to JSON (metadata
// as top-level keys, rows as objects) or CSV ("# key: value" lines, header,
// rows, and a "# empty" marker when there are no rows). Both renderings carry
// the same field names and values.

#include "trirem/analysis.hpp"
#include "trirem/enumeration.hpp"
#include "trirem/gluing.hpp"

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace trirem::report {

using Cell = std::variant<u64, bool, std::string>;

struct Document {
    std::string command;
    std::vector<std::pair<std::string, Cell>> meta;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

enum class Format { csv, json };

std::string render(const Document& doc, Format format);
std::string cell_text(const Cell& cell);

Document faces_document(const EnumerationBound& bound, const std::vector<RemainderCoords>& faces);
Document candidates_document(u64 max_edge, GlueMode mode, const std::vector<BrickCandidate>& candidates);
Document lemma_document(u64 max_edge, GlueMode mode, const ClosureScan& shared, const ClosureScan& bare,
                        u64 sqrt2_limit, bool sqrt2_holds);
Document walkthrough_document(const RigidWalkthrough& walk);
Document descent_document(const RemainderCoords& input, u64 lambda, const DescentTrace<RemainderCoords>& trace);
Document census_document(const EnumerationBound& bound, const ParityCensus& census);
Document perfect_document(u64 A, u64 B, u64 C);

} // namespace trirem::report
