#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "gdrazin/drazin.hpp"
#include "gdrazin/instance_gen.hpp"
#include "gdrazin/report.hpp"

namespace gdrazin::io {

/// Insertion-ordered so that every document prints its fields in a fixed,
/// readable order.
using Json = nlohmann::ordered_json;

/// Parses JSON text. Syntax errors become ParseError carrying the 1-based
/// line and column of the offending character.
Json parse_document(std::string_view text);
/// Reads and parses a file; an unreadable file is a ParseError at 0:0.
Json read_document(const std::filesystem::path& path);

/// {"rows": n, "cols": m, "entries": [["1/2", ...], ...]} with canonical
/// scalar strings.
Json to_json(const Matrix& x);
/// Structural errors (missing field, wrong row length, bad scalar) are
/// ParseErrors whose message names the JSON path, e.g. "B.entries[1][0]".
Matrix matrix_from_json(const Json& doc, const std::string& where = "matrix");

Json to_json(const BlockSpec& s);                              // {"A","B","C","D"}
BlockSpec block_from_json(const Json& doc);                    // validates shapes
Json to_json(const SchurSpec& s);                              // {"A","B","C"} plus "D" if supplied
SchurSpec schur_from_json(const Json& doc);                    // "D" optional
Json to_json(const MatrixPair& p);                             // {"a","b"}
MatrixPair pair_from_json(const Json& doc);

Json to_json(const InstanceBody& body);
/// The body layout expected by the case family.
InstanceBody body_from_json(const CaseRef& c, const Json& doc);

/// {"case": id, "seed": k, "instance": {...}}
Json to_json(const Instance& inst);
Instance instance_from_json(const Json& doc);

/// {"inverse", "index", "idempotent"}
Json to_json(const DrazinTriple& t);
/// {"case", "holds", "conditions": [{"name", "holds", "residual"?}]}; the
/// residual is included only for failing conditions.
Json to_json(const ConditionReport& r);

/// Pretty-prints with two-space indentation down to `depth` levels and
/// prints anything deeper on a single line, so that e.g. each condition of
/// a report or each row of a matrix occupies exactly one line. Ends with a
/// newline.
std::string dump(const Json& doc, int depth = 2);

}  // namespace gdrazin::io
