#include "gdrazin/json_io.hpp"

#include <fstream>
#include <sstream>

#include "gdrazin/errors.hpp"

namespace gdrazin::io {

namespace {

// nlohmann reports the byte count consumed when the error was detected;
// the offending character is the last one read.
std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1, column = 1;
    const std::size_t end = std::min(byte == 0 ? 0 : byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError(where + ": " + what);
}

const Json& field(const Json& doc, const char* key, const std::string& where) {
    if (!doc.is_object()) fail(where, "expected an object");
    auto it = doc.find(key);
    if (it == doc.end()) fail(where, std::string("missing field \"") + key + "\"");
    return *it;
}

std::size_t dimension(const Json& doc, const char* key, const std::string& where) {
    const Json& v = field(doc, key, where);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        fail(where + "." + key, "expected a nonnegative integer");
    return v.get<std::size_t>();
}

void dump_into(std::string& out, const Json& doc, int depth, int indent) {
    const bool container = doc.is_object() || doc.is_array();
    if (depth <= 0 || !container || doc.empty()) {
        out += doc.dump();
        return;
    }
    const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
    out += doc.is_object() ? "{\n" : "[\n";
    bool first = true;
    if (doc.is_object()) {
        for (const auto& [key, value] : doc.items()) {
            if (!first) out += ",\n";
            first = false;
            out += pad + Json(key).dump() + ": ";
            dump_into(out, value, depth - 1, indent + 2);
        }
    } else {
        for (const auto& value : doc) {
            if (!first) out += ",\n";
            first = false;
            out += pad;
            dump_into(out, value, depth - 1, indent + 2);
        }
    }
    out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + (doc.is_object() ? "}" : "]");
}

}  // namespace

Json parse_document(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        const auto [line, column] = line_column(text, e.byte);
        std::string message = e.what();
        // Drop nlohmann's "[json.exception.parse_error.101] parse error at
        // line L, column C: " prefix; the location is reported separately.
        if (auto pos = message.find(": "); pos != std::string::npos) message = message.substr(pos + 2);
        throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message,
                         line, column);
    }
}

Json read_document(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path.string() + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_document(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what(), e.line(), e.column());
    }
}

Json to_json(const Matrix& x) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < x.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < x.cols(); ++c) row.push_back(x(r, c).to_string());
        rows.push_back(std::move(row));
    }
    Json doc;
    doc["rows"] = x.rows();
    doc["cols"] = x.cols();
    doc["entries"] = std::move(rows);
    return doc;
}

Matrix matrix_from_json(const Json& doc, const std::string& where) {
    const std::size_t rows = dimension(doc, "rows", where);
    const std::size_t cols = dimension(doc, "cols", where);
    const Json& entries = field(doc, "entries", where);
    if (!entries.is_array() || entries.size() != rows)
        fail(where + ".entries", "expected " + std::to_string(rows) + " rows");
    Matrix x(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const std::string row_path = where + ".entries[" + std::to_string(r) + "]";
        const Json& row = entries[r];
        if (!row.is_array() || row.size() != cols) fail(row_path, "expected " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) {
            const std::string path = row_path + "[" + std::to_string(c) + "]";
            const Json& v = row[c];
            if (!v.is_string()) fail(path, "expected a scalar string such as \"-1/2\" or \"1+2i\"");
            try {
                x(r, c) = GaussianRational::parse(v.get<std::string>());
            } catch (const ParseError& e) {
                fail(path, e.what());
            } catch (const SingularMatrixError& e) {
                fail(path, e.what());
            }
        }
    }
    return x;
}

Json to_json(const BlockSpec& s) {
    Json doc;
    doc["A"] = to_json(s.A);
    doc["B"] = to_json(s.B);
    doc["C"] = to_json(s.C);
    doc["D"] = to_json(s.D);
    return doc;
}

BlockSpec block_from_json(const Json& doc) {
    BlockSpec s{matrix_from_json(field(doc, "A", "blocks"), "A"), matrix_from_json(field(doc, "B", "blocks"), "B"),
                matrix_from_json(field(doc, "C", "blocks"), "C"), matrix_from_json(field(doc, "D", "blocks"), "D")};
    s.validate();
    return s;
}

Json to_json(const SchurSpec& s) {
    Json doc;
    doc["A"] = to_json(s.A);
    doc["B"] = to_json(s.B);
    doc["C"] = to_json(s.C);
    if (s.D) doc["D"] = to_json(*s.D);
    return doc;
}

SchurSpec schur_from_json(const Json& doc) {
    SchurSpec s{matrix_from_json(field(doc, "A", "blocks"), "A"), matrix_from_json(field(doc, "B", "blocks"), "B"),
                matrix_from_json(field(doc, "C", "blocks"), "C"), std::nullopt};
    if (doc.contains("D")) s.D = matrix_from_json(doc["D"], "D");
    s.validate();
    return s;
}

Json to_json(const MatrixPair& p) {
    Json doc;
    doc["a"] = to_json(p.a);
    doc["b"] = to_json(p.b);
    return doc;
}

MatrixPair pair_from_json(const Json& doc) {
    MatrixPair p{matrix_from_json(field(doc, "a", "pair"), "a"), matrix_from_json(field(doc, "b", "pair"), "b")};
    if (!p.a.is_square() || p.a.rows() != p.b.rows() || p.a.cols() != p.b.cols())
        throw DimensionError("pair: a and b must be square matrices of the same size");
    return p;
}

Json to_json(const InstanceBody& body) {
    return std::visit([](const auto& b) { return to_json(b); }, body);
}

InstanceBody body_from_json(const CaseRef& c, const Json& doc) {
    switch (c.family) {
        case CaseFamily::Additive: return pair_from_json(doc);
        case CaseFamily::Block: return block_from_json(doc);
        case CaseFamily::Perturbation: return schur_from_json(doc);
    }
    throw ParseError("unknown case family");
}

Json to_json(const Instance& inst) {
    Json doc;
    doc["case"] = inst.case_id;
    doc["seed"] = inst.seed;
    doc["instance"] = to_json(inst.body);
    return doc;
}

Instance instance_from_json(const Json& doc) {
    const Json& id = field(doc, "case", "bundle");
    if (!id.is_string()) fail("bundle.case", "expected a case id string");
    CaseRef c;
    if (!parse_case(id.get<std::string>(), c)) fail("bundle.case", "unknown case id \"" + id.get<std::string>() + "\"");
    const Json& seed = field(doc, "seed", "bundle");
    if (!seed.is_number_unsigned()) fail("bundle.seed", "expected a nonnegative integer");
    return {std::string(c.id()), seed.get<std::uint64_t>(), body_from_json(c, field(doc, "instance", "bundle"))};
}

Json to_json(const DrazinTriple& t) {
    Json doc;
    doc["inverse"] = to_json(t.inverse);
    doc["index"] = t.index;
    doc["idempotent"] = to_json(t.idempotent);
    return doc;
}

Json to_json(const ConditionReport& r) {
    Json conditions = Json::array();
    for (const Condition& c : r.conditions) {
        Json row;
        row["name"] = c.name;
        row["holds"] = c.holds;
        if (!c.holds) row["residual"] = to_json(c.residual);
        conditions.push_back(std::move(row));
    }
    Json doc;
    doc["case"] = r.case_id;
    doc["holds"] = r.all_hold();
    doc["conditions"] = std::move(conditions);
    return doc;
}

std::string dump(const Json& doc, int depth) {
    std::string out;
    dump_into(out, doc, depth, 0);
    out += '\n';
    return out;
}

}  // namespace gdrazin::io
