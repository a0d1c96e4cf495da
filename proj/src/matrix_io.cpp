#include "greenseq/matrix_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <iomanip>
#include <limits>
#include <sstream>

namespace greenseq {

using nlohmann::json;

namespace {

struct Position {
    std::size_t line = 1;
    std::size_t column = 1;
};

Position position_of(std::string_view text, std::size_t offset) {
    Position p;
    offset = std::min(offset, text.size());
    for (std::size_t i = 0; i < offset; ++i) {
        if (text[i] == '\n') {
            ++p.line;
            p.column = 1;
        } else {
            ++p.column;
        }
    }
    return p;
}

// Best-effort location of a JSON key for semantic errors.
Position locate_key(std::string_view text, std::string_view key) {
    const std::string quoted = "\"" + std::string(key) + "\"";
    const auto at = text.find(quoted);
    return at == std::string_view::npos ? Position{} : position_of(text, at);
}

[[noreturn]] void fail(const std::string& message, Position p) { throw ParseError(message, p.line, p.column); }

std::optional<Int> parse_integer_token(std::string_view token) {
    if (token.empty()) return std::nullopt;
    std::size_t digits_from = (token[0] == '-' || token[0] == '+') ? 1 : 0;
    if (digits_from == token.size()) return std::nullopt;
    for (std::size_t i = digits_from; i < token.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(token[i]))) return std::nullopt;
#ifdef GREENSEQ_BIGINT
    Int value(std::string(token.substr(digits_from)));
    return token[0] == '-' ? Int(-value) : value;
#else
    if (token[0] == '+') token.remove_prefix(1);
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
    return value;
#endif
}

Int int_from_json(const json& j, const std::string& where, Position pos) {
    if (j.is_number_integer() && !j.is_number_unsigned()) return Int(j.get<std::int64_t>());
    if (j.is_number_unsigned()) {
        const auto u = j.get<std::uint64_t>();
#ifdef GREENSEQ_BIGINT
        return Int(u);
#else
        if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
            fail(where + ": " + std::to_string(u) + " does not fit in 64 bits", pos);
        return static_cast<Int>(u);
#endif
    }
    if (j.is_string()) {
        if (auto v = parse_integer_token(j.get<std::string>())) return *v;
    }
    fail(where + ": expected an integer, got " + j.dump(), pos);
}

IntMatrix matrix_from_json(const json& j, const std::string& name, Position pos, std::optional<std::size_t> cols) {
    if (!j.is_array()) fail("\"" + name + "\" must be an array of rows", pos);
    std::vector<std::vector<Int>> rows;
    for (std::size_t r = 0; r < j.size(); ++r) {
        const json& row = j[r];
        if (!row.is_array()) fail("\"" + name + "\" row " + std::to_string(r + 1) + " must be an array", pos);
        std::vector<Int> values;
        for (std::size_t c = 0; c < row.size(); ++c)
            values.push_back(int_from_json(row[c], name + "[" + std::to_string(r + 1) + "][" + std::to_string(c + 1) + "]", pos));
        const std::size_t expected = cols ? *cols : (rows.empty() ? values.size() : rows.front().size());
        if (values.size() != expected) {
            fail("\"" + name + "\" row " + std::to_string(r + 1) + " has " + std::to_string(values.size()) +
                     " entries, expected " + std::to_string(expected),
                 pos);
        }
        rows.push_back(std::move(values));
    }
    IntMatrix m = IntMatrix::from_rows(rows);
    if (rows.empty() && cols) m = IntMatrix(0, *cols);
    return m;
}

MatrixDocument document_from_parsed(const json& j, std::string_view text) {
    if (!j.is_object()) fail("expected a JSON object with a \"b\" field", {});
    if (!j.contains("b")) fail("missing required field \"b\"", {});
    const Position bpos = locate_key(text, "b");
    IntMatrix b = matrix_from_json(j.at("b"), "b", bpos, std::nullopt);
    if (b.rows() > 0 && b.rows() != b.cols()) {
        fail("\"b\" must be square, got " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()), bpos);
    }
    if (j.contains("n")) {
        const Position npos = locate_key(text, "n");
        const json& n = j.at("n");
        if (!n.is_number_integer() || n.get<std::int64_t>() < 0 ||
            static_cast<std::size_t>(n.get<std::int64_t>()) != b.rows()) {
            fail("\"n\" = " + n.dump() + " does not match the " + std::to_string(b.rows()) + " rows of \"b\"", npos);
        }
    }
    std::optional<IntMatrix> attached;
    if (j.contains("attached") && !j.at("attached").is_null()) {
        attached = matrix_from_json(j.at("attached"), "attached", locate_key(text, "attached"), b.rows());
    }
    if (j.contains("symmetrizer") && !j.at("symmetrizer").is_null()) {
        const Position spos = locate_key(text, "symmetrizer");
        const json& s = j.at("symmetrizer");
        if (!s.is_array() || s.size() != b.rows()) {
            fail("\"symmetrizer\" must be an array of " + std::to_string(b.rows()) + " positive integers", spos);
        }
        std::vector<Int> values;
        for (std::size_t i = 0; i < s.size(); ++i) {
            values.push_back(int_from_json(s[i], "symmetrizer[" + std::to_string(i + 1) + "]", spos));
            if (values.back() < 1) fail("symmetrizer entries must be positive", spos);
        }
        return {ExchangeMatrix(std::move(b), std::move(values)), std::move(attached)};
    }
    return {find_symmetrizer(b), std::move(attached)};
}

struct GridToken {
    Int value;
    Position pos;
};

struct GridRow {
    std::vector<GridToken> tokens;
    Position pos;
    bool separator = false;
};

std::vector<GridRow> read_grid(std::string_view text) {
    std::vector<GridRow> rows;
    GridRow current;
    Position pos;
    auto flush = [&] {
        if (!current.tokens.empty() || current.separator) rows.push_back(std::move(current));
        current = GridRow{};
    };
    std::size_t i = 0;
    while (i < text.size()) {
        const char ch = text[i];
        if (ch == '\n') {
            flush();
            ++i;
            ++pos.line;
            pos.column = 1;
            continue;
        }
        if (ch == '#') {
            while (i < text.size() && text[i] != '\n') {
                ++i;
                ++pos.column;
            }
            continue;
        }
        if (ch == '/' || ch == ';') {
            flush();
            ++i;
            ++pos.column;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
            ++i;
            ++pos.column;
            continue;
        }
        std::size_t end = i;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])) && text[end] != ',' &&
               text[end] != '/' && text[end] != ';' && text[end] != '#')
            ++end;
        const std::string_view token = text.substr(i, end - i);
        const Position token_pos = pos;
        if (current.tokens.empty()) current.pos = token_pos;
        if (token.size() >= 2 && token.find_first_not_of('-') == std::string_view::npos) {
            if (!current.tokens.empty()) fail("a separator line of dashes must stand on its own", token_pos);
            current.separator = true;
            current.pos = token_pos;
        } else if (auto value = parse_integer_token(token)) {
            if (current.separator) fail("a separator line of dashes must stand on its own", token_pos);
            current.tokens.push_back({*value, token_pos});
        } else {
            fail("expected an integer, got \"" + std::string(token) + "\"", token_pos);
        }
        pos.column += end - i;
        i = end;
    }
    flush();
    return rows;
}

IntMatrix grid_matrix(const std::vector<GridRow>& rows, std::size_t first, std::size_t last, std::size_t cols) {
    IntMatrix m(last - first, cols);
    for (std::size_t r = first; r < last; ++r) {
        if (rows[r].tokens.size() != cols) {
            fail("row has " + std::to_string(rows[r].tokens.size()) + " entries, expected " + std::to_string(cols),
                 rows[r].pos);
        }
        for (std::size_t c = 0; c < cols; ++c) m(r - first, c) = rows[r].tokens[c].value;
    }
    return m;
}

bool looks_like_json(std::string_view text) {
    const auto at = text.find_first_not_of(" \t\r\n");
    return at != std::string_view::npos && (text[at] == '{' || text[at] == '[');
}

json parse_json_text(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const std::size_t offset = e.byte == 0 ? 0 : e.byte - 1;
        std::string what = e.what();
        // Drop nlohmann's "[json.exception.parse_error.101] " prefix.
        if (const auto cut = what.find("] "); cut != std::string::npos) what = what.substr(cut + 2);
        fail("invalid JSON: " + what, position_of(text, offset));
    }
}

}  // namespace

MatrixDocument parse_matrix(std::string_view text) {
    if (looks_like_json(text)) return document_from_parsed(parse_json_text(text), text);

    const auto rows = read_grid(text);
    if (rows.empty()) return {find_symmetrizer(IntMatrix(0, 0)), std::nullopt};
    if (rows.front().separator) fail("the principal part must come before the separator", rows.front().pos);
    const std::size_t n = rows.front().tokens.size();
    const auto sep = std::find_if(rows.begin(), rows.end(), [](const GridRow& r) { return r.separator; });
    const std::size_t principal_rows = sep == rows.end() ? std::min(rows.size(), n) : static_cast<std::size_t>(sep - rows.begin());
    if (principal_rows != n) {
        fail("principal part must be square: " + std::to_string(principal_rows) + " rows of " + std::to_string(n) +
                 " entries",
             rows.front().pos);
    }
    if (sep != rows.end() && std::find_if(sep + 1, rows.end(), [](const GridRow& r) { return r.separator; }) != rows.end()) {
        fail("at most one separator line is allowed", std::find_if(sep + 1, rows.end(), [](const GridRow& r) {
                                                           return r.separator;
                                                       })->pos);
    }
    IntMatrix b = grid_matrix(rows, 0, n, n);
    const std::size_t attached_from = sep == rows.end() ? n : n + 1;
    std::optional<IntMatrix> attached;
    if (attached_from < rows.size()) attached = grid_matrix(rows, attached_from, rows.size(), n);
    return {find_symmetrizer(b), std::move(attached)};
}

IntMatrix parse_int_matrix(std::string_view text) {
    if (looks_like_json(text)) {
        const json j = parse_json_text(text);
        if (j.is_object()) {
            for (const char* key : {"attached", "b"})
                if (j.contains(key)) return matrix_from_json(j.at(key), key, locate_key(text, key), std::nullopt);
            fail("expected an array of rows or an object with \"attached\" or \"b\"", {});
        }
        return matrix_from_json(j, "matrix", {}, std::nullopt);
    }
    const auto rows = read_grid(text);
    for (const auto& r : rows)
        if (r.separator) fail("separator lines are not allowed in a plain matrix", r.pos);
    if (rows.empty()) return IntMatrix(0, 0);
    return grid_matrix(rows, 0, rows.size(), rows.front().tokens.size());
}

json int_to_json(const Int& x) {
    if (fits_int64(x)) return json(to_int64(x));
    return json(to_string(x));
}

json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(int_to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json ints_to_json(std::span<const Int> v) {
    json out = json::array();
    for (const Int& x : v) out.push_back(int_to_json(x));
    return out;
}

json indices_to_json(std::span<const int> v) { return json(std::vector<int>(v.begin(), v.end())); }

json document_to_json(const MatrixDocument& doc) {
    json j;
    j["n"] = doc.matrix.size();
    j["b"] = matrix_to_json(doc.matrix.matrix());
    if (doc.attached) j["attached"] = matrix_to_json(*doc.attached);
    j["symmetrizer"] = ints_to_json(doc.matrix.symmetrizer());
    return j;
}

MatrixDocument document_from_json(const json& j) { return document_from_parsed(j, {}); }

std::string serialize(const MatrixDocument& doc) {
    auto rows_text = [](const IntMatrix& m) {
        std::string out = "[";
        for (std::size_t r = 0; r < m.rows(); ++r) {
            out += r ? ",\n    " : "\n    ";
            json row = json::array();
            for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(int_to_json(m(r, c)));
            out += row.dump();
        }
        out += m.rows() ? "\n  ]" : "]";
        return out;
    };
    std::string out = "{\n  \"n\": " + std::to_string(doc.matrix.size()) + ",\n  \"b\": " + rows_text(doc.matrix.matrix());
    if (doc.attached) out += ",\n  \"attached\": " + rows_text(*doc.attached);
    out += ",\n  \"symmetrizer\": " + ints_to_json(doc.matrix.symmetrizer()).dump() + "\n}\n";
    return out;
}

std::string serialize_grid(const MatrixDocument& doc) {
    const std::size_t n = doc.matrix.size();
    if (!doc.attached || doc.attached->rows() == 0) return format_matrix(doc.matrix.matrix());
    return format_matrix(vstack(doc.matrix.matrix(), *doc.attached), n);
}

std::string format_matrix(const IntMatrix& m, std::size_t rule_after) {
    std::size_t width = 1;
    for (const Int& x : m.entries()) width = std::max(width, to_string(x).size());
    std::ostringstream out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r == rule_after && rule_after > 0) {
            out << std::string(m.cols() * (width + 1), '-') << '\n';
        }
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out << (c ? " " : "") << std::setw(static_cast<int>(width)) << to_string(m(r, c));
        }
        out << '\n';
    }
    return out.str();
}

json verdict_to_json(const SequenceVerdict& v) {
    json j{{"isGreenSequence", v.is_green_sequence},
           {"isGreenToRed", v.is_green_to_red},
           {"isMaximalGreen", v.is_maximal_green},
           {"firstViolation", nullptr}};
    if (v.first_violation) {
        j["firstViolation"] = {{"step", v.first_violation->step},
                               {"index", v.first_violation->index},
                               {"sign", std::string(to_string(v.first_violation->sign))}};
    }
    return j;
}

json outcome_to_json(const SearchOutcome& o) {
    json j{{"status", std::string(to_string(o.status))},
           {"sequence", nullptr},
           {"depth", o.depth},
           {"statesVisited", o.states_visited},
           {"elapsedMs", std::chrono::duration<double, std::milli>(o.elapsed).count()},
           {"budgetExceeded", o.status == SearchStatus::OutOfBudget}};
    if (o.sequence) j["sequence"] = indices_to_json(o.sequence->indices());
    return j;
}

json decomposition_to_json(const BlockDecomposition& d) {
    json blocks = json::array();
    for (const auto& b : d.blocks) blocks.push_back(indices_to_json(b));
    return {{"blocks", blocks}, {"permutation", indices_to_json(d.permutation)}};
}

json coherence_to_json(const CoherenceVerdict& v) {
    static constexpr const char* kStatus[] = {"verifiedToDepth", "counterexample", "outOfBudget"};
    static constexpr const char* kCertificate[] = {"none", "nonnegative", "rankAtMostOne"};
    json j{{"status", kStatus[static_cast<int>(v.status)]},
           {"depth", v.depth},
           {"certificate", kCertificate[static_cast<int>(v.certificate)]},
           {"statesVisited", v.states_visited},
           {"counterexample", nullptr}};
    if (v.counterexample) {
        j["counterexample"] = {{"sequence", indices_to_json(v.counterexample->sequence.indices())},
                               {"row", v.counterexample->row},
                               {"column", v.counterexample->column}};
    }
    return j;
}

}  // namespace greenseq
