#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "greenseq/green_search.hpp"

namespace greenseq {

// A matrix file: principal part, optional attached rows, and the (given or
// computed) symmetrizer.
struct MatrixDocument {
    ExchangeMatrix matrix;
    std::optional<IntMatrix> attached;

    friend bool operator==(const MatrixDocument&, const MatrixDocument&) = default;
};

// Accepts either
//   JSON: {"n": 3, "b": [[...]], "attached": [[...]], "symmetrizer": [...]}
//         ("n", "attached" and "symmetrizer" optional), or
//   a whitespace grid: one row per line (or separated by '/' or ';'), '#' comments,
//   and an optional line of dashes separating attached rows from B.
// A given symmetrizer must certify B; otherwise the minimal one is computed.
// Throws ParseError (with line/column) or Error(NotSkewSymmetrizable).
MatrixDocument parse_matrix(std::string_view text);

// A bare integer matrix: JSON array of rows, or a whitespace grid.
IntMatrix parse_int_matrix(std::string_view text);

// JSON form, including the symmetrizer. parse_matrix(serialize(d)) == d.
std::string serialize(const MatrixDocument& doc);
// Grid form; omits the symmetrizer.
std::string serialize_grid(const MatrixDocument& doc);

// Right-aligned columns; a dashed rule is drawn after `rule_after` rows when
// it is positive and smaller than the row count.
std::string format_matrix(const IntMatrix& m, std::size_t rule_after = 0);

// JSON helpers shared by the CLI and the explorer service. Entries that do
// not fit in 64 bits (arbitrary-precision builds) are written as strings.
nlohmann::json int_to_json(const Int& x);
nlohmann::json matrix_to_json(const IntMatrix& m);
nlohmann::json ints_to_json(std::span<const Int> v);
nlohmann::json indices_to_json(std::span<const int> v);
nlohmann::json document_to_json(const MatrixDocument& doc);
MatrixDocument document_from_json(const nlohmann::json& j);

nlohmann::json verdict_to_json(const SequenceVerdict& v);
nlohmann::json outcome_to_json(const SearchOutcome& o);
nlohmann::json decomposition_to_json(const BlockDecomposition& d);
nlohmann::json coherence_to_json(const CoherenceVerdict& v);

}  // namespace greenseq
