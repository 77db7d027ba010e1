// report.hpp
// Flat tables rendered as CSV or JSON. Numeric cells are kept as text so
// both renderings carry the same digits.

#pragma once

#include "sigmakit/congruence.hpp"
#include "sigmakit/densities.hpp"
#include "sigmakit/near_perfect.hpp"
#include "sigmakit/within.hpp"

#include <span>
#include <string>
#include <vector>

namespace sigmakit {

enum class CellKind { Number, Text };

struct Column {
    std::string name;
    CellKind kind = CellKind::Number;
};

struct Table {
    std::vector<Column> columns;
    std::vector<std::vector<std::string>> rows;

    /// Throws std::invalid_argument when the row width is wrong.
    void add_row(std::vector<std::string> row);
};

/// Header line plus one line per row, "\n"-terminated. Text cells holding a
/// comma, quote or newline are quoted.
[[nodiscard]] std::string to_csv(const Table& table);

/// Array of objects, one per row, keys in column order. Number cells are
/// emitted verbatim (empty ones as null), text cells as JSON strings.
[[nodiscard]] std::string to_json(const Table& table);

/// Round-half-even of the exact binary value of v to `digits` decimals.
[[nodiscard]] std::string format_fixed(double v, int digits);

[[nodiscard]] Table within_table(std::span<const WithinCensus> rows);
[[nodiscard]] Table congruence_table(std::span<const CongruenceClassification> rows);
[[nodiscard]] Table near_table(std::span<const NearPerfectProfile> rows);
[[nodiscard]] Table distribution_table(const EmpiricalDistribution& dist, int digits = 6);

}  // namespace sigmakit
