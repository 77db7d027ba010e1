#include "sigmakit/report.hpp"

#include "sigmakit/exact_rational.hpp"

#include <gmpxx.h>

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace sigmakit {

namespace {

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string json_string(const std::string& s) {
    std::string out = "\"";
    for (unsigned char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (c < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += static_cast<char>(c);
                }
        }
    }
    return out + "\"";
}

}  // namespace

void Table::add_row(std::vector<std::string> row) {
    if (row.size() != columns.size()) throw std::invalid_argument("Table::add_row: wrong number of cells");
    rows.push_back(std::move(row));
}

std::string to_csv(const Table& table) {
    std::string out;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c > 0) out += ',';
        out += csv_cell(table.columns[c].name);
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) out += ',';
            out += csv_cell(row[c]);
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const Table& table) {
    std::string out = "[";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        out += r == 0 ? "\n  {" : ",\n  {";
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            if (c > 0) out += ", ";
            out += json_string(table.columns[c].name) + ": ";
            const auto& cell = table.rows[r][c];
            if (table.columns[c].kind == CellKind::Text) {
                out += json_string(cell);
            } else {
                out += cell.empty() ? "null" : cell;
            }
        }
        out += '}';
    }
    out += table.rows.empty() ? "]\n" : "\n]\n";
    return out;
}

std::string format_fixed(double v, int digits) {
    if (!std::isfinite(v)) throw std::invalid_argument("format_fixed: value is not finite");
    return ExactRational(mpq_class(v)).to_decimal(digits);
}

Table within_table(std::span<const WithinCensus> rows) {
    Table t;
    t.columns = {{"n_max"}, {"ell_num"}, {"ell_den"}, {"threshold_kind", CellKind::Text},
                 {"threshold_param", CellKind::Text}, {"count"}, {"normalized"}};
    for (const auto& w : rows)
        t.add_row({std::to_string(w.x), std::to_string(w.ell.a), std::to_string(w.ell.b), w.threshold.kind_name(),
                   w.threshold.param_string(), std::to_string(w.count), format_fixed(w.normalized(), 6)});
    return t;
}

Table congruence_table(std::span<const CongruenceClassification> rows) {
    Table t;
    t.columns = {{"n"}, {"k"}, {"b"}, {"kind", CellKind::Text}, {"p"}, {"m"}};
    for (const auto& c : rows)
        t.add_row({std::to_string(c.n), std::to_string(c.k), std::to_string(c.b), to_string(c.kind),
                   c.regular ? std::to_string(c.regular->p) : "", c.regular ? std::to_string(c.regular->m) : ""});
    return t;
}

Table near_table(std::span<const NearPerfectProfile> rows) {
    Table t;
    t.columns = {{"n"}, {"abundance"}, {"min_exceptions", CellKind::Text},
                 {"achievable_cardinalities", CellKind::Text}, {"witness_min", CellKind::Text}};
    for (const auto& p : rows) {
        std::vector<std::uint64_t> sizes(p.achievable.begin(), p.achievable.end());
        std::string witness;
        if (p.min_exceptions.kind == MinExceptions::Kind::Exact) {
            const auto it = p.witnesses.find(p.min_exceptions.value);
            if (it != p.witnesses.end()) witness = join_semicolon(it->second);
        }
        t.add_row({std::to_string(p.n), std::to_string(p.abundance), p.min_exceptions.to_string(p.k_cap),
                   join_semicolon(sizes), witness});
    }
    return t;
}

Table distribution_table(const EmpiricalDistribution& dist, int digits) {
    Table t;
    t.columns = {{"u_num"}, {"u_den"}, {"value"}};
    for (const auto& p : dist.points)
        t.add_row({std::to_string(p.u.num), std::to_string(p.u.den),
                   ExactRational(static_cast<std::int64_t>(p.count), dist.x).to_decimal(digits)});
    return t;
}

}  // namespace sigmakit
