#pragma once

// Tabular output. Doubles are written in shortest round-trip form via
// std::to_chars, so output is locale-independent and byte-stable.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

namespace zeromode {

using Cell = std::variant<double, std::int64_t, bool, std::string>;

inline std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto const res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

inline std::string format_cell(Cell const& c) {
    return std::visit(
        [](auto const& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) return format_double(v);
            else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
            else if constexpr (std::is_same_v<T, std::int64_t>) return std::to_string(v);
            else return v;
        },
        c);
}

struct Table {
    std::string command;
    /// Ordered key/value notes (flags, conventions, resolved constants).
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void note(std::string key, std::string value) { metadata.emplace_back(std::move(key), std::move(value)); }

    void add_row(std::vector<Cell> row) {
        if (row.size() != columns.size()) throw std::logic_error(command + ": row width does not match header");
        rows.push_back(std::move(row));
    }
};

namespace detail {

inline std::string csv_escape(std::string const& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

} // namespace detail

/// Metadata lines start with '#', then a header row and the data rows.
inline void write_csv(Table const& t, std::ostream& os) {
    for (auto const& [k, v] : t.metadata) os << "# " << k << ": " << v << '\n';
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << detail::csv_escape(t.columns[i]);
    os << '\n';
    for (auto const& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << detail::csv_escape(format_cell(row[i]));
        os << '\n';
    }
}

inline nlohmann::ordered_json to_json(Table const& t) {
    nlohmann::ordered_json j;
    j["command"] = t.command;
    j["metadata"] = nlohmann::ordered_json::object();
    for (auto const& [k, v] : t.metadata) j["metadata"][k] = v;
    j["columns"] = t.columns;
    j["rows"] = nlohmann::ordered_json::array();
    for (auto const& row : t.rows) {
        auto r = nlohmann::ordered_json::array();
        for (auto const& c : row) {
            std::visit(
                [&](auto const& v) {
                    using T = std::decay_t<decltype(v)>;
                    // Non-finite values have no JSON number form.
                    if constexpr (std::is_same_v<T, double>) {
                        if (std::isfinite(v)) r.push_back(v);
                        else r.push_back(format_double(v));
                    } else {
                        r.push_back(v);
                    }
                },
                c);
        }
        j["rows"].push_back(std::move(r));
    }
    return j;
}

/// One JSON document per table.
inline void write_json(Table const& t, std::ostream& os) { os << to_json(t).dump(2) << '\n'; }

} // namespace zeromode
