#pragma once

// CSV and JSON renderers for the distribution tables and orbit dumps.
// CSV is RFC-4180 style: mandatory header row, LF line endings, empty cells
// for absent keys (e.g. a column s that does not divide the row's n). Absent
// is distinct from an explicit zero count. Exact rationals print as "p/q";
// big integers print as decimal strings in JSON to stay lossless across
// languages.

#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cyclic/count_table.hpp"
#include "cyclic/cycle.hpp"
#include "cyclic/dynamics.hpp"

namespace cyclic {

inline std::string format_rational(const Rational& r) {
    const Bigint num = boost::multiprecision::numerator(r);
    const Bigint den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

/// Grid of per-n index tables (by-symmetry, by-degree or type-by-degree):
/// one row per n, one column per index value 1..col_max.
inline void write_grid_csv(std::ostream& out, std::span<const IndexTable> rows, int col_max) {
    out << 'n';
    for (int c = 1; c <= col_max; ++c) out << ',' << c;
    out << '\n';
    for (const auto& table : rows) {
        out << table.n;
        for (int c = 1; c <= col_max; ++c) {
            out << ',';
            auto it = table.entries.find(c);
            if (it != table.entries.end()) out << it->second.str();
        }
        out << '\n';
    }
}

inline void write_grid_json(std::ostream& out, std::string_view what, std::span<const IndexTable> rows) {
    nlohmann::ordered_json doc;
    doc["table"] = what;
    auto json_rows = nlohmann::ordered_json::array();
    for (const auto& table : rows) {
        nlohmann::ordered_json row;
        row["n"] = table.n;
        nlohmann::ordered_json entries;
        for (const auto& [k, v] : table.entries) entries[std::to_string(k)] = v.str();
        row["entries"] = std::move(entries);
        json_rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(json_rows);
    out << doc.dump(2) << '\n';
}

inline void write_scalar_csv(std::ostream& out, std::string_view column,
                             std::span<const std::pair<int, Bigint>> rows) {
    out << "n," << column << '\n';
    for (const auto& [n, v] : rows) out << n << ',' << v.str() << '\n';
}

inline void write_scalar_json(std::ostream& out, std::string_view what, std::string_view column,
                              std::span<const std::pair<int, Bigint>> rows) {
    nlohmann::ordered_json doc;
    doc["table"] = what;
    auto json_rows = nlohmann::ordered_json::array();
    for (const auto& [n, v] : rows) {
        nlohmann::ordered_json row;
        row["n"] = n;
        row[std::string(column)] = v.str();
        json_rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(json_rows);
    out << doc.dump(2) << '\n';
}

inline void write_joint_csv(std::ostream& out, std::span<const JointTable> tables) {
    out << "n,d,s,count\n";
    for (const auto& table : tables)
        for (const auto& [key, count] : table.entries)
            out << table.n << ',' << key.degree << ',' << key.sym << ',' << count.str() << '\n';
}

inline void write_joint_json(std::ostream& out, std::span<const JointTable> tables) {
    nlohmann::ordered_json doc;
    doc["table"] = "joint";
    auto json_rows = nlohmann::ordered_json::array();
    for (const auto& table : tables) {
        nlohmann::ordered_json row;
        row["n"] = table.n;
        auto entries = nlohmann::ordered_json::array();
        for (const auto& [key, count] : table.entries)
            entries.push_back(nlohmann::ordered_json::array({key.degree, key.sym, count.str()}));
        row["entries"] = std::move(entries);
        json_rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(json_rows);
    out << doc.dump(2) << '\n';
}

namespace detail {

inline std::string joined_points(const PeriodicOrbit& o) {
    std::string s;
    for (const auto& pt : o.points) {
        if (!s.empty()) s += ';';
        s += pt.str();
    }
    return s;
}

inline std::string joined_deployment(const DeploymentVector& dep) {
    std::string s;
    for (int v : dep.w) {
        if (!s.empty()) s += ';';
        s += std::to_string(v);
    }
    return s;
}

} // namespace detail

/// Orbit dump rows: k, n, orbit_index, points, cycle, degree, sym, deployment.
/// Points are reduced fractions "p/q" ascending, joined by semicolons.
inline void write_orbits_csv(std::ostream& out, std::span<const PeriodicOrbit> orbits,
                             std::span<const std::size_t> indices) {
    out << "k,n,orbit_index,points,cycle,degree,sym,deployment\n";
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        const auto& o = orbits[i];
        const Cycle c = realized_cycle(o);
        out << o.k << ',' << o.n << ',' << indices[i] << ',' << detail::joined_points(o) << ','
            << format_cycle(c) << ',' << degree(c) << ',' << symmetry_order(c) << ','
            << detail::joined_deployment(deployment_vector(o)) << '\n';
    }
}

inline void write_orbits_json(std::ostream& out, std::span<const PeriodicOrbit> orbits,
                              std::span<const std::size_t> indices) {
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        const auto& o = orbits[i];
        const Cycle c = realized_cycle(o);
        nlohmann::ordered_json row;
        row["k"] = o.k;
        row["n"] = o.n;
        row["orbit_index"] = indices[i];
        auto pts = nlohmann::ordered_json::array();
        for (const auto& pt : o.points) pts.push_back(pt.str());
        row["points"] = std::move(pts);
        row["cycle"] = format_cycle(c);
        row["degree"] = degree(c);
        row["sym"] = symmetry_order(c);
        row["deployment"] = deployment_vector(o).w;
        rows.push_back(std::move(row));
    }
    nlohmann::ordered_json doc;
    doc["orbits"] = std::move(rows);
    out << doc.dump(2) << '\n';
}

} // namespace cyclic
