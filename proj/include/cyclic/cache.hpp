#pragma once

// On-disk cache for expensive oracle runs. One JSON document per table,
// addressed by a hash of (module, n, params):
//
//   {
//     "schema":   "cycle-cache-v1",
//     "module":   "oracle",
//     "n":        12,
//     "kind":     "joint",
//     "params":   { ... string map ... },
//     "entries":  [[d, s, "count"], ...]   (or [[index, "count"], ...]),
//     "checksum": "<fnv1a-64 of the canonical serialization, hex>"
//   }
//
// Counts are decimal strings so any consumer can parse them losslessly.
// A load verifies the embedded checksum and the row-sum invariant of the
// table kind before returning; anything corrupt is treated as a miss with
// a warning on stderr.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "cyclic/count_table.hpp"
#include "cyclic/formulas.hpp"

namespace cyclic {

struct CacheKey {
    std::string module;
    int n = 0;
    std::map<std::string, std::string> params;
};

namespace detail {

inline std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

inline std::string key_string(const CacheKey& key) {
    std::ostringstream os;
    os << key.module << '|' << key.n;
    for (const auto& [k, v] : key.params) os << '|' << k << '=' << v;
    return os.str();
}

inline void canonical_entry(std::ostringstream& os, int index, const Bigint& count) {
    os << index << '=' << count.str() << ';';
}

inline void canonical_entry(std::ostringstream& os, const JointKey& key, const Bigint& count) {
    os << key.degree << ':' << key.sym << '=' << count.str() << ';';
}

template <class Key>
inline std::string canonical_document(const CacheKey& key, const CountTable<Key>& table) {
    std::ostringstream os;
    os << key_string(key) << '|' << to_string(table.kind) << '|';
    for (const auto& [k, v] : table.entries) canonical_entry(os, k, v);
    return os.str();
}

inline nlohmann::ordered_json entry_json(int index, const Bigint& count) {
    return nlohmann::ordered_json::array({index, count.str()});
}

inline nlohmann::ordered_json entry_json(const JointKey& key, const Bigint& count) {
    return nlohmann::ordered_json::array({key.degree, key.sym, count.str()});
}

inline void read_entry(const nlohmann::json& e, IndexTable& table) {
    table.entries[e.at(0).get<int>()] = Bigint(e.at(1).get<std::string>());
}

inline void read_entry(const nlohmann::json& e, JointTable& table) {
    table.entries[JointKey{e.at(0).get<int>(), e.at(1).get<int>()}] = Bigint(e.at(2).get<std::string>());
}

} // namespace detail

inline std::filesystem::path cache_path(const std::filesystem::path& dir, const CacheKey& key) {
    return dir / (key.module + "-n" + std::to_string(key.n) + "-" +
                  detail::hex64(detail::fnv1a64(detail::key_string(key))) + ".json");
}

template <class Key>
inline void cache_store(const std::filesystem::path& dir, const CacheKey& key, const CountTable<Key>& table) {
    std::filesystem::create_directories(dir);
    nlohmann::ordered_json doc;
    doc["schema"] = "cycle-cache-v1";
    doc["module"] = key.module;
    doc["n"] = key.n;
    doc["kind"] = to_string(table.kind);
    doc["params"] = key.params;
    auto entries = nlohmann::ordered_json::array();
    for (const auto& [k, v] : table.entries) entries.push_back(detail::entry_json(k, v));
    doc["entries"] = std::move(entries);
    doc["checksum"] = detail::hex64(detail::fnv1a64(detail::canonical_document(key, table)));

    const auto path = cache_path(dir, key);
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << doc.dump(2) << '\n';
    }
    std::filesystem::rename(tmp, path);
}

/// Loads a cached table of the given kind; any mismatch is a miss.
template <class Key>
inline std::optional<CountTable<Key>> cache_load(const std::filesystem::path& dir, const CacheKey& key,
                                                 TableKind kind) {
    const auto path = cache_path(dir, key);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    auto miss = [&](const std::string& why) -> std::optional<CountTable<Key>> {
        std::cerr << "warning: ignoring cache file " << path.string() << ": " << why << '\n';
        return std::nullopt;
    };
    nlohmann::json doc;
    try {
        in >> doc;
        if (doc.value("schema", "") != "cycle-cache-v1") return miss("unknown schema");
        if (doc.at("module").get<std::string>() != key.module || doc.at("n").get<int>() != key.n)
            return miss("key mismatch");
        if (doc.at("kind").get<std::string>() != to_string(kind)) return miss("kind mismatch");
        CountTable<Key> table{key.n, kind, {}};
        for (const auto& e : doc.at("entries")) detail::read_entry(e, table);
        const auto checksum = detail::hex64(detail::fnv1a64(detail::canonical_document(key, table)));
        if (doc.at("checksum").get<std::string>() != checksum) return miss("checksum mismatch");
        if (table.total() != expected_total(kind, key.n)) return miss("row-sum invariant violated");
        return table;
    } catch (const std::exception& e) {
        return miss(e.what());
    }
}

} // namespace cyclic
