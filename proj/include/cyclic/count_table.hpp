#pragma once

#include <compare>
#include <map>
#include <string>

#include "cyclic/bigint.hpp"

namespace cyclic {

enum class TableKind {
    by_degree,           // d -> N_{n,d}
    by_symmetry,         // s -> N_n^s, keys are the divisors of n
    joint,               // (d,s) -> N^s_{n,d}, nonzero keys only
    eulerian,            // d -> A_{n,d} over the full symmetric group
    restricted_eulerian, // d -> B_{n,d}, linear descents over n-cycles
    type_by_degree,      // d -> T_{n,d}
};

inline std::string to_string(TableKind k) {
    switch (k) {
        case TableKind::by_degree: return "by-degree";
        case TableKind::by_symmetry: return "by-symmetry";
        case TableKind::joint: return "joint";
        case TableKind::eulerian: return "eulerian";
        case TableKind::restricted_eulerian: return "restricted-eulerian";
        case TableKind::type_by_degree: return "type-by-degree";
    }
    return "?";
}

struct JointKey {
    int degree = 0;
    int sym = 0;
    auto operator<=>(const JointKey&) const = default;
};

/// Exact distribution: index -> arbitrary-precision count.
template <class Key>
struct CountTable {
    int n = 0;
    TableKind kind{};
    std::map<Key, Bigint> entries;

    Bigint total() const {
        Bigint t = 0;
        for (const auto& [k, v] : entries) t += v;
        return t;
    }

    const Bigint& at_or_zero(const Key& key) const {
        static const Bigint zero = 0;
        auto it = entries.find(key);
        return it == entries.end() ? zero : it->second;
    }

    bool operator==(const CountTable&) const = default;
};

using IndexTable = CountTable<int>;
using JointTable = CountTable<JointKey>;

} // namespace cyclic
