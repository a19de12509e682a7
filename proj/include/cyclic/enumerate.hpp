#pragma once

// Exhaustive ground truth for the closed-form counts: stream every n-cycle
// (and, for Eulerian numbers, every permutation of S_n) and accumulate the
// degree / symmetry / descent distributions.
//
// Enumeration encoding: an n-cycle corresponds to the arrangement
// (v(1), v^2(1), ..., v^{n-1}(1)) of {2,...,n}. Arrangements are visited in
// lexicographic order, so exactly (n-1)! objects are produced with no
// rejection. The parallel scan shards the arrangement space by its first
// element; every worker owns private accumulators and the merge is a
// componentwise sum, which makes results independent of the worker count.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <thread>
#include <vector>

#include "cyclic/count_table.hpp"
#include "cyclic/cycle.hpp"
#include "cyclic/errors.hpp"
#include "cyclic/formulas.hpp"

namespace cyclic {

struct OracleOptions {
    int n_cap = 12;  // largest n the distribution scans accept
    int workers = 0; // 0 = hardware concurrency
};

/// Visits each n-cycle exactly once in a deterministic order; returns (n-1)!.
inline std::uint64_t enumerate_cycles(int n, const std::function<void(const Cycle&)>& visit) {
    if (n < 2) throw TooSmall("enumerate_cycles needs n >= 2");
    std::vector<int> arr(static_cast<std::size_t>(n - 1));
    std::iota(arr.begin(), arr.end(), 2);
    std::vector<int> images(static_cast<std::size_t>(n));
    std::uint64_t count = 0;
    do {
        images[0] = arr[0];
        for (std::size_t i = 0; i + 1 < arr.size(); ++i)
            images[static_cast<std::size_t>(arr[i] - 1)] = arr[i + 1];
        images[static_cast<std::size_t>(arr.back() - 1)] = 1;
        visit(make_cycle(images));
        ++count;
    } while (std::next_permutation(arr.begin(), arr.end()));
    return count;
}

/// One full pass over C_n: joint (degree, symmetry) counts plus the linear
/// descent histogram. Counts fit in uint64 for every reachable n.
struct CycleCensus {
    int n = 0;
    std::uint64_t total = 0;
    std::vector<std::uint64_t> joint;    // (d * (n+1) + s)
    std::vector<std::uint64_t> descents; // index = linear descent count

    std::uint64_t joint_at(int d, int s) const {
        return joint[static_cast<std::size_t>(d * (n + 1) + s)];
    }
};

namespace detail {

struct CensusAccumulator {
    std::vector<std::uint64_t> joint;
    std::vector<std::uint64_t> descents;
    std::uint64_t total = 0;
};

inline void scan_shard(int n, int first_value, CensusAccumulator& acc) {
    std::vector<int> rest;
    rest.reserve(static_cast<std::size_t>(n - 2));
    for (int v = 2; v <= n; ++v)
        if (v != first_value) rest.push_back(v);

    const auto divs = divisors(n);
    std::vector<int> images(static_cast<std::size_t>(n));
    do {
        // arrangement = (first_value, rest...) -> one-line notation
        images[0] = first_value;
        int prev = first_value;
        for (int v : rest) {
            images[static_cast<std::size_t>(prev - 1)] = v;
            prev = v;
        }
        images[static_cast<std::size_t>(prev - 1)] = 1;

        int des = 0;
        for (int i = 0; i + 1 < n; ++i)
            if (images[static_cast<std::size_t>(i)] > images[static_cast<std::size_t>(i + 1)]) ++des;
        const int deg = des + (images[static_cast<std::size_t>(n - 1)] > images[0] ? 1 : 0);

        int sym = 1;
        for (long long jd : divs) {
            const int j = static_cast<int>(jd);
            if (j == n) break;
            bool fixed = true;
            for (int i = 0; i < n; ++i) {
                const int ij = i + j < n ? i + j : i + j - n;
                int want = images[static_cast<std::size_t>(i)] + j;
                if (want > n) want -= n;
                if (images[static_cast<std::size_t>(ij)] != want) {
                    fixed = false;
                    break;
                }
            }
            if (fixed) {
                sym = n / j;
                break;
            }
        }

        ++acc.joint[static_cast<std::size_t>(deg * (n + 1) + sym)];
        ++acc.descents[static_cast<std::size_t>(des)];
        ++acc.total;
    } while (std::next_permutation(rest.begin(), rest.end()));
}

} // namespace detail

inline CycleCensus scan_cycles(int n, const OracleOptions& opts = {}) {
    if (n < 2) throw TooSmall("scan_cycles needs n >= 2");
    if (n > opts.n_cap)
        throw CapExceeded("n = " + std::to_string(n) + " exceeds the oracle cap " + std::to_string(opts.n_cap));

    const std::size_t cells = static_cast<std::size_t>((n + 1) * (n + 1));
    int workers = opts.workers > 0 ? opts.workers : static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    workers = std::min(workers, n - 1);

    std::vector<detail::CensusAccumulator> accs(static_cast<std::size_t>(workers));
    for (auto& a : accs) {
        a.joint.assign(cells, 0);
        a.descents.assign(static_cast<std::size_t>(n), 0);
    }

    auto run = [&](int w) {
        for (int first = 2 + w; first <= n; first += workers)
            detail::scan_shard(n, first, accs[static_cast<std::size_t>(w)]);
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }

    CycleCensus census{n, 0, std::vector<std::uint64_t>(cells, 0),
                       std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0)};
    for (const auto& a : accs) {
        census.total += a.total;
        for (std::size_t i = 0; i < cells; ++i) census.joint[i] += a.joint[i];
        for (std::size_t i = 0; i < a.descents.size(); ++i) census.descents[i] += a.descents[i];
    }
    return census;
}

inline IndexTable degree_distribution_from(const CycleCensus& census) {
    IndexTable t{census.n, TableKind::by_degree, {}};
    const int max_d = census.n >= 3 ? census.n - 2 : 1;
    for (int d = 1; d <= max_d; ++d) {
        std::uint64_t sum = 0;
        for (int s = 1; s <= census.n; ++s) sum += census.joint_at(d, s);
        t.entries[d] = sum;
    }
    return t;
}

inline IndexTable symmetry_distribution_from(const CycleCensus& census) {
    IndexTable t{census.n, TableKind::by_symmetry, {}};
    for (long long s : divisors(census.n)) {
        std::uint64_t sum = 0;
        for (int d = 1; d <= census.n; ++d) sum += census.joint_at(d, static_cast<int>(s));
        t.entries[static_cast<int>(s)] = sum;
    }
    return t;
}

inline JointTable joint_distribution_from(const CycleCensus& census) {
    JointTable t{census.n, TableKind::joint, {}};
    for (int d = 1; d <= census.n; ++d)
        for (int s = 1; s <= census.n; ++s)
            if (auto c = census.joint_at(d, s)) t.entries[JointKey{d, s}] = c;
    return t;
}

inline IndexTable descent_distribution_from(const CycleCensus& census) {
    IndexTable t{census.n, TableKind::restricted_eulerian, {}};
    for (int d = 0; d < census.n; ++d) t.entries[d] = census.descents[static_cast<std::size_t>(d)];
    return t;
}

/// Type counts from a joint table: T_{n,d} = sum_s (s/n) N^s_{n,d}.
inline IndexTable type_table_from_joint(const JointTable& joint) {
    IndexTable t{joint.n, TableKind::type_by_degree, {}};
    for (const auto& [key, count] : joint.entries) {
        const Bigint scaled = count * key.sym;
        if (scaled % joint.n != 0)
            throw NonIntegerTypeCount("joint entry (d=" + std::to_string(key.degree) +
                                      ", s=" + std::to_string(key.sym) + ") is not divisible by n/s");
        t.entries[key.degree] += scaled / joint.n;
    }
    return t;
}

/// T_{n,d} = sum_s (s/n) N^s_{n,d}; every division must be exact.
inline IndexTable type_distribution_from(const CycleCensus& census) {
    IndexTable t{census.n, TableKind::type_by_degree, {}};
    const int n = census.n;
    for (int d = 1; d <= n; ++d) {
        Bigint sum = 0;
        bool any = false;
        for (int s = 1; s <= n; ++s) {
            const std::uint64_t c = census.joint_at(d, s);
            if (!c) continue;
            any = true;
            const std::uint64_t prod = c * static_cast<std::uint64_t>(s);
            if (prod % static_cast<std::uint64_t>(n) != 0)
                throw NonIntegerTypeCount("joint entry (d=" + std::to_string(d) + ", s=" + std::to_string(s) +
                                          ") is not divisible by n/s");
            sum += prod / static_cast<std::uint64_t>(n);
        }
        if (any) t.entries[d] = sum;
    }
    return t;
}

inline IndexTable degree_distribution(int n, const OracleOptions& opts = {}) {
    return degree_distribution_from(scan_cycles(n, opts));
}

inline IndexTable symmetry_distribution(int n, const OracleOptions& opts = {}) {
    return symmetry_distribution_from(scan_cycles(n, opts));
}

inline JointTable joint_distribution(int n, const OracleOptions& opts = {}) {
    return joint_distribution_from(scan_cycles(n, opts));
}

inline IndexTable type_distribution_by_degree(int n, const OracleOptions& opts = {}) {
    return type_distribution_from(scan_cycles(n, opts));
}

inline IndexTable descent_distribution_cycles(int n, const OracleOptions& opts = {}) {
    return descent_distribution_from(scan_cycles(n, opts));
}

/// Descent histogram over the full symmetric group S_n; n! permutations.
inline IndexTable eulerian_distribution(int n, int n_cap = 10) {
    if (n < 1) throw TooSmall("eulerian_distribution needs n >= 1");
    if (n > n_cap)
        throw CapExceeded("n = " + std::to_string(n) + " exceeds the S_n cap " + std::to_string(n_cap));
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(n), 0);
    do {
        int des = 0;
        for (int i = 0; i + 1 < n; ++i)
            if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(i + 1)]) ++des;
        ++counts[static_cast<std::size_t>(des)];
    } while (std::next_permutation(perm.begin(), perm.end()));
    IndexTable t{n, TableKind::eulerian, {}};
    for (int d = 0; d < n; ++d) t.entries[d] = counts[static_cast<std::size_t>(d)];
    return t;
}

} // namespace cyclic
