#pragma once

// Exact-arithmetic model of the multiplication maps m_k : x -> kx mod 1 on
// the circle. Points of period dividing n are the fractions p/(k^n - 1), so
// the whole module works on integer numerators modulo M = k^n - 1:
//
//   - the map is p -> k*p mod M,
//   - a point has period dividing r  iff  (k^r - 1) * p = 0 mod M,
//   - fraction comparisons are exact cross-multiplications.
//
// Orbits are enumerated in increasing order of their smallest point by a
// minimal-element scan: numerator p starts an orbit iff its forward orbit
// never visits a smaller numerator and returns to p in exactly n steps.
// An orbit "realizes" the cycle v when m_k sends the i-th smallest point to
// the v(i)-th smallest one; the deployment vector records how many orbit
// points fall below each fixed point i/(k-1) of m_k.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cyclic/bigint.hpp"
#include "cyclic/cycle.hpp"
#include "cyclic/errors.hpp"
#include "cyclic/formulas.hpp"

namespace cyclic {

/// Reduced fraction in [0, 1).
struct CirclePoint {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    static CirclePoint reduced(std::uint64_t p, std::uint64_t q) {
        const std::uint64_t g = std::gcd(p, q);
        return CirclePoint{p / g, q / g};
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

    friend bool operator==(const CirclePoint& a, const CirclePoint& b) = default;
    friend bool operator<(const CirclePoint& a, const CirclePoint& b) {
        return static_cast<unsigned __int128>(a.num) * b.den < static_cast<unsigned __int128>(b.num) * a.den;
    }
};

struct DeploymentVector {
    int k = 0;
    std::vector<int> w; // length k-1, nondecreasing, w.back() = n
    friend bool operator==(const DeploymentVector&, const DeploymentVector&) = default;
    friend bool operator<(const DeploymentVector& a, const DeploymentVector& b) {
        return std::tie(a.k, a.w) < std::tie(b.k, b.w);
    }
};

struct PeriodicOrbit {
    int k = 0;
    int n = 0;
    std::vector<CirclePoint> points; // sorted ascending, all of exact period n
    friend bool operator==(const PeriodicOrbit&, const PeriodicOrbit&) = default;
};

struct DynamicsOptions {
    std::uint64_t modulus_cap = std::uint64_t{1} << 26; // largest allowed k^n - 1
};

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

} // namespace detail

/// k^n - 1, guarded by the enumeration cap.
inline std::uint64_t orbit_modulus(int k, int n, const DynamicsOptions& opts = {}) {
    if (k < 2) throw Error("orbit_modulus needs k >= 2");
    if (n < 1) throw Error("orbit_modulus needs n >= 1");
    unsigned __int128 m = 1;
    const unsigned __int128 limit = static_cast<unsigned __int128>(opts.modulus_cap) + 1;
    for (int i = 0; i < n; ++i) {
        m *= static_cast<unsigned>(k);
        if (m > limit)
            throw CapExceeded("k^n - 1 = " + std::to_string(k) + "^" + std::to_string(n) +
                              " - 1 exceeds the cap " + std::to_string(opts.modulus_cap));
    }
    return static_cast<std::uint64_t>(m - 1);
}

/// Streams every period-n orbit of m_k as its sorted numerators over
/// M = k^n - 1, in increasing order of the smallest numerator.
template <class Visitor> // void(std::span<const std::uint64_t>, std::uint64_t M)
inline void for_each_orbit(int k, int n, Visitor&& visit, const DynamicsOptions& opts = {}) {
    const std::uint64_t m = orbit_modulus(k, n, opts);
    std::vector<std::uint64_t> scratch(static_cast<std::size_t>(n));
    for (std::uint64_t p = 0; p < m; ++p) {
        std::uint64_t x = p;
        int steps = 0;
        bool minimal = true;
        do {
            x = detail::mulmod(x, static_cast<std::uint64_t>(k), m);
            ++steps;
            if (x < p) {
                minimal = false;
                break;
            }
        } while (x != p && steps < n + 1);
        if (!minimal || steps != n) continue;
        x = p;
        for (int i = 0; i < n; ++i) {
            scratch[static_cast<std::size_t>(i)] = x;
            x = detail::mulmod(x, static_cast<std::uint64_t>(k), m);
        }
        std::sort(scratch.begin(), scratch.end());
        visit(std::span<const std::uint64_t>(scratch), m);
    }
}

inline PeriodicOrbit orbit_from_numerators(int k, int n, std::span<const std::uint64_t> nums,
                                           std::uint64_t m) {
    PeriodicOrbit o{k, n, {}};
    o.points.reserve(nums.size());
    for (auto p : nums) o.points.push_back(CirclePoint::reduced(p, m));
    return o;
}

/// All period-n orbits, ordered by smallest point.
inline std::vector<PeriodicOrbit> orbits(int k, int n, const DynamicsOptions& opts = {}) {
    std::vector<PeriodicOrbit> out;
    for_each_orbit(
        k, n, [&](std::span<const std::uint64_t> nums, std::uint64_t m) {
            out.push_back(orbit_from_numerators(k, n, nums, m));
        },
        opts);
    return out;
}

inline std::uint64_t count_orbits(int k, int n, const DynamicsOptions& opts = {}) {
    std::uint64_t count = 0;
    for_each_orbit(k, n, [&](std::span<const std::uint64_t>, std::uint64_t) { ++count; }, opts);
    return count;
}

/// All points of exact period n, sorted ascending; there are P_n(k) of them.
inline std::vector<CirclePoint> periodic_points(int k, int n, const DynamicsOptions& opts = {}) {
    std::vector<CirclePoint> pts;
    for_each_orbit(
        k, n, [&](std::span<const std::uint64_t> nums, std::uint64_t m) {
            for (auto p : nums) pts.push_back(CirclePoint::reduced(p, m));
        },
        opts);
    std::sort(pts.begin(), pts.end());
    return pts;
}

/// The unique v with m_k(x_i) = x_{v(i)} under the sorted labeling.
inline Cycle realized_cycle(const PeriodicOrbit& o) {
    if (o.n < 2) throw TooSmall("realized_cycle needs an orbit of period >= 2");
    std::vector<int> images(static_cast<std::size_t>(o.n));
    for (int i = 0; i < o.n; ++i) {
        const auto& pt = o.points[static_cast<std::size_t>(i)];
        const CirclePoint image{detail::mulmod(pt.num, static_cast<std::uint64_t>(o.k), pt.den), pt.den};
        const auto it = std::lower_bound(o.points.begin(), o.points.end(), image);
        if (it == o.points.end() || !(*it == image)) throw Error("orbit is not invariant under m_k");
        images[static_cast<std::size_t>(i)] = static_cast<int>(it - o.points.begin()) + 1;
    }
    return make_cycle(std::move(images));
}

/// dep(O) = (w_1, ..., w_{k-1}) with w_i = #(O intersect (0, i/(k-1))).
inline DeploymentVector deployment_vector(const PeriodicOrbit& o) {
    if (o.n < 2) throw TooSmall("deployment_vector needs an orbit of period >= 2");
    DeploymentVector dep{o.k, std::vector<int>(static_cast<std::size_t>(o.k - 1), 0)};
    for (int i = 1; i <= o.k - 1; ++i) {
        int count = 0;
        for (const auto& pt : o.points) {
            // pt < i/(k-1)  iff  pt.num * (k-1) < i * pt.den
            if (static_cast<unsigned __int128>(pt.num) * static_cast<unsigned>(o.k - 1) <
                static_cast<unsigned __int128>(pt.den) * static_cast<unsigned>(i))
                ++count;
        }
        dep.w[static_cast<std::size_t>(i - 1)] = count;
    }
    return dep;
}

namespace detail {

/// Indices i with a_i = 1; every admissible vector must contain them.
/// A 2-cycle has degree 1 and hence no required entries.
inline std::vector<int> required_entries(const Cycle& c) {
    std::vector<int> req;
    if (c.size() < 3) return req;
    const Signature sig = signature(c);
    for (int i = 1; i <= c.size(); ++i)
        if (sig.bits[static_cast<std::size_t>(i - 1)]) req.push_back(i);
    return req;
}

inline bool deployment_is_admissible(int n, const std::vector<int>& required, const DeploymentVector& dep) {
    if (dep.k < 2 || static_cast<int>(dep.w.size()) != dep.k - 1) return false;
    int prev = 0;
    for (int v : dep.w) {
        if (v < prev || v > n) return false;
        prev = v;
    }
    if (dep.w.back() != n) return false;
    for (int i : required)
        if (std::find(dep.w.begin(), dep.w.end(), i) == dep.w.end()) return false;
    return true;
}

} // namespace detail

/// Every c-admissible vector for m_k, in lexicographic order: nondecreasing
/// (w_1,...,w_{k-1}) with w_{k-1} = n that contain each i with a_i = 1.
inline std::vector<DeploymentVector> admissible_vectors(const Cycle& c, int k) {
    const int n = c.size();
    const int d = degree(c);
    if (k < std::max(d, 2))
        throw DegreeTooHigh("k = " + std::to_string(k) + " is below max(deg, 2) = " +
                            std::to_string(std::max(d, 2)));
    const std::vector<int> required = detail::required_entries(c);
    std::vector<DeploymentVector> out;
    std::vector<int> w(static_cast<std::size_t>(k - 1), 0);
    auto rec = [&](auto&& self, int pos, int min_value) -> void {
        if (pos == k - 2) {
            w[static_cast<std::size_t>(pos)] = n;
            DeploymentVector dep{k, w};
            if (detail::deployment_is_admissible(n, required, dep)) out.push_back(std::move(dep));
            return;
        }
        for (int v = min_value; v <= n; ++v) {
            w[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, v);
        }
    };
    rec(rec, 0, 0);
    return out;
}

/// The unique orbit of m_k realizing c with the given deployment vector.
inline PeriodicOrbit realize(const Cycle& c, const DeploymentVector& dep, const DynamicsOptions& opts = {}) {
    const int n = c.size();
    const int d = degree(c);
    if (dep.k < std::max(d, 2) || !detail::deployment_is_admissible(n, detail::required_entries(c), dep))
        throw NotAdmissible("deployment vector is not admissible for " + format_cycle(c));
    std::optional<PeriodicOrbit> found;
    for_each_orbit(
        dep.k, n,
        [&](std::span<const std::uint64_t> nums, std::uint64_t m) {
            if (found) return;
            PeriodicOrbit o = orbit_from_numerators(dep.k, n, nums, m);
            if (deployment_vector(o) == dep && realized_cycle(o) == c) found = std::move(o);
        },
        opts);
    if (!found) throw Error("no realizing orbit found; this contradicts admissibility");
    return *found;
}

/// Number of period-n orbits of m_k realizing the combinatorial type of c.
inline std::uint64_t realization_count_for_type(const Cycle& c, int k, const DynamicsOptions& opts = {}) {
    const auto target = detail::canonical_one_line(c.one_line());
    std::uint64_t count = 0;
    for_each_orbit(
        k, c.size(),
        [&](std::span<const std::uint64_t> nums, std::uint64_t m) {
            const PeriodicOrbit o = orbit_from_numerators(k, c.size(), nums, m);
            if (detail::canonical_one_line(realized_cycle(o).one_line()) == target) ++count;
        },
        opts);
    return count;
}

/// Closed form for the number of period-n orbits of m_k realizing some
/// element of degree class d: ((k-1)/n) C(n+k-d-1, n-1) N_{n,d}.
inline Bigint degree_class_orbit_count(int n, int d, int k) {
    if (k < 2 || d < 1 || n < 2) throw Error("degree_class_orbit_count needs n, k >= 2 and d >= 1");
    const Bigint numerator = Bigint(k - 1) * binomial(n + k - d - 1, n - 1) * count_by_degree(n, d);
    return detail::exact_div(numerator, n, "degree_class_orbit_count");
}

/// Whether the orbit is invariant as a set under x -> x + j/(k-1).
inline bool rotation_invariant(const PeriodicOrbit& o, int j) {
    if (o.k < 3 || j < 1 || j > o.k - 2)
        throw Error("rotation_invariant needs k >= 3 and 1 <= j <= k-2");
    // One membership test suffices: the translate of an orbit is an orbit.
    const auto& p = o.points.front();
    unsigned __int128 den = static_cast<unsigned __int128>(p.den) * static_cast<unsigned>(o.k - 1);
    unsigned __int128 num = (static_cast<unsigned __int128>(p.num) * static_cast<unsigned>(o.k - 1) +
                             static_cast<unsigned __int128>(p.den) * static_cast<unsigned>(j)) %
                            den;
    unsigned __int128 g = num, r = den;
    while (r) {
        const unsigned __int128 t = g % r;
        g = r;
        r = t;
    }
    num /= g;
    den /= g;
    // a translated orbit point is again an orbit point, whose reduced
    // denominator divides the original modulus and therefore fits 64 bits
    if (den > std::numeric_limits<std::uint64_t>::max()) return false;
    const CirclePoint moved{static_cast<std::uint64_t>(num), static_cast<std::uint64_t>(den)};
    const auto it = std::lower_bound(o.points.begin(), o.points.end(), moved);
    return it != o.points.end() && *it == moved;
}

/// Orbits invariant as a set under the rotation x -> x + j/(k-1).
inline std::vector<PeriodicOrbit> rotation_symmetric_orbits(int k, int n, int j,
                                                            const DynamicsOptions& opts = {}) {
    if (k < 3 || j < 1 || j > k - 2)
        throw Error("rotation_symmetric_orbits needs k >= 3 and 1 <= j <= k-2");
    const std::uint64_t modulus = orbit_modulus(k, n, opts);
    const std::uint64_t shift = static_cast<std::uint64_t>(j) * (modulus / static_cast<std::uint64_t>(k - 1));
    std::vector<PeriodicOrbit> out;
    for_each_orbit(
        k, n,
        [&](std::span<const std::uint64_t> nums, std::uint64_t m) {
            // O + j/(k-1) is itself an orbit, so one membership test decides
            // whether the translate is O again.
            const std::uint64_t moved = (nums.front() + shift) % m;
            if (std::binary_search(nums.begin(), nums.end(), moved))
                out.push_back(orbit_from_numerators(k, n, nums, m));
        },
        opts);
    return out;
}

} // namespace cyclic
