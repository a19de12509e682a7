#pragma once

// Executable verification suites behind the `verify` command: every module
// invariant is a named check that either passes or reports the violated
// identity together with the inputs that broke it.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "cyclic/dynamics.hpp"
#include "cyclic/enumerate.hpp"
#include "cyclic/formulas.hpp"
#include "cyclic/stats.hpp"

namespace cyclic {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail; // first violation(s), empty when passing
};

struct VerifyOptions {
    int n_cap = 0;   // 0 = per-suite default
    int k_cap = 0;   // 0 = per-suite default
    int workers = 0; // forwarded to the oracle scans
};

namespace detail {

class Check {
  public:
    explicit Check(std::string name) : result_{std::move(name), true, {}} {}

    template <class... Parts>
    void expect(bool ok, Parts&&... parts) {
        if (ok) return;
        result_.pass = false;
        if (++failures_ > 3) return; // keep reports short
        std::ostringstream os;
        (os << ... << parts);
        if (!result_.detail.empty()) result_.detail += "; ";
        result_.detail += os.str();
    }

    CheckResult take() && {
        if (failures_ > 3) result_.detail += "; (+" + std::to_string(failures_ - 3) + " more)";
        return std::move(result_);
    }

  private:
    CheckResult result_;
    int failures_ = 0;
};

/// Phi by composite Simpson integration of the Gaussian density, marching
/// outward from 0 in fine substeps. Independent of standard_normal_cdf.
inline std::vector<double> normal_cdf_simpson_grid(double x_max, double coarse_step, int substeps) {
    const auto density = [](double t) { return std::exp(-0.5 * t * t) / std::sqrt(2.0 * std::acos(-1.0)); };
    const int cells = static_cast<int>(std::llround(x_max / coarse_step));
    std::vector<double> grid(static_cast<std::size_t>(cells) + 1);
    grid[0] = 0.5;
    double acc = 0.5;
    for (int c = 0; c < cells; ++c) {
        const double a = c * coarse_step;
        const double h = coarse_step / substeps;
        double piece = 0.0;
        for (int s = 0; s < substeps; ++s) {
            const double lo = a + s * h;
            piece += h / 6.0 * (density(lo) + 4.0 * density(lo + h / 2.0) + density(lo + h));
        }
        acc += piece;
        grid[static_cast<std::size_t>(c) + 1] = acc;
    }
    return grid;
}

inline int effective(int requested, int fallback) { return requested > 0 ? requested : fallback; }

} // namespace detail

// ---------------------------------------------------------------------------
// formulas
// ---------------------------------------------------------------------------

inline std::vector<CheckResult> verify_formulas(const VerifyOptions& opts = {}) {
    std::vector<CheckResult> results;
    const int n20 = std::min(detail::effective(opts.n_cap, 20), 20);
    const int n24 = std::min(detail::effective(opts.n_cap, 24), 24);
    const int n30 = std::min(detail::effective(opts.n_cap, 30), 30);
    const int k8 = std::min(detail::effective(opts.k_cap, 8), 8);
    const int k20 = std::min(detail::effective(opts.k_cap, 20), 20);

    {
        detail::Check c("mobius pair: sum_{k|m} mu(k) = 0 (2 <= m <= 10^4)");
        for (long long m = 2; m <= 10000; ++m) {
            long long sum = 0;
            for (long long k : divisors(m)) sum += mobius(k);
            c.expect(sum == 0, "m=", m, " sum=", sum);
        }
        results.push_back(std::move(c).take());
    }
    {
        detail::Check c("totient identity and direct count (m <= 10^4)");
        for (long long m = 1; m <= 10000; ++m) {
            long long via_mobius = 0;
            for (long long k : divisors(m)) via_mobius += k * mobius(m / k);
            c.expect(via_mobius == totient(m), "m=", m, " mobius-sum=", via_mobius, " totient=", totient(m));
            if (m <= 2000) {
                long long direct = 0;
                for (long long x = 1; x <= m; ++x)
                    if (std::gcd(x, m) == 1) ++direct;
                c.expect(direct == totient(m), "m=", m, " direct=", direct, " totient=", totient(m));
            }
        }
        results.push_back(std::move(c).take());
    }
    {
        detail::Check c("period-point partition: sum_{r|n} P_r(k) = k^n - 1 (n <= 24, k <= 8)");
        for (int n = 1; n <= n24; ++n)
            for (int k = 2; k <= k8; ++k) {
                Bigint sum = 0;
                for (long long r : divisors(n)) sum += periodic_point_count(static_cast<int>(r), k);
                c.expect(sum == bigint_pow(k, static_cast<unsigned>(n)) - 1, "n=", n, " k=", k);
            }
        results.push_back(std::move(c).take());
    }
    {
        detail::Check c("n divides P_n(k)");
        for (int n = 1; n <= n24; ++n)
            for (int k = 2; k <= k8; ++k)
                c.expect(periodic_point_count(n, k) % n == 0, "n=", n, " k=", k);
        results.push_back(std::move(c).take());
    }
    {
        detail::Check c("partitions of (n-1)!: by symmetry and by degree (n <= 20)");
        for (int n = 2; n <= n20; ++n) {
            c.expect(symmetry_table(n).total() == factorial(n - 1), "by-symmetry n=", n);
            c.expect(degree_table(n).total() == factorial(n - 1), "by-degree n=", n);
            c.expect(count_by_degree(n, 1) == totient(n), "N_{n,1} != phi(n) at n=", n);
            c.expect(count_by_symmetry(n, n) == totient(n), "N_n^n != phi(n) at n=", n);
        }
        results.push_back(std::move(c).take());
    }
    {
        detail::Check c("type count from symmetry counts: T_n = (1/n) sum_s s N_n^s (n <= 20)");
        for (int n = 2; n <= n20; ++n) {
            Bigint sum = 0;
            for (long long s : divisors(n)) sum += s * count_by_symmetry(n, static_cast<int>(s));
            c.expect(sum == Bigint(n) * type_count(n), "n=", n);
        }
        results.push_back(std::move(c).take());
    }
    {
        detail::Check c("degree-count identity: sum_d C(n+k-d-1, n-1) N_{n,d} = Delta_n(k) (n <= 30, k <= 20)");
        for (int n = 2; n <= n30; ++n)
            for (int k = 1; k <= k20; ++k)
                c.expect(worpitzky_analog_lhs(n, k) == delta(n, k), "n=", n, " k=", k);
        results.push_back(std::move(c).take());
    }
    {
        detail::Check c("degree-count vanishing: N_{n,d} = 0 for d >= n-1 (3 <= n <= 20)");
        for (int n = 3; n <= n20; ++n)
            for (int d = n - 1; d <= n + 5; ++d)
                c.expect(count_by_degree(n, d) == 0, "n=", n, " d=", d);
        results.push_back(std::move(c).take());
    }
    {
        detail::Check c("eulerian: recurrence equals alternating sum; symmetry (n <= 25)");
        for (int n = 1; n <= 25; ++n)
            for (int d = 0; d <= n - 1; ++d) {
                c.expect(eulerian(n, d) == eulerian_alternating_sum(n, d), "routes n=", n, " d=", d);
                c.expect(eulerian(n, d) == eulerian(n, n - d - 1), "symmetry n=", n, " d=", d);
            }
        results.push_back(std::move(c).take());
    }
    {
        detail::Check c("worpitzky: sum_d C(n+k-d-1, n) A_{n,d} = k^n (n <= 12, k <= 10)");
        for (int n = 1; n <= 12; ++n)
            for (int k = 1; k <= 10; ++k) {
                Bigint sum = 0;
                for (int d = 0; d <= n - 1; ++d) sum += binomial(n + k - d - 1, n) * eulerian(n, d);
                c.expect(sum == bigint_pow(k, static_cast<unsigned>(n)), "n=", n, " k=", k);
            }
        results.push_back(std::move(c).take());
    }
    {
        detail::Check c("restricted eulerian: row sums, B_{n,0} = 0, descent mean (n-1)/2");
        for (int n = 2; n <= 11; ++n) {
            const auto table = restricted_eulerian_table(n);
            c.expect(table.total() == factorial(n - 1), "row sum n=", n);
            c.expect(table.at_or_zero(0) == 0, "B_{n,0} n=", n);
            if (n >= 3) {
                Bigint weighted = 0;
                for (const auto& [d, v] : table.entries) weighted += d * v;
                c.expect(Rational(weighted, factorial(n - 1)) == Rational(n - 1, 2), "mean n=", n);
            }
        }
        results.push_back(std::move(c).take());
    }
    {
        detail::Check c("wilson: n | (n-1)! + (n-1)^2 for prime n <= 23");
        for (int n : {2, 3, 5, 7, 11, 13, 17, 19, 23})
            c.expect((factorial(n - 1) + Bigint(n - 1) * (n - 1)) % n == 0, "n=", n);
        results.push_back(std::move(c).take());
    }
    {
        detail::Check c("generating-function coefficients agree with per-degree sums (n <= 30)");
        for (int n = 3; n <= n30; ++n) {
            try {
                const auto coeffs = gen_poly_coefficients(n);
                Bigint sum = 0;
                for (const auto& v : coeffs) sum += v;
                c.expect(sum == factorial(n - 1), "coefficient sum n=", n);
            } catch (const std::exception& e) {
                c.expect(false, "n=", n, ": ", e.what());
            }
        }
        results.push_back(std::move(c).take());
    }
    return results;
}

// ---------------------------------------------------------------------------
// oracle
// ---------------------------------------------------------------------------

inline std::vector<CheckResult> verify_oracle(const VerifyOptions& opts = {}) {
    std::vector<CheckResult> results;
    const int n_max = detail::effective(opts.n_cap, 11);
    OracleOptions oracle{std::max(n_max, 12), opts.workers};

    detail::Check equivalence("oracle distributions equal formula tables (2 <= n <= " +
                              std::to_string(n_max) + ")");
    detail::Check partition("oracle totals equal (n-1)!");
    detail::Check class_size("joint entries divisible by the type size n/s");
    detail::Check marginals("joint marginals reproduce the by-degree and by-symmetry tables");
    detail::Check types("type counts: exact divisions and sum T_n");
    detail::Check moments("oracle moments equal the exact mean/variance formulas");
    for (int n = 2; n <= n_max; ++n) {
        const auto census = scan_cycles(n, oracle);
        const auto by_degree = degree_distribution_from(census);
        const auto by_symmetry = symmetry_distribution_from(census);
        const auto descents = descent_distribution_from(census);
        const auto joint = joint_distribution_from(census);

        equivalence.expect(by_degree == degree_table(n), "by-degree n=", n);
        equivalence.expect(by_symmetry == symmetry_table(n), "by-symmetry n=", n);
        equivalence.expect(descents == restricted_eulerian_table(n), "descents n=", n);
        partition.expect(census.total == factorial(n - 1), "n=", n);

        for (const auto& [key, count] : joint.entries)
            class_size.expect(count % (n / key.sym) == 0, "n=", n, " (d=", key.degree, ", s=", key.sym, ")");

        IndexTable joint_by_degree{n, TableKind::by_degree, {}};
        for (int d = 1; d <= (n >= 3 ? n - 2 : 1); ++d) joint_by_degree.entries[d] = 0;
        IndexTable joint_by_sym{n, TableKind::by_symmetry, {}};
        for (long long s : divisors(n)) joint_by_sym.entries[static_cast<int>(s)] = 0;
        for (const auto& [key, count] : joint.entries) {
            joint_by_degree.entries[key.degree] += count;
            joint_by_sym.entries[key.sym] += count;
        }
        marginals.expect(joint_by_degree == by_degree, "degree marginal n=", n);
        marginals.expect(joint_by_sym == by_symmetry, "symmetry marginal n=", n);

        try {
            const auto type_table = type_distribution_from(census);
            types.expect(type_table.total() == type_count(n), "sum T_{n,d} != T_n at n=", n);
        } catch (const std::exception& e) {
            types.expect(false, "n=", n, ": ", e.what());
        }

        if (n >= 3) {
            Bigint first = 0, second = 0;
            for (const auto& [d, v] : by_degree.entries) {
                first += d * v;
                second += Bigint(d) * d * v;
            }
            const Rational mean(first, factorial(n - 1));
            moments.expect(mean == degree_mean(n), "mean n=", n);
            if (n >= 5) {
                const Rational var = Rational(second, factorial(n - 1)) - mean * mean;
                moments.expect(var == degree_variance(n), "variance n=", n);
            }
        }
    }
    results.push_back(std::move(equivalence).take());
    results.push_back(std::move(partition).take());
    results.push_back(std::move(class_size).take());
    results.push_back(std::move(marginals).take());
    results.push_back(std::move(types).take());
    results.push_back(std::move(moments).take());

    {
        detail::Check c("oracle determinism across worker counts");
        const int n = std::min(8, n_max);
        const auto a = scan_cycles(n, {12, 1});
        const auto b = scan_cycles(n, {12, 3});
        const auto d = scan_cycles(n, {12, 7});
        c.expect(a.joint == b.joint && a.descents == b.descents, "1 vs 3 workers at n=", n);
        c.expect(a.joint == d.joint && a.descents == d.descents, "1 vs 7 workers at n=", n);
        results.push_back(std::move(c).take());
    }
    {
        detail::Check c("eulerian histogram over S_n matches A_{n,d}; peak at floor(n/2)");
        for (int n = 1; n <= std::min(10, n_max); ++n) {
            const auto table = eulerian_distribution(n);
            c.expect(table == eulerian_table_formula(n), "n=", n);
            c.expect(table.total() == factorial(n), "total n=", n);
            const Bigint peak = table.at_or_zero(n / 2);
            for (const auto& [d, v] : table.entries) c.expect(v <= peak, "peak n=", n, " d=", d);
        }
        results.push_back(std::move(c).take());
    }
    return results;
}

// ---------------------------------------------------------------------------
// dynamics
// ---------------------------------------------------------------------------

namespace detail {

/// Degree of the realized cycle straight from sorted numerators: the images
/// keep the relative order of their indices, so descents of the realized
/// cycle are descents of the mapped-numerator sequence.
inline int realized_degree(std::span<const std::uint64_t> nums, int k, std::uint64_t m) {
    const int n = static_cast<int>(nums.size());
    int deg = 0;
    for (int i = 0; i < n; ++i) {
        const std::uint64_t a = mulmod(nums[static_cast<std::size_t>(i)], static_cast<std::uint64_t>(k), m);
        const std::uint64_t b =
            mulmod(nums[static_cast<std::size_t>((i + 1) % n)], static_cast<std::uint64_t>(k), m);
        if (a > b) ++deg;
    }
    return deg;
}

inline bool has_exact_period(std::uint64_t p, int n, int k, std::uint64_t m) {
    for (long long r : divisors(n)) {
        if (r == n) continue;
        std::uint64_t kr = 1;
        for (long long i = 0; i < r; ++i) kr = mulmod(kr, static_cast<std::uint64_t>(k), m);
        if (mulmod((kr + m - 1) % m, p, m) == 0) return false;
    }
    return true;
}

} // namespace detail

inline std::vector<CheckResult> verify_dynamics(const VerifyOptions& opts = {}) {
    std::vector<CheckResult> results;
    const int k_max = detail::effective(opts.k_cap, 6);
    const int n_max = detail::effective(opts.n_cap, 12);
    const DynamicsOptions dyn{};

    {
        detail::Check census("orbit census: |orbits(k,n)| = P_n(k)/n");
        detail::Check degrees("realized-degree census matches the closed form");
        detail::Check bound("every orbit realizes a cycle of degree <= k");
        for (int k = 2; k <= k_max; ++k)
            for (int n = 1; n <= n_max; ++n) {
                std::uint64_t m;
                try {
                    m = orbit_modulus(k, n, dyn);
                } catch (const CapExceeded&) {
                    continue;
                }
                (void)m;
                std::vector<std::uint64_t> per_degree(static_cast<std::size_t>(n) + 1, 0);
                std::uint64_t total = 0;
                for_each_orbit(
                    k, n,
                    [&](std::span<const std::uint64_t> nums, std::uint64_t modulus) {
                        ++total;
                        if (n >= 2) ++per_degree[static_cast<std::size_t>(detail::realized_degree(nums, k, modulus))];
                    },
                    dyn);
                census.expect(Bigint(total) * n == periodic_point_count(n, k), "k=", k, " n=", n);
                if (n >= 2) {
                    for (int d = 1; d <= n; ++d) {
                        const Bigint expected = d <= n - 2 || n == 2 ? degree_class_orbit_count(n, d, k) : 0;
                        degrees.expect(per_degree[static_cast<std::size_t>(d)] == expected, "k=", k, " n=", n,
                                       " d=", d);
                        if (d > k)
                            bound.expect(per_degree[static_cast<std::size_t>(d)] == 0, "k=", k, " n=", n,
                                         " d=", d);
                    }
                }
            }
        results.push_back(std::move(census).take());
        results.push_back(std::move(degrees).take());
        results.push_back(std::move(bound).take());
    }
    {
        detail::Check c("realizing orbits <-> admissible vectors is a bijection (n <= 7, k <= 5)");
        for (int k = 2; k <= std::min(5, k_max); ++k)
            for (int n = 2; n <= std::min(7, n_max); ++n) {
                std::map<std::vector<int>, std::vector<std::vector<int>>> seen;
                for_each_orbit(
                    k, n,
                    [&](std::span<const std::uint64_t> nums, std::uint64_t m) {
                        auto orbit = orbit_from_numerators(k, n, nums, m);
                        seen[realized_cycle(orbit).one_line()].push_back(deployment_vector(orbit).w);
                    },
                    dyn);
                enumerate_cycles(n, [&](const Cycle& cyc) {
                    const int d = degree(cyc);
                    auto it = seen.find(cyc.one_line());
                    std::vector<std::vector<int>> got;
                    if (it != seen.end()) got = it->second;
                    if (k < std::max(d, 2)) {
                        c.expect(got.empty(), "k=", k, " ", format_cycle(cyc), ": orbits exist below degree");
                        return;
                    }
                    std::sort(got.begin(), got.end());
                    c.expect(std::adjacent_find(got.begin(), got.end()) == got.end(), "k=", k, " ",
                             format_cycle(cyc), ": duplicate deployment");
                    std::vector<std::vector<int>> want;
                    for (const auto& dep : admissible_vectors(cyc, k)) want.push_back(dep.w);
                    std::sort(want.begin(), want.end());
                    c.expect(got == want, "k=", k, " ", format_cycle(cyc), ": orbit deployments != admissible set");
                });
            }
        results.push_back(std::move(c).take());
    }
    {
        detail::Check c("deployment contains every signature-required entry (n <= 8, k <= 5)");
        for (int k = 2; k <= std::min(5, k_max); ++k)
            for (int n = 3; n <= std::min(8, n_max); ++n)
                for_each_orbit(
                    k, n,
                    [&](std::span<const std::uint64_t> nums, std::uint64_t m) {
                        const auto orbit = orbit_from_numerators(k, n, nums, m);
                        const auto dep = deployment_vector(orbit);
                        for (int i : detail::required_entries(realized_cycle(orbit)))
                            c.expect(std::find(dep.w.begin(), dep.w.end(), i) != dep.w.end(), "k=", k,
                                     " n=", n, " missing entry ", i);
                    },
                    dyn);
        results.push_back(std::move(c).take());
    }
    {
        detail::Check invariance("translating an orbit by 1/(k-1) yields a period-n orbit");
        detail::Check classes("Delta_n(k) counts translation classes of period-n points");
        for (int k = 2; k <= std::min(5, k_max); ++k)
            for (int n = 1; n <= std::min(8, n_max); ++n) {
                const std::uint64_t m = orbit_modulus(k, n, dyn);
                const std::uint64_t shift = m / static_cast<std::uint64_t>(k - 1);
                std::unordered_set<std::uint64_t> reps;
                for_each_orbit(
                    k, n,
                    [&](std::span<const std::uint64_t> nums, std::uint64_t modulus) {
                        std::vector<std::uint64_t> moved(nums.begin(), nums.end());
                        for (auto& p : moved) p = (p + shift) % modulus;
                        std::sort(moved.begin(), moved.end());
                        for (std::size_t i = 0; i < moved.size(); ++i) {
                            invariance.expect(detail::has_exact_period(moved[i], n, k, modulus), "k=", k,
                                              " n=", n, ": translated point has wrong period");
                            const std::uint64_t img =
                                detail::mulmod(moved[i], static_cast<std::uint64_t>(k), modulus);
                            invariance.expect(std::binary_search(moved.begin(), moved.end(), img), "k=", k,
                                              " n=", n, ": translated set is not m_k-invariant");
                        }
                        for (auto p : nums) {
                            std::uint64_t rep = p;
                            std::uint64_t q = p;
                            for (int j = 1; j < k - 1; ++j) {
                                q = (q + shift) % modulus;
                                rep = std::min(rep, q);
                            }
                            reps.insert(rep);
                        }
                    },
                    dyn);
                classes.expect(Bigint(reps.size()) == delta(n, k), "k=", k, " n=", n);
            }
        results.push_back(std::move(invariance).take());
        results.push_back(std::move(classes).take());
    }
    return results;
}

// ---------------------------------------------------------------------------
// stats
// ---------------------------------------------------------------------------

inline std::vector<CheckResult> verify_stats(const VerifyOptions& opts = {}) {
    std::vector<CheckResult> results;
    const int n_max = std::max(detail::effective(opts.n_cap, 60), 5);

    {
        detail::Check c("table moments equal the closed-form mean/variance (5 <= n <= " +
                        std::to_string(n_max) + ")");
        for (int n = 5; n <= n_max; ++n) {
            const auto row = degree_row(n);
            Bigint first = 0, second = 0;
            for (int d = 1; d <= static_cast<int>(row.size()); ++d) {
                first += d * row[static_cast<std::size_t>(d - 1)];
                second += Bigint(d) * d * row[static_cast<std::size_t>(d - 1)];
            }
            const Rational mean(first, factorial(n - 1));
            const Rational var = Rational(second, factorial(n - 1)) - mean * mean;
            c.expect(mean == degree_mean(n), "mean n=", n);
            c.expect(var == degree_variance(n), "variance n=", n);
        }
        results.push_back(std::move(c).take());
    }
    {
        detail::Check c("CDF validity: nondecreasing, within [0,1], terminal exactly 1");
        for (int n : {5, 10, 20, 50}) {
            const auto dist = normalized_distribution(n);
            Rational cum = 0;
            double prev_x = -1e300;
            for (const auto& pt : dist.support) {
                c.expect(pt.probability > 0, "n=", n, " d=", pt.degree);
                c.expect(pt.x > prev_x, "abscissas not increasing at n=", n);
                prev_x = pt.x;
                cum += pt.probability;
                c.expect(cum <= 1, "cumulative above 1 at n=", n);
            }
            c.expect(cum == 1, "terminal CDF != 1 at n=", n);
        }
        results.push_back(std::move(c).take());
    }
    {
        detail::Check c("Kolmogorov distance decreases along n = 20, 50, 100, 200");
        double prev = 2.0;
        for (int n : {20, 50, 100, 200}) {
            const double d = kolmogorov_distance(n);
            c.expect(d >= 0.0 && d < prev, "n=", n, " distance=", d, " previous=", prev);
            prev = d;
        }
        results.push_back(std::move(c).take());
    }
    {
        detail::Check c("normal CDF within 1e-7 of the Simpson integration oracle on [-8, 8]");
        const auto grid = detail::normal_cdf_simpson_grid(8.0, 0.01, 16);
        double worst = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double x = 0.01 * static_cast<double>(i);
            worst = std::max(worst, std::abs(standard_normal_cdf(x) - grid[i]));
            worst = std::max(worst, std::abs(standard_normal_cdf(-x) - (1.0 - grid[i])));
        }
        c.expect(worst <= 1e-7, "max |Phi - oracle| = ", worst);
        results.push_back(std::move(c).take());
    }
    {
        detail::Check c("unimodality with peak at floor(n/2) (numerical conjecture, n <= 60)");
        for (int n = 5; n <= n_max; ++n) {
            const auto row = degree_row(n);
            const Bigint& peak = row[static_cast<std::size_t>(n / 2 - 1)];
            bool rising = true;
            Bigint prev = 0;
            for (const auto& v : row) {
                c.expect(v <= peak, "peak violated at n=", n);
                if (rising && v < prev) rising = false;
                else if (!rising) c.expect(v <= prev, "not unimodal at n=", n);
                prev = v;
            }
        }
        results.push_back(std::move(c).take());
    }
    return results;
}

inline std::vector<CheckResult> verify_all(const VerifyOptions& opts = {}) {
    std::vector<CheckResult> all;
    for (auto* fn : {&verify_formulas, &verify_oracle, &verify_dynamics, &verify_stats}) {
        auto part = fn(opts);
        all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return all;
}

} // namespace cyclic
