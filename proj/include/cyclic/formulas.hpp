#pragma once

// Closed-form counts for n-cycles: the period-point counts P_n(k) of the
// multiplication maps, their rotation quotients Delta_n(k), the by-degree
// and by-symmetry distributions, type counts, Eulerian and restricted
// Eulerian numbers, and the exact mean/variance of the degree statistic.
// Everything is computed over arbitrary-precision integers.

#include <vector>

#include "cyclic/bigint.hpp"
#include "cyclic/count_table.hpp"
#include "cyclic/errors.hpp"
#include "cyclic/number_theory.hpp"

namespace cyclic {

namespace detail {

inline Bigint exact_div(Bigint numerator, const Bigint& divisor, const char* what) {
    Bigint q, r;
    boost::multiprecision::divide_qr(numerator, divisor, q, r);
    if (r != 0) throw NonIntegerTypeCount(std::string(what) + ": division is not exact");
    return q;
}

} // namespace detail

/// Number of points of exact period n under x -> kx mod 1:
/// P_n(k) = sum_{r|n} mu(n/r) (k^r - 1). Requires k >= 2.
inline Bigint periodic_point_count(int n, int k) {
    Bigint total = 0;
    for (long long r : divisors(n)) {
        const int mu = mobius(n / r);
        if (mu == 0) continue;
        total += mu * (bigint_pow(k, static_cast<unsigned>(r)) - 1);
    }
    return total;
}

/// Delta_n(k) = sum_{r|n} mu(n/r) (1 + k + ... + k^{r-1}); equals
/// P_n(k)/(k-1) for k >= 2 and phi(n) for k = 1.
inline Bigint delta(int n, int k) {
    thread_local std::map<std::pair<int, int>, Bigint> cache;
    auto it = cache.find({n, k});
    if (it != cache.end()) return it->second;
    Bigint total = 0;
    for (long long r : divisors(n)) {
        const int mu = mobius(n / r);
        if (mu == 0) continue;
        if (k == 1) {
            total += mu * Bigint(r);
        } else {
            total += mu * ((bigint_pow(k, static_cast<unsigned>(r)) - 1) / (k - 1));
        }
    }
    cache.emplace(std::pair{n, k}, total);
    return total;
}

/// N_{n,d} = sum_{i=1}^{d} (-1)^{d-i} C(n, d-i) Delta_n(i).
/// Vanishes for d >= n-1 when n >= 3.
inline Bigint count_by_degree(int n, int d) {
    Bigint total = 0;
    for (int i = 1; i <= d; ++i) {
        const Bigint term = binomial(n, d - i) * delta(n, i);
        if ((d - i) % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

/// N_n^s = (1/n) sum_{j | n/s} mu(j) phi(sj) (sj)^{n/(sj)} (n/(sj))!.
inline Bigint count_by_symmetry(int n, int s) {
    if (s < 1 || n % s != 0)
        throw NotADivisor("s = " + std::to_string(s) + " does not divide n = " + std::to_string(n));
    Bigint total = 0;
    for (long long j : divisors(n / s)) {
        const int mu = mobius(j);
        if (mu == 0) continue;
        const long long sj = s * j;
        total += mu * Bigint(totient(sj)) * bigint_pow(sj, static_cast<unsigned>(n / sj)) *
                 factorial(static_cast<int>(n / sj));
    }
    return detail::exact_div(total, n, "count_by_symmetry");
}

/// Number of combinatorial types:
/// T_n = (1/n^2) sum_{j|n} phi(j)^2 j^{n/j} (n/j)!.
inline Bigint type_count(int n) {
    Bigint total = 0;
    for (long long j : divisors(n)) {
        const Bigint phi = totient(j);
        total += phi * phi * bigint_pow(j, static_cast<unsigned>(n / j)) * factorial(static_cast<int>(n / j));
    }
    return detail::exact_div(total, Bigint(n) * n, "type_count");
}

/// Eulerian number A_{n,d} via the linear recurrence
/// A_{n,d} = (d+1) A_{n-1,d} + (n-d) A_{n-1,d-1}; 0 outside 0 <= d <= n-1.
inline Bigint eulerian(int n, int d) {
    if (n < 1 || d < 0 || d > n - 1) return 0;
    thread_local std::vector<std::vector<Bigint>> rows{{}, {1}};
    while (static_cast<int>(rows.size()) <= n) {
        const auto& prev = rows.back();
        const int m = static_cast<int>(rows.size());
        std::vector<Bigint> row(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
            Bigint v = 0;
            if (i < m - 1) v += (i + 1) * prev[static_cast<std::size_t>(i)];
            if (i > 0) v += (m - i) * prev[static_cast<std::size_t>(i - 1)];
            row[static_cast<std::size_t>(i)] = v;
        }
        rows.push_back(std::move(row));
    }
    return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(d)];
}

/// A_{n,d} by the alternating sum; cross-check route for eulerian().
inline Bigint eulerian_alternating_sum(int n, int d) {
    Bigint total = 0;
    for (int i = 1; i <= d + 1; ++i) {
        const Bigint term = binomial(n + 1, d - i + 1) * bigint_pow(i, static_cast<unsigned>(n));
        if ((d - i + 1) % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

/// Aperiodic circular words of length n over an i-letter alphabet:
/// f_n(i) = (1/n) sum_{r|n} mu(n/r) i^r.
inline Bigint circular_word_count(int n, int i) {
    Bigint total = 0;
    for (long long r : divisors(n)) {
        const int mu = mobius(n / r);
        if (mu == 0) continue;
        total += mu * bigint_pow(i, static_cast<unsigned>(r));
    }
    return detail::exact_div(total, n, "circular_word_count");
}

/// B_{n,d}: n-cycles with exactly d linear descents,
/// B_{n,d} = sum_{i=1}^{d+1} (-1)^{d-i+1} C(n+1, d-i+1) f_n(i).
inline Bigint restricted_eulerian(int n, int d) {
    Bigint total = 0;
    for (int i = 1; i <= d + 1; ++i) {
        const Bigint term = binomial(n + 1, d - i + 1) * circular_word_count(n, i);
        if ((d - i + 1) % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

/// The by-degree row [N_{n,1}, ..., N_{n,max_d}] where max_d = max(1, n-2).
inline std::vector<Bigint> degree_row(int n) {
    const int max_d = n >= 3 ? n - 2 : 1;
    std::vector<Bigint> row;
    row.reserve(static_cast<std::size_t>(max_d));
    for (int d = 1; d <= max_d; ++d) row.push_back(count_by_degree(n, d));
    return row;
}

inline IndexTable degree_table(int n) {
    IndexTable t{n, TableKind::by_degree, {}};
    const auto row = degree_row(n);
    for (int d = 1; d <= static_cast<int>(row.size()); ++d)
        t.entries[d] = row[static_cast<std::size_t>(d - 1)];
    return t;
}

inline IndexTable symmetry_table(int n) {
    IndexTable t{n, TableKind::by_symmetry, {}};
    for (long long s : divisors(n)) t.entries[static_cast<int>(s)] = count_by_symmetry(n, static_cast<int>(s));
    return t;
}

inline IndexTable restricted_eulerian_table(int n) {
    IndexTable t{n, TableKind::restricted_eulerian, {}};
    for (int d = 0; d <= n - 1; ++d) t.entries[d] = restricted_eulerian(n, d);
    return t;
}

inline IndexTable eulerian_table_formula(int n) {
    IndexTable t{n, TableKind::eulerian, {}};
    for (int d = 0; d <= n - 1; ++d) t.entries[d] = eulerian(n, d);
    return t;
}

/// Coefficients [N_{n,1}, ..., N_{n,n-2}] of G_n(x), computed both by the
/// alternating sum per degree and by expanding (1-x)^n * sum_i Delta_n(i) x^i
/// through degree n-2. Throws if the two routes disagree.
inline std::vector<Bigint> gen_poly_coefficients(int n) {
    if (n < 3) throw TooSmall("gen_poly_coefficients needs n >= 3");
    std::vector<Bigint> direct = degree_row(n);
    // truncated product route
    const int top = n - 2;
    std::vector<Bigint> deltas(static_cast<std::size_t>(top) + 1);
    for (int i = 1; i <= top; ++i) deltas[static_cast<std::size_t>(i)] = delta(n, i);
    std::vector<Bigint> expanded(static_cast<std::size_t>(top), 0);
    for (int j = 0; j <= std::min(n, top); ++j) {
        Bigint coeff = binomial(n, j);
        if (j % 2 == 1) coeff = -coeff;
        for (int i = 1; i + j <= top; ++i)
            expanded[static_cast<std::size_t>(i + j - 1)] += coeff * deltas[static_cast<std::size_t>(i)];
    }
    if (direct != expanded)
        throw NonIntegerTypeCount("generating-function expansion disagrees with the per-degree sums at n = " +
                                  std::to_string(n));
    return direct;
}

/// Left side of sum_d C(n+k-d-1, n-1) N_{n,d} = Delta_n(k).
inline Bigint worpitzky_analog_lhs(int n, int k) {
    Bigint total = 0;
    for (int d = 1; d <= n - 1; ++d) total += binomial(n + k - d - 1, n - 1) * count_by_degree(n, d);
    return total;
}

/// Exact mean of the degree over all n-cycles: n/2 - 1/(n-1), n >= 3.
inline Rational degree_mean(int n) {
    if (n < 3) throw TooSmall("degree_mean needs n >= 3");
    return Rational(n, 2) - Rational(1, n - 1);
}

/// Exact variance of the degree: n/12 + n/((n-1)^2 (n-2)), n >= 5.
inline Rational degree_variance(int n) {
    if (n < 5) throw TooSmall("degree_variance needs n >= 5");
    return Rational(n, 12) + Rational(n, Bigint(n - 1) * (n - 1) * (n - 2));
}

/// T_n / (n-2)! as an exact rational; tends to 1 as n grows.
inline Rational asymptotic_ratio(int n) {
    if (n < 3) throw TooSmall("asymptotic_ratio needs n >= 3");
    return Rational(type_count(n), factorial(n - 2));
}

/// The exact total a well-formed table of the given kind must have.
inline Bigint expected_total(TableKind kind, int n) {
    switch (kind) {
        case TableKind::eulerian: return factorial(n);
        case TableKind::type_by_degree: return type_count(n);
        default: return factorial(n - 1);
    }
}

} // namespace cyclic
