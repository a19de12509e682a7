#pragma once

// Distribution-to-CDF pipeline for the normalized degree statistic.
// Probabilities stay exact rationals all the way to the final comparison
// against the standard normal CDF; only the abscissas (d - mean)/sigma and
// the normal CDF itself are floating point.

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "cyclic/bigint.hpp"
#include "cyclic/errors.hpp"
#include "cyclic/formulas.hpp"

namespace cyclic {

struct NormalizedDistribution {
    struct Point {
        int degree = 0;
        Rational probability;
        double x = 0.0; // (degree - mean) / sigma
    };

    int n = 0;
    Rational mean;
    Rational variance;
    double sigma = 0.0;
    std::vector<Point> support; // abscissas strictly increasing
};

/// Exact distribution of (deg - mean_n)/sigma_n over C_n; n >= 5.
inline NormalizedDistribution normalized_distribution(int n) {
    if (n < 5) throw TooSmall("normalized_distribution needs n >= 5");
    NormalizedDistribution dist;
    dist.n = n;
    dist.mean = degree_mean(n);
    dist.variance = degree_variance(n);
    dist.sigma = std::sqrt(to_double(dist.variance));
    const Bigint denom = factorial(n - 1);
    const auto row = degree_row(n);
    for (int d = 1; d <= static_cast<int>(row.size()); ++d) {
        const Bigint& count = row[static_cast<std::size_t>(d - 1)];
        if (count == 0) continue;
        const double x = to_double(Rational(d) - dist.mean) / dist.sigma;
        dist.support.push_back({d, Rational(count, denom), x});
    }
    return dist;
}

/// Standard normal CDF. erfc is evaluated by the C math library, whose
/// absolute error is a few ulp, far inside the 1e-7 budget.
inline double standard_normal_cdf(double x) {
    return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

/// sup_x |F(x) - Phi(x)| where F is the exact CDF of the normalized degree.
/// Both one-sided limits of every jump are examined.
inline double kolmogorov_distance(const NormalizedDistribution& dist) {
    Rational cumulative = 0;
    double sup = 0.0;
    for (const auto& pt : dist.support) {
        const double phi = standard_normal_cdf(pt.x);
        sup = std::max(sup, std::abs(to_double(cumulative) - phi));
        cumulative += pt.probability;
        sup = std::max(sup, std::abs(to_double(cumulative) - phi));
    }
    return sup;
}

inline double kolmogorov_distance(int n) { return kolmogorov_distance(normalized_distribution(n)); }

namespace detail {

inline std::string format_double17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace detail

/// Writes "d,count,probability,normalized_x" rows for the degree histogram.
/// For n in {3,4} the variance formula does not apply and the normalized_x
/// cells are left empty. Returns the number of data rows.
inline std::size_t histogram_csv(int n, std::ostream& out) {
    if (n < 3) throw TooSmall("histogram_csv needs n >= 3");
    out << "d,count,probability,normalized_x\n";
    const Bigint denom = factorial(n - 1);
    const auto row = degree_row(n);
    const bool normalized = n >= 5;
    Rational mean;
    double sigma = 0.0;
    if (normalized) {
        mean = degree_mean(n);
        sigma = std::sqrt(to_double(degree_variance(n)));
    }
    std::size_t rows = 0;
    for (int d = 1; d <= static_cast<int>(row.size()); ++d) {
        const Bigint& count = row[static_cast<std::size_t>(d - 1)];
        if (count == 0) continue;
        const double p = to_double(Rational(count, denom));
        out << d << ',' << count.str() << ',' << detail::format_double17(p) << ',';
        if (normalized) out << detail::format_double17(to_double(Rational(d) - mean) / sigma);
        out << '\n';
        ++rows;
    }
    return rows;
}

} // namespace cyclic
