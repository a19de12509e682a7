#pragma once

// Elementary number-theoretic helpers: divisors, Mobius, totient, factorials
// and binomial coefficients over arbitrary-precision integers. Factorization
// is plain trial division; intended inputs stay well below 10^7.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "cyclic/bigint.hpp"

namespace cyclic {

inline std::vector<long long> divisors(long long m) {
    std::vector<long long> small, large;
    for (long long d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            small.push_back(d);
            if (d != m / d) large.push_back(m / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

inline int mobius(long long m) {
    if (m == 1) return 1;
    int sign = 1;
    for (long long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0) return 0;
            sign = -sign;
        }
    }
    if (m > 1) sign = -sign;
    return sign;
}

inline long long totient(long long m) {
    long long result = m;
    for (long long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

inline const Bigint& factorial(int n) {
    thread_local std::vector<Bigint> cache{1, 1};
    while (static_cast<int>(cache.size()) <= n)
        cache.push_back(cache.back() * static_cast<int>(cache.size()));
    return cache[static_cast<std::size_t>(n)];
}

/// C(n, k) with the convention C(n, k) = 0 for k < 0 or k > n.
inline Bigint binomial(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    thread_local std::map<std::pair<long long, long long>, Bigint> cache;
    auto it = cache.find({n, k});
    if (it != cache.end()) return it->second;
    Bigint r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    cache.emplace(std::pair{n, k}, r);
    return r;
}

inline Bigint bigint_pow(const Bigint& base, unsigned exp) {
    Bigint r = 1, b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

} // namespace cyclic
