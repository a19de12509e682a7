#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "cyclic/formulas.hpp"

using namespace cyclic;

TEST_CASE("divisors, mobius, totient", "[formulas]") {
    CHECK(divisors(1) == std::vector<long long>{1});
    CHECK(divisors(12) == std::vector<long long>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(13) == std::vector<long long>{1, 13});

    CHECK(mobius(1) == 1);
    CHECK(mobius(4) == 0);
    CHECK(mobius(6) == 1);
    CHECK(mobius(30) == -1);

    CHECK(totient(1) == 1);
    CHECK(totient(8) == 4);
    CHECK(totient(13) == 12);

    for (long long m = 1; m <= 300; ++m) {
        long long direct = 0;
        for (long long x = 1; x <= m; ++x)
            if (std::gcd(x, m) == 1) ++direct;
        CHECK(totient(m) == direct);
    }
}

TEST_CASE("binomials", "[formulas]") {
    CHECK(binomial(6, 0) == 1);
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(6, 7) == 0);
    CHECK(binomial(6, -1) == 0);
    CHECK(binomial(52, 26) == Bigint("495918532948104"));
}

TEST_CASE("periodic point counts and delta", "[formulas]") {
    CHECK(periodic_point_count(1, 2) == 1);
    CHECK(periodic_point_count(6, 2) == 54);
    CHECK(periodic_point_count(8, 3) == 6480);

    CHECK(delta(6, 1) == totient(6));
    CHECK(delta(9, 1) == totient(9));
    CHECK(delta(6, 2) == 54);
    CHECK(delta(8, 3) == 3240);

    for (int n = 1; n <= 16; ++n)
        for (int k = 2; k <= 5; ++k) {
            CHECK(periodic_point_count(n, k) % n == 0);
            CHECK(delta(n, k) * (k - 1) == periodic_point_count(n, k));
        }
}

TEST_CASE("count by degree", "[formulas]") {
    CHECK(count_by_degree(2, 1) == 1);
    CHECK(count_by_degree(8, 3) == 1432);
    CHECK(count_by_degree(12, 10) == 1340);
    CHECK(count_by_degree(12, 6) == 15593376);
    CHECK(count_by_degree(9, 8) == 0);
    for (int n = 3; n <= 12; ++n) {
        CHECK(count_by_degree(n, 1) == totient(n));
        for (int d = n - 1; d <= n + 3; ++d) CHECK(count_by_degree(n, d) == 0);
    }
}

TEST_CASE("count by symmetry", "[formulas]") {
    CHECK(count_by_symmetry(6, 2) == 6);
    CHECK(count_by_symmetry(8, 1) == 4992);
    CHECK(count_by_symmetry(4, 2) == 0);
    CHECK(count_by_symmetry(15, 1) == Bigint("87178287120"));
    CHECK_THROWS_AS(count_by_symmetry(6, 4), NotADivisor);
    for (int n = 2; n <= 14; ++n) {
        CHECK(count_by_symmetry(n, n) == totient(n));
        CHECK(symmetry_table(n).total() == factorial(n - 1));
    }
}

TEST_CASE("type counts", "[formulas]") {
    CHECK(type_count(5) == 8);
    CHECK(type_count(8) == 640);
    CHECK(type_count(15) == Bigint("5811886656"));
    // prime case reduces to ((n-1)! + (n-1)^2)/n
    for (int n : {3, 5, 7, 11, 13}) {
        CHECK(type_count(n) == (factorial(n - 1) + Bigint(n - 1) * (n - 1)) / n);
    }
    // T_n = (1/n) sum_s s N_n^s
    for (int n = 2; n <= 14; ++n) {
        Bigint sum = 0;
        for (long long s : divisors(n)) sum += s * count_by_symmetry(n, static_cast<int>(s));
        CHECK(sum == n * type_count(n));
    }
}

TEST_CASE("eulerian numbers", "[formulas]") {
    CHECK(eulerian(2, 0) == 1);
    CHECK(eulerian(2, 1) == 1);
    CHECK(eulerian(4, 1) == 11);
    CHECK(eulerian(4, 2) == 11);
    CHECK(eulerian(3, -1) == 0);
    CHECK(eulerian(3, 3) == 0);
    for (int n = 1; n <= 12; ++n) {
        CHECK(eulerian_table_formula(n).total() == factorial(n));
        CHECK(eulerian(n, 0) == 1);
        CHECK(eulerian(n, n - 1) == 1);
        for (int d = 0; d <= n - 1; ++d) {
            CHECK(eulerian(n, d) == eulerian(n, n - d - 1));
            CHECK(eulerian(n, d) == eulerian_alternating_sum(n, d));
        }
        // Worpitzky for k <= 10
        for (int k = 1; k <= 10; ++k) {
            Bigint sum = 0;
            for (int d = 0; d <= n - 1; ++d) sum += binomial(n + k - d - 1, n) * eulerian(n, d);
            CHECK(sum == bigint_pow(k, static_cast<unsigned>(n)));
        }
    }
}

TEST_CASE("circular words and restricted eulerian numbers", "[formulas]") {
    CHECK(circular_word_count(3, 2) == 2);
    CHECK(circular_word_count(1, 7) == 7);
    for (int n = 2; n <= 10; ++n) CHECK(circular_word_count(n, 1) == 0);

    CHECK(restricted_eulerian(3, 1) == 2);
    for (int n = 2; n <= 10; ++n) {
        CHECK(restricted_eulerian(n, 0) == 0);
        CHECK(restricted_eulerian_table(n).total() == factorial(n - 1));
    }
}

TEST_CASE("generating function coefficients", "[formulas]") {
    CHECK(gen_poly_coefficients(5) == std::vector<Bigint>{4, 10, 10});
    CHECK(gen_poly_coefficients(6) == std::vector<Bigint>{2, 42, 54, 22});
    for (int n = 3; n <= 20; ++n) {
        const auto coeffs = gen_poly_coefficients(n);
        Bigint sum = 0;
        for (const auto& c : coeffs) sum += c;
        CHECK(sum == factorial(n - 1));
    }
}

TEST_CASE("degree-count identity against delta", "[formulas]") {
    CHECK(worpitzky_analog_lhs(6, 2) == 54);
    CHECK(worpitzky_analog_lhs(6, 2) == delta(6, 2));
    CHECK(worpitzky_analog_lhs(8, 4) == delta(8, 4));
    for (int n = 2; n <= 16; ++n) {
        CHECK(worpitzky_analog_lhs(n, 1) == totient(n));
        for (int k = 1; k <= 8; ++k) CHECK(worpitzky_analog_lhs(n, k) == delta(n, k));
    }
}

TEST_CASE("degree mean and variance", "[formulas]") {
    CHECK(degree_mean(3) == Rational(1));
    CHECK(degree_mean(5) == Rational(9, 4));
    CHECK(degree_mean(8) == Rational(27, 7));
    CHECK(degree_variance(5) == Rational(25, 48));
    CHECK(degree_variance(6) == Rational(14, 25));
    CHECK(degree_variance(12) == Rational(611, 605));
    CHECK_THROWS_AS(degree_mean(2), TooSmall);
    CHECK_THROWS_AS(degree_variance(4), TooSmall);

    // moments of the by-degree table agree with the closed forms
    for (int n = 3; n <= 14; ++n) {
        const auto row = degree_row(n);
        Bigint first = 0, second = 0;
        for (int d = 1; d <= static_cast<int>(row.size()); ++d) {
            first += d * row[static_cast<std::size_t>(d - 1)];
            second += Bigint(d) * d * row[static_cast<std::size_t>(d - 1)];
        }
        const Rational mean(first, factorial(n - 1));
        CHECK(mean == degree_mean(n));
        if (n >= 5) CHECK(Rational(second, factorial(n - 1)) - mean * mean == degree_variance(n));
    }
}

TEST_CASE("asymptotic ratio", "[formulas]") {
    CHECK(asymptotic_ratio(4) == Rational(3, 2));
    CHECK(asymptotic_ratio(15) == Rational(Bigint("5811886656"), Bigint("6227020800")));
    const Rational r15 = asymptotic_ratio(15);
    const Rational r30 = asymptotic_ratio(30);
    CHECK(r15 < 1);
    CHECK(r15 < r30);
    CHECK(r30 < 1);
}

TEST_CASE("wilson via integrality of the prime type count", "[formulas]") {
    for (int n : {2, 3, 5, 7, 11, 13, 17, 19, 23})
        CHECK((factorial(n - 1) + Bigint(n - 1) * (n - 1)) % n == 0);
}
