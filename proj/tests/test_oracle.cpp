#include <catch2/catch_amalgamated.hpp>

#include "cyclic/enumerate.hpp"
#include "cyclic/formulas.hpp"

using namespace cyclic;

TEST_CASE("enumerate_cycles visits (n-1)! distinct cycles", "[oracle]") {
    CHECK(enumerate_cycles(3, [](const Cycle&) {}) == 2);
    CHECK(enumerate_cycles(5, [](const Cycle&) {}) == 24);

    std::set<std::vector<int>> seen;
    const auto count = enumerate_cycles(6, [&](const Cycle& c) { seen.insert(c.one_line()); });
    CHECK(count == 120);
    CHECK(seen.size() == 120);
    CHECK_THROWS_AS(enumerate_cycles(1, [](const Cycle&) {}), TooSmall);
}

TEST_CASE("distributions match known reference rows", "[oracle]") {
    const auto d5 = degree_distribution(5);
    CHECK(d5.entries == std::map<int, Bigint>{{1, 4}, {2, 10}, {3, 10}});

    const auto d7 = degree_distribution(7);
    CHECK(d7.entries == std::map<int, Bigint>{{1, 6}, {2, 84}, {3, 336}, {4, 252}, {5, 42}});

    const auto d2 = degree_distribution(2);
    CHECK(d2.entries == std::map<int, Bigint>{{1, 1}});

    const auto s6 = symmetry_distribution(6);
    CHECK(s6.entries == std::map<int, Bigint>{{1, 108}, {2, 6}, {3, 4}, {6, 2}});

    const auto s4 = symmetry_distribution(4);
    CHECK(s4.entries == std::map<int, Bigint>{{1, 4}, {2, 0}, {4, 2}});

    const auto t8 = type_distribution_by_degree(8);
    CHECK(t8.entries ==
          std::map<int, Bigint>{{1, 4}, {2, 26}, {3, 182}, {4, 292}, {5, 126}, {6, 10}});

    const auto t6 = type_distribution_by_degree(6);
    CHECK(t6.entries == std::map<int, Bigint>{{1, 2}, {2, 7}, {3, 10}, {4, 5}});

    const auto b3 = descent_distribution_cycles(3);
    CHECK(b3.entries == std::map<int, Bigint>{{0, 0}, {1, 2}, {2, 0}});
}

TEST_CASE("joint distribution at n = 8", "[oracle]") {
    const auto joint = joint_distribution(8);
    CHECK(joint.at_or_zero({3, 1}) == 1408);
    CHECK(joint.at_or_zero({3, 2}) == 24);
    CHECK(joint.at_or_zero({5, 1}) == 960);
    CHECK(joint.at_or_zero({5, 2}) == 16);
    CHECK(joint.at_or_zero({5, 4}) == 4);
    std::set<std::pair<int, int>> keys;
    for (const auto& [key, v] : joint.entries) keys.insert({key.degree, key.sym});
    CHECK(keys == std::set<std::pair<int, int>>{
                      {1, 8}, {2, 1}, {3, 1}, {3, 2}, {4, 1}, {5, 1}, {5, 2}, {5, 4}, {6, 1}});
    // each type contributes exactly n/s cycles
    for (const auto& [key, count] : joint.entries) CHECK(count % (8 / key.sym) == 0);
}

TEST_CASE("oracle equals formulas for small n", "[oracle]") {
    for (int n = 2; n <= 9; ++n) {
        const auto census = scan_cycles(n);
        CHECK(census.total == factorial(n - 1));
        CHECK(degree_distribution_from(census) == degree_table(n));
        CHECK(symmetry_distribution_from(census) == symmetry_table(n));
        CHECK(descent_distribution_from(census) == restricted_eulerian_table(n));
        CHECK(type_distribution_from(census).total() == type_count(n));
    }
}

TEST_CASE("oracle is deterministic across worker counts", "[oracle]") {
    const auto one = scan_cycles(8, {12, 1});
    const auto three = scan_cycles(8, {12, 3});
    const auto many = scan_cycles(8, {12, 16});
    CHECK(one.joint == three.joint);
    CHECK(one.joint == many.joint);
    CHECK(one.descents == three.descents);
    CHECK(one.descents == many.descents);
}

TEST_CASE("oracle cap", "[oracle]") {
    CHECK_THROWS_AS(scan_cycles(13, {12, 1}), CapExceeded);
    CHECK_THROWS_AS(degree_distribution(9, {8, 1}), CapExceeded);
}

TEST_CASE("type table derives from the joint table exactly", "[oracle]") {
    for (int n = 4; n <= 9; ++n) {
        const auto census = scan_cycles(n);
        CHECK(type_table_from_joint(joint_distribution_from(census)) == type_distribution_from(census));
    }
}

TEST_CASE("eulerian histogram over the symmetric group", "[oracle]") {
    const auto e3 = eulerian_distribution(3);
    CHECK(e3.entries == std::map<int, Bigint>{{0, 1}, {1, 4}, {2, 1}});
    const auto e1 = eulerian_distribution(1);
    CHECK(e1.entries == std::map<int, Bigint>{{0, 1}});
    for (int n = 1; n <= 8; ++n) {
        const auto table = eulerian_distribution(n);
        CHECK(table == eulerian_table_formula(n));
        const Bigint peak = table.at_or_zero(n / 2);
        for (const auto& [d, v] : table.entries) CHECK(v <= peak);
    }
    CHECK_THROWS_AS(eulerian_distribution(11), CapExceeded);
}

TEST_CASE("oracle moments match the closed forms", "[oracle]") {
    for (int n = 5; n <= 9; ++n) {
        const auto table = degree_distribution(n);
        Bigint first = 0, second = 0;
        for (const auto& [d, v] : table.entries) {
            first += d * v;
            second += Bigint(d) * d * v;
        }
        const Rational mean(first, factorial(n - 1));
        const Rational var = Rational(second, factorial(n - 1)) - mean * mean;
        CHECK(mean == degree_mean(n));
        CHECK(var == degree_variance(n));
    }
}
