#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>

#include "cyclic/dynamics.hpp"
#include "cyclic/enumerate.hpp"

using namespace cyclic;

namespace {

CirclePoint pt(std::uint64_t p, std::uint64_t q) { return CirclePoint::reduced(p, q); }

} // namespace

TEST_CASE("periodic points", "[dynamics]") {
    const auto fixed = periodic_points(2, 1);
    REQUIRE(fixed.size() == 1);
    CHECK(fixed[0] == pt(0, 1));

    const auto two = periodic_points(2, 2);
    REQUIRE(two.size() == 2);
    CHECK(two[0] == pt(1, 3));
    CHECK(two[1] == pt(2, 3));

    CHECK(periodic_points(3, 8).size() == 6480);
    for (int k = 2; k <= 5; ++k)
        for (int n = 1; n <= 8; ++n)
            CHECK(Bigint(periodic_points(k, n).size()) == periodic_point_count(n, k));
}

TEST_CASE("orbit counts", "[dynamics]") {
    CHECK(orbits(2, 6).size() == 9);
    CHECK(orbits(4, 6).size() == 670);
    CHECK(orbits(3, 8).size() == 810);
    CHECK(count_orbits(4, 6) == 670);
    for (int k = 2; k <= 5; ++k)
        for (int n = 1; n <= 8; ++n)
            CHECK(Bigint(count_orbits(k, n)) * n == periodic_point_count(n, k));
    CHECK_THROWS_AS(orbits(2, 30), CapExceeded);
    CHECK_THROWS_AS(orbit_modulus(2, 27, {}), CapExceeded);
    CHECK(orbit_modulus(2, 26, {}) == (std::uint64_t{1} << 26) - 1);
}

TEST_CASE("realized cycles", "[dynamics]") {
    const auto two = orbits(2, 2);
    REQUIRE(two.size() == 1);
    CHECK(realized_cycle(two[0]) == make_cycle({2, 1}));

    // the m_4 orbit containing 183/455 realizes (1 3 2 4 6 5)
    const Cycle target = make_cycle({3, 4, 2, 6, 1, 5});
    bool found = false;
    for (const auto& o : orbits(4, 6)) {
        if (std::find(o.points.begin(), o.points.end(), pt(183, 455)) == o.points.end()) continue;
        found = true;
        CHECK(realized_cycle(o) == target);
        CHECK(deployment_vector(o).w == std::vector<int>{0, 3, 6});
    }
    CHECK(found);

    for (const auto& o : orbits(3, 5)) CHECK(degree(realized_cycle(o)) <= 3);
}

TEST_CASE("deployment vectors", "[dynamics]") {
    const auto two = orbits(2, 2);
    CHECK(deployment_vector(two[0]).w == std::vector<int>{2});
    for (const auto& o : orbits(4, 5)) {
        const auto dep = deployment_vector(o);
        REQUIRE(dep.w.size() == 3);
        CHECK(std::is_sorted(dep.w.begin(), dep.w.end()));
        CHECK(dep.w.back() == 5);
    }
}

TEST_CASE("admissible vectors of the worked example", "[dynamics]") {
    const Cycle c = make_cycle({3, 4, 2, 6, 1, 5});
    const auto vectors = admissible_vectors(c, 4);
    const std::vector<std::vector<int>> expected{{0, 3, 6}, {1, 3, 6}, {2, 3, 6}, {3, 3, 6},
                                                 {3, 4, 6}, {3, 5, 6}, {3, 6, 6}};
    REQUIRE(vectors.size() == 7);
    for (std::size_t i = 0; i < vectors.size(); ++i) CHECK(vectors[i].w == expected[i]);
    CHECK_THROWS_AS(admissible_vectors(c, 2), DegreeTooHigh);
}

TEST_CASE("admissible vector counts match the closed form", "[dynamics]") {
    for (int n = 3; n <= 6; ++n)
        enumerate_cycles(n, [&](const Cycle& c) {
            const int d = degree(c);
            const Signature sig = signature(c);
            for (int k = std::max(d, 2); k <= 5; ++k) {
                const Bigint expected =
                    sig.bits.back() ? binomial(n + k - d, n) : binomial(n + k - d - 1, n);
                CHECK(Bigint(admissible_vectors(c, k).size()) == expected);
            }
        });
    // rotation cycle of C_5 under doubling: single admissible vector
    CHECK(admissible_vectors(make_cycle({2, 3, 4, 5, 1}), 2).size() == 1);
}

TEST_CASE("realizations of (1 3 2 4 6 5) under m_4 (seven orbits)", "[dynamics]") {
    const Cycle c = make_cycle({3, 4, 2, 6, 1, 5});
    const std::vector<std::pair<std::vector<int>, std::vector<CirclePoint>>> table{
        {{0, 3, 6}, {pt(183, 455), pt(198, 455), pt(277, 455), pt(337, 455), pt(387, 455), pt(438, 455)}},
        {{1, 3, 6}, {pt(89, 585), pt(254, 585), pt(356, 585), pt(431, 585), pt(461, 585), pt(554, 585)}},
        {{2, 3, 6}, {pt(43, 315), pt(58, 315), pt(172, 315), pt(232, 315), pt(247, 315), pt(298, 315)}},
        {{3, 3, 6},
         {pt(101, 1365), pt(251, 1365), pt(404, 1365), pt(1004, 1365), pt(1049, 1365), pt(1286, 1365)}},
        {{3, 4, 6}, {pt(41, 585), pt(71, 585), pt(164, 585), pt(284, 585), pt(449, 585), pt(551, 585)}},
        {{3, 5, 6}, {pt(22, 315), pt(37, 315), pt(88, 315), pt(148, 315), pt(163, 315), pt(277, 315)}},
        {{3, 6, 6},
         {pt(94, 1365), pt(139, 1365), pt(376, 1365), pt(556, 1365), pt(706, 1365), pt(859, 1365)}},
    };
    for (const auto& [w, points] : table) {
        const PeriodicOrbit o = realize(c, DeploymentVector{4, w});
        CHECK(o.points == points);
        CHECK(realized_cycle(o) == c);
        CHECK(deployment_vector(o).w == w);
    }
    CHECK_THROWS_AS(realize(c, DeploymentVector{4, {0, 1, 6}}), NotAdmissible); // misses required 3
    CHECK_THROWS_AS(realize(c, DeploymentVector{4, {3, 2, 6}}), NotAdmissible); // not monotone
}

TEST_CASE("realization counts per combinatorial type", "[dynamics]") {
    const Cycle c = make_cycle({3, 4, 2, 6, 1, 5});
    CHECK(realization_count_for_type(c, 4) == 9); // (3/2) C(6,5)

    // rotation cycles of C_6 under doubling: one orbit each
    std::uint64_t total = 0;
    enumerate_cycles(6, [&](const Cycle& cyc) {
        if (degree(cyc) == 1) total += realization_count_for_type(cyc, 2);
    });
    CHECK(total == 2);
}

TEST_CASE("degree-class orbit counts", "[dynamics]") {
    CHECK(degree_class_orbit_count(6, 1, 2) == 2);
    CHECK(degree_class_orbit_count(6, 2, 2) == 7);
    CHECK(degree_class_orbit_count(6, 3, 2) == 0); // d > k
    CHECK(degree_class_orbit_count(9, 5, 4) == 0); // d > k
    for (int k = 2; k <= 5; ++k)
        for (int n = 2; n <= 8; ++n) {
            Bigint total = 0;
            for (int d = 1; d <= n; ++d) total += degree_class_orbit_count(n, d, k);
            CHECK(total * n == periodic_point_count(n, k));
        }
}

TEST_CASE("rotation-symmetric orbits of the worked half-turn example", "[dynamics]") {
    const auto sym = rotation_symmetric_orbits(3, 8, 1);
    REQUIRE(sym.size() == 10);

    std::set<CirclePoint> expected;
    for (int j = 1; j <= 80; ++j) expected.insert(pt(static_cast<std::uint64_t>(2 * j - 1), 160));
    std::set<CirclePoint> got;
    int rotation_cycles = 0, degree3_sym2 = 0;
    for (const auto& o : sym) {
        got.insert(o.points.begin(), o.points.end());
        const Cycle c = realized_cycle(o);
        if (degree(c) == 1 && symmetry_order(c) == 8) ++rotation_cycles;
        if (degree(c) == 3 && symmetry_order(c) == 2) ++degree3_sym2;
        CHECK(rotation_invariant(o, 1));
    }
    CHECK(got == expected);
    CHECK(rotation_cycles == 4);
    CHECK(degree3_sym2 == 6);

    CHECK_THROWS_AS(rotation_symmetric_orbits(2, 4, 1), Error);

    // the filter and the streaming variant agree
    const auto all = orbits(3, 8);
    std::size_t filtered = 0;
    for (const auto& o : all)
        if (rotation_invariant(o, 1)) ++filtered;
    CHECK(filtered == sym.size());
}

TEST_CASE("realizing orbits biject with admissible vectors", "[dynamics]") {
    for (int k = 2; k <= 4; ++k)
        for (int n = 2; n <= 6; ++n) {
            std::map<std::vector<int>, std::vector<std::vector<int>>> seen;
            for (const auto& o : orbits(k, n))
                seen[realized_cycle(o).one_line()].push_back(deployment_vector(o).w);
            enumerate_cycles(n, [&](const Cycle& c) {
                auto got = seen.count(c.one_line()) ? seen[c.one_line()] : std::vector<std::vector<int>>{};
                if (k < std::max(degree(c), 2)) {
                    CHECK(got.empty());
                    return;
                }
                std::sort(got.begin(), got.end());
                CHECK(std::adjacent_find(got.begin(), got.end()) == got.end());
                std::vector<std::vector<int>> want;
                for (const auto& dep : admissible_vectors(c, k)) want.push_back(dep.w);
                CHECK(got == want);
            });
        }
}
