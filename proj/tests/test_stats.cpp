#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

#include "cyclic/checks.hpp"
#include "cyclic/stats.hpp"

using namespace cyclic;

TEST_CASE("normalized distribution", "[stats]") {
    const auto dist = normalized_distribution(5);
    REQUIRE(dist.support.size() == 3);
    CHECK(dist.support[0].probability == Rational(1, 6));
    CHECK(dist.support[1].probability == Rational(5, 12));
    CHECK(dist.support[2].probability == Rational(5, 12));
    Rational sum = 0;
    for (const auto& p : dist.support) sum += p.probability;
    CHECK(sum == 1);

    const auto large = normalized_distribution(200);
    CHECK(large.support.size() == 198);
    Rational total = 0;
    double prev = -1e300;
    for (const auto& p : large.support) {
        total += p.probability;
        CHECK(p.x > prev);
        prev = p.x;
    }
    CHECK(total == 1);

    CHECK_THROWS_AS(normalized_distribution(4), TooSmall);
}

TEST_CASE("standard normal cdf", "[stats]") {
    CHECK(standard_normal_cdf(0.0) == Catch::Approx(0.5).margin(1e-15));
    CHECK(standard_normal_cdf(1.959964) == Catch::Approx(0.975).margin(1e-6));
    for (double x = 0.0; x <= 8.0; x += 0.25)
        CHECK(standard_normal_cdf(x) + standard_normal_cdf(-x) == Catch::Approx(1.0).margin(2e-7));

    // against the Simpson integration oracle on a fine grid
    const auto oracle = cyclic::detail::normal_cdf_simpson_grid(8.0, 0.01, 16);
    double worst = 0.0;
    for (std::size_t i = 0; i < oracle.size(); ++i) {
        const double x = 0.01 * static_cast<double>(i);
        worst = std::max(worst, std::abs(standard_normal_cdf(x) - oracle[i]));
        worst = std::max(worst, std::abs(standard_normal_cdf(-x) - (1.0 - oracle[i])));
    }
    CHECK(worst <= 1e-7);
}

TEST_CASE("kolmogorov distances", "[stats]") {
    const double d20 = kolmogorov_distance(20);
    const double d50 = kolmogorov_distance(50);
    const double d100 = kolmogorov_distance(100);
    const double d200 = kolmogorov_distance(200);
    CHECK(d20 >= 0.0);
    CHECK(d200 < d100);
    CHECK(d100 < d50);
    CHECK(d50 < d20);
    CHECK(d200 < 0.05);
}

TEST_CASE("histogram csv", "[stats]") {
    std::ostringstream out;
    CHECK(histogram_csv(5, out) == 3);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "d,count,probability,normalized_x");
    std::getline(in, line);
    CHECK(line.rfind("1,4,", 0) == 0);

    std::ostringstream out12;
    CHECK(histogram_csv(12, out12) == 10);

    std::ostringstream out200;
    CHECK(histogram_csv(200, out200) == 198);

    // n below the variance range: normalized_x cells stay empty
    std::ostringstream out3;
    CHECK(histogram_csv(3, out3) == 1);
    std::istringstream in3(out3.str());
    std::getline(in3, line);
    std::getline(in3, line);
    CHECK(line == "1,2,1,");

    CHECK_THROWS_AS(histogram_csv(2, out), TooSmall);
}

TEST_CASE("verification suites pass", "[stats]") {
    for (const auto& r : verify_stats({20, 0, 0})) {
        INFO(r.name << ": " << r.detail);
        CHECK(r.pass);
    }
}
