#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "rgglab/appendix.hpp"
#include "support/oracles.hpp"

using namespace rgglab;
using doctest::Approx;

TEST_CASE("region classification") {
    CHECK(classify_region(Point{0.5, 0.5}, 0.1) == 0);
    CHECK(classify_region(Point{0.05, 0.5}, 0.1) == 1);
    CHECK(classify_region(Point{0.5, 0.95}, 0.1) == 1);
    CHECK(classify_region(Point{0.05, 0.95}, 0.1) == 2);
    CHECK(classify_region(Point{0.1, 0.5}, 0.1) == 0);
    CHECK(classify_region(Point{0.0, 0.0, 0.0}, 0.2) == 3);
    CHECK_THROWS_AS(classify_region(Point{0.5, 0.5}, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(classify_region(Point{0.5, 0.5}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(classify_region(Point{0.5, 1.5}, 0.1), std::invalid_argument);
}

TEST_CASE("region volumes") {
    CHECK(region_volume(2, 0, 0.1) == Approx(0.64).epsilon(1e-12));
    CHECK(region_volume(2, 1, 0.1) == Approx(0.32).epsilon(1e-12));
    CHECK(region_volume(2, 2, 0.1) == Approx(0.04).epsilon(1e-12));
    for (int d = 1; d <= 4; ++d) {
        for (double r : {0.01, 0.1, 0.4}) {
            double total = 0.0;
            for (int j = 0; j <= d; ++j) total += region_volume(d, j, r);
            CHECK(std::abs(total - 1.0) < 1e-12);
        }
    }
    CHECK_THROWS_AS(region_volume(2, 3, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(region_volume(2, 1, 0.5), std::invalid_argument);
}

TEST_CASE("region volumes match sampled frequencies") {
    for (int d : {2, 3}) {
        const double r = 0.15;
        oracle::Gen gen(static_cast<std::uint64_t>(d));
        std::vector<int> count(d + 1, 0);
        const int samples = 1'000'000;
        for (int k = 0; k < samples; ++k) {
            int j = 0;
            for (int a = 0; a < d; ++a) {
                const double c = gen.unit();
                j += c < r || c > 1.0 - r;
            }
            ++count[j];
        }
        for (int j = 0; j <= d; ++j) {
            const double v = region_volume(d, j, r);
            const double f = count[j] / double(samples);
            CHECK(std::abs(f - v) < 5.0 * std::sqrt(v * (1.0 - v) / samples));
            CHECK(std::abs(f - v) < 0.005);
        }
    }
}

TEST_CASE("interior inner integral is exact") {
    const auto e = inner_integral(Point{0.5, 0.5}, 0.1, 0, 0);
    CHECK(e.value == Approx(std::numbers::pi * 0.01 / 3.0).epsilon(1e-12));
    CHECK(e.samples == 0);
    CHECK(e.value == Approx(oracle::linear_decay_integral_mc(Point{0.5, 0.5}, 0.1, 1'000'000, 3)).epsilon(0.01));
    const auto e3 = inner_integral(Point{0.5, 0.5, 0.5}, 0.2, 0, 0);
    CHECK(e3.value == Approx(4.0 / 3.0 * std::numbers::pi * 0.008 / 4.0).epsilon(1e-12));
}

TEST_CASE("boundary inner integral against box sampling") {
    oracle::Gen gen(12);
    for (int t = 0; t < 20; ++t) {
        const std::size_t d = 2 + gen.index(2);
        const double r = gen.range(0.05, 0.3);
        std::vector<double> x(d);
        for (auto& c : x) c = gen.range(0.0, 1.0);
        x[0] = gen.range(0.0, r * 0.99);
        const auto est = inner_integral(x, r, 200'000, 40 + t);
        const double ref = oracle::linear_decay_integral_mc(x, r, 400'000, 90 + t);
        CHECK(est.samples == 200'000);
        CHECK(std::abs(est.value - ref) < 5.0 * est.std_error + 0.01 * ref);
    }
}

TEST_CASE("boundary inner integral lies between the corner and interior values") {
    oracle::Gen gen(8);
    for (int d : {2, 3, 4}) {
        const double r = 0.1;
        const double full = unit_ball_volume(d) * std::pow(r, d) / (d + 1);
        for (int j = 1; j <= d; ++j) {
            for (int t = 0; t < 5; ++t) {
                std::vector<double> x(d);
                for (int a = 0; a < d; ++a) x[a] = a < j ? gen.range(0.0, r * 0.999) : gen.range(r, 1.0 - r);
                REQUIRE(classify_region(x, r) == j);
                const auto e = inner_integral(x, r, 20'000, static_cast<std::uint64_t>(t));
                CHECK(e.value >= full / std::ldexp(1.0, j) - 4.0 * e.std_error);
                CHECK(e.value <= full + 4.0 * e.std_error);
            }
        }
    }
}

TEST_CASE("inner integral arguments") {
    CHECK_THROWS_AS(inner_integral(Point{0.01, 0.5}, 0.1, 999, 0), std::invalid_argument);
    CHECK_NOTHROW(inner_integral(Point{0.01, 0.5}, 0.1, 1000, 0));
    CHECK_THROWS_AS(inner_integral(Point{0.5, 0.5}, 0.6, 1000, 0), std::invalid_argument);
    const auto a = inner_integral(Point{0.01, 0.5}, 0.1, 5000, 7);
    const auto b = inner_integral(Point{0.01, 0.5}, 0.1, 5000, 7);
    CHECK(a.value == b.value);
}

TEST_CASE("I_n against plain Monte Carlo over the cube") {
    const std::int64_t n = 100;
    const double gamma = 1.5;
    const int d = 2;
    const double r = connection_radius(n, gamma, d);
    oracle::Gen gen(2024);
    const int outer = 3000;
    double sum = 0.0, sum_sq = 0.0;
    for (int k = 0; k < outer; ++k) {
        const auto x = gen.point(2);
        const double f = std::exp(-double(n) * oracle::linear_decay_integral_mc(x, r, 3000, 500 + k));
        sum += f;
        sum_sq += f * f;
    }
    const double mean = sum / outer;
    const double ref = n * mean;
    const double ref_se = n * std::sqrt((sum_sq / outer - mean * mean) / (outer - 1));
    const auto est = estimate_In(n, gamma, d, 3000, 1, 3000);
    CHECK(est.samples == 3000);
    CHECK(est.std_error > 0.0);
    CHECK(std::abs(est.value - ref) < 4.0 * std::hypot(est.std_error, ref_se) + 0.02 * ref);
}

TEST_CASE("I_n is deterministic and vanishes for a large radius") {
    const auto a = estimate_In(1000, 1.5, 2, 200, 5, 2000);
    const auto b = estimate_In(1000, 1.5, 2, 200, 5, 2000);
    CHECK(a.value == b.value);
    CHECK(a.std_error == b.std_error);
    CHECK(estimate_In(1000, 1.5, 2, 200, 6, 2000).value != a.value);
    // r = 0.49 at n = 1000.
    const double gamma = 0.49 / std::sqrt(std::log(1000.0) / 1000.0);
    CHECK(estimate_In(1000, gamma, 2, 200, 5, 2000).value < 1e-3);
    CHECK_THROWS_AS(estimate_In(1000, 6.1, 2, 200, 5, 2000), std::invalid_argument);
    CHECK_THROWS_AS(estimate_In(1000, 0.0, 2, 200, 5, 2000), std::invalid_argument);
}
