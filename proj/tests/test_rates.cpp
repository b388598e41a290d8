#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "pdld/rates.hpp"
#include "pdld/rng.hpp"
#include "pdld/util.hpp"

using namespace pdld;

namespace {
const double inf = std::numeric_limits<double>::infinity();
}

TEST_CASE("rate_residual_mass") {
    CHECK(rate_residual_mass({0.5}) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
    CHECK(rate_residual_mass({0.3, 0.2}) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
    CHECK(rate_residual_mass({}) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(rate_residual_mass({0.6, 0.4}) == inf);
    CHECK_THROWS_AS(rate_residual_mass({0.8, 0.3}), domain_error);
    CHECK_THROWS_AS(rate_residual_mass({-0.1}), domain_error);
}

TEST_CASE("rate_relative_entropy against hand values") {
    // uniform against (3/4, 1/4): (1/2)(log(2/3) + log 2) = (1/2) log(4/3)
    CHECK(rate_relative_entropy({0.75, 0.25}, 2) ==
          doctest::Approx(0.5 * std::log(4.0 / 3.0)).epsilon(1e-14));
    CHECK(rate_relative_entropy({0.5, 0.5}, 2) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(rate_relative_entropy({1.0, 0.0}, 2) == inf);
    CHECK_THROWS_AS(rate_relative_entropy({0.5, 0.5}, 3), domain_error);
    CHECK_THROWS_AS(rate_relative_entropy({0.7, 0.4}, 2), domain_error);
}

TEST_CASE("constrained_inf_relent optimizes the free coordinates") {
    // fixing half the mass on the top coordinate of K = 2 fixes everything
    CHECK(constrained_inf_relent({0.5}, 2) == doctest::Approx(0.0).epsilon(1e-15));
    // the infimum over completions can only shrink as K grows, and the limit
    // of the two-coordinate constraint (0.3, 0.2) is log 2
    double prev = inf;
    for (std::int64_t K : {1000, 10000, 100000, 1000000}) {
        double err = std::abs(constrained_inf_relent({0.3, 0.2}, K) - std::log(2.0));
        CHECK(err < prev);
        prev = err;
    }
    CHECK(prev < 1e-4);
    CHECK_THROWS_AS(constrained_inf_relent({0.2, 0.3}, 10), domain_error);
    CHECK_THROWS_AS(constrained_inf_relent({0.6, 0.5}, 10), domain_error);
    // K must leave at least one free coordinate
    CHECK_THROWS_AS(constrained_inf_relent({0.5, 0.3}, 2), domain_error);
    // a prefix below the equal split of the leftover mass cannot be extended
    // in descending order
    CHECK_THROWS_AS(constrained_inf_relent({0.1}, 4), domain_error);
}

TEST_CASE("rate_beta_stick zero point, hand value, and blowups") {
    // i-th stick rests at 1/(K+1-i)
    for (std::int64_t K : {2, 3, 10})
        for (std::int64_t i = 1; i <= K - 1; ++i)
            CHECK(rate_beta_stick(K, i, 1.0 / static_cast<double>(K + 1 - i)) ==
                  doctest::Approx(0.0).epsilon(1e-13));
    double hand = (5.0 / 3.0) * std::log(2.0) - std::log(3.0);
    CHECK(rate_beta_stick(3, 1, 0.5) == doctest::Approx(hand).epsilon(1e-13));
    CHECK(rate_beta_stick(3, 1, 0.0) == inf);
    CHECK(rate_beta_stick(3, 1, 1.0) == inf);
    CHECK(rate_beta_stick(3, 1, 0.25) > 0.0);
    CHECK_THROWS_AS(rate_beta_stick(3, 3, 0.5), domain_error);
    CHECK_THROWS_AS(rate_beta_stick(3, 0, 0.5), domain_error);
}

TEST_CASE("rate_sizebiased_SK trims zeros and sums stick rates") {
    CHECK(rate_sizebiased_SK({0.2, 0.3, 0.0, 0.0}, 8) ==
          doctest::Approx(rate_sizebiased_SK({0.2, 0.3}, 8)).epsilon(1e-15));
    // an interior zero cannot precede a positive mass
    CHECK(rate_sizebiased_SK({0.2, 0.0, 0.3}, 8) == inf);
    // explicit sum of the stick rates at r = 3
    Rng rng(SeedSpec{31415, 0});
    std::int64_t K = 8;
    double y1 = 0.3 + 0.2 * rng.uniform();
    double y2 = 0.1 + 0.1 * rng.uniform();
    double y3 = 0.05 * rng.uniform();
    std::vector<double> y = {y1, y2, y3};
    double rem1 = 1.0 - y1, rem2 = rem1 - y2;
    double direct = rate_beta_stick(K, 1, y1) + rate_beta_stick(K, 2, y2 / rem1) +
                    rate_beta_stick(K, 3, y3 / rem2);
    CHECK(rate_sizebiased_SK(y, K) == doctest::Approx(direct).epsilon(1e-12));
    CHECK_THROWS_AS(rate_sizebiased_SK({0.9, 0.2}, 8), domain_error);
}

TEST_CASE("rate_esf counts missing blocks") {
    CHECK(rate_esf(4, {0, 2, 0, 0}) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(rate_esf(4, {4, 0, 0, 0}) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(rate_esf(4, {0, 0, 0, 1}) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK_THROWS_AS(rate_esf(4, {1, 1, 0, 0}), domain_error);
}

TEST_CASE("cgf_limit is continuous at the kink and correct by case") {
    for (char c : {'A', 'B'}) {
        double param = (c == 'A') ? 7.0 : 0.0;
        double below = cgf_limit(c, -1.0 - 1e-9, param);
        double at = cgf_limit(c, -1.0, param);
        double above = cgf_limit(c, -1.0 + 1e-9, param);
        CHECK(std::abs(at - below) < 1e-8);
        CHECK(std::abs(above - at) < 1e-8);
    }
    CHECK(cgf_limit('A', 2.0, 7.0) == doctest::Approx(14.0).epsilon(1e-14));
    CHECK(cgf_limit('A', -3.0, 7.0) == doctest::Approx(-2.0 - 7.0).epsilon(1e-14));
    CHECK(cgf_limit('B', 2.0) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(cgf_limit('B', -3.0) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(cgf_limit('D', 1.0) == doctest::Approx(std::expm1(1.0)).epsilon(1e-14));
    // every case vanishes at t = 0
    CHECK(cgf_limit('A', 0.0, 5.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(cgf_limit('C', 0.0, 1.0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(cgf_limit('D', 0.0) == doctest::Approx(0.0).epsilon(1e-15));
    // case C slope at the origin is the law-of-large-numbers point
    double c1 = 1.0, h = 1e-5;
    double slope = (cgf_limit('C', h, c1) - cgf_limit('C', -h, c1)) / (2.0 * h);
    CHECK(slope == doctest::Approx(c1 * std::log1p(1.0 / c1)).epsilon(1e-8));
    CHECK_THROWS_AS(cgf_limit('x', 0.0), usage_error);
    CHECK_THROWS_AS(cgf_limit('A', 0.0, 0.0), usage_error);
    CHECK_THROWS_AS(cgf_limit('C', 0.0, -1.0), usage_error);
}

TEST_CASE("legendre_caseC_detail solves the dual problem") {
    for (double c : {0.5, 1.0, 2.0}) {
        double lln = c * std::log1p(1.0 / c);
        CHECK(legendre_caseC(lln, c) == doctest::Approx(0.0).epsilon(1e-10));
        for (double x : {0.15, 0.5, 0.85}) {
            LegendreDetail d = legendre_caseC_detail(x, c);
            // the root actually solves u log(1+1/u) = x
            CHECK(d.u * std::log1p(1.0 / d.u) == doctest::Approx(x).epsilon(1e-10));
            // Fenchel equality at the dual point
            double fenchel = d.t * x - cgf_limit('C', d.t, c);
            CHECK(d.value == doctest::Approx(fenchel).epsilon(1e-9));
            CHECK(d.value >= 0.0);
            if (x != lln) CHECK(d.value > 0.0);
        }
        CHECK(legendre_caseC(-0.1, c) == inf);
        CHECK(legendre_caseC(1.1, c) == inf);
        CHECK(legendre_caseC_detail(1.0, c).t == inf);
    }
}

TEST_CASE("ball rates vanish at the means and blow up at the edges") {
    CHECK(rate_kn_caseB(1.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(rate_kn_caseB(0.5) > 0.0);
    CHECK(rate_kn_caseD(0.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(rate_kn_caseD(1.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(rate_kn_caseD(0.4) > 0.0);
    CHECK(rate_ageclass_caseB(0.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(rate_ageclass_caseB(0.3) == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(rate_ageclass_caseC(0.0, 1.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(rate_ageclass_caseC(0.3, 1.0) > 0.0);
    CHECK(rate_ageclass_caseD(0.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(rate_ageclass_caseD(0.3) == doctest::Approx(std::log(1.0 / 0.7)).epsilon(1e-14));
    CHECK(rate_ageclass_caseD(1.0) == inf);
    // out-of-support points cost infinitely much rather than throwing
    CHECK(rate_kn_caseB(-0.1) == inf);
    CHECK(rate_ageclass_caseB(1.2) == inf);
    CHECK(rate_ageclass_caseD(-0.5) == inf);
    // the scaled block count can overshoot its mean, so x > 1 stays finite
    CHECK(rate_kn_caseD(1.5) == doctest::Approx(1.5 * std::log(1.5) - 0.5).epsilon(1e-14));
}
