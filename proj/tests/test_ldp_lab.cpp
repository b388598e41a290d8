#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "pdld/exact_dist.hpp"
#include "pdld/ldp_lab.hpp"
#include "pdld/rates.hpp"
#include "pdld/rng.hpp"
#include "pdld/util.hpp"

using namespace pdld;

namespace {

std::vector<double> decade_grid(double start, int count) {
    std::vector<double> g;
    for (int i = 0; i < count; ++i) g.push_back(start * std::pow(10.0, i));
    return g;
}

}  // namespace

TEST_CASE("speed by case and selector") {
    ScalingRegime a = ScalingRegime::fixed_n('A', 10);
    CHECK(speed(a, 'a', std::exp(1.0)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(speed(a, 'b', 100.0) == doctest::Approx(std::log(100.0)).epsilon(1e-14));
    ScalingRegime c = ScalingRegime::ratio(1.0);
    CHECK(speed(c, 'b', 1e4) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(speed(c, 'a', 1e4) == doctest::Approx(1e4).epsilon(1e-14));
    ScalingRegime d = ScalingRegime::fixed_n('D', 1000000);
    CHECK(speed(d, 'a', 100.0) == doctest::Approx(100.0 * std::log(1e4)).epsilon(1e-12));
    CHECK(speed(d, 'b', 100.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(speed(d, 'g', 100.0) == doctest::Approx(100.0).epsilon(1e-15));
    ScalingRegime b = ScalingRegime::power('B', 0.5);
    CHECK(speed(b, 'a', 1e6) == doctest::Approx(1000.0 * std::log(1000.0)).epsilon(1e-12));
    CHECK_THROWS_AS(speed(a, 'x', 10.0), usage_error);
    CHECK_THROWS_AS(speed(a, 'a', -1.0), domain_error);
    // a case B label with theta below n has nonpositive speed
    CHECK_THROWS_AS(speed(ScalingRegime::fixed_n('B', 100), 'a', 50.0), domain_error);
    CHECK_THROWS_AS(ScalingRegime::fixed_n('A', 0), usage_error);
    CHECK_THROWS_AS(ScalingRegime::ratio(-1.0), usage_error);
}

TEST_CASE("regime_coherence_warnings flag mismatched couplings") {
    CHECK(regime_coherence_warnings(ScalingRegime::fixed_n('A', 10), decade_grid(1e2, 4)).empty());
    CHECK(regime_coherence_warnings(ScalingRegime::ratio(1.0), decade_grid(1e3, 3)).empty());
    CHECK(regime_coherence_warnings(ScalingRegime::power('B', 0.5), decade_grid(1e4, 4)).empty());
    // theta/n grows under a fixed n, the opposite of a case D coupling
    CHECK_FALSE(
        regime_coherence_warnings(ScalingRegime::fixed_n('D', 10), decade_grid(1e2, 4)).empty());
}

TEST_CASE("gem_log_density hand values and domain") {
    CHECK(gem_log_density(2.0, {0.3}) == doctest::Approx(std::log(2.0 * 0.7)).epsilon(1e-14));
    // n = 2 via the stick construction: Beta(1,3) sticks at 0.2 then 0.375
    double direct = std::log(3.0 * 0.64 * 3.0 * 0.390625 / 0.8);
    CHECK(gem_log_density(3.0, {0.2, 0.3}) == doctest::Approx(direct).epsilon(1e-13));
    CHECK_THROWS_AS(gem_log_density(2.0, {0.6, 0.4}), domain_error);
    CHECK_THROWS_AS(gem_log_density(2.0, {-0.1}), domain_error);
    CHECK_THROWS_AS(gem_log_density(2.0, {}), domain_error);
    CHECK_THROWS_AS(gem_log_density(0.0, {0.3}), domain_error);
}

TEST_CASE("gem log density converges to the residual-mass rate") {
    double theta = 1e6;
    std::int64_t n = 3;
    double bound = 2.0 * static_cast<double>(n) * std::log(theta) / theta;
    Rng rng(SeedSpec{20260819, 555});
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<double> x(static_cast<std::size_t>(n));
        for (auto& v : x) v = 0.25 * rng.uniform();
        double emp = -gem_log_density(theta, x) / theta;
        CHECK(std::abs(emp - rate_residual_mass(x)) <= bound);
    }
}

TEST_CASE("event_log_prob point events reproduce the exact pmfs") {
    EventSpec pp;
    pp.kind = EventSpec::Kind::partition_point;
    pp.a = {1, 2, 0, 0, 0};
    CHECK(event_log_prob(2.5, 5, pp) == esf_log_pmf(2.5, 5, {1, 2, 0, 0, 0}));
    EventSpec kp;
    kp.kind = EventSpec::Kind::kn_point;
    kp.k = 2;
    CHECK(event_log_prob(1.0, 3, kp) == kn_log_pmf(1.0, 3, 2));
    CHECK(std::exp(event_log_prob(1.0, 3, kp)) == doctest::Approx(0.5).epsilon(1e-13));
    // partition length must match the sample size
    CHECK_THROWS_AS(event_log_prob(2.5, 6, pp), usage_error);
}

TEST_CASE("kn_ball at huge theta concentrates at the all-distinct sample") {
    EventSpec ball;
    ball.kind = EventSpec::Kind::kn_ball;
    ball.x = {1.0};
    ball.delta = 0.05;
    double lp = event_log_prob(1e6, 10, ball);
    CHECK(lp <= 0.0);
    CHECK(std::abs(lp) < 1e-3);
}

TEST_CASE("ageclass_ball equals a direct window sum") {
    double theta = 100.0;
    std::int64_t n = 100000;
    EventSpec ball;
    ball.kind = EventSpec::Kind::ageclass_ball;
    ball.x = {0.3};
    ball.delta = 0.01;
    double lp = event_log_prob(theta, n, ball);
    double direct = neg_inf;
    for (std::int64_t k = 29000; k <= 31000; ++k)
        direct = log_add(direct, ageclass1_log_pmf(theta, n, k));
    CHECK(lp == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("ageclass_joint_ball rejects oversized lattices") {
    EventSpec joint;
    joint.kind = EventSpec::Kind::ageclass_joint_ball;
    joint.x = {0.3, 0.2, 0.1};
    joint.delta = 0.05;
    CHECK_THROWS_AS(event_log_prob(10.0, 100000, joint), complexity_error);
    // a small window is fine
    joint.x = {0.5, 0.3};
    joint.delta = 0.02;
    double lp = event_log_prob(2.0, 50, joint);
    CHECK(lp < 0.0);
    double direct = neg_inf;
    for (std::int64_t k1 = 24; k1 <= 26; ++k1)
        for (std::int64_t k2 = 14; k2 <= 16; ++k2)
            direct = log_add(direct, ageclass_joint_log_pmf(2.0, 50, {k1, k2}));
    CHECK(lp == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("rate_curve validates its grid and event") {
    ScalingRegime reg = ScalingRegime::fixed_n('A', 4);
    EventSpec ev;
    ev.kind = EventSpec::Kind::partition_point;
    ev.a = {0, 2, 0, 0};
    CHECK_THROWS_AS(rate_curve(reg, ev, {1e2, 1e3, 1e4}), usage_error);
    CHECK_THROWS_AS(rate_curve(reg, ev, {1e2, 1e3, 1e3, 1e4}), usage_error);
    EventSpec dead;
    dead.kind = EventSpec::Kind::kn_point;
    dead.k = 0;
    CHECK_THROWS_AS(rate_curve(ScalingRegime::fixed_n('A', 4), dead, decade_grid(1e2, 4)),
                    domain_error);
}

TEST_CASE("rate_curve extrapolates the two-pair partition to its rate") {
    ScalingRegime reg = ScalingRegime::fixed_n('A', 4);
    EventSpec ev;
    ev.kind = EventSpec::Kind::partition_point;
    ev.a = {0, 2, 0, 0};
    ConvergenceTable ct = rate_curve(reg, ev, decade_grid(1e2, 9));
    REQUIRE(ct.rows.size() == 9);
    CHECK(ct.target_rate == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(std::abs(ct.extrapolated - 2.0) <= 0.05);
    // the affine model in 1/speed must explain nearly all of the correction
    CHECK(ct.residual_rms <= 0.1 * ct.correction_rms);
    for (std::size_t i = 1; i < ct.rows.size(); ++i)
        CHECK(ct.rows[i].speed_value > ct.rows[i - 1].speed_value);
    Table t = ct.to_table();
    REQUIRE(t.columns == std::vector<std::string>{"theta", "n", "speed", "empirical_rate"});
    CHECK(t.rows.size() == 9);
    bool has_target = false, has_model = false;
    for (const auto& kv : t.meta) {
        if (kv.first == "target_rate") has_target = true;
        if (kv.first == "model") has_model = true;
    }
    CHECK(has_target);
    CHECK(has_model);
}

TEST_CASE("dirichlet_rate_curve approaches the infinite-allele rate") {
    ConvergenceTable ct = dirichlet_rate_curve(4, {0, 2, 0, 0}, decade_grid(1e2, 7),
                                               [](double K) { return K; });
    REQUIRE(ct.rows.size() == 7);
    CHECK(ct.target_rate == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(std::abs(ct.extrapolated - 2.0) <= 0.1);
}

TEST_CASE("mgf_limit_curve tracks the limiting cumulants") {
    Table a = mgf_limit_curve(ScalingRegime::fixed_n('A', 10), {1.0}, 1e8);
    REQUIRE(a.rows.size() == 1);
    REQUIRE(a.columns == std::vector<std::string>{"t", "scaled_log_mgf", "limit", "difference"});
    CHECK(std::abs(a.rows[0][3]) < 0.01);
    std::vector<double> grid;
    for (int i = 0; i <= 20; ++i) grid.push_back(-2.0 + 0.2 * static_cast<double>(i));
    Table c = mgf_limit_curve(ScalingRegime::ratio(1.0), grid, 1e4);
    REQUIRE(c.rows.size() == 21);
    double worst = 0.0;
    for (const auto& row : c.rows) worst = std::max(worst, std::abs(row[3]));
    CHECK(worst <= 0.01);
}

TEST_CASE("lln_table normalizes the mean by case") {
    Table a = lln_table(ScalingRegime::fixed_n('A', 5), {1e5});
    REQUIRE(a.rows.size() == 1);
    CHECK(a.rows[0][3] == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(a.rows[0][2] >= 4.9);
    Table c = lln_table(ScalingRegime::ratio(1.0), {1e4});
    CHECK(c.rows[0][3] == doctest::Approx(std::log(2.0)).epsilon(1e-14));
    CHECK(std::abs(c.rows[0][2] - std::log(2.0)) <= 1e-3);
}

TEST_CASE("fit_affine recovers an exact line") {
    auto [a, b] = fit_affine({1.0, 2.0, 3.0, 4.0}, {1.0, -1.0, -3.0, -5.0});
    CHECK(a == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(b == doctest::Approx(-2.0).epsilon(1e-12));
}

TEST_CASE("gof_validate smoke checks") {
    GofParams p;
    p.theta = 1.0;
    p.n = 3;
    GofReport rep = gof_validate("kn", p, 20000, SeedSpec{20260819, 1000000});
    CHECK(rep.pass);
    CHECK(rep.which == "kn");
    CHECK(rep.N == 20000);
    CHECK(rep.cells == 3);
    CHECK(rep.df == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(rep.p_value >= 0.0);
    CHECK(rep.p_value <= 1.0);
    CHECK_THROWS_AS(gof_validate("kn", p, 20, SeedSpec{20260819, 0}), usage_error);
    CHECK_THROWS_AS(gof_validate("bogus", p, 20000, SeedSpec{20260819, 0}), usage_error);
}
