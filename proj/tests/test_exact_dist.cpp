#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "pdld/exact_dist.hpp"
#include "pdld/partition.hpp"
#include "pdld/special.hpp"
#include "pdld/stirling.hpp"
#include "pdld/util.hpp"

using namespace pdld;

TEST_CASE("esf_log_pmf hand values and validation") {
    // theta = 1, all three samples distinct: 1/6 of the sample space
    CHECK(esf_log_pmf(1.0, 3, {3, 0, 0}) == doctest::Approx(std::log(1.0 / 6.0)).epsilon(1e-14));
    // one pair plus a singleton at theta = 1: 3 of the 6 equally likely states
    CHECK(esf_log_pmf(1.0, 3, {1, 1, 0}) == doctest::Approx(std::log(0.5)).epsilon(1e-14));
    CHECK_THROWS_AS(esf_log_pmf(1.0, 3, {1, 1, 1}), domain_error);
    CHECK_THROWS_AS(esf_log_pmf(1.0, 3, {3, 0}), domain_error);
    CHECK_THROWS_AS(esf_log_pmf(0.0, 3, {3, 0, 0}), domain_error);
    CHECK_THROWS_AS(esf_log_pmf(-2.0, 3, {3, 0, 0}), domain_error);
}

TEST_CASE("esf_log_pmf sums to one over all partitions") {
    double theta = 2.5;
    std::int64_t n = 9;
    double total = 0.0;
    for_each_partition(n, [&](const Partition& a) { total += std::exp(esf_log_pmf(theta, n, a)); });
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("dirichlet_sampling_log_pmf support and normalization") {
    // two blocks cannot fit in a single allele
    CHECK(dirichlet_sampling_log_pmf(2.0, 1, 3, {1, 1, 0}) == neg_inf);
    // n = 1 has the single partition (1), which must carry all the mass
    CHECK(std::exp(dirichlet_sampling_log_pmf(2.0, 5, 1, {1})) == doctest::Approx(1.0).epsilon(1e-14));
    double theta = 2.0;
    std::int64_t K = 7, n = 5;
    double total = 0.0;
    for_each_partition(n, [&](const Partition& a) {
        double lp = dirichlet_sampling_log_pmf(theta, K, n, a);
        if (lp > neg_inf) total += std::exp(lp);
    });
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(dirichlet_sampling_log_pmf(2.0, 0, 3, {3, 0, 0}), domain_error);
}

TEST_CASE("kn_log_pmf hand law at theta 1") {
    // n = 3, theta = 1: P{K = 1,2,3} = 1/3, 1/2, 1/6
    CHECK(std::exp(kn_log_pmf(1.0, 3, 1)) == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
    CHECK(std::exp(kn_log_pmf(1.0, 3, 2)) == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(std::exp(kn_log_pmf(1.0, 3, 3)) == doctest::Approx(1.0 / 6.0).epsilon(1e-13));
    CHECK(kn_log_pmf(1.0, 3, 0) == neg_inf);
    CHECK(kn_log_pmf(1.0, 3, 4) == neg_inf);
    CHECK_THROWS_AS(kn_log_pmf(1.0, 0, 1), domain_error);
}

TEST_CASE("kn_mean matches the pmf and the mgf") {
    // theta = 1, n = 2: E[K] = 1 + 1/2
    CHECK(kn_mean(1.0, 2) == doctest::Approx(1.5).epsilon(1e-14));
    double theta = 3.0;
    std::int64_t n = 40;
    double mean = 0.0, total = 0.0;
    for (std::int64_t k = 1; k <= n; ++k) {
        double p = std::exp(kn_log_pmf(theta, n, k));
        mean += static_cast<double>(k) * p;
        total += p;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(mean == doctest::Approx(kn_mean(theta, n)).epsilon(1e-10));
    // mgf at t = 0.7 against direct summation
    double t = 0.7;
    double sum = neg_inf;
    for (std::int64_t k = 1; k <= n; ++k)
        sum = log_add(sum, kn_log_pmf(theta, n, k) + static_cast<double>(k) * t);
    CHECK(kn_log_mgf(theta, n, t) == doctest::Approx(sum).epsilon(1e-12));
}

TEST_CASE("ageclass1_log_pmf uniform at theta 1 and endpoint value") {
    // theta = 1 makes the oldest-class size uniform on 1..n
    for (std::int64_t n : {2, 5, 17}) {
        for (std::int64_t k = 1; k <= n; ++k)
            CHECK(ageclass1_log_pmf(1.0, n, k) ==
                  doctest::Approx(-std::log(static_cast<double>(n))).epsilon(1e-14));
    }
    // k = n: the whole sample in the oldest class
    double theta = 2.5;
    double expected = std::log(theta * 120.0 / (5.0 * (theta * 3.5 * 4.5 * 5.5 * 6.5)));
    CHECK(ageclass1_log_pmf(theta, 5, 5) == doctest::Approx(expected).epsilon(1e-13));
    CHECK_THROWS_AS(ageclass1_log_pmf(2.5, 5, 0), domain_error);
    CHECK_THROWS_AS(ageclass1_log_pmf(2.5, 5, 6), domain_error);
}

TEST_CASE("ageclass1_log_pmf sums to one") {
    double theta = 2.5;
    std::int64_t n = 30;
    double total = 0.0;
    for (std::int64_t k = 1; k <= n; ++k) total += std::exp(ageclass1_log_pmf(theta, n, k));
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("ageclass_joint_log_pmf hand value and marginalization") {
    // n = 2, theta = 1: both singleton classes, oldest listed first
    CHECK(ageclass_joint_log_pmf(1.0, 2, {1, 1}) == doctest::Approx(std::log(0.5)).epsilon(1e-14));
    // a single class in the joint law coincides with the one-class law
    CHECK(ageclass_joint_log_pmf(2.0, 12, {4}) ==
          doctest::Approx(ageclass1_log_pmf(2.0, 12, 4)).epsilon(1e-14));
    // k1 < n forces a second class, so summing it out recovers the marginal
    double theta = 2.0;
    std::int64_t n = 12, k1 = 4;
    double total = neg_inf;
    for (std::int64_t k2 = 1; k2 <= n - k1; ++k2)
        total = log_add(total, ageclass_joint_log_pmf(theta, n, {k1, k2}));
    CHECK(total == doctest::Approx(ageclass1_log_pmf(theta, n, k1)).epsilon(1e-12));
    CHECK_THROWS_AS(ageclass_joint_log_pmf(1.0, 5, {}), domain_error);
    CHECK_THROWS_AS(ageclass_joint_log_pmf(1.0, 5, {3, 0}), domain_error);
    CHECK_THROWS_AS(ageclass_joint_log_pmf(1.0, 5, {4, 2}), domain_error);
}

TEST_CASE("log_partition_factor counts labeled set partitions") {
    CHECK(log_partition_factor(4, {4, 0, 0, 0}) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(log_partition_factor(4, {0, 0, 0, 1}) == doctest::Approx(0.0).epsilon(1e-14));
    // two singletons and one pair: 4!/(2! 2!) = 6 ways
    CHECK(log_partition_factor(4, {2, 1, 0, 0}) == doctest::Approx(std::log(6.0)).epsilon(1e-14));
    CHECK_THROWS_AS(log_partition_factor(4, {1, 1, 0, 0}), domain_error);
}

namespace {

// exact block-profile law for an n-sample from finitely many atoms, by
// enumerating all m^n assignments
std::map<Partition, double> brute_force_profile_law(std::int64_t n, const std::vector<double>& p) {
    std::size_t m = p.size();
    std::map<Partition, double> law;
    std::vector<std::size_t> assign(static_cast<std::size_t>(n), 0);
    while (true) {
        double prob = 1.0;
        std::vector<std::int64_t> occupancy(m, 0);
        for (std::size_t i = 0; i < assign.size(); ++i) {
            prob *= p[assign[i]];
            ++occupancy[assign[i]];
        }
        Partition a(static_cast<std::size_t>(n), 0);
        for (std::int64_t c : occupancy)
            if (c > 0) ++a[static_cast<std::size_t>(c - 1)];
        law[a] += prob;
        std::size_t pos = 0;
        while (pos < assign.size() && assign[pos] == m - 1) assign[pos++] = 0;
        if (pos == assign.size()) break;
        ++assign[pos];
    }
    return law;
}

}  // namespace

TEST_CASE("conditional_sampling_log_prob matches exhaustive enumeration") {
    std::int64_t n = 4;
    std::vector<double> p = {0.4, 0.3, 0.2, 0.1};
    std::map<Partition, double> law = brute_force_profile_law(n, p);
    for (const Partition& a : all_partitions(n)) {
        double lw = conditional_sampling_log_prob(n, a, p);
        double perms = 0.0;
        for (std::int64_t aj : a) perms += log_factorial(aj);
        CHECK(std::exp(lw + perms) == doctest::Approx(law.at(a)).epsilon(1e-12));
    }
}

TEST_CASE("conditional_sampling_log_prob hand case and validation") {
    // two equal atoms, two samples apart: P = 1/2, and the two singleton
    // blocks are interchangeable, so the weight itself is 1/4
    double lw = conditional_sampling_log_prob(2, {2, 0}, {0.5, 0.5});
    CHECK(std::exp(lw) * 2.0 == doctest::Approx(0.5).epsilon(1e-14));
    // sub-probability atom vectors are allowed, deficient ones are not
    CHECK(conditional_sampling_log_prob(2, {2, 0}, {0.3, 0.3}) < lw);
    CHECK_THROWS_AS(conditional_sampling_log_prob(2, {2, 0}, {0.7, 0.7}), domain_error);
    CHECK_THROWS_AS(conditional_sampling_log_prob(2, {2, 0}, {0.5, -0.1}), domain_error);
    CHECK_THROWS_AS(conditional_sampling_log_prob(2, {2, 0}, {}), domain_error);
    CHECK_THROWS_AS(conditional_sampling_log_prob(2, {1, 1}, {0.5, 0.5}), domain_error);
    // a single atom cannot host two distinct blocks
    CHECK(conditional_sampling_log_prob(2, {2, 0}, {1.0}) == neg_inf);
    // and forces the one-block profile with certainty
    CHECK(conditional_sampling_log_prob(2, {0, 1}, {1.0, 0.0}) ==
          doctest::Approx(0.0).epsilon(1e-14));
    CHECK_THROWS_AS(conditional_sampling_log_prob(4, {2, 1, 0, 0}, {0.4, 0.3, 0.2}, 1.0),
                    complexity_error);
}

TEST_CASE("log_stirling1 matches exact integer recurrence") {
    // |S_n^k| fits in 64 bits through n = 20 (top value 19!)
    std::vector<std::vector<std::uint64_t>> rows(21);
    rows[1] = {1};
    for (std::size_t n = 2; n <= 20; ++n) {
        rows[n].assign(n, 0);
        for (std::size_t k = 1; k <= n; ++k) {
            std::uint64_t carry = (k >= 2) ? rows[n - 1][k - 2] : 0;
            std::uint64_t scaled = (k <= n - 1) ? (n - 1) * rows[n - 1][k - 1] : 0;
            rows[n][k - 1] = scaled + carry;
        }
    }
    for (std::int64_t n = 1; n <= 20; ++n)
        for (std::int64_t k = 1; k <= n; ++k) {
            double exact = std::log(static_cast<double>(rows[static_cast<std::size_t>(n)]
                                                            [static_cast<std::size_t>(k - 1)]));
            CHECK(log_stirling1(n, k) == doctest::Approx(exact).epsilon(1e-12));
        }
    std::vector<double> row = log_stirling1_row(20);
    REQUIRE(row.size() == 20);
    CHECK(row[4] == doctest::Approx(log_stirling1(20, 5)).epsilon(1e-15));
}

TEST_CASE("parse_partition round trips and rejects malformed input") {
    Partition a = parse_partition("3,0,0");
    CHECK(a == Partition{3, 0, 0});
    CHECK(partition_to_string(a) == "3,0,0");
    CHECK(parse_partition("2,1,0,0") == Partition{2, 1, 0, 0});
    CHECK_THROWS_AS(parse_partition("1,2"), usage_error);
    CHECK_THROWS_AS(parse_partition("a,b"), usage_error);
    CHECK_THROWS_AS(parse_partition(""), usage_error);
    CHECK_THROWS_AS(parse_partition("1.5,0"), usage_error);
}
