#include "pdld/exact_dist.hpp"

#include <cmath>

#include "pdld/special.hpp"
#include "pdld/stirling.hpp"
#include "pdld/util.hpp"

namespace pdld {

namespace {

void check_theta(double theta) {
    if (!(theta > 0.0) || !std::isfinite(theta)) throw domain_error("theta must be positive and finite");
}

}  // namespace

double esf_log_pmf(double theta, std::int64_t n, const Partition& a) {
    check_theta(theta);
    if (!partition_valid(a, n)) throw domain_error("esf_log_pmf: invalid partition");
    double lp = log_factorial(n) - log_rising_factorial(theta, n);
    double lt = std::log(theta);
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] == 0) continue;
        double aj = static_cast<double>(a[j]);
        lp += aj * (lt - std::log(static_cast<double>(j + 1)));
        lp -= log_factorial(a[j]);
    }
    return lp;
}

double dirichlet_sampling_log_pmf(double theta, std::int64_t K, std::int64_t n, const Partition& a) {
    check_theta(theta);
    if (K < 1) throw domain_error("dirichlet_sampling_log_pmf: K must be >= 1");
    if (!partition_valid(a, n)) throw domain_error("dirichlet_sampling_log_pmf: invalid partition");
    std::int64_t k = partition_blocks(a);
    if (k > K) return neg_inf;
    double alpha = theta / static_cast<double>(K);
    double lp = log_factorial(n) - log_rising_factorial(theta, n);
    lp += log_rising_factorial(static_cast<double>(K - k + 1), k);  // K!/(K-k)!
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] == 0) continue;
        double aj = static_cast<double>(a[j]);
        lp += aj * (log_rising_factorial(alpha, static_cast<std::int64_t>(j + 1)) -
                    log_factorial(static_cast<std::int64_t>(j + 1)));
        lp -= log_factorial(a[j]);
    }
    return lp;
}

double kn_log_pmf(double theta, std::int64_t n, std::int64_t k) {
    check_theta(theta);
    if (n < 1) throw domain_error("kn_log_pmf: n must be >= 1");
    if (k < 1 || k > n) return neg_inf;
    return log_stirling1(n, k) + static_cast<double>(k) * std::log(theta) -
           log_rising_factorial(theta, n);
}

double kn_log_mgf(double theta, std::int64_t n, double t) {
    check_theta(theta);
    if (n < 1) throw domain_error("kn_log_mgf: n must be >= 1");
    double scaled = theta * std::exp(t);
    if (!(scaled > 0.0) || !std::isfinite(scaled))
        throw domain_error("kn_log_mgf: theta*e^t out of range");
    return log_rising_factorial(scaled, n) - log_rising_factorial(theta, n);
}

double kn_mean(double theta, std::int64_t n) {
    check_theta(theta);
    if (n < 1) throw domain_error("kn_mean: n must be >= 1");
    return theta * (digamma(theta + static_cast<double>(n)) - digamma(theta));
}

double ageclass1_log_pmf(double theta, std::int64_t n, std::int64_t k) {
    check_theta(theta);
    if (n < 1) throw domain_error("ageclass1_log_pmf: n must be >= 1");
    if (k < 1 || k > n) throw domain_error("ageclass1_log_pmf: k must be in [1, n]");
    double nd = static_cast<double>(n);
    // theta/n * n!/(n-k)! * rising(theta+n-k, k)^{-1}; the k = n endpoint uses 0! = 1
    return std::log(theta) - std::log(nd) +
           log_rising_factorial(static_cast<double>(n - k + 1), k) -
           log_rising_factorial(theta + static_cast<double>(n - k), k);
}

double ageclass_joint_log_pmf(double theta, std::int64_t n, const std::vector<std::int64_t>& ks) {
    check_theta(theta);
    if (n < 1) throw domain_error("ageclass_joint_log_pmf: n must be >= 1");
    if (ks.empty()) throw domain_error("ageclass_joint_log_pmf: empty class list");
    std::int64_t total = 0;
    for (std::int64_t k : ks) {
        if (k < 1) throw domain_error("ageclass_joint_log_pmf: class sizes must be >= 1");
        total += k;
    }
    if (total > n) throw domain_error("ageclass_joint_log_pmf: class sizes exceed n");
    double nd = static_cast<double>(n);
    double r = static_cast<double>(ks.size());
    double lp = r * (std::log(theta) - std::log(nd));
    std::int64_t cum = 0;
    for (std::size_t i = 0; i + 1 < ks.size(); ++i) {
        cum += ks[i];
        lp -= std::log1p(-static_cast<double>(cum) / nd);
    }
    lp += log_rising_factorial(static_cast<double>(n - total + 1), total);
    lp -= log_rising_factorial(theta + static_cast<double>(n - total), total);
    return lp;
}

double conditional_sampling_log_prob(std::int64_t n, const Partition& a,
                                     const std::vector<double>& p, double dp_budget) {
    if (!partition_valid(a, n)) throw domain_error("conditional_sampling_log_prob: invalid partition");
    if (p.empty()) throw domain_error("conditional_sampling_log_prob: empty atom vector");
    double mass = 0.0;
    for (double pi : p) {
        if (pi < 0.0 || !std::isfinite(pi))
            throw domain_error("conditional_sampling_log_prob: atoms must be nonnegative");
        mass += pi;
    }
    if (mass > 1.0 + 1e-12) throw domain_error("conditional_sampling_log_prob: atom mass exceeds 1");

    // classes with at least one block, in increasing part size
    std::vector<std::int64_t> size_of_class, count_of_class;
    for (std::size_t j = 0; j < a.size(); ++j)
        if (a[j] > 0) {
            size_of_class.push_back(static_cast<std::int64_t>(j + 1));
            count_of_class.push_back(a[j]);
        }
    std::size_t q = size_of_class.size();
    if (q == 0) return neg_inf;  // no blocks; n >= 1 makes this unreachable

    std::size_t states = 1;
    for (std::size_t i = 0; i < q; ++i) {
        std::size_t d = static_cast<std::size_t>(count_of_class[i]) + 1;
        if (states > (static_cast<std::size_t>(1) << 60) / d)
            throw complexity_error("conditional_sampling_log_prob: state space overflow");
        states *= d;
    }
    double cost = static_cast<double>(states) * static_cast<double>(p.size());
    if (cost > dp_budget)
        throw complexity_error("conditional_sampling_log_prob: dp cost exceeds budget");

    std::vector<std::size_t> stride(q);
    stride[0] = 1;
    for (std::size_t i = 1; i < q; ++i)
        stride[i] = stride[i - 1] * (static_cast<std::size_t>(count_of_class[i - 1]) + 1);

    // dp over Prod (1 + sum_i z_i p_l^{size_i}); each atom hosts at most one
    // block, so states are updated in decreasing flattened order
    std::vector<double> dp(states, 0.0);
    dp[0] = 1.0;
    std::vector<double> pw(q);
    for (double pl : p) {
        if (pl == 0.0) continue;
        for (std::size_t i = 0; i < q; ++i)
            pw[i] = std::pow(pl, static_cast<double>(size_of_class[i]));
        for (std::size_t idx = states; idx-- > 0;) {
            double acc = dp[idx];
            if (acc == 0.0) continue;
            for (std::size_t i = 0; i < q; ++i) {
                std::size_t d = static_cast<std::size_t>(count_of_class[i]) + 1;
                std::size_t ci = (idx / stride[i]) % d;
                if (ci + 1 < d) dp[idx + stride[i]] += acc * pw[i];
            }
        }
    }
    double coeff = dp[states - 1];
    if (!(coeff > 0.0)) return neg_inf;
    return log_partition_factor(n, a) + std::log(coeff);
}

}  // namespace pdld
