#pragma once

#include <cstdint>
#include <vector>

#include "pdld/partition.hpp"

namespace pdld {

// log P{A_n = a} for the sampling distribution of the allelic partition of an
// n-sample, infinite-alleles case
double esf_log_pmf(double theta, std::int64_t n, const Partition& a);

// log P{A_n = a} under the K-allele symmetric Dirichlet(theta/K, ...,
// theta/K); partitions with more than K blocks have probability zero
double dirichlet_sampling_log_pmf(double theta, std::int64_t K, std::int64_t n, const Partition& a);

// law of the number of distinct alleles K_n: log P{K_n = k}
double kn_log_pmf(double theta, std::int64_t n, std::int64_t k);

// log E[exp(t K_n)], closed form via rising factorials
double kn_log_mgf(double theta, std::int64_t n, double t);

// E[K_n] = theta (digamma(theta+n) - digamma(theta))
double kn_mean(double theta, std::int64_t n);

// log P{X_{1,n} = k}: size of the oldest allele's class in the sample, 1 <= k <= n
double ageclass1_log_pmf(double theta, std::int64_t n, std::int64_t k);

// joint law of the r oldest classes (k_1, ..., k_r), each >= 1, sum <= n
double ageclass_joint_log_pmf(double theta, std::int64_t n, const std::vector<std::int64_t>& ks);

// log F_a(p): probability weight that an n-sample from the atom vector p
// realizes block profile a, with blocks of equal size counted once per
// unordered choice (so the weight equals P{A_n = a | p} / prod_j a_j!).
// Computed by coefficient extraction over the atoms; cost is
// len(p) * prod_{a_j>0} (a_j + 1) and must stay within dp_budget.
double conditional_sampling_log_prob(std::int64_t n, const Partition& a,
                                     const std::vector<double>& p, double dp_budget = 1e8);

}  // namespace pdld
