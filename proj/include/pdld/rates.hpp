#pragma once

#include <cstdint>
#include <vector>

#include "pdld/partition.hpp"

namespace pdld {

// log 1/(1 - sum p_i): exponential cost of the first coordinates of a
// descending mass vector holding mass sum(p); +inf when the mass is 1
double rate_residual_mass(const std::vector<double>& p);

// relative entropy of the uniform K-vector with respect to p (full simplex
// vector of length K): sum (1/K) log((1/K)/p_i)
double rate_relative_entropy(const std::vector<double>& p, std::int64_t K);

// infimum of rate_relative_entropy over completions of the first r
// coordinates p_1 >= ... >= p_r; the remaining K-r coordinates are optimal
// when equal, which requires p_r >= (1-a_r)/(K-r)
double constrained_inf_relent(const std::vector<double>& p, std::int64_t K);

// rate of the i-th stick of the size-biased K-allele vector; zero at
// v = 1/(K+1-i), +inf at v in {0,1}
double rate_beta_stick(std::int64_t K, std::int64_t i, double v);

// sum of stick rates for the leading size-biased masses y_1, ..., y_r
// (trailing zeros trimmed); +inf if a zero stick precedes a positive one
double rate_sizebiased_SK(const std::vector<double>& y, std::int64_t K);

// partition-level rate n - (number of blocks)
double rate_esf(std::int64_t n, const Partition& a);

// limiting scaled cumulant generating functions of K_n per regime;
// param is n for case A, c for case C, ignored for B and D
double cgf_limit(char case_label, double t, double param = 0.0);

// Legendre transform of the case C limit: rate of K_n/n when theta/n -> c.
// Zero at x = c log(1+1/c), +inf outside [0,1].
double legendre_caseC(double x, double c);

struct LegendreDetail {
    double value;  // rate at x
    double u;      // root of u log(1+1/u) = x
    double t;      // dual point log(u/c)/c
};
LegendreDetail legendre_caseC_detail(double x, double c);

// per-regime rates for K_n/n ball events
double rate_kn_caseB(double x);
double rate_kn_caseD(double x);

// per-regime rates for age-class proportion ball events
double rate_ageclass_caseB(double x);
double rate_ageclass_caseC(double x, double c);
double rate_ageclass_caseD(double x);

}  // namespace pdld
