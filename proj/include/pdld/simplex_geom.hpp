#pragma once

#include <cstdint>
#include <vector>

namespace pdld {

// First r order statistics of a K-allele uniform simplex point:
// p_1 >= ... >= p_r > 0, sum <= 1, and r <= K-2 so the slab volume
// integrates over at least one free coordinate.
struct OrderStatPoint {
    std::vector<double> p;
    std::int64_t K = 0;
};

void validate_order_stat_point(const OrderStatPoint& pt);

// CDF of a sum of m independent uniform(0,1) variables, evaluated in exact
// rational arithmetic after snapping s to a dyadic rational with denominator
// 2^64 (induced CDF error at most 2^-64 since the density is bounded by 1)
double irwin_hall_cdf(std::int64_t m, double s);

// log of the normalized slab volume L: the probability-weighted volume of
// completions with all remaining coordinates at most p_r
double volume_L(const OrderStatPoint& pt);

// log of the joint density of the first r order statistics
double order_stat_log_density(const OrderStatPoint& pt);

struct SandwichReport {
    bool applicable = false;  // requires the 1 - a_r > p_r branch
    bool pass = false;
    std::int64_t m = 0;       // smallest k with k p_r > 1 - a_r
    double log_L = 0.0;
    double log_upper = 0.0;
    double log_lower = 0.0;   // -inf when the lower bound is trivial
};

// two-sided bound on volume_L built from the Irwin-Hall tail estimates
SandwichReport sandwich_check(const OrderStatPoint& pt);

}  // namespace pdld
