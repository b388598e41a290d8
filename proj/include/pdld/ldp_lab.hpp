#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "pdld/partition.hpp"
#include "pdld/rng.hpp"
#include "pdld/table.hpp"

namespace pdld {

// Coupling between theta and the sample size. Case A holds n fixed, B sends
// theta/n to infinity, C to a constant c, D to zero; the rule itself is
// supplied by the caller and checked for coherence along evaluation grids.
struct ScalingRegime {
    char case_label = 'A';
    double c = 1.0;  // case C ratio
    std::function<std::int64_t(double)> n_of;
    std::string rule_desc;

    static ScalingRegime fixed_n(char case_label, std::int64_t n);
    static ScalingRegime power(char case_label, double exponent);  // n = floor(theta^exponent)
    static ScalingRegime ratio(double c);                          // case C, n = floor(theta/c)
};

// which = 'a' (partition/block-count events), 'b' (cumulant argument),
// 'g' (age-class events)
double speed(const ScalingRegime& regime, char which, double theta);

// warns (returns messages) when the empirical theta/n ratios on the grid do
// not match the declared case
std::vector<std::string> regime_coherence_warnings(const ScalingRegime& regime,
                                                   const std::vector<double>& theta_grid);

struct EventSpec {
    enum class Kind { partition_point, kn_point, kn_ball, ageclass_ball, ageclass_joint_ball };
    Kind kind = Kind::kn_point;
    Partition a;            // partition_point
    std::int64_t k = 0;     // kn_point
    std::vector<double> x;  // ball centers (one entry, or r entries for the joint ball)
    double delta = 0.01;    // ball half-width
};

// exact log-probability of the event at (theta, n) by summation of the
// corresponding pmf; ball lattices are capped at 10^7 terms
double event_log_prob(double theta, std::int64_t n, const EventSpec& ev);

// log density of the first n stick-breaking masses
double gem_log_density(double theta, const std::vector<double>& x);

struct ConvergenceTable {
    struct Row {
        double theta, n, speed_value, empirical_rate;
    };
    std::vector<Row> rows;
    double target_rate = 0.0;
    double extrapolated = 0.0;
    double coef_C = 0.0;         // fitted 1/speed coefficient
    double residual_rms = 0.0;   // fit residuals
    double correction_rms = 0.0; // size of the fitted C/speed term
    std::string model;

    Table to_table() const;
};

// empirical rates -log P / speed along a theta grid with a least-squares
// extrapolation against 1/speed
ConvergenceTable rate_curve(const ScalingRegime& regime, const EventSpec& ev,
                            const std::vector<double>& theta_grid);

// partition-point curve under the K-allele symmetric Dirichlet, indexed by K
// with theta = theta_of(K); speed log K
ConvergenceTable dirichlet_rate_curve(std::int64_t n, const Partition& a,
                                      const std::vector<double>& K_grid,
                                      const std::function<double(double)>& theta_of);

// rows (t, (1/alpha) log M(beta t), limit, difference)
Table mgf_limit_curve(const ScalingRegime& regime, const std::vector<double>& t_grid, double theta);

// rows (theta, normalized mean of the block count, target limit)
Table lln_table(const ScalingRegime& regime, const std::vector<double>& theta_grid);

struct GofReport {
    std::string which;
    double statistic = 0.0;
    double df = 0.0;
    double p_value = 0.0;
    bool pass = false;
    std::int64_t N = 0;
    std::int64_t cells = 0;
    SeedSpec seed;
};

struct GofParams {
    double theta = 1.0;
    std::int64_t n = 1;
    std::int64_t K = 1;
    double alpha = 1.0;
};

// chi-square fit of a sampler against its exact law at significance 1e-3;
// which is one of ewens | kn | gem | dirichlet-max
GofReport gof_validate(const std::string& which, const GofParams& params, std::int64_t N,
                       SeedSpec seed);

// least-squares fit y = a + b*x; returns {a, b}
std::pair<double, double> fit_affine(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace pdld
