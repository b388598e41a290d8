#pragma once

#include <cstdint>
#include <vector>

#include "pdld/partition.hpp"
#include "pdld/rng.hpp"

namespace pdld {

// Atom masses plus a bound on the unlisted remainder. Invariant:
// sum(atoms) + tail_bound <= 1 + 1e-12; descending order means atoms are
// non-increasing, stick order preserves generation order.
struct MassVector {
    enum class Order { descending, stick };
    std::vector<double> atoms;
    Order order = Order::stick;
    double tail_bound = 0.0;
};

struct PDSample {
    MassVector mass;           // descending atoms
    bool certified = false;    // top_m atoms provably above the truncation eps
};

// first n stick-breaking masses X_k = (1-U_1)...(1-U_{k-1}) U_k with
// U_k ~ Beta(1, theta); tail_bound is the exact unbroken remainder
MassVector sample_gem(double theta, std::int64_t n_atoms, Rng& rng);
MassVector sample_gem(double theta, std::int64_t n_atoms, SeedSpec seed);

// stick-break until the remainder drops below eps, then sort; the top_m
// leading atoms are certified when the m-th exceeds eps (no unlisted atom
// can outrank it)
PDSample sample_pd(double theta, double eps, std::int64_t top_m, Rng& rng);
PDSample sample_pd(double theta, double eps, std::int64_t top_m, SeedSpec seed);

// symmetric Dirichlet(alpha, ..., alpha) on K alleles via normalized Gammas
std::vector<double> sample_dirichlet_symmetric(std::int64_t K, double alpha, Rng& rng);
std::vector<double> sample_dirichlet_symmetric(std::int64_t K, double alpha, SeedSpec seed);

// size-biased reordering of the symmetric Dirichlet with total weight theta:
// masses y_i = V_i prod_{l<i} (1-V_l), V_i ~ Beta(theta/K + 1, (K-i) theta/K),
// i = 1..K-1; tail_bound equals the K-th mass exactly
MassVector sample_size_biased_dirichlet(double theta, std::int64_t K, Rng& rng);
MassVector sample_size_biased_dirichlet(double theta, std::int64_t K, SeedSpec seed);

// allelic partition of an n-sample by sequential seating: a new allele with
// probability theta/(theta+i-1), otherwise join an existing one with
// probability proportional to its count
Partition sample_ewens_partition(double theta, std::int64_t n, Rng& rng);
Partition sample_ewens_partition(double theta, std::int64_t n, SeedSpec seed);

// number of distinct alleles: sum of independent Bernoulli(theta/(theta+i-1))
std::int64_t sample_kn(double theta, std::int64_t n, Rng& rng);
std::int64_t sample_kn(double theta, std::int64_t n, SeedSpec seed);

}  // namespace pdld
