#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "pdld/util.hpp"

namespace pdld {

// Identifies one reproducible random stream. Streams are decorrelated by
// passing master_seed and stream_index through a splitmix64 finalizer before
// seeding the engine, so (seed, i) and (seed, j) are independent for i != j
// and a Monte Carlo loop indexed by stream is deterministic under any
// parallel schedule.
struct SeedSpec {
    std::uint64_t master_seed = 0;
    std::uint64_t stream_index = 0;
};

namespace detail {
inline std::uint64_t splitmix64_mix(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}
}  // namespace detail

class Rng {
  public:
    explicit Rng(SeedSpec s)
        : eng_(detail::splitmix64_mix(s.master_seed ^ detail::splitmix64_mix(s.stream_index))) {}

    std::uint64_t next_u64() { return eng_(); }

    // uniform on the open interval (0,1)
    double uniform() { return (static_cast<double>(eng_() >> 11) + 0.5) * 0x1.0p-53; }

    double normal() {
        for (;;) {
            double u = 2.0 * uniform() - 1.0;
            double v = 2.0 * uniform() - 1.0;
            double s = u * u + v * v;
            if (s > 0.0 && s < 1.0) return u * std::sqrt(-2.0 * std::log(s) / s);
        }
    }

    // Gamma(shape a, scale 1), Marsaglia-Tsang squeeze; a < 1 boosted via
    // Gamma(a+1) * U^(1/a)
    double gamma(double a) {
        if (!(a > 0.0)) throw domain_error("gamma: shape must be positive");
        if (a < 1.0) return gamma(a + 1.0) * std::pow(uniform(), 1.0 / a);
        double d = a - 1.0 / 3.0;
        double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x = normal();
            double t = 1.0 + c * x;
            if (t <= 0.0) continue;
            double v = t * t * t;
            double u = uniform();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

    // Beta(1, theta) by inverse CDF: U = 1 - V^(1/theta)
    double beta_1_theta(double theta) {
        if (!(theta > 0.0)) throw domain_error("beta_1_theta: theta must be positive");
        return -std::expm1(std::log(uniform()) / theta);
    }

    // general Beta(a, b) from two Gammas
    double beta(double a, double b) {
        double x = gamma(a);
        double y = gamma(b);
        return x / (x + y);
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace pdld
