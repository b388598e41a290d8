#include "pdld/samplers.hpp"

#include <algorithm>
#include <cmath>

#include "pdld/util.hpp"

namespace pdld {

namespace {

void check_theta(double theta) {
    if (!(theta > 0.0) || !std::isfinite(theta)) throw domain_error("theta must be positive and finite");
}

// single stick-break step shared by sample_gem and sample_pd: consumes one
// Beta(1, theta) fraction of the remainder
inline double stick_step(double theta, double& remainder, Rng& rng) {
    double u = rng.beta_1_theta(theta);
    double x = remainder * u;
    remainder *= (1.0 - u);
    return x;
}

}  // namespace

MassVector sample_gem(double theta, std::int64_t n_atoms, Rng& rng) {
    check_theta(theta);
    if (n_atoms < 1) throw domain_error("sample_gem: need at least one atom");
    MassVector mv;
    mv.order = MassVector::Order::stick;
    mv.atoms.reserve(static_cast<std::size_t>(n_atoms));
    double remainder = 1.0;
    for (std::int64_t k = 0; k < n_atoms; ++k) mv.atoms.push_back(stick_step(theta, remainder, rng));
    mv.tail_bound = remainder;
    return mv;
}

MassVector sample_gem(double theta, std::int64_t n_atoms, SeedSpec seed) {
    Rng rng(seed);
    return sample_gem(theta, n_atoms, rng);
}

PDSample sample_pd(double theta, double eps, std::int64_t top_m, Rng& rng) {
    check_theta(theta);
    if (!(eps > 0.0) || eps >= 1.0) throw domain_error("sample_pd: eps must be in (0,1)");
    if (top_m < 1) throw domain_error("sample_pd: top_m must be >= 1");
    PDSample out;
    out.mass.order = MassVector::Order::descending;
    double remainder = 1.0;
    std::size_t guard = 0;
    while (remainder >= eps) {
        out.mass.atoms.push_back(stick_step(theta, remainder, rng));
        if (++guard > 100000000u) throw complexity_error("sample_pd: stick count exceeded guard");
    }
    std::sort(out.mass.atoms.begin(), out.mass.atoms.end(), std::greater<double>());
    out.mass.tail_bound = remainder;
    out.certified = static_cast<std::size_t>(top_m) <= out.mass.atoms.size() &&
                    out.mass.atoms[static_cast<std::size_t>(top_m - 1)] > eps;
    return out;
}

PDSample sample_pd(double theta, double eps, std::int64_t top_m, SeedSpec seed) {
    Rng rng(seed);
    return sample_pd(theta, eps, top_m, rng);
}

std::vector<double> sample_dirichlet_symmetric(std::int64_t K, double alpha, Rng& rng) {
    if (K < 1) throw domain_error("sample_dirichlet_symmetric: K must be >= 1");
    if (!(alpha > 0.0)) throw domain_error("sample_dirichlet_symmetric: alpha must be positive");
    std::vector<double> g(static_cast<std::size_t>(K));
    double total = 0.0;
    for (auto& v : g) {
        v = rng.gamma(alpha);
        total += v;
    }
    for (auto& v : g) v /= total;
    return g;
}

std::vector<double> sample_dirichlet_symmetric(std::int64_t K, double alpha, SeedSpec seed) {
    Rng rng(seed);
    return sample_dirichlet_symmetric(K, alpha, rng);
}

MassVector sample_size_biased_dirichlet(double theta, std::int64_t K, Rng& rng) {
    check_theta(theta);
    if (K < 2) throw domain_error("sample_size_biased_dirichlet: K must be >= 2");
    MassVector mv;
    mv.order = MassVector::Order::stick;
    mv.atoms.reserve(static_cast<std::size_t>(K - 1));
    double alpha = theta / static_cast<double>(K);
    double remainder = 1.0;
    for (std::int64_t i = 1; i <= K - 1; ++i) {
        double v = rng.beta(alpha + 1.0, static_cast<double>(K - i) * alpha);
        double x = remainder * v;
        remainder *= (1.0 - v);
        mv.atoms.push_back(x);
    }
    mv.tail_bound = remainder;  // exactly the K-th mass
    return mv;
}

MassVector sample_size_biased_dirichlet(double theta, std::int64_t K, SeedSpec seed) {
    Rng rng(seed);
    return sample_size_biased_dirichlet(theta, K, rng);
}

Partition sample_ewens_partition(double theta, std::int64_t n, Rng& rng) {
    check_theta(theta);
    if (n < 1) throw domain_error("sample_ewens_partition: n must be >= 1");
    std::vector<std::int64_t> counts;  // allele class counts in creation order
    for (std::int64_t i = 1; i <= n; ++i) {
        double u = rng.uniform() * (theta + static_cast<double>(i - 1));
        if (u < theta) {
            counts.push_back(1);
        } else {
            double pick = u - theta;  // uniform over the i-1 prior members
            double acc = 0.0;
            std::size_t chosen = counts.size() - 1;
            for (std::size_t t = 0; t < counts.size(); ++t) {
                acc += static_cast<double>(counts[t]);
                if (pick < acc) {
                    chosen = t;
                    break;
                }
            }
            ++counts[chosen];
        }
    }
    Partition a(static_cast<std::size_t>(n), 0);
    for (std::int64_t c : counts) ++a[static_cast<std::size_t>(c - 1)];
    return a;
}

Partition sample_ewens_partition(double theta, std::int64_t n, SeedSpec seed) {
    Rng rng(seed);
    return sample_ewens_partition(theta, n, rng);
}

std::int64_t sample_kn(double theta, std::int64_t n, Rng& rng) {
    check_theta(theta);
    if (n < 1) throw domain_error("sample_kn: n must be >= 1");
    std::int64_t k = 0;
    for (std::int64_t i = 1; i <= n; ++i)
        if (rng.uniform() * (theta + static_cast<double>(i - 1)) < theta) ++k;
    return k;
}

std::int64_t sample_kn(double theta, std::int64_t n, SeedSpec seed) {
    Rng rng(seed);
    return sample_kn(theta, n, rng);
}

}  // namespace pdld
