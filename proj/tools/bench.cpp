#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "pdld/exact_dist.hpp"
#include "pdld/kernels.hpp"
#include "pdld/rng.hpp"
#include "pdld/samplers.hpp"
#include "pdld/util.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

void report(const std::string& name, double serial_s, double parallel_s, bool identical) {
    std::cout << name << ": serial " << pdld::format_double(serial_s) << "s, parallel "
              << pdld::format_double(parallel_s) << "s, speedup "
              << pdld::format_double(serial_s / parallel_s) << ", identical "
              << (identical ? "yes" : "NO") << "\n";
    if (!identical) std::exit(1);
}

}  // namespace

int main() {
    std::cout << "threads available: " << pdld::kernels::max_threads() << "\n";

    {
        // reduction over a materialized vector
        const std::size_t n = 1 << 23;
        pdld::Rng rng({12345, 0});
        std::vector<double> x(n);
        for (double& v : x) v = -50.0 * rng.uniform();
        auto t0 = clock_type::now();
        double serial = pdld::kernels::logsumexp_serial(x.data(), n);
        double serial_s = seconds_since(t0);
        t0 = clock_type::now();
        double parallel = pdld::kernels::logsumexp_parallel(x.data(), n);
        double parallel_s = seconds_since(t0);
        report("logsumexp vector (2^23)", serial_s, parallel_s, serial == parallel);
    }

    {
        // reduction over generated terms: an age-class window summed in place
        const double theta = 100.0;
        const std::int64_t nn = 10000000;
        const std::int64_t lo = 2000000, hi = 4000000;
        auto term = [&](std::size_t i) {
            return pdld::ageclass1_log_pmf(theta, nn, lo + static_cast<std::int64_t>(i));
        };
        std::size_t count = static_cast<std::size_t>(hi - lo + 1);
        auto t0 = clock_type::now();
        double serial = pdld::kernels::logsumexp_terms(count, term, false);
        double serial_s = seconds_since(t0);
        t0 = clock_type::now();
        double parallel = pdld::kernels::logsumexp_terms(count, term, true);
        double parallel_s = seconds_since(t0);
        report("logsumexp pmf terms (2e6)", serial_s, parallel_s, serial == parallel);
    }

    {
        // seeded monte carlo with one stream per draw: counts must match exactly
        const double theta = 2.0;
        const std::int64_t nn = 100;
        const std::int64_t N = 200000;
        std::vector<std::int64_t> counts_serial(static_cast<std::size_t>(nn) + 1, 0);
        auto t0 = clock_type::now();
        for (std::int64_t i = 0; i < N; ++i)
            ++counts_serial[static_cast<std::size_t>(
                pdld::sample_kn(theta, nn, pdld::SeedSpec{777, static_cast<std::uint64_t>(i)}))];
        double serial_s = seconds_since(t0);

        std::vector<std::int64_t> counts_parallel(static_cast<std::size_t>(nn) + 1, 0);
        t0 = clock_type::now();
#ifdef _OPENMP
#pragma omp parallel
        {
            std::vector<std::int64_t> local(static_cast<std::size_t>(nn) + 1, 0);
#pragma omp for schedule(static)
            for (std::int64_t i = 0; i < N; ++i)
                ++local[static_cast<std::size_t>(
                    pdld::sample_kn(theta, nn, pdld::SeedSpec{777, static_cast<std::uint64_t>(i)}))];
#pragma omp critical
            for (std::size_t k = 0; k < local.size(); ++k) counts_parallel[k] += local[k];
        }
#else
        counts_parallel = counts_serial;
#endif
        double parallel_s = seconds_since(t0);
        report("monte carlo block counts (2e5 draws)", serial_s, parallel_s,
               counts_serial == counts_parallel);
    }

    return 0;
}
