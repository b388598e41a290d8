#include "pdld/kernels.hpp"

namespace pdld::kernels {

double sum_serial(const double* x, std::size_t n) {
    if (n == 0) return 0.0;
    std::size_t nchunks = (n + chunk_size - 1) / chunk_size;
    double acc = 0.0;
    for (std::size_t c = 0; c < nchunks; ++c) {
        std::size_t lo = c * chunk_size;
        std::size_t hi = lo + chunk_size < n ? lo + chunk_size : n;
        acc += detail::chunk_sum(x, lo, hi);
    }
    return acc;
}

double sum_parallel(const double* x, std::size_t n) {
    if (n == 0) return 0.0;
    std::size_t nchunks = (n + chunk_size - 1) / chunk_size;
    std::vector<double> partial(nchunks);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(nchunks); ++c) {
        std::size_t lo = static_cast<std::size_t>(c) * chunk_size;
        std::size_t hi = lo + chunk_size < n ? lo + chunk_size : n;
        partial[static_cast<std::size_t>(c)] = detail::chunk_sum(x, lo, hi);
    }
    double acc = 0.0;
    for (double p : partial) acc += p;
    return acc;
}

double logsumexp_serial(const double* x, std::size_t n) {
    if (n == 0) return neg_inf;
    std::size_t nchunks = (n + chunk_size - 1) / chunk_size;
    double acc = neg_inf;
    for (std::size_t c = 0; c < nchunks; ++c) {
        std::size_t lo = c * chunk_size;
        std::size_t hi = lo + chunk_size < n ? lo + chunk_size : n;
        acc = log_add(acc, detail::chunk_lse(x, lo, hi));
    }
    return acc;
}

double logsumexp_parallel(const double* x, std::size_t n) {
    if (n == 0) return neg_inf;
    std::size_t nchunks = (n + chunk_size - 1) / chunk_size;
    std::vector<double> partial(nchunks);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(nchunks); ++c) {
        std::size_t lo = static_cast<std::size_t>(c) * chunk_size;
        std::size_t hi = lo + chunk_size < n ? lo + chunk_size : n;
        partial[static_cast<std::size_t>(c)] = detail::chunk_lse(x, lo, hi);
    }
    double acc = neg_inf;
    for (double p : partial) acc = log_add(acc, p);
    return acc;
}

double sum(const std::vector<double>& x) {
#ifdef _OPENMP
    if (x.size() > 2 * chunk_size) return sum_parallel(x.data(), x.size());
#endif
    return sum_serial(x.data(), x.size());
}

double logsumexp(const std::vector<double>& x) {
#ifdef _OPENMP
    if (x.size() > 2 * chunk_size) return logsumexp_parallel(x.data(), x.size());
#endif
    return logsumexp_serial(x.data(), x.size());
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace pdld::kernels
