#pragma once

#include <cstddef>
#include <vector>

#include "pdld/util.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pdld::kernels {

// Reductions are chunked with a fixed chunk size and the per-chunk partials are
// combined in chunk order. The serial and parallel variants therefore produce
// bit-identical results for any thread count; only the chunk evaluations are
// distributed.
inline constexpr std::size_t chunk_size = 4096;

double sum_serial(const double* x, std::size_t n);
double sum_parallel(const double* x, std::size_t n);
double logsumexp_serial(const double* x, std::size_t n);
double logsumexp_parallel(const double* x, std::size_t n);

double sum(const std::vector<double>& x);
double logsumexp(const std::vector<double>& x);

namespace detail {

inline double chunk_sum(const double* x, std::size_t lo, std::size_t hi) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += x[i];
    return s;
}

inline double chunk_lse(const double* x, std::size_t lo, std::size_t hi) {
    double m = neg_inf;
    for (std::size_t i = lo; i < hi; ++i)
        if (x[i] > m) m = x[i];
    if (m == neg_inf) return neg_inf;
    if (m == pos_inf) return pos_inf;
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += std::exp(x[i] - m);
    return m + std::log(s);
}

}  // namespace detail

// logsumexp over terms produced on the fly; term(i) must be pure
template <class F>
double logsumexp_terms(std::size_t n, F&& term, bool parallel = true) {
    if (n == 0) return neg_inf;
    std::size_t nchunks = (n + chunk_size - 1) / chunk_size;
    std::vector<double> partial(nchunks);
#ifdef _OPENMP
    if (parallel && nchunks > 1) {
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(nchunks); ++c) {
            std::size_t lo = static_cast<std::size_t>(c) * chunk_size;
            std::size_t hi = lo + chunk_size < n ? lo + chunk_size : n;
            double m = neg_inf;
            std::vector<double> vals(hi - lo);
            for (std::size_t i = lo; i < hi; ++i) {
                vals[i - lo] = term(i);
                if (vals[i - lo] > m) m = vals[i - lo];
            }
            partial[static_cast<std::size_t>(c)] = detail::chunk_lse(vals.data(), 0, vals.size());
        }
    } else
#endif
    {
        (void)parallel;
        for (std::size_t c = 0; c < nchunks; ++c) {
            std::size_t lo = c * chunk_size;
            std::size_t hi = lo + chunk_size < n ? lo + chunk_size : n;
            std::vector<double> vals(hi - lo);
            for (std::size_t i = lo; i < hi; ++i) vals[i - lo] = term(i);
            partial[c] = detail::chunk_lse(vals.data(), 0, vals.size());
        }
    }
    double acc = neg_inf;
    for (double p : partial) acc = log_add(acc, p);
    return acc;
}

template <class F>
double sum_terms(std::size_t n, F&& term, bool parallel = true) {
    if (n == 0) return 0.0;
    std::size_t nchunks = (n + chunk_size - 1) / chunk_size;
    std::vector<double> partial(nchunks);
#ifdef _OPENMP
    if (parallel && nchunks > 1) {
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(nchunks); ++c) {
            std::size_t lo = static_cast<std::size_t>(c) * chunk_size;
            std::size_t hi = lo + chunk_size < n ? lo + chunk_size : n;
            double s = 0.0;
            for (std::size_t i = lo; i < hi; ++i) s += term(i);
            partial[static_cast<std::size_t>(c)] = s;
        }
    } else
#endif
    {
        (void)parallel;
        for (std::size_t c = 0; c < nchunks; ++c) {
            std::size_t lo = c * chunk_size;
            std::size_t hi = lo + chunk_size < n ? lo + chunk_size : n;
            double s = 0.0;
            for (std::size_t i = lo; i < hi; ++i) s += term(i);
            partial[c] = s;
        }
    }
    double acc = 0.0;
    for (double p : partial) acc += p;
    return acc;
}

int max_threads();

}  // namespace pdld::kernels
