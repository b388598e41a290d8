#pragma once

#include <cstdint>

namespace pdld {

// log of the rising factorial x(x+1)...(x+n-1). Three branches keep full
// precision everywhere: a direct log sum for short products, an asymptotic
// series when n/x is tiny (where lgamma(x+n) - lgamma(x) loses all digits to
// cancellation), and the lgamma difference otherwise.
double log_rising_factorial(double x, std::int64_t n);

double log_factorial(std::int64_t n);

// log C(n, k) for integer arguments, via lgamma
double log_binomial(std::int64_t n, std::int64_t k);

double digamma(double x);

// chi-square survival function P(X > stat) with df degrees of freedom
double chisq_sf(double stat, double df);

}  // namespace pdld
