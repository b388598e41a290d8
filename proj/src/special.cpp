#include "pdld/special.hpp"

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>

#include "pdld/util.hpp"

namespace pdld {

double log_rising_factorial(double x, std::int64_t n) {
    if (n < 0) throw domain_error("log_rising_factorial: n must be >= 0");
    if (n == 0) return 0.0;
    if (!(x > 0.0)) throw domain_error("log_rising_factorial: x must be positive");
    if (n <= 4096) {
        double s = 0.0;
        for (std::int64_t i = 0; i < n; ++i) s += std::log(x + static_cast<double>(i));
        return s;
    }
    double nd = static_cast<double>(n);
    if (nd / x <= 1e-6) {
        // sum log(1 + i/x) expanded to third order; next term is O(n^5/x^4)
        double s1 = nd * (nd - 1.0) / 2.0;
        double s2 = nd * (nd - 1.0) * (2.0 * nd - 1.0) / 6.0;
        double s3 = s1 * s1;
        return nd * std::log(x) + s1 / x - s2 / (2.0 * x * x) + s3 / (3.0 * x * x * x);
    }
    return std::lgamma(x + nd) - std::lgamma(x);
}

double log_factorial(std::int64_t n) {
    if (n < 0) throw domain_error("log_factorial: negative argument");
    return std::lgamma(static_cast<double>(n) + 1.0);
}

double log_binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return neg_inf;
    return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

double digamma(double x) { return boost::math::digamma(x); }

double chisq_sf(double stat, double df) {
    if (!(df > 0.0)) throw domain_error("chisq_sf: df must be positive");
    if (stat <= 0.0) return 1.0;
    return boost::math::gamma_q(df / 2.0, stat / 2.0);
}

}  // namespace pdld
