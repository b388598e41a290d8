#include "pdld/simplex_geom.hpp"

#include <gmpxx.h>

#include <cmath>
#include <vector>

#include "pdld/kernels.hpp"
#include "pdld/special.hpp"
#include "pdld/util.hpp"

namespace pdld {

namespace {

constexpr std::int64_t max_m = 10000;

// nearest dyadic rational with denominator 2^64
mpq_class snap_dyadic(double s) {
    mpq_class exact(s);  // doubles convert exactly
    mpz_class num = exact.get_num() << 64;
    mpz_class den = exact.get_den();  // a power of two
    mpz_class rounded;
    mpz_class half = den / 2;
    if (num >= 0)
        rounded = (num + half) / den;
    else
        rounded = (num - half) / den;
    mpq_class out(rounded, mpz_class(1) << 64);
    out.canonicalize();
    return out;
}

double log_mpz(const mpz_class& z) {
    signed long exp2 = 0;
    double d = mpz_get_d_2exp(&exp2, z.get_mpz_t());
    return std::log(d) + static_cast<double>(exp2) * std::log(2.0);
}

double log_mpq(const mpq_class& q) {
    if (q <= 0) return neg_inf;
    return log_mpz(q.get_num()) - log_mpz(q.get_den());
}

// exact Irwin-Hall CDF at rational s: (1/m!) sum_j (-1)^j C(m,j) (s-j)^m
mpq_class irwin_hall_cdf_mpq(std::int64_t m, const mpq_class& s) {
    if (s <= 0) return mpq_class(0);
    if (s >= m) return mpq_class(1);
    mpz_class floor_s;
    mpz_fdiv_q(floor_s.get_mpz_t(), s.get_num().get_mpz_t(), s.get_den().get_mpz_t());
    std::int64_t jmax = static_cast<std::int64_t>(floor_s.get_si());
    mpq_class total(0);
    for (std::int64_t j = 0; j <= jmax; ++j) {
        mpq_class base = s - j;
        mpz_class pn, pd;
        mpz_pow_ui(pn.get_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(m));
        mpz_pow_ui(pd.get_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(m));
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(j));
        mpq_class term(binom * pn, pd);
        term.canonicalize();
        if (j % 2 == 0)
            total += term;
        else
            total -= term;
    }
    mpz_class mfact;
    mpz_fac_ui(mfact.get_mpz_t(), static_cast<unsigned long>(m));
    mpq_class out = total / mpq_class(mfact);
    out.canonicalize();
    return out;
}

}  // namespace

void validate_order_stat_point(const OrderStatPoint& pt) {
    std::int64_t r = static_cast<std::int64_t>(pt.p.size());
    if (r < 1) throw domain_error("order stat point: empty");
    if (pt.K < r + 2) throw domain_error("order stat point: requires K >= r + 2");
    double sum = 0.0;
    for (std::size_t i = 0; i < pt.p.size(); ++i) {
        if (!(pt.p[i] > 0.0)) throw domain_error("order stat point: coordinates must be positive");
        if (i > 0 && pt.p[i] > pt.p[i - 1] + 1e-15)
            throw domain_error("order stat point: coordinates must be non-increasing");
        sum += pt.p[i];
    }
    if (sum > 1.0 + 1e-12) throw domain_error("order stat point: mass exceeds 1");
}

double irwin_hall_cdf(std::int64_t m, double s) {
    if (m < 1) throw domain_error("irwin_hall_cdf: m must be >= 1");
    if (m > max_m) throw complexity_error("irwin_hall_cdf: m capped at 10000");
    if (!std::isfinite(s)) throw domain_error("irwin_hall_cdf: s must be finite");
    return irwin_hall_cdf_mpq(m, snap_dyadic(s)).get_d();
}

double volume_L(const OrderStatPoint& pt) {
    validate_order_stat_point(pt);
    std::int64_t r = static_cast<std::int64_t>(pt.p.size());
    std::int64_t m = pt.K - r - 1;
    double pr = pt.p.back();
    double ar = 0.0;
    for (double v : pt.p) ar += v;
    double tail = 1.0 - ar;
    if (tail <= 0.0) return neg_inf;
    if (tail <= pr)
        return static_cast<double>(m) * std::log(tail) - std::lgamma(static_cast<double>(m + 1));
    if (m > max_m) throw complexity_error("volume_L: K - r - 1 capped at 10000");
    // bracket of Irwin-Hall CDFs at (1-a_r)/p_r and (1-a_r-p_r)/p_r; the two
    // snapped arguments are kept exactly one apart
    mpq_class s1 = snap_dyadic(tail / pr);
    mpq_class s2 = s1 - 1;
    mpq_class bracket = irwin_hall_cdf_mpq(m, s1) - irwin_hall_cdf_mpq(m, s2);
    if (bracket <= 0) return neg_inf;
    return static_cast<double>(m) * std::log(pr) + log_mpq(bracket);
}

double order_stat_log_density(const OrderStatPoint& pt) {
    validate_order_stat_point(pt);
    double lead = 0.0;
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(pt.p.size()); ++i)
        lead += std::log(static_cast<double>(pt.K - i));
    return lead + std::lgamma(static_cast<double>(pt.K)) + volume_L(pt);
}

SandwichReport sandwich_check(const OrderStatPoint& pt) {
    validate_order_stat_point(pt);
    SandwichReport rep;
    std::int64_t r = static_cast<std::int64_t>(pt.p.size());
    double pr = pt.p.back();
    double ar = 0.0;
    for (double v : pt.p) ar += v;
    double tail = 1.0 - ar;
    if (tail <= pr) return rep;  // nontrivial branch only
    rep.applicable = true;
    rep.m = static_cast<std::int64_t>(std::floor(tail / pr)) + 1;  // smallest k with k p_r > 1 - a_r
    std::int64_t m = rep.m;
    double Kr1 = static_cast<double>(pt.K - r - 1);

    rep.log_L = volume_L(pt);
    rep.log_upper = Kr1 * std::log(tail) - std::lgamma(static_cast<double>(pt.K - r));

    // log C(K+m, r, m) = log sum_l binom(K+m-r-1, l) (1-a_r-p_r)^l p_r^{m-l}
    double logC = neg_inf;
    double log_gap = std::log(tail - pr);
    double log_pr = std::log(pr);
    for (std::int64_t l = 0; l <= m; ++l)
        logC = log_add(logC, log_binomial(pt.K + m - r - 1, l) + static_cast<double>(l) * log_gap +
                                 static_cast<double>(m - l) * log_pr);

    double lg_Kr = std::lgamma(static_cast<double>(pt.K - r));
    double lg_Kmr = std::lgamma(static_cast<double>(pt.K + m - r));
    double log_factor = static_cast<double>(m) * std::log(tail) + lg_Kr - logC - lg_Kmr;
    double logX = logC + Kr1 * (log_gap - std::log(tail)) + lg_Kmr -
                  static_cast<double>(m) * std::log(tail) - lg_Kr;
    if (logX >= 0.0) {
        rep.log_lower = neg_inf;  // bracket non-positive: bound is trivial
    } else {
        rep.log_lower = rep.log_upper + log_factor + std::log(-std::expm1(logX));
    }
    rep.pass = (rep.log_L <= rep.log_upper + 1e-9) && (rep.log_lower <= rep.log_L + 1e-9);
    return rep;
}

}  // namespace pdld
