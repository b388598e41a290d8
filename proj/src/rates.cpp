#include "pdld/rates.hpp"

#include <cmath>

#include "pdld/util.hpp"

namespace pdld {

namespace {

// F(x) = (1+x)log(1+x) - x log x, continuous at 0 with F(0) = 0
double bigF(double x) {
    if (x < 0.0) throw domain_error("bigF: negative argument");
    if (x == 0.0) return 0.0;
    return (1.0 + x) * std::log1p(x) - x * std::log(x);
}

// phi(u) = u log(1+1/u), strictly increasing from 0 to 1 on (0, inf)
double phi(double u) { return u * std::log1p(1.0 / u); }

void check_mass_vector(const std::vector<double>& p, double& sum) {
    sum = 0.0;
    for (double pi : p) {
        if (pi < 0.0 || !std::isfinite(pi)) throw domain_error("mass entries must be nonnegative");
        sum += pi;
    }
    if (sum > 1.0 + 1e-12) throw domain_error("mass entries sum beyond 1");
}

}  // namespace

double rate_residual_mass(const std::vector<double>& p) {
    double s = 0.0;
    check_mass_vector(p, s);
    if (s >= 1.0) return pos_inf;
    return -std::log1p(-s);
}

double rate_relative_entropy(const std::vector<double>& p, std::int64_t K) {
    if (K < 1) throw domain_error("rate_relative_entropy: K must be >= 1");
    if (static_cast<std::int64_t>(p.size()) != K)
        throw domain_error("rate_relative_entropy: p must have K entries");
    double s = 0.0;
    for (double pi : p) {
        if (pi < 0.0 || !std::isfinite(pi))
            throw domain_error("rate_relative_entropy: entries must be nonnegative");
        s += pi;
    }
    if (std::abs(s - 1.0) > 1e-9)
        throw domain_error("rate_relative_entropy: p must lie on the simplex");
    double invK = 1.0 / static_cast<double>(K);
    double total = 0.0;
    for (double pi : p) {
        if (pi == 0.0) return pos_inf;
        total += invK * (std::log(invK) - std::log(pi));
    }
    return total < 0.0 ? 0.0 : total;
}

double constrained_inf_relent(const std::vector<double>& p, std::int64_t K) {
    std::int64_t r = static_cast<std::int64_t>(p.size());
    if (r < 1) throw domain_error("constrained_inf_relent: empty prefix");
    if (K < r + 1) throw domain_error("constrained_inf_relent: need K > r");
    double ar = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!(p[i] > 0.0)) throw domain_error("constrained_inf_relent: entries must be positive");
        if (i > 0 && p[i] > p[i - 1] + 1e-15)
            throw domain_error("constrained_inf_relent: entries must be non-increasing");
        ar += p[i];
    }
    if (ar > 1.0 + 1e-12) throw domain_error("constrained_inf_relent: prefix mass exceeds 1");
    double Kd = static_cast<double>(K);
    double rest = static_cast<double>(K - r);
    double tail = 1.0 - ar;
    if (p.back() + 1e-15 < tail / rest)
        throw domain_error("constrained_inf_relent: prefix infeasible, p_r below the equal split");
    double invK = 1.0 / Kd;
    double total = 0.0;
    for (double pi : p) total += invK * (std::log(invK) - std::log(pi));
    if (tail <= 0.0) return pos_inf;
    // remaining K-r coordinates sit at (1-a_r)/(K-r)
    total += (rest / Kd) * (std::log(invK) - std::log(tail / rest));
    return total;
}

double rate_beta_stick(std::int64_t K, std::int64_t i, double v) {
    if (K < 2) throw domain_error("rate_beta_stick: K must be >= 2");
    if (i < 1 || i > K - 1) throw domain_error("rate_beta_stick: i must be in [1, K-1]");
    if (v < 0.0 || v > 1.0) throw domain_error("rate_beta_stick: v must be in [0,1]");
    if (v == 0.0 || v == 1.0) return pos_inf;
    double Kd = static_cast<double>(K);
    double rest = static_cast<double>(K - i);
    double vstar_inv = static_cast<double>(K + 1 - i);
    double val = -std::log(v) / Kd - (rest / Kd) * std::log1p(-v) - std::log(vstar_inv) / Kd +
                 (rest / Kd) * (std::log(rest) - std::log(vstar_inv));
    return val < 0.0 ? 0.0 : val;
}

double rate_sizebiased_SK(const std::vector<double>& y, std::int64_t K) {
    if (K < 2) throw domain_error("rate_sizebiased_SK: K must be >= 2");
    double s = 0.0;
    check_mass_vector(y, s);
    std::size_t r_eff = y.size();
    while (r_eff > 0 && y[r_eff - 1] <= 0.0) --r_eff;
    if (r_eff == 0) return 0.0;
    if (static_cast<std::int64_t>(r_eff) > K - 1)
        throw domain_error("rate_sizebiased_SK: more than K-1 sticks");
    double used = 0.0;
    double total = 0.0;
    for (std::size_t i = 0; i < r_eff; ++i) {
        double rem = 1.0 - used;
        if (y[i] <= 0.0) return pos_inf;  // zero stick ahead of a positive one
        if (rem <= 1e-14) throw domain_error("rate_sizebiased_SK: sticks exceed total mass");
        double v = y[i] / rem;
        if (v >= 1.0) {
            if (v > 1.0 + 1e-12) throw domain_error("rate_sizebiased_SK: sticks exceed total mass");
            return pos_inf;
        }
        total += rate_beta_stick(K, static_cast<std::int64_t>(i + 1), v);
        used += y[i];
    }
    return total;
}

double rate_esf(std::int64_t n, const Partition& a) {
    if (!partition_valid(a, n)) throw domain_error("rate_esf: invalid partition");
    return static_cast<double>(n - partition_blocks(a));
}

double cgf_limit(char case_label, double t, double param) {
    switch (case_label) {
        case 'A': {
            double n = param;
            if (!(n >= 1.0)) throw usage_error("cgf_limit case A needs param = n >= 1");
            return t >= -1.0 ? n * t : (t + 1.0) - n;
        }
        case 'B':
            return t >= -1.0 ? t : -1.0;
        case 'C': {
            double c = param;
            if (!(c > 0.0)) throw usage_error("cgf_limit case C needs param = c > 0");
            return (bigF(c * std::exp(c * t)) - bigF(c)) / c;
        }
        case 'D':
            return std::expm1(t);
        default:
            throw usage_error("cgf_limit: case must be one of A, B, C, D");
    }
}

LegendreDetail legendre_caseC_detail(double x, double c) {
    if (!(c > 0.0)) throw domain_error("legendre_caseC: c must be positive");
    if (x < 0.0 || x > 1.0) return {pos_inf, 0.0, 0.0};
    if (x == 0.0) return {bigF(c) / c, 0.0, -pos_inf};
    if (x == 1.0) return {(bigF(c) - std::log(c) - 1.0) / c, pos_inf, pos_inf};
    // solve phi(u) = x by bisection after bracket expansion; phi is strictly
    // increasing so the root is unique
    double lo = 1.0, hi = 1.0;
    while (phi(lo) > x) lo /= 2.0;
    while (phi(hi) < x) hi *= 2.0;
    for (int it = 0; it < 200 && (hi - lo) > 1e-12 * hi; ++it) {
        double mid = 0.5 * (lo + hi);
        (phi(mid) < x ? lo : hi) = mid;
    }
    double u = 0.5 * (lo + hi);
    double value = (x * std::log(u) - bigF(u) - x * std::log(c) + bigF(c)) / c;
    if (value < 0.0) value = 0.0;
    return {value, u, std::log(u / c) / c};
}

double legendre_caseC(double x, double c) { return legendre_caseC_detail(x, c).value; }

double rate_kn_caseB(double x) {
    if (x < 0.0 || x > 1.0) return pos_inf;
    return 1.0 - x;
}

double rate_kn_caseD(double x) {
    if (x < 0.0) return pos_inf;
    if (x == 0.0) return 1.0;
    return x * std::log(x) - x + 1.0;
}

double rate_ageclass_caseB(double x) {
    if (x < 0.0 || x > 1.0) return pos_inf;
    return x;
}

double rate_ageclass_caseC(double x, double c) {
    if (!(c > 0.0)) throw domain_error("rate_ageclass_caseC: c must be positive");
    if (x < 0.0 || x > 1.0) return pos_inf;
    double one_m = 1.0 - x;
    double t1 = (c + 1.0) * std::log(c + 1.0);
    double t2 = one_m > 0.0 ? one_m * std::log(one_m) : 0.0;
    double t3 = (c + 1.0 - x) * std::log(c + 1.0 - x);
    double val = (t1 + t2 - t3) / c;
    return val < 0.0 ? 0.0 : val;
}

double rate_ageclass_caseD(double x) {
    if (x < 0.0 || x >= 1.0) return pos_inf;
    return -std::log1p(-x);
}

}  // namespace pdld
