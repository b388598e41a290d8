#include "pdld/verify.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "pdld/exact_dist.hpp"
#include "pdld/kernels.hpp"
#include "pdld/ldp_lab.hpp"
#include "pdld/partition.hpp"
#include "pdld/rates.hpp"
#include "pdld/rng.hpp"
#include "pdld/simplex_geom.hpp"
#include "pdld/special.hpp"
#include "pdld/stirling.hpp"
#include "pdld/util.hpp"

namespace pdld {

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
    std::optional<Table> table;
};

using CheckFn = std::function<Outcome(const VerifyOptions&)>;

std::vector<double> linspace(double lo, double hi, std::size_t count) {
    std::vector<double> out;
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1));
    return out;
}

std::vector<double> geometric(double start, double factor, std::size_t count) {
    std::vector<double> out;
    double v = start;
    for (std::size_t i = 0; i < count; ++i, v *= factor) out.push_back(v);
    return out;
}

std::string fmt(double x) { return format_double(x); }

// ---------------------------------------------------------------- criterion 1

Outcome check_esf_norm(const VerifyOptions& o) {
    std::int64_t nmax = o.n.value_or(12);
    std::vector<double> thetas =
        o.theta ? std::vector<double>{*o.theta} : std::vector<double>{0.1, 1.0, 10.0, 1000.0};
    double worst = 0.0;
    Table t;
    t.columns = {"n", "theta", "abs_norm_error"};
    for (std::int64_t n = 1; n <= nmax; ++n) {
        auto parts = all_partitions(n);
        for (double th : thetas) {
            std::vector<double> lp;
            lp.reserve(parts.size());
            for (const auto& a : parts) lp.push_back(esf_log_pmf(th, n, a));
            double err = std::abs(std::expm1(kernels::logsumexp(lp)));
            worst = std::max(worst, err);
            t.add_row({static_cast<double>(n), th, err});
        }
    }
    Outcome out;
    out.pass = worst <= 1e-10;
    out.detail = "max |sum(pmf) - 1| = " + fmt(worst) + " over n <= " + std::to_string(nmax) +
                 " (tol 1e-10)";
    out.table = std::move(t);
    return out;
}

// ---------------------------------------------------------------- criterion 2

Outcome check_esf_k_limit(const VerifyOptions& o) {
    std::int64_t n = o.n.value_or(5);
    double th = o.theta.value_or(2.0);
    std::vector<double> Ks = o.grid.value_or(std::vector<double>{1e3, 1e4, 1e5});
    auto parts = all_partitions(n);
    std::vector<double> errs;
    Table t;
    t.columns = {"K", "max_abs_error"};
    for (double Kd : Ks) {
        std::int64_t K = static_cast<std::int64_t>(Kd);
        double err = 0.0;
        for (const auto& a : parts)
            err = std::max(err, std::abs(std::exp(dirichlet_sampling_log_pmf(th, K, n, a)) -
                                         std::exp(esf_log_pmf(th, n, a))));
        errs.push_back(err);
        t.add_row({Kd, err});
    }
    bool decreasing = true;
    for (std::size_t i = 1; i < errs.size(); ++i) decreasing = decreasing && errs[i] < errs[i - 1];
    Outcome out;
    out.pass = decreasing && errs.back() <= 1e-3;
    out.detail = "errors " + [&] {
        std::string s;
        for (double e : errs) s += (s.empty() ? "" : ", ") + fmt(e);
        return s;
    }() + (decreasing ? " (decreasing" : " (NOT decreasing") + "; final tol 1e-3)";
    out.table = std::move(t);
    return out;
}

// ---------------------------------------------------------------- criterion 3

Outcome check_stirling_sandwich(const VerifyOptions& o) {
    std::int64_t nmax = o.n.value_or(200);
    double worst = neg_inf;
    for (std::int64_t n = 1; n <= nmax; ++n) {
        auto row = log_stirling1_row(n);
        for (std::int64_t k = 1; k <= n; ++k) {
            double lower = std::lgamma(static_cast<double>(n)) - std::lgamma(static_cast<double>(k));
            double upper = log_binomial(n - 1, k - 1) + lower;
            double logS = row[static_cast<std::size_t>(k - 1)];
            double v = std::max(lower - logS, logS - upper);
            worst = std::max(worst, v);
        }
    }
    Outcome out;
    out.pass = worst <= 1e-9;
    out.detail = "max log-domain bound violation = " + fmt(worst) + " over n <= " +
                 std::to_string(nmax) + " (tol 1e-9)";
    return out;
}

// ---------------------------------------------------------------- criterion 4

Outcome check_kn_mgf(const VerifyOptions& o) {
    std::int64_t nmax = o.n.value_or(300);
    std::vector<double> thetas =
        o.theta ? std::vector<double>{*o.theta} : std::vector<double>{0.5, 5.0, 50.0};
    std::vector<double> ts =
        o.t ? std::vector<double>{*o.t} : std::vector<double>{-2.0, -1.0, 0.0, 1.0, 2.0};
    double worst = 0.0;
    for (std::int64_t n = 1; n <= nmax; ++n)
        for (double th : thetas)
            for (double t : ts) {
                double direct = kernels::logsumexp_terms(
                    static_cast<std::size_t>(n),
                    [&](std::size_t i) {
                        std::int64_t k = static_cast<std::int64_t>(i) + 1;
                        return t * static_cast<double>(k) + kn_log_pmf(th, n, k);
                    },
                    false);
                worst = std::max(worst, std::abs(direct - kn_log_mgf(th, n, t)));
            }
    Outcome out;
    out.pass = worst <= 1e-8;
    out.detail = "max |log-mgf mismatch| = " + fmt(worst) + " over n <= " + std::to_string(nmax) +
                 " (tol 1e-8)";
    return out;
}

// ---------------------------------------------------------------- criterion 5

Outcome check_thm41(char case_label, const VerifyOptions& o) {
    double th;
    std::int64_t n;
    double tol;
    ScalingRegime regime;
    switch (case_label) {
        case 'A':
            th = o.theta.value_or(1e8);
            n = o.n.value_or(10);
            tol = 0.05;
            regime = ScalingRegime::fixed_n('A', n);
            break;
        case 'B':
            th = o.theta.value_or(1e9);
            n = o.n.value_or(1000);
            tol = 0.05;
            regime = ScalingRegime::fixed_n('B', n);
            break;
        case 'C': {
            double c = o.c.value_or(1.0);
            th = o.theta.value_or(1e4);
            tol = 0.01;
            regime = ScalingRegime::ratio(c);
            break;
        }
        default:
            th = o.theta.value_or(50.0);
            n = o.n.value_or(1000000);
            tol = 0.05;
            regime = ScalingRegime::fixed_n('D', n);
            break;
    }
    std::vector<double> ts = o.t ? std::vector<double>{*o.t} : linspace(-2.0, 2.0, 21);
    Table t = mgf_limit_curve(regime, ts, th);
    double worst = 0.0;
    for (const auto& row : t.rows) worst = std::max(worst, std::abs(row[3]));
    Outcome out;
    out.pass = worst <= tol;
    out.detail = "max |scaled log-mgf - limit| = " + fmt(worst) + " on t in [-2,2] (tol " +
                 fmt(tol) + ")";
    out.table = std::move(t);
    return out;
}

// ---------------------------------------------------------------- criterion 6

Outcome check_cor41(char case_label, const VerifyOptions& o) {
    ScalingRegime regime;
    double th;
    double target, tol;
    bool lower_bound_only = false;
    switch (case_label) {
        case 'A':
            th = o.theta.value_or(1e6);
            regime = ScalingRegime::fixed_n('A', o.n.value_or(5));
            target = 4.99;
            tol = 0.0;
            lower_bound_only = true;
            break;
        case 'C':
            th = o.theta.value_or(1e4);
            regime = ScalingRegime::ratio(o.c.value_or(1.0));
            target = regime.c * std::log1p(1.0 / regime.c);
            tol = 1e-3;
            break;
        default:
            th = o.theta.value_or(100.0);
            regime = ScalingRegime::fixed_n('D', o.n.value_or(100000000));
            target = 1.0;
            tol = 0.02;
            break;
    }
    Table t = lln_table(regime, {th});
    double value = t.rows.at(0).at(2);
    Outcome out;
    if (lower_bound_only) {
        out.pass = value >= target;
        out.detail = "normalized mean = " + fmt(value) + " (needs >= " + fmt(target) + ")";
    } else {
        out.pass = std::abs(value - target) <= tol;
        out.detail = "normalized mean = " + fmt(value) + ", target " + fmt(target) + ", |diff| = " +
                     fmt(std::abs(value - target)) + " (tol " + fmt(tol) + ")";
    }
    out.table = std::move(t);
    return out;
}

// ---------------------------------------------------------------- criterion 7

Outcome extrapolation_outcome(const ConvergenceTable& curve, double tol, bool enforce_residual) {
    double err = std::abs(curve.extrapolated - curve.target_rate);
    bool residual_ok = curve.residual_rms <= 0.1 * curve.correction_rms;
    Outcome out;
    out.pass = err <= tol && (!enforce_residual || residual_ok);
    out.detail = "extrapolated " + fmt(curve.extrapolated) + ", target " + fmt(curve.target_rate) +
                 ", |diff| = " + fmt(err) + " (tol " + fmt(tol) + "); residual rms " +
                 fmt(curve.residual_rms) + " vs correction rms " + fmt(curve.correction_rms);
    out.table = curve.to_table();
    return out;
}

Outcome check_thm33(const VerifyOptions& o) {
    if (o.n && *o.n != 4) throw usage_error("thm-3.3 pins n = 4 with partition (0,2,0,0)");
    EventSpec ev;
    ev.kind = EventSpec::Kind::partition_point;
    ev.a = {0, 2, 0, 0};
    auto grid = o.grid.value_or(geometric(1e2, 10.0, 9));
    return extrapolation_outcome(rate_curve(ScalingRegime::fixed_n('A', 4), ev, grid), 0.05, true);
}

Outcome check_thm42(const VerifyOptions& o) {
    std::int64_t n = o.n.value_or(6);
    EventSpec ev;
    ev.kind = EventSpec::Kind::kn_point;
    ev.k = o.k.value_or(3);
    auto grid = o.grid.value_or(geometric(1e2, 10.0, 9));
    return extrapolation_outcome(rate_curve(ScalingRegime::fixed_n('A', n), ev, grid), 0.05, true);
}

Outcome check_thm46(const VerifyOptions& o) {
    std::int64_t n = o.n.value_or(8);
    std::int64_t k = o.k.value_or(3);
    EventSpec ev;
    ev.kind = EventSpec::Kind::ageclass_ball;
    ev.x = {static_cast<double>(k) / static_cast<double>(n)};
    // tight enough that the window holds the single lattice point k
    ev.delta = o.delta.value_or(0.4 / static_cast<double>(n));
    auto grid = o.grid.value_or(geometric(1e2, 10.0, 9));
    return extrapolation_outcome(rate_curve(ScalingRegime::fixed_n('A', n), ev, grid), 0.05, true);
}

Outcome check_thm34(const VerifyOptions& o) {
    std::int64_t n = 4;
    Partition a = {0, 2, 0, 0};
    auto grid = o.grid.value_or(geometric(1e2, 10.0, 7));
    ConvergenceTable lin = dirichlet_rate_curve(n, a, grid, [](double K) { return K; });
    ConvergenceTable sq = dirichlet_rate_curve(n, a, grid, [](double K) { return K * K; });
    double err1 = std::abs(lin.extrapolated - lin.target_rate);
    double err2 = std::abs(sq.extrapolated - sq.target_rate);
    Outcome out;
    out.pass = err1 <= 0.05 && err2 <= 0.05;
    out.detail = "theta=K coupling |diff| = " + fmt(err1) + ", theta=K^2 coupling |diff| = " +
                 fmt(err2) + " vs target " + fmt(lin.target_rate) + " (tol 0.05)";
    out.table = lin.to_table();
    return out;
}

// ---------------------------------------------------------------- criterion 8

Outcome check_thm47(char case_label, const VerifyOptions& o) {
    double th, tol, target;
    std::int64_t n;
    char speed_case;
    switch (case_label) {
        case 'D':
            th = o.theta.value_or(100.0);
            n = o.n.value_or(10000000);
            tol = 0.05;
            speed_case = 'D';
            break;
        case 'B':
            th = o.theta.value_or(1e9);
            n = o.n.value_or(1000);
            tol = 0.05;
            speed_case = 'B';
            break;
        default: {  // case C; tolerance pilot-calibrated at these defaults (measured 0.0089)
            th = o.theta.value_or(1e4);
            n = o.n.value_or(10000);
            tol = 0.02;
            speed_case = 'C';
            break;
        }
    }
    double x = o.x.value_or(0.3);
    double delta = o.delta.value_or(0.01);
    switch (case_label) {
        case 'D':
            target = rate_ageclass_caseD(x);
            break;
        case 'B':
            target = rate_ageclass_caseB(x);
            break;
        default:
            target = rate_ageclass_caseC(x, th / static_cast<double>(n));
            break;
    }
    ScalingRegime regime = case_label == 'C'
                               ? ScalingRegime::ratio(th / static_cast<double>(n))
                               : ScalingRegime::fixed_n(speed_case, n);
    double gamma = speed(regime, 'g', th);
    Table t;
    t.columns = {"delta", "empirical_rate"};
    std::vector<double> sweep = {0.005, 0.01, 0.02};
    if (std::find(sweep.begin(), sweep.end(), delta) == sweep.end()) sweep.push_back(delta);
    double rate_at_default = 0.0;
    for (double d : sweep) {
        EventSpec ev;
        ev.kind = EventSpec::Kind::ageclass_ball;
        ev.x = {x};
        ev.delta = d;
        double r = -event_log_prob(th, n, ev) / gamma;
        if (d == delta) rate_at_default = r;
        t.add_row({d, r});
    }
    Outcome out;
    double err = std::abs(rate_at_default - target);
    out.pass = err <= tol;
    out.detail = "empirical rate " + fmt(rate_at_default) + " at delta " + fmt(delta) +
                 ", target " + fmt(target) + ", |diff| = " + fmt(err) + " (tol " + fmt(tol) + ")";
    out.table = std::move(t);
    return out;
}

// ---------------------------------------------------------------- criterion 9

Outcome check_legendre(const VerifyOptions& o) {
    std::vector<double> cs = o.c ? std::vector<double>{*o.c} : std::vector<double>{0.5, 1.0, 2.0};
    double worst_zero = 0.0, worst_at0 = 0.0, worst_convex = 0.0, worst_fenchel = 0.0;
    for (double c : cs) {
        worst_zero = std::max(worst_zero, legendre_caseC(c * std::log1p(1.0 / c), c));
        double at0 = ((1.0 + c) * std::log1p(c) - c * std::log(c)) / c;
        worst_at0 = std::max(worst_at0, std::abs(legendre_caseC(0.0, c) - at0));
        auto xs = linspace(0.0, 1.0, 101);
        std::vector<double> vals;
        for (double x : xs) vals.push_back(legendre_caseC(x, c));
        for (std::size_t i = 0; i + 2 < vals.size(); ++i)
            worst_convex = std::max(worst_convex, vals[i + 1] - 0.5 * (vals[i] + vals[i + 2]));
        for (double t : linspace(-2.0, 2.0, 21)) {
            double u = c * std::exp(c * t);
            double x = u * std::log1p(1.0 / u);
            double direct = t * x - cgf_limit('C', t, c);
            worst_fenchel = std::max(worst_fenchel, std::abs(legendre_caseC(x, c) - direct));
        }
    }
    Outcome out;
    out.pass = worst_zero <= 1e-10 && worst_at0 <= 1e-8 && worst_convex <= 1e-12 &&
               worst_fenchel <= 1e-6;
    out.detail = "zero " + fmt(worst_zero) + " (tol 1e-10), endpoint " + fmt(worst_at0) +
                 " (tol 1e-8), convexity " + fmt(worst_convex) + " (tol 1e-12), duality " +
                 fmt(worst_fenchel) + " (tol 1e-6)";
    return out;
}

// --------------------------------------------------------------- criterion 10

Outcome check_g_point(const VerifyOptions&) {
    double val = std::exp(order_stat_log_density({{0.45}, 3}));
    Outcome out;
    double err = std::abs(val - 2.1);
    out.pass = err <= 1e-12;
    out.detail = "density(0.45) = " + fmt(val) + ", |diff from 2.1| = " + fmt(err) + " (tol 1e-12)";
    return out;
}

Outcome check_g_norm(const VerifyOptions&) {
    using gk = boost::math::quadrature::gauss_kronrod<double, 61>;
    auto g = [](double p) { return std::exp(order_stat_log_density({{p}, 3})); };
    double total = gk::integrate(g, 1.0 / 3.0, 0.5, 12, 1e-12) + gk::integrate(g, 0.5, 1.0, 12, 1e-12);
    Outcome out;
    double err = std::abs(total - 1.0);
    out.pass = err <= 1e-6;
    out.detail = "integral = " + fmt(total) + ", |diff from 1| = " + fmt(err) + " (tol 1e-6)";
    return out;
}

Outcome check_eq219(const VerifyOptions& o) {
    Rng rng({o.master_seed, 777});
    std::int64_t checked = 0, attempts = 0;
    double worst_gap = neg_inf;
    bool all_pass = true;
    while (checked < 50 && attempts < 5000) {
        ++attempts;
        std::int64_t r = 1 + static_cast<std::int64_t>(rng.uniform() * 3.0);
        std::int64_t K = r + 2 + static_cast<std::int64_t>(rng.uniform() * 40.0);
        std::vector<double> p;
        double sum = 0.0;
        for (std::int64_t i = 0; i < r; ++i) {
            double v = 0.05 + 0.95 * rng.uniform();
            p.push_back(v);
            sum += v;
        }
        std::sort(p.begin(), p.end(), std::greater<double>());
        double mass = 0.2 + 0.5 * rng.uniform();
        for (double& v : p) v *= mass / sum;
        OrderStatPoint pt{p, K};
        if (1.0 - mass <= p.back()) continue;  // sandwich needs the nontrivial branch
        SandwichReport rep = sandwich_check(pt);
        if (!rep.applicable) continue;
        ++checked;
        all_pass = all_pass && rep.pass;
        worst_gap = std::max(worst_gap, std::max(rep.log_L - rep.log_upper,
                                                 rep.log_lower - rep.log_L));
    }
    Outcome out;
    out.pass = all_pass && checked == 50;
    out.detail = std::to_string(checked) + "/50 randomized points bracketed; worst log gap " +
                 fmt(worst_gap) + " (slack 1e-9)";
    return out;
}

Outcome check_eq220(const VerifyOptions& o) {
    std::int64_t K = o.K.value_or(200);
    double p = o.x.value_or(0.1);
    double val = -order_stat_log_density({{p}, K}) / static_cast<double>(K);
    double target = -std::log1p(-p);
    Outcome out;
    double err = std::abs(val - target);
    out.pass = err <= 0.05;
    out.detail = "density rate " + fmt(val) + " at K = " + std::to_string(K) + ", target " +
                 fmt(target) + ", |diff| = " + fmt(err) + " (tol 0.05)";
    return out;
}

// --------------------------------------------------------------- criterion 11

Outcome check_thm23(const VerifyOptions& o) {
    std::int64_t K = o.K.value_or(1000000);
    std::vector<std::vector<double>> points = {{0.5}, {0.3, 0.2}, {0.3, 0.2, 0.1}};
    double worst = 0.0;
    Table t;
    t.columns = {"r", "constrained_inf", "target"};
    for (const auto& p : points) {
        double sum = 0.0;
        for (double v : p) sum += v;
        double target = -std::log1p(-sum);
        double val = constrained_inf_relent(p, K);
        worst = std::max(worst, std::abs(val - target));
        t.add_row({static_cast<double>(p.size()), val, target});
    }
    Outcome out;
    out.pass = worst <= 1e-4;
    out.detail = "max |constrained inf - residual-mass rate| = " + fmt(worst) + " at K = " +
                 std::to_string(K) + " (tol 1e-4)";
    out.table = std::move(t);
    return out;
}

Outcome check_thm25(const VerifyOptions& o) {
    std::int64_t K = o.K.value_or(10);
    std::vector<double> ys = {0.05, 0.02, 0.01, 0.005, 0.002, 0.001, 5e-4, 1e-4, 1e-5, 1e-6};
    std::vector<double> vals;
    for (double y1 : ys) vals.push_back(rate_sizebiased_SK({y1, 0.3}, K));
    bool increasing = true;
    for (std::size_t i = 1; i < vals.size(); ++i)
        increasing = increasing && vals[i] > vals[i - 1];
    double growth = vals.back() - vals.front();
    Outcome out;
    out.pass = increasing && growth > 0.5 && vals.back() > 1.0;
    out.detail = std::string(increasing ? "monotone" : "NOT monotone") + " along y_1 down to 1e-6; " +
                 "rate " + fmt(vals.front()) + " -> " + fmt(vals.back());
    Table t;
    t.columns = {"y1", "rate"};
    for (std::size_t i = 0; i < ys.size(); ++i) t.add_row({ys[i], vals[i]});
    out.table = std::move(t);
    return out;
}

// --------------------------------------------------------------- criterion 12

Outcome check_gof(const std::string& which, const VerifyOptions& o) {
    GofParams params;
    std::int64_t N;
    std::uint64_t stream;
    if (which == "ewens") {
        params.theta = o.theta.value_or(2.0);
        params.n = o.n.value_or(6);
        N = o.N.value_or(200000);
        stream = 0;
    } else if (which == "kn") {
        params.theta = o.theta.value_or(1.0);
        params.n = o.n.value_or(3);
        N = o.N.value_or(200000);
        stream = 1000000;
    } else if (which == "gem") {
        params.theta = o.theta.value_or(3.0);
        params.n = o.n.value_or(2);
        N = o.N.value_or(100000);
        stream = 2000000;
    } else {
        params.K = o.K.value_or(3);
        params.alpha = 1.0;
        N = o.N.value_or(100000);
        stream = 3000000;
    }
    GofReport rep = gof_validate(which, params, N, SeedSpec{o.master_seed, stream});
    Outcome out;
    out.pass = rep.pass;
    out.detail = "chi-square " + fmt(rep.statistic) + " on " + fmt(rep.df) + " df, p = " +
                 fmt(rep.p_value) + ", N = " + std::to_string(rep.N) + " (significance 1e-3)";
    return out;
}

// --------------------------------------------------------------- criterion 13

Outcome check_lemma31(const VerifyOptions&) {
    std::vector<std::int64_t> ms = {100, 1000, 10000};
    std::vector<double> rel1, rel2;
    for (std::int64_t m : ms) {
        std::vector<double> uniform(static_cast<std::size_t>(m), 1.0 / static_cast<double>(m));
        double f1 = std::exp(conditional_sampling_log_prob(4, {4, 0, 0, 0}, uniform));
        rel1.push_back(std::abs(f1 * 24.0 - 1.0));
        std::vector<double> two_block(static_cast<std::size_t>(m + 1), 0.5 / static_cast<double>(m));
        two_block[0] = 0.5;
        double f2 = std::exp(conditional_sampling_log_prob(3, {1, 1, 0}, two_block));
        rel2.push_back(std::abs(f2 - 0.375) / 0.375);
    }
    bool conv1 = rel1.back() <= 1e-3 && rel1.back() < rel1.front();
    bool conv2 = rel2.back() <= 1e-3 && rel2.back() < rel2.front();

    std::vector<double> p = {0.4, 0.3, 0.2, 0.1};
    auto parts = all_partitions(4);
    std::vector<double> terms;
    for (const auto& a : parts) {
        double logw = 0.0;
        for (std::int64_t aj : a) logw += log_factorial(aj);
        terms.push_back(logw + conditional_sampling_log_prob(4, a, p));
    }
    double norm_err = std::abs(std::expm1(kernels::logsumexp(terms)));

    Outcome out;
    out.pass = conv1 && conv2 && norm_err <= 1e-12;
    out.detail = "single-block limit rel err " + fmt(rel1.back()) + ", two-block limit rel err " +
                 fmt(rel2.back()) + " at m = 10^4 (tol 1e-3); weighted normalization err " +
                 fmt(norm_err) + " (tol 1e-12)";
    return out;
}

// ------------------------------------------------------------------- registry

const std::vector<std::pair<std::string, CheckFn>>& registry() {
    static const std::vector<std::pair<std::string, CheckFn>> reg = {
        {"esf-norm", check_esf_norm},
        {"esf-k-limit", check_esf_k_limit},
        {"stirling-sandwich", check_stirling_sandwich},
        {"kn-mgf", check_kn_mgf},
        {"thm-4.1-A", [](const VerifyOptions& o) { return check_thm41('A', o); }},
        {"thm-4.1-B", [](const VerifyOptions& o) { return check_thm41('B', o); }},
        {"thm-4.1-C", [](const VerifyOptions& o) { return check_thm41('C', o); }},
        {"thm-4.1-D", [](const VerifyOptions& o) { return check_thm41('D', o); }},
        {"cor-4.1-A", [](const VerifyOptions& o) { return check_cor41('A', o); }},
        {"cor-4.1-C", [](const VerifyOptions& o) { return check_cor41('C', o); }},
        {"cor-4.1-D", [](const VerifyOptions& o) { return check_cor41('D', o); }},
        {"thm-3.3", check_thm33},
        {"thm-4.2", check_thm42},
        {"thm-4.6", check_thm46},
        {"thm-3.4", check_thm34},
        {"thm-4.7-D", [](const VerifyOptions& o) { return check_thm47('D', o); }},
        {"thm-4.7-B", [](const VerifyOptions& o) { return check_thm47('B', o); }},
        {"thm-4.7-C", [](const VerifyOptions& o) { return check_thm47('C', o); }},
        {"legendre", check_legendre},
        {"g-point", check_g_point},
        {"g-norm", check_g_norm},
        {"eq-2.19", check_eq219},
        {"eq-2.20", check_eq220},
        {"thm-2.3", check_thm23},
        {"thm-2.5", check_thm25},
        {"gof-ewens", [](const VerifyOptions& o) { return check_gof("ewens", o); }},
        {"gof-kn", [](const VerifyOptions& o) { return check_gof("kn", o); }},
        {"gof-gem", [](const VerifyOptions& o) { return check_gof("gem", o); }},
        {"gof-dirichlet-max", [](const VerifyOptions& o) { return check_gof("dirichlet-max", o); }},
        {"lemma-3.1", check_lemma31},
    };
    return reg;
}

}  // namespace

std::vector<std::string> verify_ids() {
    std::vector<std::string> out;
    for (const auto& [id, fn] : registry()) out.push_back(id);
    return out;
}

CheckResult run_check(const std::string& id, const VerifyOptions& opt) {
    for (const auto& [rid, fn] : registry()) {
        if (rid != id) continue;
        auto start = std::chrono::steady_clock::now();
        Outcome o = fn(opt);
        auto stop = std::chrono::steady_clock::now();
        CheckResult res;
        res.id = id;
        res.pass = o.pass;
        res.detail = std::move(o.detail);
        res.table = std::move(o.table);
        res.seconds = std::chrono::duration<double>(stop - start).count();
        return res;
    }
    throw usage_error("unknown verify suite: " + id);
}

std::vector<CriterionResult> run_acceptance() {
    struct Group {
        int number;
        const char* label;
        std::vector<std::string> ids;
    };
    // thm-4.7-C is exercised as a named suite but sits outside the gate: its
    // tolerance is pilot-calibrated rather than derived
    const std::vector<Group> groups = {
        {1, "partition law normalization", {"esf-norm"}},
        {2, "finite-allele limit", {"esf-k-limit"}},
        {3, "block-count coefficient bounds", {"stirling-sandwich"}},
        {4, "block-count mgf consistency", {"kn-mgf"}},
        {5, "scaled cumulant limits", {"thm-4.1-A", "thm-4.1-B", "thm-4.1-C", "thm-4.1-D"}},
        {6, "mean block-count limits", {"cor-4.1-A", "cor-4.1-C", "cor-4.1-D"}},
        {7, "rate-function extrapolations", {"thm-3.3", "thm-4.2", "thm-4.6", "thm-3.4"}},
        {8, "age-class ball rates", {"thm-4.7-D", "thm-4.7-B"}},
        {9, "legendre transform checks", {"legendre"}},
        {10, "order-statistic geometry", {"g-point", "g-norm", "eq-2.19", "eq-2.20"}},
        {11, "constrained entropy limits", {"thm-2.3", "thm-2.5"}},
        {12, "sampler goodness of fit", {"gof-ewens", "gof-kn", "gof-gem", "gof-dirichlet-max"}},
        {13, "conditional sampling limits", {"lemma-3.1"}},
    };
    std::vector<CriterionResult> out;
    for (const auto& g : groups) {
        CriterionResult cr;
        cr.number = g.number;
        cr.label = g.label;
        cr.pass = true;
        for (const auto& id : g.ids) {
            CheckResult part = run_check(id, VerifyOptions{});
            cr.pass = cr.pass && part.pass;
            cr.parts.push_back(std::move(part));
        }
        out.push_back(std::move(cr));
    }
    return out;
}

}  // namespace pdld
