#include "pdld/ldp_lab.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <map>

#include "pdld/exact_dist.hpp"
#include "pdld/kernels.hpp"
#include "pdld/rates.hpp"
#include "pdld/samplers.hpp"
#include "pdld/simplex_geom.hpp"
#include "pdld/special.hpp"
#include "pdld/util.hpp"

namespace pdld {

namespace {

constexpr double ball_term_budget = 1e7;

std::int64_t checked_n(const ScalingRegime& regime, double theta) {
    if (!regime.n_of) throw usage_error("scaling regime has no coupling rule");
    std::int64_t n = regime.n_of(theta);
    if (n < 1) throw domain_error("coupling rule produced n < 1");
    return n;
}

// lattice window [lo, hi] of k values with |k/n - x| <= delta
void ball_range(double x, double delta, std::int64_t n, std::int64_t& lo, std::int64_t& hi) {
    if (!(delta > 0.0)) throw domain_error("ball events need delta > 0");
    lo = static_cast<std::int64_t>(std::ceil((x - delta) * static_cast<double>(n) - 1e-9));
    hi = static_cast<std::int64_t>(std::floor((x + delta) * static_cast<double>(n) + 1e-9));
    if (lo < 1) lo = 1;
    if (hi > n) hi = n;
}

}  // namespace

ScalingRegime ScalingRegime::fixed_n(char case_label, std::int64_t n) {
    if (n < 1) throw usage_error("fixed_n: n must be >= 1");
    ScalingRegime r;
    r.case_label = case_label;
    r.n_of = [n](double) { return n; };
    r.rule_desc = "n=" + std::to_string(n);
    return r;
}

ScalingRegime ScalingRegime::power(char case_label, double exponent) {
    if (!(exponent > 0.0)) throw usage_error("power: exponent must be positive");
    ScalingRegime r;
    r.case_label = case_label;
    r.n_of = [exponent](double theta) {
        return static_cast<std::int64_t>(std::floor(std::pow(theta, exponent)));
    };
    r.rule_desc = "n=floor(theta^" + format_double(exponent) + ")";
    return r;
}

ScalingRegime ScalingRegime::ratio(double c) {
    if (!(c > 0.0)) throw usage_error("ratio: c must be positive");
    ScalingRegime r;
    r.case_label = 'C';
    r.c = c;
    r.n_of = [c](double theta) { return static_cast<std::int64_t>(std::floor(theta / c)); };
    r.rule_desc = "n=floor(theta/" + format_double(c) + ")";
    return r;
}

double speed(const ScalingRegime& regime, char which, double theta) {
    if (!(theta > 0.0)) throw domain_error("speed: theta must be positive");
    if (which != 'a' && which != 'b' && which != 'g')
        throw usage_error("speed: which must be one of a, b, g");
    std::int64_t n = checked_n(regime, theta);
    double nd = static_cast<double>(n);
    double s = 0.0;
    switch (regime.case_label) {
        case 'A':
            s = std::log(theta);
            break;
        case 'B': {
            double lr = std::log(theta / nd);
            s = (which == 'b') ? lr : nd * lr;
            break;
        }
        case 'C':
            s = (which == 'b') ? theta / nd : theta;
            break;
        case 'D':
            s = (which == 'b') ? 1.0 : (which == 'a' ? theta * std::log(nd / theta) : theta);
            break;
        default:
            throw usage_error("speed: case must be one of A, B, C, D");
    }
    if (!(s > 0.0)) throw domain_error("speed: nonpositive at this theta; regime mismatched");
    return s;
}

std::vector<std::string> regime_coherence_warnings(const ScalingRegime& regime,
                                                   const std::vector<double>& theta_grid) {
    std::vector<std::string> warnings;
    if (theta_grid.size() < 2) return warnings;
    std::vector<double> ratio;
    ratio.reserve(theta_grid.size());
    for (double th : theta_grid) ratio.push_back(th / static_cast<double>(checked_n(regime, th)));
    switch (regime.case_label) {
        case 'A': {
            for (std::size_t i = 1; i < theta_grid.size(); ++i)
                if (checked_n(regime, theta_grid[i]) != checked_n(regime, theta_grid[0])) {
                    warnings.push_back("case A expects constant n along the grid");
                    break;
                }
            break;
        }
        case 'B': {
            for (std::size_t i = 1; i < ratio.size(); ++i)
                if (ratio[i] <= ratio[i - 1]) {
                    warnings.push_back("case B expects theta/n to increase along the grid");
                    break;
                }
            break;
        }
        case 'C': {
            if (std::abs(ratio.back() / regime.c - 1.0) > 0.02)
                warnings.push_back("case C expects theta/n near c at the top of the grid");
            break;
        }
        case 'D': {
            for (std::size_t i = 1; i < ratio.size(); ++i)
                if (ratio[i] >= ratio[i - 1]) {
                    warnings.push_back("case D expects theta/n to decrease along the grid");
                    break;
                }
            break;
        }
        default:
            warnings.push_back("unknown case label");
    }
    return warnings;
}

double event_log_prob(double theta, std::int64_t n, const EventSpec& ev) {
    switch (ev.kind) {
        case EventSpec::Kind::partition_point:
            if (static_cast<std::int64_t>(ev.a.size()) != n)
                throw usage_error("partition-point: partition length must equal n");
            return esf_log_pmf(theta, n, ev.a);
        case EventSpec::Kind::kn_point:
            return kn_log_pmf(theta, n, ev.k);
        case EventSpec::Kind::kn_ball: {
            if (ev.x.size() != 1) throw usage_error("kn-ball: one center required");
            std::int64_t lo, hi;
            ball_range(ev.x[0], ev.delta, n, lo, hi);
            if (lo > hi) return neg_inf;
            double count = static_cast<double>(hi - lo + 1);
            if (count > ball_term_budget) throw complexity_error("kn-ball: lattice exceeds term budget");
            return kernels::logsumexp_terms(static_cast<std::size_t>(hi - lo + 1), [&](std::size_t i) {
                return kn_log_pmf(theta, n, lo + static_cast<std::int64_t>(i));
            });
        }
        case EventSpec::Kind::ageclass_ball: {
            if (ev.x.size() != 1) throw usage_error("ageclass-ball: one center required");
            std::int64_t lo, hi;
            ball_range(ev.x[0], ev.delta, n, lo, hi);
            if (lo > hi) return neg_inf;
            double count = static_cast<double>(hi - lo + 1);
            if (count > ball_term_budget)
                throw complexity_error("ageclass-ball: lattice exceeds term budget");
            return kernels::logsumexp_terms(static_cast<std::size_t>(hi - lo + 1), [&](std::size_t i) {
                return ageclass1_log_pmf(theta, n, lo + static_cast<std::int64_t>(i));
            });
        }
        case EventSpec::Kind::ageclass_joint_ball: {
            std::size_t r = ev.x.size();
            if (r < 1) throw usage_error("ageclass-joint-ball: centers required");
            std::vector<std::int64_t> lo(r), hi(r), width(r);
            double total = 1.0;
            for (std::size_t i = 0; i < r; ++i) {
                ball_range(ev.x[i], ev.delta, n, lo[i], hi[i]);
                if (lo[i] > hi[i]) return neg_inf;
                width[i] = hi[i] - lo[i] + 1;
                total *= static_cast<double>(width[i]);
            }
            if (total > ball_term_budget)
                throw complexity_error("ageclass-joint-ball: lattice exceeds term budget");
            std::size_t terms = static_cast<std::size_t>(total);
            return kernels::logsumexp_terms(terms, [&](std::size_t flat) {
                std::vector<std::int64_t> ks(r);
                std::size_t rem = flat;
                std::int64_t sum = 0;
                for (std::size_t i = 0; i < r; ++i) {
                    ks[i] = lo[i] + static_cast<std::int64_t>(rem % static_cast<std::size_t>(width[i]));
                    rem /= static_cast<std::size_t>(width[i]);
                    sum += ks[i];
                }
                if (sum > n) return neg_inf;
                return ageclass_joint_log_pmf(theta, n, ks);
            });
        }
    }
    throw usage_error("event_log_prob: unknown event kind");
}

double gem_log_density(double theta, const std::vector<double>& x) {
    if (!(theta > 0.0)) throw domain_error("gem_log_density: theta must be positive");
    if (x.empty()) throw domain_error("gem_log_density: empty point");
    double s = 0.0;
    double lp = static_cast<double>(x.size()) * std::log(theta);
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (x[k] < 0.0) throw domain_error("gem_log_density: coordinates must be nonnegative");
        s += x[k];
        if (k + 1 < x.size()) {
            if (s >= 1.0) throw domain_error("gem_log_density: partial sums must stay below 1");
            lp -= std::log1p(-s);
        }
    }
    if (s >= 1.0) throw domain_error("gem_log_density: coordinates must sum below 1");
    lp += (theta - 1.0) * std::log1p(-s);
    return lp;
}

std::pair<double, double> fit_affine(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw usage_error("fit_affine: need >= 2 points");
    double n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    double denom = n * sxx - sx * sx;
    if (denom == 0.0) throw domain_error("fit_affine: degenerate abscissae");
    double b = (n * sxy - sx * sy) / denom;
    double a = (sy - b * sx) / n;
    return {a, b};
}

namespace {

char speed_kind_for(const EventSpec& ev) {
    switch (ev.kind) {
        case EventSpec::Kind::partition_point:
        case EventSpec::Kind::kn_point:
        case EventSpec::Kind::kn_ball:
            return 'a';
        default:
            return 'g';
    }
}

double target_for(const ScalingRegime& rg, const EventSpec& ev, std::int64_t n_first) {
    switch (ev.kind) {
        case EventSpec::Kind::partition_point:
            if (rg.case_label != 'A') throw usage_error("partition-point curves require case A");
            return rate_esf(n_first, ev.a);
        case EventSpec::Kind::kn_point:
            if (rg.case_label != 'A') throw usage_error("kn-point curves require case A");
            return static_cast<double>(n_first - ev.k);
        case EventSpec::Kind::kn_ball: {
            double x = ev.x.at(0);
            switch (rg.case_label) {
                case 'A': {
                    std::int64_t lo, hi;
                    ball_range(x, ev.delta, n_first, lo, hi);
                    if (lo > hi) throw domain_error("kn-ball: empty lattice window");
                    return static_cast<double>(n_first - hi);
                }
                case 'B':
                    return rate_kn_caseB(x);
                case 'C':
                    return legendre_caseC(x, rg.c);
                default:
                    return rate_kn_caseD(x);
            }
        }
        case EventSpec::Kind::ageclass_ball: {
            double x = ev.x.at(0);
            switch (rg.case_label) {
                case 'A': {
                    std::int64_t lo, hi;
                    ball_range(x, ev.delta, n_first, lo, hi);
                    if (lo > hi) throw domain_error("ageclass-ball: empty lattice window");
                    return static_cast<double>(lo - 1);
                }
                case 'B':
                    return rate_ageclass_caseB(x);
                case 'C':
                    return rate_ageclass_caseC(x, rg.c);
                default:
                    return rate_ageclass_caseD(x);
            }
        }
        case EventSpec::Kind::ageclass_joint_ball: {
            double sum = 0.0;
            for (double xi : ev.x) sum += xi;
            switch (rg.case_label) {
                case 'A': {
                    double t = 0.0;
                    for (double xi : ev.x) {
                        std::int64_t lo, hi;
                        ball_range(xi, ev.delta, n_first, lo, hi);
                        if (lo > hi) throw domain_error("ageclass-joint-ball: empty lattice window");
                        t += static_cast<double>(lo - 1);
                    }
                    return t;
                }
                case 'B':
                    return rate_ageclass_caseB(sum);
                case 'C':
                    return rate_ageclass_caseC(sum, rg.c);
                default:
                    return rate_ageclass_caseD(sum);
            }
        }
    }
    throw usage_error("target_for: unknown event kind");
}

void extrapolate(ConvergenceTable& table) {
    std::vector<double> xs, ys;
    for (const auto& row : table.rows) {
        xs.push_back(1.0 / row.speed_value);
        ys.push_back(row.empirical_rate);
    }
    auto [a, b] = fit_affine(xs, ys);
    table.extrapolated = a;
    table.coef_C = b;
    double res2 = 0.0, corr2 = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double fitted = a + b * xs[i];
        res2 += (ys[i] - fitted) * (ys[i] - fitted);
        corr2 += (b * xs[i]) * (b * xs[i]);
    }
    table.residual_rms = std::sqrt(res2 / static_cast<double>(xs.size()));
    table.correction_rms = std::sqrt(corr2 / static_cast<double>(xs.size()));
    table.model = "empirical_rate = r_inf + C/speed";
}

}  // namespace

ConvergenceTable rate_curve(const ScalingRegime& regime, const EventSpec& ev,
                            const std::vector<double>& theta_grid) {
    if (theta_grid.size() < 4) throw usage_error("rate_curve: grid needs at least 4 points");
    for (std::size_t i = 1; i < theta_grid.size(); ++i)
        if (theta_grid[i] <= theta_grid[i - 1]) throw usage_error("rate_curve: grid must increase");
    char kind = speed_kind_for(ev);
    ConvergenceTable table;
    table.target_rate = target_for(regime, ev, checked_n(regime, theta_grid.front()));
    for (double th : theta_grid) {
        std::int64_t n = checked_n(regime, th);
        double sp = speed(regime, kind, th);
        double lp = event_log_prob(th, n, ev);
        if (lp == neg_inf) throw domain_error("rate_curve: event has zero probability on the grid");
        table.rows.push_back({th, static_cast<double>(n), sp, -lp / sp});
    }
    extrapolate(table);
    return table;
}

ConvergenceTable dirichlet_rate_curve(std::int64_t n, const Partition& a,
                                      const std::vector<double>& K_grid,
                                      const std::function<double(double)>& theta_of) {
    if (K_grid.size() < 4) throw usage_error("dirichlet_rate_curve: grid needs at least 4 points");
    for (std::size_t i = 1; i < K_grid.size(); ++i)
        if (K_grid[i] <= K_grid[i - 1]) throw usage_error("dirichlet_rate_curve: grid must increase");
    if (!theta_of) throw usage_error("dirichlet_rate_curve: theta coupling required");
    ConvergenceTable table;
    table.target_rate = rate_esf(n, a);
    for (double Kd : K_grid) {
        std::int64_t K = static_cast<std::int64_t>(Kd);
        double sp = std::log(static_cast<double>(K));
        if (!(sp > 0.0)) throw domain_error("dirichlet_rate_curve: needs K > 1");
        double lp = dirichlet_sampling_log_pmf(theta_of(Kd), K, n, a);
        if (lp == neg_inf)
            throw domain_error("dirichlet_rate_curve: event has zero probability on the grid");
        table.rows.push_back({Kd, static_cast<double>(n), sp, -lp / sp});
    }
    extrapolate(table);
    return table;
}

Table ConvergenceTable::to_table() const {
    Table t;
    t.columns = {"theta", "n", "speed", "empirical_rate"};
    for (const auto& row : rows) t.add_row({row.theta, row.n, row.speed_value, row.empirical_rate});
    t.add_meta("target_rate", format_double(target_rate));
    t.add_meta("extrapolated", format_double(extrapolated));
    t.add_meta("coef_C", format_double(coef_C));
    t.add_meta("residual_rms", format_double(residual_rms));
    t.add_meta("correction_rms", format_double(correction_rms));
    t.add_meta("model", model);
    return t;
}

Table mgf_limit_curve(const ScalingRegime& regime, const std::vector<double>& t_grid, double theta) {
    Table out;
    out.columns = {"t", "scaled_log_mgf", "limit", "difference"};
    std::int64_t n = checked_n(regime, theta);
    double alpha = speed(regime, 'a', theta);
    double beta = speed(regime, 'b', theta);
    double param = regime.case_label == 'A' ? static_cast<double>(n)
                   : regime.case_label == 'C' ? regime.c
                                              : 0.0;
    for (double t : t_grid) {
        double lhs = kn_log_mgf(theta, n, beta * t) / alpha;
        double lam = cgf_limit(regime.case_label, t, param);
        out.add_row({t, lhs, lam, lhs - lam});
    }
    return out;
}

Table lln_table(const ScalingRegime& regime, const std::vector<double>& theta_grid) {
    Table out;
    out.columns = {"theta", "n", "normalized_mean", "target"};
    for (double th : theta_grid) {
        std::int64_t n = checked_n(regime, th);
        double nd = static_cast<double>(n);
        double mean = kn_mean(th, n);
        double value = 0.0, target = 0.0;
        switch (regime.case_label) {
            case 'A':
                value = mean;
                target = nd;
                break;
            case 'B':
                value = mean / nd;
                target = 1.0;
                break;
            case 'C':
                value = mean / nd;
                target = regime.c * std::log1p(1.0 / regime.c);
                break;
            case 'D':
                value = mean / (th * std::log(nd / th));
                target = 1.0;
                break;
            default:
                throw usage_error("lln_table: case must be one of A, B, C, D");
        }
        out.add_row({th, nd, value, target});
    }
    return out;
}

namespace {

GofReport chi_square_report(const std::string& which, const std::vector<double>& probs,
                            const std::vector<std::int64_t>& counts, std::int64_t N, SeedSpec seed) {
    double psum = 0.0;
    for (double p : probs) psum += p;
    if (std::abs(psum - 1.0) > 1e-6) throw domain_error("gof cells do not cover the support");
    GofReport rep;
    rep.which = which;
    rep.N = N;
    rep.seed = seed;
    rep.cells = static_cast<std::int64_t>(probs.size());
    double stat = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        double expected = probs[i] * static_cast<double>(N);
        if (expected < 5.0)
            throw usage_error("gof: expected cell count below 5; increase N or merge cells");
        double diff = static_cast<double>(counts[i]) - expected;
        stat += diff * diff / expected;
    }
    rep.statistic = stat;
    rep.df = static_cast<double>(probs.size() - 1);
    rep.p_value = chisq_sf(stat, rep.df);
    rep.pass = rep.p_value >= 1e-3;
    return rep;
}

GofReport gof_ewens(const GofParams& pr, std::int64_t N, SeedSpec seed) {
    auto parts = all_partitions(pr.n);
    std::map<Partition, std::size_t> index;
    std::vector<double> probs;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        index[parts[i]] = i;
        probs.push_back(std::exp(esf_log_pmf(pr.theta, pr.n, parts[i])));
    }
    std::vector<std::int64_t> counts(parts.size(), 0);
    for (std::int64_t i = 0; i < N; ++i) {
        Partition a = sample_ewens_partition(pr.theta, pr.n,
                                             SeedSpec{seed.master_seed, seed.stream_index + static_cast<std::uint64_t>(i)});
        ++counts[index.at(a)];
    }
    return chi_square_report("ewens", probs, counts, N, seed);
}

GofReport gof_kn(const GofParams& pr, std::int64_t N, SeedSpec seed) {
    std::vector<double> probs;
    for (std::int64_t k = 1; k <= pr.n; ++k)
        probs.push_back(std::exp(kn_log_pmf(pr.theta, pr.n, k)));
    std::vector<std::int64_t> counts(static_cast<std::size_t>(pr.n), 0);
    for (std::int64_t i = 0; i < N; ++i) {
        std::int64_t k = sample_kn(pr.theta, pr.n,
                                   SeedSpec{seed.master_seed, seed.stream_index + static_cast<std::uint64_t>(i)});
        ++counts[static_cast<std::size_t>(k - 1)];
    }
    return chi_square_report("kn", probs, counts, N, seed);
}

// cells for the two-coordinate stick sample in (x_1, v) with v = x_2/(1-x_1);
// edges at equal quantiles of the common stick law so cells have equal mass
GofReport gof_gem(const GofParams& pr, std::int64_t N, SeedSpec seed) {
    if (pr.n != 2) throw usage_error("gof gem: supported for n = 2");
    const std::size_t nx = 5, nv = 4;
    auto quantile = [&](double q) { return -std::expm1(std::log1p(-q) / pr.theta); };
    std::vector<double> xe, ve;
    for (std::size_t i = 0; i <= nx; ++i) xe.push_back(quantile(static_cast<double>(i) / nx));
    for (std::size_t j = 0; j <= nv; ++j) ve.push_back(quantile(static_cast<double>(j) / nv));

    using gauss = boost::math::quadrature::gauss<double, 30>;
    std::vector<double> probs;
    for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t j = 0; j < nv; ++j) {
            auto cell = gauss::integrate(
                [&](double x1) {
                    double inner = gauss::integrate(
                        [&](double v) {
                            double x2 = v * (1.0 - x1);
                            return std::exp(gem_log_density(pr.theta, {x1, x2}));
                        },
                        ve[j], ve[j + 1]);
                    return inner * (1.0 - x1);
                },
                xe[i], xe[i + 1]);
            probs.push_back(cell);
        }

    std::vector<std::int64_t> counts(probs.size(), 0);
    auto bin_of = [](const std::vector<double>& edges, double value) {
        std::size_t lo = 0, hi = edges.size() - 1;
        while (hi - lo > 1) {
            std::size_t mid = (lo + hi) / 2;
            (value < edges[mid] ? hi : lo) = mid;
        }
        return lo;
    };
    for (std::int64_t i = 0; i < N; ++i) {
        MassVector mv = sample_gem(pr.theta, 2,
                                   SeedSpec{seed.master_seed, seed.stream_index + static_cast<std::uint64_t>(i)});
        double x1 = mv.atoms[0];
        double v = mv.atoms[1] / (1.0 - x1);
        ++counts[bin_of(xe, x1) * nv + bin_of(ve, v)];
    }
    return chi_square_report("gem", probs, counts, N, seed);
}

GofReport gof_dirichlet_max(const GofParams& pr, std::int64_t N, SeedSpec seed) {
    if (pr.K != 3 || pr.alpha != 1.0)
        throw usage_error("gof dirichlet-max: supported for K = 3, alpha = 1");
    // 0.5 is a breakpoint of the piecewise density, so it sits on an edge
    std::vector<double> edges = {1.0 / 3.0, 0.38, 0.42, 0.46, 0.5, 0.55, 0.61, 0.7, 0.85, 1.0};
    using gk = boost::math::quadrature::gauss_kronrod<double, 31>;
    std::vector<double> probs;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
        probs.push_back(gk::integrate(
            [&](double p) { return std::exp(order_stat_log_density({{p}, 3})); }, edges[i],
            edges[i + 1], 10, 1e-10));

    std::vector<std::int64_t> counts(probs.size(), 0);
    for (std::int64_t i = 0; i < N; ++i) {
        std::vector<double> w = sample_dirichlet_symmetric(
            3, 1.0, SeedSpec{seed.master_seed, seed.stream_index + static_cast<std::uint64_t>(i)});
        double mx = std::max({w[0], w[1], w[2]});
        std::size_t bin = probs.size() - 1;
        for (std::size_t b = 0; b + 1 < edges.size(); ++b)
            if (mx < edges[b + 1]) {
                bin = b;
                break;
            }
        ++counts[bin];
    }
    return chi_square_report("dirichlet-max", probs, counts, N, seed);
}

}  // namespace

GofReport gof_validate(const std::string& which, const GofParams& params, std::int64_t N,
                       SeedSpec seed) {
    if (N < 1) throw usage_error("gof_validate: N must be positive");
    if (which == "ewens") return gof_ewens(params, N, seed);
    if (which == "kn") return gof_kn(params, N, seed);
    if (which == "gem") return gof_gem(params, N, seed);
    if (which == "dirichlet-max") return gof_dirichlet_max(params, N, seed);
    throw usage_error("gof_validate: which must be ewens | kn | gem | dirichlet-max");
}

}  // namespace pdld
