#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "pdld/exact_dist.hpp"
#include "pdld/ldp_lab.hpp"
#include "pdld/partition.hpp"
#include "pdld/rates.hpp"
#include "pdld/samplers.hpp"
#include "pdld/table.hpp"
#include "pdld/util.hpp"
#include "pdld/verify.hpp"

#ifndef PDLD_VERSION
#define PDLD_VERSION "0.0.0"
#endif

namespace {

using namespace pdld;

// geometric grid spec start:factor:count
std::vector<double> parse_grid(const std::string& spec) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : spec) {
        if (ch == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 3) throw usage_error("grid spec must be start:factor:count: " + spec);
    double start = parse_double(parts[0]);
    double factor = parse_double(parts[1]);
    double count_d = parse_double(parts[2]);
    auto count = static_cast<std::int64_t>(count_d);
    if (!(start > 0.0) || !(factor > 0.0)) throw usage_error("grid start and factor must be positive");
    if (count < 1 || count > 100000 || count_d != static_cast<double>(count))
        throw usage_error("grid count must be an integer in [1, 100000]");
    std::vector<double> out;
    double v = start;
    for (std::int64_t i = 0; i < count; ++i, v *= factor) out.push_back(v);
    return out;
}

std::vector<double> parse_vector(const std::string& text) {
    std::vector<double> out;
    std::string cur;
    for (char ch : text) {
        if (ch == ',') {
            out.push_back(parse_double(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(parse_double(cur));
    return out;
}

std::vector<std::int64_t> parse_int_vector(const std::string& text) {
    std::vector<std::int64_t> out;
    for (double v : parse_vector(text)) {
        auto i = static_cast<std::int64_t>(v);
        if (static_cast<double>(i) != v) throw usage_error("expected integers: " + text);
        out.push_back(i);
    }
    return out;
}

std::string resolve_out(const std::string& path) {
    std::filesystem::path p(path);
    if (p.is_absolute()) return path;
    const char* dir = std::getenv("PDLD_OUT_DIR");
    if (dir == nullptr || *dir == '\0') return path;
    return (std::filesystem::path(dir) / p).string();
}

struct Emitter {
    std::string out_path;  // empty: print to stdout
    std::string format = "csv";
    std::vector<std::pair<std::string, std::string>> params;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void param(const std::string& key, const std::string& value) { params.emplace_back(key, value); }
    void param(const std::string& key, double value) { params.emplace_back(key, format_double(value)); }
    void param(const std::string& key, std::int64_t value) {
        params.emplace_back(key, std::to_string(value));
    }

    void emit(Table t) {
        double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::vector<std::pair<std::string, std::string>> meta;
        meta.emplace_back("version", PDLD_VERSION);
        for (const auto& kv : params) meta.push_back(kv);
        meta.emplace_back("wall_seconds", format_double(wall));
        for (const auto& kv : t.meta) meta.push_back(kv);
        t.meta = std::move(meta);
        if (out_path.empty()) {
            std::cout << (format == "json" ? to_json_string(t) : to_csv_string(t));
        } else {
            std::string resolved = resolve_out(out_path);
            write_table(t, resolved, format);
            std::cout << "wrote " << resolved << "\n";
        }
    }
};

struct CommonFlags {
    std::string out;
    std::string format = "csv";
    std::uint64_t seed = 20260819;
    std::uint64_t stream = 0;
};

void add_common(CLI::App* cmd, CommonFlags& cf) {
    cmd->add_option("--out", cf.out, "output file (PDLD_OUT_DIR prefixes relative paths)");
    cmd->add_option("--format", cf.format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--seed", cf.seed, "master seed");
    cmd->add_option("--stream", cf.stream, "first stream index");
}

int run_sample(const std::string& which, double theta, std::int64_t n, std::int64_t K, double alpha,
               double eps, std::int64_t top_m, std::int64_t count, const CommonFlags& cf) {
    if (count < 1) throw usage_error("--count must be >= 1");
    Emitter em;
    em.out_path = cf.out;
    em.format = cf.format;
    em.param("command", "sample " + which);
    em.param("theta", theta);
    em.param("count", count);
    em.param("master_seed", static_cast<std::int64_t>(cf.seed));
    em.param("first_stream", static_cast<std::int64_t>(cf.stream));

    Table t;
    auto seed_at = [&](std::int64_t i) {
        return SeedSpec{cf.seed, cf.stream + static_cast<std::uint64_t>(i)};
    };
    if (which == "gem") {
        em.param("n_atoms", n);
        for (std::int64_t j = 1; j <= n; ++j) t.columns.push_back("x" + std::to_string(j));
        t.columns.push_back("tail_bound");
        for (std::int64_t i = 0; i < count; ++i) {
            MassVector mv = sample_gem(theta, n, seed_at(i));
            std::vector<double> row = mv.atoms;
            row.push_back(mv.tail_bound);
            t.add_row(std::move(row));
        }
    } else if (which == "pd") {
        em.param("eps", eps);
        em.param("top_m", top_m);
        for (std::int64_t j = 1; j <= top_m; ++j) t.columns.push_back("p" + std::to_string(j));
        t.columns.push_back("certified");
        for (std::int64_t i = 0; i < count; ++i) {
            PDSample s = sample_pd(theta, eps, top_m, seed_at(i));
            std::vector<double> row(static_cast<std::size_t>(top_m), 0.0);
            for (std::size_t j = 0; j < row.size() && j < s.mass.atoms.size(); ++j)
                row[j] = s.mass.atoms[j];
            row.push_back(s.certified ? 1.0 : 0.0);
            t.add_row(std::move(row));
        }
    } else if (which == "dirichlet") {
        em.param("K", K);
        em.param("alpha", alpha);
        if (K > 10000) throw usage_error("sample dirichlet: K capped at 10000 for table output");
        for (std::int64_t j = 1; j <= K; ++j) t.columns.push_back("p" + std::to_string(j));
        for (std::int64_t i = 0; i < count; ++i)
            t.add_row(sample_dirichlet_symmetric(K, alpha, seed_at(i)));
    } else if (which == "size-biased") {
        em.param("K", K);
        if (K > 10000) throw usage_error("sample size-biased: K capped at 10000 for table output");
        for (std::int64_t j = 1; j + 1 <= K; ++j) t.columns.push_back("y" + std::to_string(j));
        t.columns.push_back("tail");
        for (std::int64_t i = 0; i < count; ++i) {
            MassVector mv = sample_size_biased_dirichlet(theta, K, seed_at(i));
            std::vector<double> row = mv.atoms;
            row.push_back(mv.tail_bound);
            t.add_row(std::move(row));
        }
    } else if (which == "ewens") {
        em.param("n", n);
        for (std::int64_t j = 1; j <= n; ++j) t.columns.push_back("a" + std::to_string(j));
        for (std::int64_t i = 0; i < count; ++i) {
            Partition a = sample_ewens_partition(theta, n, seed_at(i));
            std::vector<double> row;
            for (std::int64_t aj : a) row.push_back(static_cast<double>(aj));
            t.add_row(std::move(row));
        }
    } else if (which == "kn") {
        em.param("n", n);
        t.columns = {"k"};
        for (std::int64_t i = 0; i < count; ++i)
            t.add_row({static_cast<double>(sample_kn(theta, n, seed_at(i)))});
    } else {
        throw usage_error("sample: unknown target " + which);
    }
    em.emit(std::move(t));
    return 0;
}

int run_pmf(const std::string& which, double theta, std::int64_t n, std::int64_t k, std::int64_t K,
            const std::string& partition, const std::string& ks, const std::string& weights,
            double budget, bool log_scale, const CommonFlags& cf) {
    double lp;
    Emitter em;
    em.out_path = cf.out;
    em.format = cf.format;
    em.param("command", "pmf " + which);
    if (which == "esf") {
        Partition a = parse_partition(partition);
        lp = esf_log_pmf(theta, static_cast<std::int64_t>(a.size()), a);
        em.param("theta", theta);
        em.param("partition", partition);
    } else if (which == "dirichlet") {
        Partition a = parse_partition(partition);
        lp = dirichlet_sampling_log_pmf(theta, K, static_cast<std::int64_t>(a.size()), a);
        em.param("theta", theta);
        em.param("K", K);
        em.param("partition", partition);
    } else if (which == "kn") {
        lp = kn_log_pmf(theta, n, k);
        em.param("theta", theta);
        em.param("n", n);
        em.param("k", k);
    } else if (which == "ageclass") {
        lp = ageclass1_log_pmf(theta, n, k);
        em.param("theta", theta);
        em.param("n", n);
        em.param("k", k);
    } else if (which == "ageclass-joint") {
        std::vector<std::int64_t> kv = parse_int_vector(ks);
        lp = ageclass_joint_log_pmf(theta, n, kv);
        em.param("theta", theta);
        em.param("n", n);
        em.param("ks", ks);
    } else if (which == "conditional") {
        Partition a = parse_partition(partition);
        std::vector<double> p = parse_vector(weights);
        lp = conditional_sampling_log_prob(static_cast<std::int64_t>(a.size()), a, p, budget);
        em.param("partition", partition);
        em.param("p", weights);
        em.param("budget", budget);
    } else {
        throw usage_error("pmf: unknown law " + which);
    }
    double value = log_scale ? lp : std::exp(lp);
    std::cout << format_double(value) << "\n";
    if (!cf.out.empty()) {
        Table t;
        t.columns = {"probability", "log_probability"};
        t.add_row({std::exp(lp), lp});
        em.emit(std::move(t));
    }
    return 0;
}

int run_rate(const std::string& which, const std::string& pvec, const std::string& yvec,
             std::int64_t K, std::int64_t i, double v, double x, double c, double t_arg,
             const std::string& case_label, std::int64_t n, const std::string& partition,
             const CommonFlags& cf) {
    double value;
    Emitter em;
    em.out_path = cf.out;
    em.format = cf.format;
    em.param("command", "rate " + which);
    if (which == "residual-mass") {
        value = rate_residual_mass(parse_vector(pvec));
        em.param("p", pvec);
    } else if (which == "relative-entropy") {
        value = rate_relative_entropy(parse_vector(pvec), K);
        em.param("p", pvec);
        em.param("K", K);
    } else if (which == "constrained") {
        value = constrained_inf_relent(parse_vector(pvec), K);
        em.param("p", pvec);
        em.param("K", K);
    } else if (which == "stick") {
        value = rate_beta_stick(K, i, v);
        em.param("K", K);
        em.param("i", i);
        em.param("v", v);
    } else if (which == "size-biased") {
        value = rate_sizebiased_SK(parse_vector(yvec), K);
        em.param("y", yvec);
        em.param("K", K);
    } else if (which == "esf") {
        Partition a = parse_partition(partition);
        value = rate_esf(static_cast<std::int64_t>(a.size()), a);
        em.param("partition", partition);
    } else if (which == "caseC") {
        value = legendre_caseC(x, c);
        em.param("x", x);
        em.param("c", c);
    } else if (which == "kn-B") {
        value = rate_kn_caseB(x);
        em.param("x", x);
    } else if (which == "kn-D") {
        value = rate_kn_caseD(x);
        em.param("x", x);
    } else if (which == "ageclass-B") {
        value = rate_ageclass_caseB(x);
        em.param("x", x);
    } else if (which == "ageclass-C") {
        value = rate_ageclass_caseC(x, c);
        em.param("x", x);
        em.param("c", c);
    } else if (which == "ageclass-D") {
        value = rate_ageclass_caseD(x);
        em.param("x", x);
    } else if (which == "cgf") {
        if (case_label.size() != 1) throw usage_error("rate cgf: --case must be A, B, C, or D");
        double param = case_label == "A" ? static_cast<double>(n) : c;
        value = cgf_limit(case_label[0], t_arg, param);
        em.param("case", case_label);
        em.param("t", t_arg);
        if (case_label == "A") em.param("n", n);
        if (case_label == "C") em.param("c", c);
    } else {
        throw usage_error("rate: unknown rate function " + which);
    }
    std::cout << format_double(value) << "\n";
    if (!cf.out.empty()) {
        Table t;
        t.columns = {"rate"};
        t.add_row({value});
        em.emit(std::move(t));
    }
    return 0;
}

ScalingRegime build_regime(const std::string& case_label, std::optional<std::int64_t> n,
                           std::optional<double> exponent, double c) {
    if (case_label.size() != 1) throw usage_error("--case must be A, B, C, or D");
    if (case_label == "C" && !n && !exponent) return ScalingRegime::ratio(c);
    if (n && exponent) throw usage_error("give either --n or --exponent, not both");
    if (n) return ScalingRegime::fixed_n(case_label[0], *n);
    if (exponent) return ScalingRegime::power(case_label[0], *exponent);
    throw usage_error("coupling needed: --n (fixed), --exponent (power), or case C --c (ratio)");
}

EventSpec build_event(const std::string& event, const std::string& partition, std::int64_t k,
                      const std::string& centers, double delta) {
    EventSpec ev;
    ev.delta = delta;
    if (event == "partition") {
        ev.kind = EventSpec::Kind::partition_point;
        ev.a = parse_partition(partition);
    } else if (event == "kn") {
        ev.kind = EventSpec::Kind::kn_point;
        ev.k = k;
    } else if (event == "kn-ball") {
        ev.kind = EventSpec::Kind::kn_ball;
        ev.x = parse_vector(centers);
    } else if (event == "ageclass-ball") {
        ev.kind = EventSpec::Kind::ageclass_ball;
        ev.x = parse_vector(centers);
    } else if (event == "ageclass-joint") {
        ev.kind = EventSpec::Kind::ageclass_joint_ball;
        ev.x = parse_vector(centers);
    } else {
        throw usage_error("--event must be partition, kn, kn-ball, ageclass-ball, or ageclass-joint");
    }
    return ev;
}

int run_verify(const std::string& id, const VerifyOptions& opt, const CommonFlags& cf) {
    if (id == "all") {
        auto results = run_acceptance();
        bool all_pass = true;
        for (const auto& cr : results) {
            all_pass = all_pass && cr.pass;
            double secs = 0.0;
            for (const auto& part : cr.parts) secs += part.seconds;
            std::cout << "criterion " << cr.number << " [" << (cr.pass ? "pass" : "FAIL") << "] "
                      << cr.label << " (" << format_double(secs) << "s)\n";
            for (const auto& part : cr.parts)
                if (!part.pass) std::cout << "    " << part.id << ": " << part.detail << "\n";
        }
        std::cout << (all_pass ? "all criteria passed" : "some criteria FAILED") << "\n";
        return all_pass ? 0 : 1;
    }
    CheckResult res = run_check(id, opt);
    std::cout << "[" << (res.pass ? "pass" : "FAIL") << "] " << res.id << ": " << res.detail << " ("
              << format_double(res.seconds) << "s)\n";
    if (res.table) {
        if (cf.out.empty()) {
            std::cout << to_csv_string(*res.table);
        } else {
            Emitter em;
            em.out_path = cf.out;
            em.format = cf.format;
            em.param("command", "verify " + id);
            em.param("master_seed", static_cast<std::int64_t>(opt.master_seed));
            em.emit(std::move(*res.table));
        }
    }
    return res.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Poisson-Dirichlet and Ewens sampling toolkit: exact laws, samplers, "
                 "large-deviation rate functions, and verification suites"};
    app.require_subcommand(1);
    app.set_version_flag("--version", PDLD_VERSION);

    // sample
    auto* sample = app.add_subcommand("sample", "draw from the implemented laws");
    std::string sample_which;
    sample->add_option("which", sample_which, "gem | pd | dirichlet | size-biased | ewens | kn")
        ->required();
    double s_theta = 1.0, s_alpha = 1.0, s_eps = 1e-8;
    std::int64_t s_n = 10, s_K = 10, s_top_m = 10, s_count = 1;
    CommonFlags s_cf;
    sample->add_option("--theta", s_theta, "concentration parameter");
    sample->add_option("--n", s_n, "atom count (gem) or sample size (ewens, kn)");
    sample->add_option("--K", s_K, "allele count");
    sample->add_option("--alpha", s_alpha, "dirichlet parameter");
    sample->add_option("--eps", s_eps, "truncation threshold for pd");
    sample->add_option("--top-m", s_top_m, "atoms reported by pd");
    sample->add_option("--count", s_count, "number of samples");
    add_common(sample, s_cf);

    // pmf
    auto* pmf = app.add_subcommand("pmf", "evaluate an exact law");
    std::string pmf_which, pmf_partition, pmf_ks, pmf_weights;
    double p_theta = 1.0, p_budget = 1e8;
    std::int64_t p_n = 1, p_k = 1, p_K = 10;
    bool p_log = false;
    CommonFlags p_cf;
    pmf->add_option("which", pmf_which,
                    "esf | dirichlet | kn | ageclass | ageclass-joint | conditional")
        ->required();
    pmf->add_option("--theta", p_theta, "concentration parameter");
    pmf->add_option("--n", p_n, "sample size");
    pmf->add_option("--k", p_k, "count argument");
    pmf->add_option("--K", p_K, "allele count");
    pmf->add_option("--partition", pmf_partition, "comma list a_1,...,a_n with sum j*a_j = n");
    pmf->add_option("--ks", pmf_ks, "comma list of age-class counts");
    pmf->add_option("--p", pmf_weights, "comma list of atom masses");
    pmf->add_option("--budget", p_budget, "dynamic-programming cost cap");
    pmf->add_flag("--log", p_log, "print the log probability");
    add_common(pmf, p_cf);

    // rate
    auto* rate = app.add_subcommand("rate", "evaluate a rate function");
    std::string r_which, r_p, r_y, r_case = "C", r_partition;
    std::int64_t r_K = 10, r_i = 1, r_n = 1;
    double r_v = 0.5, r_x = 0.0, r_c = 1.0, r_t = 0.0;
    CommonFlags r_cf;
    rate->add_option("which", r_which,
                     "residual-mass | relative-entropy | constrained | stick | size-biased | esf | "
                     "caseC | kn-B | kn-D | ageclass-B | ageclass-C | ageclass-D | cgf")
        ->required();
    rate->add_option("--p", r_p, "comma list of masses");
    rate->add_option("--y", r_y, "comma list of size-biased masses");
    rate->add_option("--K", r_K, "dimension");
    rate->add_option("--i", r_i, "stick index");
    rate->add_option("--v", r_v, "stick proportion");
    rate->add_option("--x", r_x, "rate argument");
    rate->add_option("--c", r_c, "limit ratio");
    rate->add_option("--t", r_t, "cumulant argument");
    rate->add_option("--case", r_case, "regime case A | B | C | D");
    rate->add_option("--n", r_n, "sample size (cgf case A)");
    rate->add_option("--partition", r_partition, "comma list a_1,...,a_n");
    add_common(rate, r_cf);

    // table
    auto* table = app.add_subcommand("table", "evaluate a convergence or limit table");
    std::string t_which, t_case = "A", t_event = "kn", t_partition, t_centers;
    std::optional<std::int64_t> t_n;
    std::optional<double> t_exponent;
    double t_c = 1.0, t_delta = 0.01, t_theta = 1e4, t_theta_power = 1.0;
    double t_tmin = -2.0, t_tmax = 2.0;
    std::int64_t t_k = 1, t_tcount = 21;
    std::string t_grid = "1e2:10:9";
    CommonFlags t_cf;
    table->add_option("which", t_which, "rate-curve | dirichlet-rate-curve | mgf-limit | lln")
        ->required();
    table->add_option("--case", t_case, "regime case A | B | C | D");
    table->add_option("--n", t_n, "fixed sample size coupling");
    table->add_option("--exponent", t_exponent, "power coupling n = floor(theta^exponent)");
    table->add_option("--c", t_c, "ratio coupling (case C)");
    table->add_option("--grid", t_grid, "geometric grid start:factor:count");
    table->add_option("--event", t_event, "partition | kn | kn-ball | ageclass-ball | ageclass-joint");
    table->add_option("--partition", t_partition, "comma list for partition events");
    table->add_option("--k", t_k, "block count for kn events");
    table->add_option("--x", t_centers, "comma list of ball centers");
    table->add_option("--delta", t_delta, "ball half-width");
    table->add_option("--theta", t_theta, "theta for mgf-limit");
    table->add_option("--theta-power", t_theta_power, "dirichlet coupling theta = K^power");
    table->add_option("--t-min", t_tmin, "first cumulant argument");
    table->add_option("--t-max", t_tmax, "last cumulant argument");
    table->add_option("--t-count", t_tcount, "cumulant grid size");
    add_common(table, t_cf);

    // verify
    auto* verify = app.add_subcommand("verify", "run a named suite or the full gate");
    std::string v_id;
    verify->add_option("id", v_id, "suite id or 'all'")->required();
    std::optional<double> v_theta, v_c, v_x, v_t, v_delta;
    std::optional<std::int64_t> v_n, v_k, v_K, v_N;
    std::optional<std::string> v_grid;
    CommonFlags v_cf;
    verify->add_option("--theta", v_theta, "theta override");
    verify->add_option("--c", v_c, "ratio override");
    verify->add_option("--x", v_x, "center override");
    verify->add_option("--t", v_t, "cumulant argument override");
    verify->add_option("--delta", v_delta, "ball half-width override");
    verify->add_option("--n", v_n, "sample size override");
    verify->add_option("--k", v_k, "block count override");
    verify->add_option("--K", v_K, "dimension override");
    verify->add_option("--N", v_N, "monte carlo sample count override");
    verify->add_option("--grid", v_grid, "grid override start:factor:count");
    add_common(verify, v_cf);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sample->parsed())
            return run_sample(sample_which, s_theta, s_n, s_K, s_alpha, s_eps, s_top_m, s_count,
                              s_cf);
        if (pmf->parsed())
            return run_pmf(pmf_which, p_theta, p_n, p_k, p_K, pmf_partition, pmf_ks, pmf_weights,
                           p_budget, p_log, p_cf);
        if (rate->parsed())
            return run_rate(r_which, r_p, r_y, r_K, r_i, r_v, r_x, r_c, r_t, r_case, r_n,
                            r_partition, r_cf);
        if (table->parsed()) {
            Emitter em;
            em.out_path = t_cf.out;
            em.format = t_cf.format;
            em.param("command", "table " + t_which);
            auto grid = parse_grid(t_grid);
            if (t_which == "rate-curve") {
                ScalingRegime regime = build_regime(t_case, t_n, t_exponent, t_c);
                EventSpec ev = build_event(t_event, t_partition, t_k, t_centers, t_delta);
                for (const auto& w : regime_coherence_warnings(regime, grid))
                    std::cerr << "warning: " << w << "\n";
                em.param("case", t_case);
                em.param("coupling", regime.rule_desc);
                em.param("event", t_event);
                em.param("grid", t_grid);
                em.emit(rate_curve(regime, ev, grid).to_table());
            } else if (t_which == "dirichlet-rate-curve") {
                if (!t_n) throw usage_error("dirichlet-rate-curve needs --n");
                Partition a = parse_partition(t_partition);
                double power = t_theta_power;
                em.param("n", *t_n);
                em.param("partition", t_partition);
                em.param("theta_power", power);
                em.param("grid", t_grid);
                em.emit(dirichlet_rate_curve(*t_n, a, grid,
                                             [power](double K) { return std::pow(K, power); })
                            .to_table());
            } else if (t_which == "mgf-limit") {
                ScalingRegime regime = build_regime(t_case, t_n, t_exponent, t_c);
                if (t_tcount < 2) throw usage_error("--t-count must be >= 2");
                std::vector<double> ts;
                for (std::int64_t j = 0; j < t_tcount; ++j)
                    ts.push_back(t_tmin + (t_tmax - t_tmin) * static_cast<double>(j) /
                                              static_cast<double>(t_tcount - 1));
                em.param("case", t_case);
                em.param("coupling", regime.rule_desc);
                em.param("theta", t_theta);
                em.emit(mgf_limit_curve(regime, ts, t_theta));
            } else if (t_which == "lln") {
                ScalingRegime regime = build_regime(t_case, t_n, t_exponent, t_c);
                for (const auto& w : regime_coherence_warnings(regime, grid))
                    std::cerr << "warning: " << w << "\n";
                em.param("case", t_case);
                em.param("coupling", regime.rule_desc);
                em.param("grid", t_grid);
                em.emit(lln_table(regime, grid));
            } else {
                throw usage_error("table: unknown kind " + t_which);
            }
            return 0;
        }
        if (verify->parsed()) {
            VerifyOptions opt;
            opt.theta = v_theta;
            opt.c = v_c;
            opt.x = v_x;
            opt.t = v_t;
            opt.delta = v_delta;
            opt.n = v_n;
            opt.k = v_k;
            opt.K = v_K;
            opt.N = v_N;
            if (v_grid) opt.grid = parse_grid(*v_grid);
            opt.master_seed = v_cf.seed;
            return run_verify(v_id, opt, v_cf);
        }
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const complexity_error& e) {
        std::cerr << "budget exceeded: " << e.what() << " (no partial results written)\n";
        return 2;
    } catch (const io_error& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
