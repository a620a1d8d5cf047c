#include <cctype>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mfblocks/combinatorics.hpp"
#include "mfblocks/families.hpp"
#include "mfblocks/harness.hpp"
#include "mfblocks/polynomial.hpp"
#include "mfblocks/report.hpp"

namespace {

using namespace mfblocks;

struct GlobalOpts {
    std::string config_path;
    std::string out_path;
    std::string format;
    uint64_t seed = 0;
    bool seed_set = false;
    int threads = 1;
};

void emit(const GlobalOpts& g, const std::string& text) {
    if (g.out_path.empty())
        std::cout << text;
    else
        write_text_atomic(g.out_path, text);
}

ExperimentConfig configured(const GlobalOpts& g) {
    if (g.config_path.empty())
        throw ConfigError("--config is required for this subcommand");
    ExperimentConfig cfg = load_config(g.config_path);
    if (g.seed_set)
        cfg.seed = g.seed;
    if (!g.out_path.empty())
        cfg.out_path = g.out_path;
    if (!g.format.empty())
        cfg.format = g.format;
    return cfg;
}

void emit_report(const ExperimentConfig& cfg, const ConvergenceReport& report) {
    std::string text = (cfg.format == "json") ? render_json(report) : render_csv(report);
    if (cfg.out_path.empty())
        std::cout << text;
    else
        write_text_atomic(cfg.out_path, text);
}

// A value in --eval is an exact rational or a named indeterminate; distinct
// names become polynomial variables in order of first appearance.
Poly eval_value(const std::string& text, std::vector<std::string>& symbols) {
    try {
        return Poly(parse_rational(text));
    } catch (const std::exception&) {
    }
    if (text.empty() || (!std::isalpha(static_cast<unsigned char>(text[0])) && text[0] != '_'))
        throw ConfigError("--eval: bad value '" + text + "'");
    for (char c : text)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            throw ConfigError("--eval: bad value '" + text + "'");
    for (size_t i = 0; i < symbols.size(); ++i)
        if (symbols[i] == text)
            return Poly::var(i);
    symbols.push_back(text);
    return Poly::var(symbols.size() - 1);
}

std::string run_fuss_narayana(int k, int p, const std::string& eval_spec) {
    Poly poly = fuss_narayana_multi(k, p);
    if (eval_spec.empty()) {
        std::vector<std::string> names;
        for (int i = 0; i <= p; ++i)
            names.push_back("d" + std::to_string(i));
        return poly.str(names);
    }
    std::vector<Poly> subst(static_cast<size_t>(p) + 1);
    std::vector<bool> seen(static_cast<size_t>(p) + 1, false);
    std::vector<std::string> symbols;
    std::string item;
    std::istringstream ss(eval_spec);
    while (std::getline(ss, item, ',')) {
        size_t eq = item.find('=');
        if (eq == std::string::npos)
            throw ConfigError("--eval: expected name=value, got '" + item + "'");
        std::string name = item.substr(0, eq);
        if (name.size() < 2 || name[0] != 'd')
            throw ConfigError("--eval: unknown variable '" + name + "' (expected d0..d" +
                              std::to_string(p) + ")");
        int idx = -1;
        try {
            idx = std::stoi(name.substr(1));
        } catch (const std::exception&) {
        }
        if (idx < 0 || idx > p)
            throw ConfigError("--eval: unknown variable '" + name + "' (expected d0..d" +
                              std::to_string(p) + ")");
        if (seen[idx])
            throw ConfigError("--eval: duplicate assignment for '" + name + "'");
        seen[idx] = true;
        subst[idx] = eval_value(item.substr(eq + 1), symbols);
    }
    for (int i = 0; i <= p; ++i)
        if (!seen[i])
            throw ConfigError("--eval: missing assignment for 'd" + std::to_string(i) + "'");
    Poly result = poly.subst(subst);
    return result.str(symbols, "t");
}

std::string run_boxtimes(const std::vector<std::string>& ts, int k) {
    if (k < 1 || k > 10)
        throw ConfigError("boxtimes: --k must lie in 1..10");
    if (ts.empty())
        throw ConfigError("boxtimes: at least one --t is required");
    std::vector<Rational> acc;
    for (size_t i = 0; i < ts.size(); ++i) {
        Rational t;
        try {
            t = parse_rational(ts[i]);
        } catch (const std::exception& e) {
            throw ConfigError("boxtimes: bad --t '" + ts[i] + "': " + e.what());
        }
        if (t <= 0)
            throw ConfigError("boxtimes: --t must be positive");
        std::vector<Rational> mom;
        mom.emplace_back(1);
        for (int j = 1; j <= k; ++j)
            mom.push_back(mp_moment(j, t));
        acc = (i == 0) ? std::move(mom) : boxtimes_moments<Rational>(acc, mom, k);
    }
    return to_string(acc[k]);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Laboratory for block Gaussian random matrices: Monte Carlo moments of "
                 "blocks under partial traces, exact pairing values, operator-model limits, "
                 "and the matching combinatorial formulas."};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--config", g.config_path, "JSON experiment description")->check(CLI::ExistingFile);
    auto* seed_opt = app.add_option("--seed", g.seed, "Override the config seed");
    app.add_option("--out", g.out_path, "Write output to this file (default: stdout)");
    app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--threads", g.threads, "Monte Carlo worker threads")
        ->envname("MFREE_THREADS")
        ->check(CLI::PositiveNumber);

    auto* sim = app.add_subcommand("simulate", "Monte Carlo moment estimates only");
    auto* cmp = app.add_subcommand("compare",
                                   "Monte Carlo vs exact pairing value vs operator-model limit");
    auto* exa = app.add_subcommand("exact", "Operator-model limit of the configured word");

    auto* fn = app.add_subcommand("fuss-narayana", "Multivariate Fuss-Narayana polynomial P_k");
    int fn_k = 0, fn_p = 0;
    std::string fn_eval;
    fn->add_option("--k", fn_k, "Moment order")->required()->check(CLI::Range(1, 24));
    fn->add_option("--p", fn_p, "Number of factors")->required()->check(CLI::Range(1, 8));
    fn->add_option("--eval", fn_eval, "Comma-separated assignments d0=...,d1=... "
                                      "(rationals or indeterminate names)");

    auto* mx = app.add_subcommand("meixner", "Moment of the two-periodic Jacobi recurrence");
    std::string mx_a1 = "0", mx_a2 = "0", mx_b1 = "1", mx_b2 = "1";
    int mx_k = 0;
    mx->add_option("--a1", mx_a1, "First diagonal Jacobi parameter");
    mx->add_option("--a2", mx_a2, "Tail diagonal Jacobi parameter");
    mx->add_option("--b1", mx_b1, "First off-diagonal square (> 0)");
    mx->add_option("--b2", mx_b2, "Tail off-diagonal square (> 0)");
    mx->add_option("--k", mx_k, "Moment order")->required()->check(CLI::Range(0, 24));

    auto* bx = app.add_subcommand("boxtimes",
                                  "Moment of the free multiplicative convolution of "
                                  "Marchenko-Pastur laws");
    std::vector<std::string> bx_ts;
    int bx_k = 0;
    bx->add_option("--t", bx_ts, "Shape parameter of one factor (repeatable)")->required();
    bx->add_option("--k", bx_k, "Moment order")->required();

    auto* mp = app.add_subcommand("mp", "Moment of the Marchenko-Pastur law");
    std::string mp_t = "1";
    int mp_k = 0;
    mp->add_option("--t", mp_t, "Shape parameter (> 0)");
    mp->add_option("--k", mp_k, "Moment order")->required()->check(CLI::Range(1, 24));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    g.seed_set = seed_opt->count() > 0;

    try {
        if (sim->parsed()) {
            ExperimentConfig cfg = configured(g);
            emit_report(cfg, run_compare(cfg, g.threads, RunMode::simulate_only));
        } else if (cmp->parsed()) {
            ExperimentConfig cfg = configured(g);
            emit_report(cfg, run_compare(cfg, g.threads, RunMode::full));
        } else if (exa->parsed()) {
            ExperimentConfig cfg = configured(g);
            emit(g, to_string(exact_limit(cfg)) + "\n");
        } else if (fn->parsed()) {
            emit(g, run_fuss_narayana(fn_k, fn_p, fn_eval) + "\n");
        } else if (mx->parsed()) {
            JacobiParams jp;
            jp.alpha1 = parse_rational(mx_a1);
            jp.alpha2 = parse_rational(mx_a2);
            jp.beta1 = parse_rational(mx_b1);
            jp.beta2 = parse_rational(mx_b2);
            if (jp.beta1 <= 0 || jp.beta2 <= 0)
                throw ConfigError("meixner: --b1 and --b2 must be positive");
            emit(g, to_string(jacobi_moment(jp, mx_k)) + "\n");
        } else if (bx->parsed()) {
            emit(g, run_boxtimes(bx_ts, bx_k) + "\n");
        } else if (mp->parsed()) {
            Rational t = parse_rational(mp_t);
            if (t <= 0)
                throw ConfigError("mp: --t must be positive");
            emit(g, to_string(mp_moment(mp_k, t)) + "\n");
        }
    } catch (const WordParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 4;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const NumericError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
