#include "mfblocks/harness.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mfblocks/families.hpp"
#include "mfblocks/rmt_sim.hpp"

namespace mfblocks {

WordParseError::WordParseError(const std::string& msg, size_t at)
    : std::runtime_error(msg + " at byte " + std::to_string(at)), offset(at) {}

namespace {

bool label_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

int parse_int(const std::string& s, size_t& i) {
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        ++i;
    if (i == start)
        throw WordParseError("expected block index", start);
    if (i - start > 6)
        throw WordParseError("block index too long", start);
    return std::stoi(s.substr(start, i - start));
}

void expect(const std::string& s, size_t& i, char c) {
    if (i >= s.size() || s[i] != c)
        throw WordParseError(std::string("expected '") + c + "'", i);
    ++i;
}

} // namespace

std::vector<BlockTerm> parse_word_terms(const std::string& text) {
    std::vector<BlockTerm> terms;
    size_t i = 0;
    while (true) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
        if (i >= text.size())
            break;
        BlockTerm t;
        if (text[i] != 'S' && text[i] != 'T')
            throw WordParseError("expected 'S' or 'T'", i);
        t.symbol = text[i];
        ++i;
        expect(text, i, '[');
        t.p = parse_int(text, i);
        expect(text, i, ',');
        t.q = parse_int(text, i);
        expect(text, i, ']');
        if (i < text.size() && text[i] == '(') {
            ++i;
            size_t start = i;
            while (i < text.size() && label_char(text[i]))
                ++i;
            if (i == start)
                throw WordParseError("expected label", i);
            t.label = text.substr(start, i - start);
            expect(text, i, ')');
        }
        if (i < text.size() && text[i] == '*') {
            t.star = true;
            ++i;
        }
        if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
            throw WordParseError("expected space between terms", i);
        terms.push_back(std::move(t));
    }
    if (terms.empty())
        throw WordParseError("empty word", 0);
    return terms;
}

namespace {

using nlohmann::json;

Rational json_to_rational(const json& j, const std::string& where) {
    try {
        if (j.is_string())
            return parse_rational(j.get<std::string>());
        if (j.is_number_integer())
            return Rational(j.get<long long>());
        if (j.is_number_float()) {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.17g", j.get<double>());
            return parse_rational(buf);
        }
    } catch (const std::exception& e) {
        throw ConfigError(where + ": " + e.what());
    }
    throw ConfigError(where + ": expected a rational (string \"p/q\", decimal, or integer)");
}

const json& need(const json& j, const std::string& key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end())
        throw ConfigError(where + ": missing key '" + key + "'");
    return *it;
}

} // namespace

ExperimentConfig parse_config(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw ConfigError("config: top level must be an object");

    ExperimentConfig cfg;
    const json& ens = need(doc, "ensemble", "config");

    try {
        cfg.kind = kind_from_name(need(ens, "kind", "ensemble").get<std::string>());
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("ensemble.kind: ") + e.what());
    }

    int r = 0;
    if (!need(ens, "r", "ensemble").is_number_integer() ||
        (r = need(ens, "r", "ensemble").get<int>()) < 1)
        throw ConfigError("ensemble.r: expected a positive integer");

    const json& dj = need(ens, "d", "ensemble");
    if (!dj.is_array() || static_cast<int>(dj.size()) != r)
        throw ConfigError("ensemble.d: expected an array of length r");
    std::vector<Rational> d;
    for (size_t i = 0; i < dj.size(); ++i)
        d.push_back(json_to_rational(dj[i], "ensemble.d[" + std::to_string(i) + "]"));
    try {
        cfg.structure = BlockStructure(std::move(d), /*normalized=*/true);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("ensemble.d: ") + e.what());
    }

    const json& vj = need(ens, "V", "ensemble");
    if (!vj.is_object() || vj.empty())
        throw ConfigError("ensemble.V: expected an object mapping labels to r x r matrices");
    for (auto it = vj.begin(); it != vj.end(); ++it) {
        const json& mj = it.value();
        if (!mj.is_array() || static_cast<int>(mj.size()) != r)
            throw ConfigError("ensemble.V." + it.key() + ": expected r rows");
        std::vector<std::vector<Rational>> m;
        for (int p = 0; p < r; ++p) {
            if (!mj[p].is_array() || static_cast<int>(mj[p].size()) != r)
                throw ConfigError("ensemble.V." + it.key() + ": row " + std::to_string(p) +
                                  " must have r entries");
            std::vector<Rational> row;
            for (int q = 0; q < r; ++q)
                row.push_back(json_to_rational(mj[p][q], "ensemble.V." + it.key() + "[" +
                                                             std::to_string(p) + "][" + std::to_string(q) +
                                                             "]"));
            m.push_back(std::move(row));
        }
        cfg.profile.v[it.key()] = std::move(m);
    }
    cfg.profile.hermitian = ens.value("hermitian", cfg.kind == EnsembleKind::hermitian);
    try {
        cfg.profile.validate(r);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("ensemble.V: ") + e.what());
    }
    if (cfg.kind == EnsembleKind::hermitian && !cfg.profile.hermitian)
        throw ConfigError("ensemble: hermitian kind requires hermitian=true");

    cfg.evanescent_alpha = ens.value("evanescent_alpha", 0.5);
    if (!(cfg.evanescent_alpha > 0.0 && cfg.evanescent_alpha < 1.0))
        throw ConfigError("ensemble.evanescent_alpha: must lie in (0,1)");
    if (ens.contains("seed")) {
        if (!ens["seed"].is_number_integer())
            throw ConfigError("ensemble.seed: expected an integer");
        cfg.seed = ens["seed"].get<uint64_t>();
    }

    const json& exp = need(doc, "experiment", "config");
    const json& wj = need(exp, "word", "experiment");
    if (!wj.is_string())
        throw ConfigError("experiment.word: expected a string");
    cfg.word.terms = parse_word_terms(wj.get<std::string>());
    const json& qj = need(exp, "q", "experiment");
    if (!qj.is_number_integer())
        throw ConfigError("experiment.q: expected an integer");
    cfg.word.sector = qj.get<int>();
    try {
        validate_word(cfg.word, r);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("experiment.word: ") + e.what());
    }
    for (const BlockTerm& t : cfg.word.terms)
        if (!cfg.profile.v.count(t.label))
            throw ConfigError("experiment.word: label '" + t.label + "' has no matrix in ensemble.V");

    if (exp.contains("n_list")) {
        if (!exp["n_list"].is_array() || exp["n_list"].empty())
            throw ConfigError("experiment.n_list: expected a nonempty array");
        for (const json& nj : exp["n_list"]) {
            if (!nj.is_number_integer() || nj.get<int>() < 1 || nj.get<int>() > 1024)
                throw ConfigError("experiment.n_list: entries must be integers in 1..1024");
            cfg.n_list.push_back(nj.get<int>());
        }
    }
    if (exp.contains("trials")) {
        if (!exp["trials"].is_number_integer() || exp["trials"].get<long>() < 2)
            throw ConfigError("experiment.trials: expected an integer >= 2");
        cfg.trials = exp["trials"].get<long>();
    }

    if (doc.contains("output")) {
        const json& out = doc["output"];
        if (!out.is_object())
            throw ConfigError("output: expected an object");
        if (out.contains("path"))
            cfg.out_path = out["path"].get<std::string>();
        if (out.contains("format")) {
            cfg.format = out["format"].get<std::string>();
            if (cfg.format != "csv" && cfg.format != "json")
                throw ConfigError("output.format: expected \"csv\" or \"json\"");
        }
    }
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

Rational exact_limit(const ExperimentConfig& cfg) {
    try {
        return limit_moment(cfg.word, cfg.kind, cfg.structure, cfg.profile);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("limit evaluation: ") + e.what());
    }
}

ConvergenceReport run_compare(const ExperimentConfig& cfg, int threads, RunMode mode) {
    if (cfg.n_list.empty())
        throw ConfigError("experiment.n_list is required for simulation runs");
    if (cfg.trials < 2)
        throw ConfigError("experiment.trials must be >= 2 for simulation runs");
    if (threads < 1)
        throw ConfigError("threads must be >= 1");

    ConvergenceReport report;
    const std::string word_str = render_word(cfg.word);

    std::optional<Rational> limit;
    if (mode == RunMode::full) {
        limit = exact_limit(cfg);
        if (cfg.structure.dim(cfg.word.sector) == 0)
            report.notes.push_back("q=" + std::to_string(cfg.word.sector) +
                                   ": limit_regime=omitted-case (sector has d_q=0; the limit value is "
                                   "reported but finite-n convergence is not asserted)");
    }

    for (int n : cfg.n_list) {
        try {
            EnsembleSpec spec;
            spec.kind = cfg.kind;
            spec.dims = finite_partition(n, cfg.structure, cfg.evanescent_alpha);
            spec.profile = cfg.profile;
            spec.seed = cfg.seed;
            MomentEstimate est = estimate_moment(spec, cfg.word, cfg.trials, threads);
            if (!std::isfinite(est.mean.real()) || !std::isfinite(est.mean.imag()) ||
                !std::isfinite(est.std_error))
                throw NumericError("non-finite Monte Carlo estimate");

            ReportRow row;
            row.word = word_str;
            row.q = cfg.word.sector;
            row.n = n;
            row.trials = est.trials;
            row.mc_mean = est.mean;
            row.mc_stderr = est.std_error;
            if (mode == RunMode::full) {
                if (cfg.word.terms.size() <= 8 && spec.n() <= 16)
                    row.wick = std::complex<double>(to_double(exact_moment_wick(spec, cfg.word)), 0.0);
                row.limit = std::complex<double>(to_double(*limit), 0.0);
                row.abs_error = std::abs(est.mean - *row.limit);
            }
            report.rows.push_back(std::move(row));
        } catch (const std::exception& e) {
            report.notes.push_back("n=" + std::to_string(n) + ": error: " + e.what());
        }
    }
    if (report.rows.empty()) {
        std::string msg = "every requested size failed";
        for (const std::string& note : report.notes)
            msg += "; " + note;
        throw NumericError(msg);
    }
    return report;
}

} // namespace mfblocks
