#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mfblocks/block_model.hpp"
#include "mfblocks/block_word.hpp"
#include "mfblocks/report.hpp"

namespace mfblocks {

// Failure classes aligned with the CLI exit codes: config errors exit 2,
// numerical failures exit 3, word-grammar errors exit 4.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct WordParseError : std::runtime_error {
    size_t offset;
    WordParseError(const std::string& msg, size_t at);
};

// Grammar: WORD := TERM (WS TERM)* ; TERM := ('S'|'T') '[' INT ',' INT ']'
// ( '(' LABEL ')' )? '*'? ; LABEL := [A-Za-z0-9_]+ (default "1"). Range
// checks against a concrete structure happen at bind time, not here.
std::vector<BlockTerm> parse_word_terms(const std::string& text);

struct ExperimentConfig {
    EnsembleKind kind = EnsembleKind::hermitian;
    BlockStructure structure; // normalized: sum d_q = 1
    CovarianceProfile profile;
    double evanescent_alpha = 0.5;
    uint64_t seed = 0;

    BlockWord word;
    std::vector<int> n_list;
    long trials = 0;

    std::string out_path; // empty = stdout
    std::string format = "csv";
};

// Parses the JSON experiment description:
//   { "ensemble":   { "kind", "r", "d", "V", "hermitian"?, "evanescent_alpha"?, "seed"? },
//     "experiment": { "word", "q", "n_list"?, "trials"? },
//     "output":     { "path"?, "format"? } }
// Rationals are strings "p/q", decimal strings, or integers. Every label
// used by the word must have a matrix in V.
ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::string& path);

enum class RunMode {
    simulate_only, // Monte Carlo columns only
    full           // Monte Carlo + exact finite-n pairing value + limit
};

// One row per n in n_list. In full mode the limit column is always present;
// the exact pairing column appears when the word/size caps allow it, and
// rows whose sector has d_q = 0 get a limit_regime=omitted-case note (the
// limit value is still reported, but convergence is not asserted for such
// sectors). Per-n failures become notes and the remaining rows survive.
ConvergenceReport run_compare(const ExperimentConfig& cfg, int threads, RunMode mode = RunMode::full);

// Limit moment of the configured word (no finite-n work).
Rational exact_limit(const ExperimentConfig& cfg);

} // namespace mfblocks
