#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace mfblocks {

// One word/size cell of a convergence study. The twelve serialized fields
// are identical between the CSV and JSON renderings; anything extra (per-row
// diagnostics, omitted-regime markers) travels in the report-level notes.
struct ReportRow {
    std::string word;
    int q = 1;
    int n = 0;
    long trials = 0;
    std::complex<double> mc_mean{0.0, 0.0};
    double mc_stderr = 0.0;
    std::optional<std::complex<double>> wick;  // exact finite-n value, when computed
    std::optional<std::complex<double>> limit; // infinite-n prediction, when available
    std::optional<double> abs_error;           // |mc_mean - limit|, when limit is set
};

struct ConvergenceReport {
    std::vector<ReportRow> rows;
    std::vector<std::string> notes;
};

extern const char* const kCsvHeader;

std::string render_csv(const ConvergenceReport& report);
ConvergenceReport parse_csv(const std::string& text);

std::string render_json(const ConvergenceReport& report);
ConvergenceReport parse_json(const std::string& text);

// Writes via a sibling temp file and rename, so readers never observe a
// partially written report.
void write_text_atomic(const std::string& path, const std::string& content);

} // namespace mfblocks
