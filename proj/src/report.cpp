#include "mfblocks/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace mfblocks {

const char* const kCsvHeader =
    "word,q,n,trials,mc_mean_re,mc_mean_im,mc_stderr,wick_re,wick_im,limit_re,limit_im,abs_error";

namespace {

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

// Splits one CSV record; only the quoted-field subset used by the renderer.
std::vector<std::string> csv_split(const std::string& line, size_t lineno) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    i += 2;
                    continue;
                }
                quoted = false;
                ++i;
            } else {
                cur += c;
                ++i;
            }
        } else if (c == '"' && cur.empty()) {
            quoted = true;
            ++i;
        } else if (c == ',') {
            fields.push_back(cur);
            cur.clear();
            ++i;
        } else {
            cur += c;
            ++i;
        }
    }
    if (quoted)
        throw std::runtime_error("csv line " + std::to_string(lineno) + ": unterminated quote");
    fields.push_back(cur);
    return fields;
}

double parse_field_double(const std::string& s, size_t lineno) {
    try {
        size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size())
            throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error("csv line " + std::to_string(lineno) + ": bad number '" + s + "'");
    }
}

} // namespace

std::string render_csv(const ConvergenceReport& report) {
    std::ostringstream out;
    out << kCsvHeader << '\n';
    for (const ReportRow& row : report.rows) {
        out << csv_quote(row.word) << ',' << row.q << ',' << row.n << ',' << row.trials << ','
            << fmt_double(row.mc_mean.real()) << ',' << fmt_double(row.mc_mean.imag()) << ','
            << fmt_double(row.mc_stderr) << ',';
        if (row.wick)
            out << fmt_double(row.wick->real()) << ',' << fmt_double(row.wick->imag());
        else
            out << ',';
        out << ',';
        if (row.limit)
            out << fmt_double(row.limit->real()) << ',' << fmt_double(row.limit->imag());
        else
            out << ',';
        out << ',';
        if (row.abs_error)
            out << fmt_double(*row.abs_error);
        out << '\n';
    }
    return out.str();
}

ConvergenceReport parse_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    size_t lineno = 0;
    ConvergenceReport report;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        if (!saw_header) {
            if (line != kCsvHeader)
                throw std::runtime_error("csv line 1: unexpected header");
            saw_header = true;
            continue;
        }
        auto f = csv_split(line, lineno);
        if (f.size() != 12)
            throw std::runtime_error("csv line " + std::to_string(lineno) + ": expected 12 fields, got " +
                                     std::to_string(f.size()));
        ReportRow row;
        row.word = f[0];
        row.q = static_cast<int>(parse_field_double(f[1], lineno));
        row.n = static_cast<int>(parse_field_double(f[2], lineno));
        row.trials = static_cast<long>(parse_field_double(f[3], lineno));
        row.mc_mean = {parse_field_double(f[4], lineno), parse_field_double(f[5], lineno)};
        row.mc_stderr = parse_field_double(f[6], lineno);
        if (!f[7].empty() || !f[8].empty())
            row.wick = std::complex<double>(parse_field_double(f[7], lineno), parse_field_double(f[8], lineno));
        if (!f[9].empty() || !f[10].empty())
            row.limit =
                std::complex<double>(parse_field_double(f[9], lineno), parse_field_double(f[10], lineno));
        if (!f[11].empty())
            row.abs_error = parse_field_double(f[11], lineno);
        report.rows.push_back(std::move(row));
    }
    if (!saw_header)
        throw std::runtime_error("csv: missing header");
    return report;
}

std::string render_json(const ConvergenceReport& report) {
    nlohmann::json doc;
    doc["rows"] = nlohmann::json::array();
    for (const ReportRow& row : report.rows) {
        nlohmann::json j;
        j["word"] = row.word;
        j["q"] = row.q;
        j["n"] = row.n;
        j["trials"] = row.trials;
        j["mc_mean_re"] = row.mc_mean.real();
        j["mc_mean_im"] = row.mc_mean.imag();
        j["mc_stderr"] = row.mc_stderr;
        j["wick_re"] = row.wick ? nlohmann::json(row.wick->real()) : nlohmann::json(nullptr);
        j["wick_im"] = row.wick ? nlohmann::json(row.wick->imag()) : nlohmann::json(nullptr);
        j["limit_re"] = row.limit ? nlohmann::json(row.limit->real()) : nlohmann::json(nullptr);
        j["limit_im"] = row.limit ? nlohmann::json(row.limit->imag()) : nlohmann::json(nullptr);
        j["abs_error"] = row.abs_error ? nlohmann::json(*row.abs_error) : nlohmann::json(nullptr);
        doc["rows"].push_back(std::move(j));
    }
    doc["notes"] = report.notes;
    return doc.dump(2) + "\n";
}

ConvergenceReport parse_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("json: ") + e.what());
    }
    ConvergenceReport report;
    for (const auto& j : doc.at("rows")) {
        ReportRow row;
        row.word = j.at("word").get<std::string>();
        row.q = j.at("q").get<int>();
        row.n = j.at("n").get<int>();
        row.trials = j.at("trials").get<long>();
        row.mc_mean = {j.at("mc_mean_re").get<double>(), j.at("mc_mean_im").get<double>()};
        row.mc_stderr = j.at("mc_stderr").get<double>();
        if (!j.at("wick_re").is_null())
            row.wick = std::complex<double>(j.at("wick_re").get<double>(), j.at("wick_im").get<double>());
        if (!j.at("limit_re").is_null())
            row.limit = std::complex<double>(j.at("limit_re").get<double>(), j.at("limit_im").get<double>());
        if (!j.at("abs_error").is_null())
            row.abs_error = j.at("abs_error").get<double>();
        report.rows.push_back(std::move(row));
    }
    if (doc.contains("notes"))
        for (const auto& s : doc.at("notes"))
            report.notes.push_back(s.get<std::string>());
    return report;
}

void write_text_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    fs::path target(path);
    if (target.has_parent_path())
        fs::create_directories(target.parent_path());
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << content;
        out.flush();
        if (!out)
            throw std::runtime_error("write failed for " + tmp.string());
    }
    fs::rename(tmp, target);
}

} // namespace mfblocks
