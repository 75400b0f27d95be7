#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "qnmc/experiment.hpp"

namespace qnmc {

namespace {

// Full-precision rendering so emitted CSV parses back bit-exactly.
std::string full(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string full_opt(const std::optional<double>& v) { return v ? full(*v) : "nan"; }

std::string mean_std(const IndexStats& st) {
    if (!st.mean) return "-";
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << *st.mean << " ± " << *st.stddev;
    return os.str();
}

void append_padded(std::string& out, const std::string& cell, std::size_t width) {
    out += cell;
    // the +- sign is a 2-byte UTF-8 character; pad by display width
    std::size_t display = cell.size();
    if (const auto pos = cell.find("±"); pos != std::string::npos) display -= 1;
    if (display < width) out.append(width - display, ' ');
}

constexpr std::string_view kCsvHeader = "dataset,classifier,encoding,run,t,E,TPR,TNR,FPR,FNR,P,K";

void append_csv_rows(std::string& out, const ExperimentResult& result) {
    for (const auto& [kind, report] : result.reports) {
        for (std::size_t run = 0; run < report.runs.size(); ++run) {
            const ClassIndices& ix = report.runs[run].aggregate;
            out += result.dataset;
            out += ',';
            out += to_string(kind);
            out += ',';
            out += to_string(result.encoding);
            out += ',';
            out += std::to_string(run);
            out += ',';
            out += full(result.t);
            for (const auto& v : {ix.error, ix.tpr, ix.tnr, ix.fpr, ix.fnr, ix.precision,
                                  ix.kappa}) {
                out += ',';
                out += full_opt(v);
            }
            out += '\n';
        }
    }
}

}  // namespace

std::string format_table(std::span<const ExperimentResult> results) {
    static constexpr std::size_t kw[] = {20, 11, 16, 6, 16, 16, 16, 16, 16};
    std::string out;
    const char* heads[] = {"Dataset", "Classifier", "Encoding", "Runs", "E",
                           "TPR",     "TNR",        "P",        "K"};
    for (std::size_t c = 0; c < 9; ++c) append_padded(out, heads[c], kw[c]);
    out += '\n';
    for (const ExperimentResult& r : results) {
        for (const auto& [kind, report] : r.reports) {
            append_padded(out, r.dataset, kw[0]);
            append_padded(out, std::string(to_string(kind)), kw[1]);
            append_padded(out, std::string(to_string(r.encoding)), kw[2]);
            append_padded(out, std::to_string(report.summary.runs), kw[3]);
            append_padded(out, mean_std(report.summary.error), kw[4]);
            append_padded(out, mean_std(report.summary.tpr), kw[5]);
            append_padded(out, mean_std(report.summary.tnr), kw[6]);
            append_padded(out, mean_std(report.summary.precision), kw[7]);
            append_padded(out, mean_std(report.summary.kappa), kw[8]);
            out += '\n';
        }
    }
    return out;
}

std::string format_sweep_table(const SweepResult& sweep) {
    static constexpr std::size_t kw[] = {20, 11, 10, 18};
    std::string out;
    const char* heads[] = {"Dataset", "Classifier", "t", "E"};
    for (std::size_t c = 0; c < 4; ++c) append_padded(out, heads[c], kw[c]);
    out += '\n';
    for (const ExperimentResult& cell : sweep.cells) {
        for (const auto& [kind, report] : cell.reports) {
            append_padded(out, sweep.dataset, kw[0]);
            append_padded(out, std::string(to_string(kind)), kw[1]);
            std::ostringstream ts;
            ts << std::fixed << std::setprecision(4) << cell.t;
            append_padded(out, ts.str(), kw[2]);
            append_padded(out, mean_std(report.summary.error), kw[3]);
            out += '\n';
        }
    }
    return out;
}

std::string format_csv(std::span<const ExperimentResult> results) {
    std::string out{kCsvHeader};
    out += '\n';
    for (const ExperimentResult& r : results) append_csv_rows(out, r);
    return out;
}

std::string format_sweep_csv(const SweepResult& sweep) {
    std::string out{kCsvHeader};
    out += '\n';
    for (const ExperimentResult& cell : sweep.cells) append_csv_rows(out, cell);
    return out;
}

namespace {

std::optional<double> parse_opt(const std::string& cell) {
    if (cell == "nan") return std::nullopt;
    return std::stod(cell);
}

}  // namespace

std::vector<CsvRow> parse_results_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty results CSV");
    if (line != kCsvHeader) throw std::runtime_error("unexpected results CSV header: " + line);

    std::vector<CsvRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (cells.size() != 12)
            throw std::runtime_error("results CSV row has " + std::to_string(cells.size()) +
                                     " fields, expected 12");
        CsvRow row;
        row.dataset = cells[0];
        row.classifier = cells[1];
        row.encoding = cells[2];
        row.run = std::stoi(cells[3]);
        row.t = std::stod(cells[4]);
        row.indices.error = parse_opt(cells[5]);
        row.indices.tpr = parse_opt(cells[6]);
        row.indices.tnr = parse_opt(cells[7]);
        row.indices.fpr = parse_opt(cells[8]);
        row.indices.fnr = parse_opt(cells[9]);
        row.indices.precision = parse_opt(cells[10]);
        row.indices.kappa = parse_opt(cells[11]);
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace qnmc
