#include "qnmc/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qnmc/rng.hpp"

namespace qnmc {

Dataset Dataset::make(std::string name, std::vector<Pattern> patterns,
                      std::vector<std::string> label_names) {
    Dataset ds;
    ds.name = std::move(name);
    if (!patterns.empty()) {
        ds.d = patterns.front().features.size();
        if (ds.d == 0) throw std::invalid_argument("patterns need at least one feature");
        for (std::size_t i = 0; i < patterns.size(); ++i) {
            if (patterns[i].features.size() != ds.d) {
                std::ostringstream msg;
                msg << "pattern " << i << " has " << patterns[i].features.size()
                    << " features, expected " << ds.d;
                throw std::invalid_argument(msg.str());
            }
            for (double v : patterns[i].features)
                if (!std::isfinite(v)) {
                    std::ostringstream msg;
                    msg << "pattern " << i << " has a non-finite feature";
                    throw std::invalid_argument(msg.str());
                }
            ++ds.class_counts[patterns[i].label];
        }
    }
    ds.patterns = std::move(patterns);
    ds.label_names = std::move(label_names);
    return ds;
}

std::vector<double> RescaleGrid::values() const {
    if (step <= 0.0) throw std::invalid_argument("rescale grid step must be positive");
    if (t_max < t_min) throw std::invalid_argument("rescale grid has t_max < t_min");
    std::vector<double> out;
    // Index construction keeps membership stable against rounding drift; the
    // half-step slack admits t_max itself.
    const auto count = static_cast<std::size_t>(std::floor((t_max - t_min) / step + 0.5)) + 1;
    for (std::size_t k = 0; k < count; ++k) {
        const double t = t_min + static_cast<double>(k) * step;
        if (t > t_max + step / 2.0) break;
        out.push_back(t);
    }
    return out;
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) {
        // trim surrounding blanks
        const auto b = field.find_first_not_of(" \t\r");
        const auto e = field.find_last_not_of(" \t\r");
        fields.push_back(b == std::string::npos ? "" : field.substr(b, e - b + 1));
    }
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

}  // namespace

Dataset load_csv(const std::filesystem::path& path, const CsvSchema& schema) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());

    std::vector<Pattern> patterns;
    std::vector<std::string> label_names;
    std::map<std::string, int> label_ids;

    std::string line;
    std::size_t line_no = 0;
    std::optional<std::size_t> width;
    while (std::getline(in, line)) {
        ++line_no;
        if (line_no == 1 && schema.header) continue;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto fields = split_fields(line);

        if (!width) {
            width = fields.size();
            if (*width < 2) {
                std::ostringstream msg;
                msg << path.filename().string() << " line " << line_no
                    << ": need at least one feature and a label";
                throw std::runtime_error(msg.str());
            }
        } else if (fields.size() != *width) {
            std::ostringstream msg;
            msg << path.filename().string() << " line " << line_no << ": ragged row, got "
                << fields.size() << " columns, expected " << *width;
            throw std::runtime_error(msg.str());
        }
        const std::size_t label_col = schema.label_column.value_or(*width - 1);
        if (label_col >= *width) {
            std::ostringstream msg;
            msg << "label column " << label_col << " out of range for " << *width << " columns";
            throw std::runtime_error(msg.str());
        }

        Pattern p;
        p.features.reserve(*width - 1);
        for (std::size_t c = 0; c < *width; ++c) {
            if (c == label_col) continue;
            const std::string& cell = fields[c];
            std::size_t used = 0;
            double v = 0.0;
            bool ok = !cell.empty();
            if (ok) {
                try {
                    v = std::stod(cell, &used);
                } catch (const std::exception&) {
                    ok = false;
                }
            }
            if (!ok || used != cell.size() || !std::isfinite(v)) {
                std::ostringstream msg;
                msg << path.filename().string() << " line " << line_no << " column " << (c + 1)
                    << ": not a numeric feature: \"" << cell << "\"";
                throw std::runtime_error(msg.str());
            }
            p.features.push_back(v);
        }

        const std::string& label_text = fields[label_col];
        if (!schema.label_alphabet.empty() &&
            std::find(schema.label_alphabet.begin(), schema.label_alphabet.end(), label_text) ==
                schema.label_alphabet.end()) {
            std::ostringstream msg;
            msg << path.filename().string() << " line " << line_no << ": unknown label \""
                << label_text << "\"";
            throw std::runtime_error(msg.str());
        }
        const auto [it, inserted] =
            label_ids.try_emplace(label_text, static_cast<int>(label_ids.size()) + 1);
        if (inserted) label_names.push_back(label_text);
        p.label = it->second;

        patterns.push_back(std::move(p));
    }
    if (patterns.empty()) throw std::runtime_error(path.string() + " holds no data rows");
    return Dataset::make(path.stem().string(), std::move(patterns), std::move(label_names));
}

std::vector<std::size_t> split_permutation(std::size_t n, const SplitSpec& spec, int run_index) {
    if (run_index < 0 || run_index >= spec.runs)
        throw std::invalid_argument("run index outside the configured number of runs");
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    Rng rng = Rng::stream(spec.seed, static_cast<std::uint64_t>(run_index));
    rng.shuffle(order);
    return order;
}

std::size_t train_count(std::size_t n, const SplitSpec& spec) {
    if (spec.train_fraction <= 0.0 || spec.train_fraction >= 1.0)
        throw std::invalid_argument("train fraction must lie in (0, 1)");
    const auto n_train =
        static_cast<std::size_t>(std::floor(spec.train_fraction * static_cast<double>(n)));
    if (n_train == 0 || n_train == n) {
        std::ostringstream msg;
        msg << "split of " << n << " patterns at fraction " << spec.train_fraction
            << " leaves an empty fold";
        throw std::invalid_argument(msg.str());
    }
    return n_train;
}

std::pair<Dataset, Dataset> split(const Dataset& dataset, const SplitSpec& spec, int run_index) {
    const std::size_t n = dataset.patterns.size();
    const std::size_t n_train = train_count(n, spec);
    const std::vector<std::size_t> order = split_permutation(n, spec, run_index);

    std::vector<Pattern> train, test;
    train.reserve(n_train);
    test.reserve(n - n_train);
    for (std::size_t i = 0; i < n; ++i)
        (i < n_train ? train : test).push_back(dataset.patterns[order[i]]);

    return {Dataset::make(dataset.name, std::move(train), dataset.label_names),
            Dataset::make(dataset.name, std::move(test), dataset.label_names)};
}

Dataset rescale(const Dataset& dataset, double t) {
    if (!std::isfinite(t)) throw std::invalid_argument("rescale factor must be finite");
    Dataset out = dataset;
    for (Pattern& p : out.patterns)
        for (double& v : p.features) v *= t;
    return out;
}

}  // namespace qnmc
