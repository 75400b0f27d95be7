// Benchmark runner: encode -> train -> classify -> score over repeated
// random holdout splits, optionally swept over a feature-rescaling grid.
// Results go to --out (or stdout) as an aligned table or CSV; diagnostics
// go to stderr so the data stream stays machine-readable.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qnmc/experiment.hpp"
#include "qnmc/generators.hpp"
#include "qnmc/manifest.hpp"

namespace {

struct Options {
    std::string dataset_path;
    std::string generator;
    std::string manifest_path;
    std::int64_t label_column = -1;  // -1: last column
    bool header = false;
    std::string encoding = "norm-augmented";
    std::string classifiers = "nmc,qnmc";
    int runs = 10;
    double train_frac = 0.8;
    std::uint64_t seed = 1;
    double rescale_min = 0.0, rescale_max = 0.0, rescale_step = 0.0;
    bool rescale_set = false;
    std::string format = "table";
    std::string out_path;
    bool skip_missing = false;
};

std::vector<qnmc::ClassifierKind> parse_classifiers(const std::string& list) {
    std::vector<qnmc::ClassifierKind> kinds;
    std::istringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto kind = qnmc::classifier_from_string(item);
        if (!kind) throw std::runtime_error("unknown classifier \"" + item + "\"");
        if (std::find(kinds.begin(), kinds.end(), *kind) == kinds.end()) kinds.push_back(*kind);
    }
    if (kinds.empty()) throw std::runtime_error("select at least one classifier");
    return kinds;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nearest-mean benchmark: classical vs density-operator classifier"};
    Options opt;

    auto* dataset_opt = app.add_option("--dataset", opt.dataset_path, "CSV dataset to load");
    auto* generate_opt =
        app.add_option("--generate", opt.generator,
                       "Built-in generator: moon, banana, gaussian-1, gaussian-2, gaussian-3");
    auto* manifest_opt =
        app.add_option("--manifest", opt.manifest_path, "Run every dataset of a JSON manifest");
    dataset_opt->excludes(generate_opt)->excludes(manifest_opt);
    generate_opt->excludes(manifest_opt);

    app.add_option("--label-col", opt.label_column,
                   "0-based label column of --dataset (default: last)");
    app.add_flag("--header", opt.header, "--dataset file starts with a header line");
    app.add_option("--encoding", opt.encoding, "stereo2d, stereo-nd or norm-augmented")
        ->capture_default_str();
    app.add_option("--classifiers", opt.classifiers, "Comma list from {nmc, qnmc}")
        ->capture_default_str();
    app.add_option("--runs", opt.runs, "Number of random holdout repetitions")
        ->capture_default_str();
    app.add_option("--train-frac", opt.train_frac, "Training fraction in (0,1)")
        ->capture_default_str();
    app.add_option("--seed", opt.seed, "Base seed for splits and generators")
        ->capture_default_str();
    auto* rmin = app.add_option("--rescale-min", opt.rescale_min, "Sweep grid start");
    auto* rmax = app.add_option("--rescale-max", opt.rescale_max, "Sweep grid end (inclusive)");
    auto* rstep = app.add_option("--rescale-step", opt.rescale_step, "Sweep grid step");
    rmin->needs(rmax)->needs(rstep);
    rmax->needs(rmin);
    rstep->needs(rmin);
    app.add_option("--format", opt.format, "table or csv")->capture_default_str();
    app.add_option("--out", opt.out_path, "Write results to this file instead of stdout");
    app.add_flag("--skip-missing", opt.skip_missing,
                 "Skip manifest datasets whose file is absent instead of failing");

    CLI11_PARSE(app, argc, argv);

    try {
        if (opt.dataset_path.empty() && opt.generator.empty() && opt.manifest_path.empty())
            throw std::runtime_error("give one of --dataset, --generate or --manifest");
        if (opt.format != "table" && opt.format != "csv")
            throw std::runtime_error("--format must be table or csv");

        qnmc::ExperimentConfig config;
        const auto encoding = qnmc::encoding_from_string(opt.encoding);
        if (!encoding) throw std::runtime_error("unknown encoding \"" + opt.encoding + "\"");
        config.encoding = *encoding;
        config.classifiers = parse_classifiers(opt.classifiers);
        config.split.runs = opt.runs;
        config.split.train_fraction = opt.train_frac;
        config.split.seed = opt.seed;
        opt.rescale_set = rmin->count() > 0;
        if (opt.rescale_set)
            config.rescale = qnmc::RescaleGrid{opt.rescale_min, opt.rescale_max, opt.rescale_step};

        std::vector<qnmc::Dataset> datasets;
        if (!opt.manifest_path.empty()) {
            const std::filesystem::path manifest(opt.manifest_path);
            for (const auto& entry : qnmc::load_manifest(manifest)) {
                if (opt.skip_missing && entry.path &&
                    !std::filesystem::exists(manifest.parent_path() / *entry.path)) {
                    std::cerr << "skipping " << entry.name << " (" << *entry.path
                              << " absent)\n";
                    continue;
                }
                std::cerr << "loading " << entry.name << "\n";
                datasets.push_back(
                    qnmc::realize_dataset(entry, manifest.parent_path(), opt.seed));
            }
            if (datasets.empty()) throw std::runtime_error("no datasets available");
        } else if (!opt.generator.empty()) {
            auto ds = qnmc::generate_by_name(opt.generator, opt.seed);
            if (!ds) throw std::runtime_error("unknown generator \"" + opt.generator + "\"");
            datasets.push_back(std::move(*ds));
        } else {
            qnmc::CsvSchema schema;
            if (opt.label_column >= 0)
                schema.label_column = static_cast<std::size_t>(opt.label_column);
            schema.header = opt.header;
            datasets.push_back(qnmc::load_csv(opt.dataset_path, schema));
        }

        std::string output;
        if (opt.rescale_set) {
            std::string csv;
            for (std::size_t i = 0; i < datasets.size(); ++i) {
                std::cerr << "sweeping " << datasets[i].name << " over "
                          << config.rescale->values().size() << " grid points\n";
                const qnmc::SweepResult sweep = qnmc::run_sweep(datasets[i], config);
                if (opt.format == "table") {
                    output += qnmc::format_sweep_table(sweep);
                } else {
                    std::string rows = qnmc::format_sweep_csv(sweep);
                    if (i > 0) rows.erase(0, rows.find('\n') + 1);  // keep one header
                    csv += rows;
                }
            }
            if (opt.format == "csv") output = std::move(csv);
        } else {
            std::vector<qnmc::ExperimentResult> results;
            for (const auto& ds : datasets) {
                std::cerr << "evaluating " << ds.name << " (" << ds.patterns.size()
                          << " patterns, d=" << ds.d << ")\n";
                results.push_back(qnmc::run_experiment(ds, config));
            }
            output = opt.format == "table" ? qnmc::format_table(results)
                                           : qnmc::format_csv(results);
        }

        if (opt.out_path.empty())
            std::cout << output;
        else
            qnmc::write_text_file(opt.out_path, output);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
