#include "qnmc/experiment.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace qnmc {

std::string_view to_string(ClassifierKind kind) {
    return kind == ClassifierKind::Nmc ? "NMC" : "QNMC";
}

std::optional<ClassifierKind> classifier_from_string(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "nmc") return ClassifierKind::Nmc;
    if (lower == "qnmc") return ClassifierKind::Qnmc;
    return std::nullopt;
}

const EvaluationReport* ExperimentResult::find(ClassifierKind kind) const {
    for (const auto& r : reports)
        if (r.classifier == kind) return &r.report;
    return nullptr;
}

ExperimentResult run_experiment(const Dataset& dataset, const ExperimentConfig& config) {
    if (config.classifiers.empty())
        throw std::invalid_argument("select at least one classifier");
    if (dataset.class_counts.size() < 2)
        throw std::invalid_argument(dataset.name + ": need at least two classes");

    std::set<int> classes;
    std::vector<int> alphabet;
    for (const auto& [label, count] : dataset.class_counts) {
        classes.insert(label);
        alphabet.push_back(label);
    }

    const bool want_nmc = std::find(config.classifiers.begin(), config.classifiers.end(),
                                    ClassifierKind::Nmc) != config.classifiers.end();
    const bool want_qnmc = std::find(config.classifiers.begin(), config.classifiers.end(),
                                     ClassifierKind::Qnmc) != config.classifiers.end();

    // Encoding the whole dataset up front keeps error messages tied to the
    // original row number and shares the work across runs.
    std::vector<DensityPattern> encoded;
    if (want_qnmc) encoded = encode_dataset(dataset.patterns, config.encoding);

    const std::size_t n = dataset.patterns.size();
    const std::size_t n_train = train_count(n, config.split);

    std::vector<RunScore> nmc_runs, qnmc_runs;
    for (int run = 0; run < config.split.runs; ++run) {
        const auto order = split_permutation(n, config.split, run);

        std::vector<int> truth;
        truth.reserve(n - n_train);
        for (std::size_t i = n_train; i < n; ++i)
            truth.push_back(dataset.patterns[order[i]].label);

        if (want_nmc) {
            std::vector<Pattern> train;
            train.reserve(n_train);
            for (std::size_t i = 0; i < n_train; ++i) train.push_back(dataset.patterns[order[i]]);
            const ClassicalModel model = train_nmc(train, alphabet);
            std::vector<int> predicted;
            predicted.reserve(n - n_train);
            for (std::size_t i = n_train; i < n; ++i)
                predicted.push_back(classify_nmc(model, dataset.patterns[order[i]].features));
            nmc_runs.push_back(score_run(truth, std::move(predicted), classes));
        }
        if (want_qnmc) {
            std::vector<DensityPattern> train;
            train.reserve(n_train);
            for (std::size_t i = 0; i < n_train; ++i) train.push_back(encoded[order[i]]);
            const QuantumModel model = train_qnmc(train, config.encoding, alphabet);
            std::vector<int> predicted;
            predicted.reserve(n - n_train);
            for (std::size_t i = n_train; i < n; ++i)
                predicted.push_back(classify_qnmc(model, encoded[order[i]].state));
            qnmc_runs.push_back(score_run(truth, std::move(predicted), classes));
        }
    }

    ExperimentResult result;
    result.dataset = dataset.name;
    result.encoding = config.encoding;
    result.t = 1.0;
    if (want_nmc)
        result.reports.push_back({ClassifierKind::Nmc, summarize_runs(std::move(nmc_runs))});
    if (want_qnmc)
        result.reports.push_back({ClassifierKind::Qnmc, summarize_runs(std::move(qnmc_runs))});
    return result;
}

SweepResult run_sweep(const Dataset& dataset, const ExperimentConfig& config) {
    if (!config.rescale) throw std::invalid_argument("sweep requires a rescale grid");
    const std::vector<double> ts = config.rescale->values();
    if (ts.empty()) throw std::invalid_argument("rescale grid is empty");

    SweepResult sweep;
    sweep.dataset = dataset.name;
    sweep.encoding = config.encoding;
    for (double t : ts) {
        // The split permutation depends only on (n, seed, run), so every t
        // sees the same partitions.
        ExperimentResult cell = run_experiment(rescale(dataset, t), config);
        cell.t = t;
        sweep.t_values.push_back(t);
        sweep.cells.push_back(std::move(cell));
    }
    return sweep;
}

}  // namespace qnmc
