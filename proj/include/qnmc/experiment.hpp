#pragma once

#include <span>
#include <string>

#include "qnmc/classifier.hpp"
#include "qnmc/dataset.hpp"
#include "qnmc/metrics.hpp"

namespace qnmc {

enum class ClassifierKind { Nmc, Qnmc };

std::string_view to_string(ClassifierKind kind);
/// Accepts "nmc" / "qnmc" (case-insensitive).
std::optional<ClassifierKind> classifier_from_string(std::string_view name);

struct ExperimentConfig {
    EncodingKind encoding = EncodingKind::NormAugmented;
    SplitSpec split;
    std::vector<ClassifierKind> classifiers{ClassifierKind::Nmc, ClassifierKind::Qnmc};
    std::optional<RescaleGrid> rescale;
};

struct ClassifierReport {
    ClassifierKind classifier;
    EvaluationReport report;
};

/// All classifiers evaluated on one dataset at one rescale factor.
struct ExperimentResult {
    std::string dataset;
    EncodingKind encoding = EncodingKind::NormAugmented;
    double t = 1.0;
    std::vector<ClassifierReport> reports;

    const EvaluationReport* find(ClassifierKind kind) const;
};

/// The repeated-holdout protocol: for each run, split, train every selected
/// classifier on the same training fold (the quantum one on its encoded
/// image) and score the test fold. Runs use splits seeded by
/// (spec.seed, run index), so a result is a pure function of the config.
ExperimentResult run_experiment(const Dataset& dataset, const ExperimentConfig& config);

/// run_experiment at every t of the grid, with identical split partitions
/// across t so error differences are attributable to rescaling alone.
struct SweepResult {
    std::string dataset;
    EncodingKind encoding = EncodingKind::NormAugmented;
    std::vector<double> t_values;
    std::vector<ExperimentResult> cells;  // parallel to t_values
};

SweepResult run_sweep(const Dataset& dataset, const ExperimentConfig& config);

// --- result formatting -----------------------------------------------------

/// Aligned text table of summary indices (E, TPR, TNR, P, K as mean +- std),
/// one row per dataset x classifier.
std::string format_table(std::span<const ExperimentResult> results);
std::string format_sweep_table(const SweepResult& sweep);

/// Machine-readable rows, one per (dataset, classifier, run, t), schema:
/// dataset,classifier,encoding,run,t,E,TPR,TNR,FPR,FNR,P,K.
/// Doubles carry full precision so parsing reproduces them bit-exactly.
std::string format_csv(std::span<const ExperimentResult> results);
std::string format_sweep_csv(const SweepResult& sweep);

struct CsvRow {
    std::string dataset;
    std::string classifier;
    std::string encoding;
    int run = 0;
    double t = 1.0;
    ClassIndices indices;
};

std::vector<CsvRow> parse_results_csv(const std::string& text);

/// Writes the full string or throws with the path; never leaves partial
/// output behind.
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace qnmc
