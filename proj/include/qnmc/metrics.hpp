#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

namespace qnmc {

struct ClassCounts {
    long tp = 0;
    long tn = 0;
    long fp = 0;
    long fn = 0;
};

/// One-vs-rest confusion counts for every class of the label alphabet.
struct ConfusionCounts {
    std::map<int, ClassCounts> per_class;
    std::size_t test_size = 0;
};

ConfusionCounts confusion(std::span<const int> truth, std::span<const int> predicted,
                          const std::set<int>& classes);

/// Statistical indices of one class (or their weighted aggregate). An index
/// whose denominator vanishes is left empty and excluded from aggregation.
struct ClassIndices {
    std::optional<double> error;      // per class: 1 - TP/test_size (whole-fold denominator);
                                      // aggregate: plain misclassification rate
    std::optional<double> tpr;
    std::optional<double> tnr;
    std::optional<double> fpr;        // always 1 - TNR
    std::optional<double> fnr;        // always 1 - TPR
    std::optional<double> precision;
    std::optional<double> kappa;      // Cohen's K in [-1, 1]
};

ClassIndices class_indices(const ConfusionCounts& counts, int label);

/// Weighted aggregate over classes, weights proportional to per-class test
/// counts; classes with an undefined index are dropped and the weights
/// renormalized. The aggregate error is the plain misclassification rate
/// (identical to the TPR-weighted complement, since per-class test counts
/// are the weights), not the weighted mean of the per-class `error` field,
/// whose whole-fold denominator makes it a different quantity.
ClassIndices aggregate(const std::map<int, ClassIndices>& per_class,
                       const std::map<int, std::size_t>& test_class_sizes);

/// Everything scored on one train/test split.
struct RunScore {
    ConfusionCounts counts;
    std::map<int, ClassIndices> per_class;
    ClassIndices aggregate;
    std::vector<int> truth;      // test-fold labels, split order
    std::vector<int> predicted;  // classifier output, same order
};

RunScore score_run(std::vector<int> truth, std::vector<int> predicted,
                   const std::set<int>& classes);

/// Sample mean and sample (n-1) standard deviation of one index over runs;
/// n counts the runs where the index was defined.
struct IndexStats {
    std::optional<double> mean;
    std::optional<double> stddev;  // 0 when n == 1 (flagged by n itself)
    std::size_t n = 0;
};

struct ReportSummary {
    IndexStats error, tpr, tnr, fpr, fnr, precision, kappa;
    std::size_t runs = 0;
};

/// Repeated-holdout evaluation: per-run scores plus the mean/stddev summary
/// of the aggregate indices.
struct EvaluationReport {
    std::vector<RunScore> runs;
    ReportSummary summary;
};

EvaluationReport summarize_runs(std::vector<RunScore> runs);

}  // namespace qnmc
