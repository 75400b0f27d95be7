#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qnmc/encoding.hpp"

namespace qnmc {

/// A named collection of labeled patterns with a uniform feature count.
struct Dataset {
    std::string name;
    std::vector<Pattern> patterns;
    std::size_t d = 0;
    std::map<int, std::size_t> class_counts;
    std::vector<std::string> label_names;  // label_names[l-1] = source label text

    /// Builds the derived fields and validates uniform dimensionality.
    static Dataset make(std::string name, std::vector<Pattern> patterns,
                        std::vector<std::string> label_names = {});
};

/// Repeated-holdout protocol parameters. Each run's split is a deterministic
/// function of (seed, run index).
struct SplitSpec {
    double train_fraction = 0.8;
    int runs = 10;
    std::uint64_t seed = 1;
};

/// Inclusive arithmetic grid of rescaling factors, built by index so the
/// endpoints are hit exactly.
struct RescaleGrid {
    double t_min = 0.0;
    double t_max = 0.0;
    double step = 0.0;

    std::vector<double> values() const;
};

/// CSV column layout. The label column defaults to the last column; labels
/// (numeric or text) are remapped to 1..L in first-appearance order. When
/// `label_alphabet` is non-empty, any label outside it is an error.
struct CsvSchema {
    std::optional<std::size_t> label_column;
    bool header = false;
    std::vector<std::string> label_alphabet;
};

Dataset load_csv(const std::filesystem::path& path, const CsvSchema& schema = {});

/// The shuffled index order behind `split`: a permutation of 0..n-1 that
/// depends only on (n, spec.seed, run_index), never on feature values, so
/// rescaled copies of a dataset are partitioned identically.
std::vector<std::size_t> split_permutation(std::size_t n, const SplitSpec& spec, int run_index);

/// How many of the permuted patterns go to the training fold.
std::size_t train_count(std::size_t n, const SplitSpec& spec);

/// Random permutation seeded by (spec.seed, run_index), first
/// floor(train_fraction * N) patterns train, the rest test.
std::pair<Dataset, Dataset> split(const Dataset& dataset, const SplitSpec& spec, int run_index);

/// Every feature multiplied by t; labels and counts unchanged.
Dataset rescale(const Dataset& dataset, double t);

}  // namespace qnmc
