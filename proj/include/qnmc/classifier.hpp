#pragma once

#include <span>
#include <utility>
#include <vector>

#include "qnmc/encoding.hpp"

namespace qnmc {

/// Nearest-mean model: one Euclidean centroid per class, sorted by label.
struct ClassicalModel {
    std::vector<std::pair<int, std::vector<double>>> centroids;
    std::size_t dim = 0;
};

/// Quantum counterpart: one density-matrix centroid per class. The centroid
/// of a class is the plain average of its training states, which is mixed as
/// soon as the class holds two distinct patterns.
struct QuantumModel {
    std::vector<std::pair<int, DensityMatrix>> centroids;
    std::size_t dim = 0;
    EncodingKind encoding = EncodingKind::NormAugmented;
};

/// Per-class sample means. `alphabet`, when non-empty, is the full label set
/// the model must cover; a class with no training patterns is an error.
ClassicalModel train_nmc(std::span<const Pattern> training, std::span<const int> alphabet = {});

/// Label of the centroid nearest to x in Euclidean distance; exact ties go to
/// the smallest class label.
int classify_nmc(const ClassicalModel& model, std::span<const double> x);

QuantumModel train_qnmc(std::span<const DensityPattern> training,
                        EncodingKind kind = EncodingKind::NormAugmented,
                        std::span<const int> alphabet = {});

/// Label of the centroid nearest to `state` in trace distance; exact ties go
/// to the smallest class label.
int classify_qnmc(const QuantumModel& model, const DensityMatrix& state);

/// True when some class's quantum centroid differs (max-entry gap > 1e-6)
/// from the encoding of that class's classical centroid, the mixed-centroid
/// effect that separates the two classifiers. Diagnostic; encoding errors
/// (e.g. a zero-norm mean) propagate.
bool verify_centroid_inequality(std::span<const Pattern> training, EncodingKind kind);

}  // namespace qnmc
