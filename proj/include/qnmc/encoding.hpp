#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qnmc/density_matrix.hpp"

namespace qnmc {

/// One labeled feature vector. Labels are 1..L.
struct Pattern {
    std::vector<double> features;
    int label = 0;
};

/// A pattern encoded as a pure quantum state, keeping the label and the
/// original Euclidean norm alongside.
struct DensityPattern {
    DensityMatrix state;
    int label = 0;
    double source_norm = 0.0;
};

enum class EncodingKind {
    Stereo2D,         // 2 features onto the Bloch sphere, dim 2
    StereoProjector,  // inverse stereographic projection to a (d+1)-projector
    NormAugmented,    // norm-preserving unit vector of dim d+1 (the default)
};

std::string_view to_string(EncodingKind kind);
/// Accepts "stereo2d", "stereo-nd", "norm-augmented".
std::optional<EncodingKind> encoding_from_string(std::string_view name);

/// Domain errors of the encoders (zero-norm input, wrong arity).
class EncodingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Output dimension of an encoder for d input features.
std::size_t encoded_dim(std::size_t d, EncodingKind kind);

/// Bloch-sphere encoding of a 2-feature vector:
///   rho = 1/(|x|^2+1) [[|x|^2, x1 - i x2], [x1 + i x2, 1]].
DensityPattern encode_stereo_2d(std::span<const double> x, int label = 0);

/// Rank-1 projector of the inverse stereographic image
///   x' = 1/(|x|^2+1) [2 x1, ..., 2 xd, |x|^2 - 1],
/// defined for every finite x (the zero vector maps to a pole).
DensityPattern encode_stereo_projector(std::span<const double> x, int label = 0);

/// Norm-keeping encoding: the unit vector
///   [x1/(|x| sqrt(|x|^2+1)), ..., xd/(|x| sqrt(|x|^2+1)), |x|/sqrt(|x|^2+1)]
/// turned into its projector. Throws EncodingError for |x| = 0.
DensityPattern encode_norm_augmented(std::span<const double> x, int label = 0);

DensityPattern encode_pattern(const Pattern& p, EncodingKind kind);

/// Order-preserving elementwise encoding; validates a uniform feature count
/// once, then annotates any per-pattern error with the pattern index.
std::vector<DensityPattern> encode_dataset(std::span<const Pattern> patterns, EncodingKind kind);

}  // namespace qnmc
