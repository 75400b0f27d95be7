#pragma once

#include <cstdint>

#include "qnmc/dataset.hpp"

namespace qnmc {

/// Three multivariate-normal benchmark families with fixed, documented
/// parameters (means, dispersions, correlation structure).
enum class GaussianFamily {
    I,    // 400 (200+200), d=30, shared dispersion, first 10 features correlated
    II,   // 1000 (100+900), d=8, unequal dispersion, independent features
    III,  // 2050 (50+500+1500), d=8, three classes, all features correlated
};

Dataset gen_gaussian(GaussianFamily family, std::uint64_t seed);

/// Two interleaving half-circles with isotropic Gaussian jitter. With
/// noise = 0 the points sit exactly on the circles.
Dataset gen_moon(std::size_t n_per_class = 100, double noise = 0.15, std::uint64_t seed = 1);

/// Two curved clusters: arcs of radius 1 and 2 around a common center with
/// radial jitter, class sizes in the 2376:2924 ratio. The near-coincident
/// class means make the Euclidean rule close to chance here while the norm
/// structure stays informative.
Dataset gen_banana(std::size_t n_total = 5300, std::uint64_t seed = 1);

/// Resolves "moon", "banana", "gaussian-1|2|3" to a generated dataset.
std::optional<Dataset> generate_by_name(std::string_view name, std::uint64_t seed);

}  // namespace qnmc
