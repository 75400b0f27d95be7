#pragma once

// Independent reference implementations used only by tests. The trace
// distance here goes through a one-sided Jacobi SVD of the real embedding of
// the difference matrix, sharing no code with the complex eigensolver it
// cross-checks.

#include <cstddef>
#include <span>
#include <vector>

#include "qnmc/classifier.hpp"
#include "qnmc/complex_matrix.hpp"
#include "qnmc/density_matrix.hpp"
#include "qnmc/rng.hpp"

namespace qnmc::testing {

using RealMatrix = std::vector<std::vector<double>>;

/// Singular values (descending) via Hestenes one-sided Jacobi: rotate column
/// pairs until all columns are mutually orthogonal, then read off the norms.
std::vector<double> singular_values(RealMatrix a);

/// [[Re A, -Im A], [Im A, Re A]]; its singular values are A's, doubled.
RealMatrix real_embedding(const ComplexMatrix& a);

/// 1/2 Tr sqrt((a-b)^dag (a-b)) evaluated as a quarter of the embedded
/// difference's singular-value sum.
double trace_distance_oracle(const DensityMatrix& a, const DensityMatrix& b);

/// Exhaustive nearest-centroid classification with oracle distances and the
/// smallest-label tie rule; centroids averaged with plain loops.
int classify_qnmc_bruteforce(std::span<const DensityPattern> training,
                             const DensityMatrix& query);

ComplexMatrix random_hermitian(Rng& rng, std::size_t dim);
DensityMatrix random_density(Rng& rng, std::size_t dim);
/// Product of two Householder reflections (and a phase), exactly unitary up
/// to rounding.
ComplexMatrix random_unitary(Rng& rng, std::size_t dim);

}  // namespace qnmc::testing
