#pragma once

#include <vector>

#include "qnmc/complex_matrix.hpp"
#include "qnmc/tolerances.hpp"

namespace qnmc {

struct EigenDecomposition {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // column k pairs with values[k]
};

/// Eigenvalues of a Hermitian matrix, ascending. Throws std::invalid_argument
/// naming the offending entry pair when the input is not Hermitian within
/// tolerance.
std::vector<double> eigenvalues_hermitian(const ComplexMatrix& m, const Tolerances& tol = kTol);

/// Full spectral decomposition m = V diag(values) V^dag.
EigenDecomposition eigen_hermitian(const ComplexMatrix& m, const Tolerances& tol = kTol);

}  // namespace qnmc
