#pragma once

#include <span>

#include "qnmc/complex_matrix.hpp"
#include "qnmc/tolerances.hpp"

namespace qnmc {

/// A quantum state: Hermitian, unit-trace, positive-semidefinite matrix.
/// Immutable once constructed; both factories enforce the invariants.
class DensityMatrix {
public:
    /// Full validation: Hermitian and unit-trace within tolerance, and every
    /// eigenvalue >= -tol.psd. Eigenvalues in [-tol.psd, 0) are accepted (they
    /// occur when averaging many rank-1 states) but the entries are stored
    /// exactly as given.
    static DensityMatrix validated(ComplexMatrix m, const Tolerances& tol = kTol);

    /// Rank-1 state v v^dag from a unit vector; cheap (no eigensolve), the
    /// invariants hold by construction. Throws when v is not normalized.
    static DensityMatrix pure(std::span<const double> v, const Tolerances& tol = kTol);
    static DensityMatrix pure(std::span<const cplx> v, const Tolerances& tol = kTol);

    std::size_t dim() const { return m_.dim(); }
    const ComplexMatrix& matrix() const { return m_; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

private:
    explicit DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {}
    ComplexMatrix m_;
};

/// d_T(a, b) = 1/2 sum |lambda_i| over eigenvalues of (a - b); a metric on
/// density matrices with values in [0, 1]. Throws on dimension mismatch.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

/// Tr(rho^2), in (0, 1]; equals 1 exactly for pure states.
double purity(const DensityMatrix& a);

}  // namespace qnmc
