#include "qnmc/density_matrix.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qnmc/hermitian_eigen.hpp"

namespace qnmc {

namespace {

void require_unit_trace(const ComplexMatrix& m, const Tolerances& tol) {
    const cplx tr = m.trace();
    if (std::abs(tr - cplx{1.0}) > tol.unit_trace) {
        std::ostringstream msg;
        msg << "state trace is " << tr.real() << ", expected 1 within " << tol.unit_trace;
        throw std::invalid_argument(msg.str());
    }
}

void require_unit_norm(double norm_sq, const Tolerances& tol) {
    // |v|^2 is the trace of v v^dag, so reuse the trace tolerance.
    if (std::abs(norm_sq - 1.0) > tol.unit_trace) {
        std::ostringstream msg;
        msg << "pure state requires a unit vector, |v|^2 = " << norm_sq;
        throw std::invalid_argument(msg.str());
    }
}

}  // namespace

DensityMatrix DensityMatrix::validated(ComplexMatrix m, const Tolerances& tol) {
    if (auto bad = m.hermitian_violation(tol.hermitian)) {
        const auto [i, j] = *bad;
        std::ostringstream msg;
        msg << "state is not Hermitian within " << tol.hermitian << ": entries (" << i << "," << j
            << ") and (" << j << "," << i << ")";
        throw std::invalid_argument(msg.str());
    }
    require_unit_trace(m, tol);
    const auto evs = eigenvalues_hermitian(m, tol);
    if (!evs.empty() && evs.front() < -tol.psd) {
        std::ostringstream msg;
        msg << "state is not positive semidefinite: smallest eigenvalue " << evs.front();
        throw std::invalid_argument(msg.str());
    }
    return DensityMatrix(std::move(m));
}

// The rank-1 factories skip the eigensolve: v v^dag is PSD by construction.
DensityMatrix DensityMatrix::pure(std::span<const double> v, const Tolerances& tol) {
    double norm_sq = 0.0;
    for (double x : v) norm_sq += x * x;
    require_unit_norm(norm_sq, tol);
    return DensityMatrix(ComplexMatrix::outer(v));
}

DensityMatrix DensityMatrix::pure(std::span<const cplx> v, const Tolerances& tol) {
    double norm_sq = 0.0;
    for (const auto& z : v) norm_sq += std::norm(z);
    require_unit_norm(norm_sq, tol);
    return DensityMatrix(ComplexMatrix::outer(v));
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
    if (a.dim() != b.dim()) {
        std::ostringstream msg;
        msg << "trace distance requires equal dimensions, got " << a.dim() << " and " << b.dim();
        throw std::invalid_argument(msg.str());
    }
    ComplexMatrix diff = a.matrix() - b.matrix();
    // Orient the difference by its first nonzero entry. The spectrum's
    // absolute values are unaffected, but both argument orders now push the
    // bit-identical matrix through the eigensolver, making the distance
    // exactly symmetric.
    for (std::size_t i = 0; i < diff.dim(); ++i) {
        bool decided = false;
        for (std::size_t j = 0; j < diff.dim(); ++j) {
            const cplx z = diff(i, j);
            if (z.real() != 0.0 || z.imag() != 0.0) {
                const double lead = z.real() != 0.0 ? z.real() : z.imag();
                if (lead < 0.0) diff *= -1.0;
                decided = true;
                break;
            }
        }
        if (decided) break;
    }
    const auto evs = eigenvalues_hermitian(diff);
    double sum = 0.0;
    for (double l : evs) sum += std::abs(l);
    const double d = 0.5 * sum;
    return d < 0.0 ? 0.0 : (d > 1.0 ? 1.0 : d);
}

double purity(const DensityMatrix& a) {
    // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
    return a.matrix().frobenius_sq();
}

}  // namespace qnmc
