#include "qnmc/hermitian_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qnmc {

namespace {

void require_hermitian(const ComplexMatrix& m, const Tolerances& tol) {
    if (auto bad = m.hermitian_violation(tol.hermitian)) {
        const auto [i, j] = *bad;
        std::ostringstream msg;
        msg << "matrix is not Hermitian within " << tol.hermitian << ": entries (" << i << "," << j
            << ") and (" << j << "," << i << ") differ by "
            << std::abs(m(i, j) - std::conj(m(j, i)));
        throw std::invalid_argument(msg.str());
    }
}

double off_diagonal_frobenius(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i + 1; j < a.dim(); ++j) s += std::norm(a(i, j));
    return std::sqrt(2.0 * s);
}

// Cyclic complex Jacobi. Each rotation zeroes one off-diagonal pair with the
// unitary U = P*R, where P = diag(1, e^{-i phi}) absorbs the pivot's phase and
// R is the classical real rotation for the resulting 2x2 symmetric block.
// Dimensions here are tiny (a few dozen), where Jacobi's robustness and
// simplicity beat faster factorizations.
struct JacobiResult {
    std::vector<double> values;  // unsorted, diag order
    ComplexMatrix vectors;       // accumulated unitary (identity if unused)
};

JacobiResult jacobi(ComplexMatrix a, bool want_vectors, const Tolerances& tol) {
    const std::size_t n = a.dim();
    ComplexMatrix v = want_vectors ? ComplexMatrix::identity(n) : ComplexMatrix(0);

    const double scale = std::sqrt(a.frobenius_sq());
    if (scale == 0.0 || n < 2) {
        std::vector<double> diag(n);
        for (std::size_t i = 0; i < n; ++i) diag[i] = a(i, i).real();
        return {std::move(diag), std::move(v)};
    }
    a *= 1.0 / scale;

    bool converged = false;
    for (int sweep = 0; sweep < tol.jacobi_max_sweeps; ++sweep) {
        if (off_diagonal_frobenius(a) < tol.jacobi_off_diag) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p < n - 1; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx beta = a(p, q);
                const double babs = std::abs(beta);
                if (babs == 0.0) continue;
                const cplx phase = beta / babs;  // e^{i phi}

                const double alpha = a(p, p).real();
                const double gamma = a(q, q).real();
                const double tau = (gamma - alpha) / (2.0 * babs);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cplx sp = s * std::conj(phase);  // s * e^{-i phi}
                const cplx cp = c * std::conj(phase);

                a(p, p) = alpha * c * c - 2.0 * babs * c * s + gamma * s * s;
                a(q, q) = alpha * s * s + 2.0 * babs * c * s + gamma * c * c;
                a(p, q) = 0.0;
                a(q, p) = 0.0;

                for (std::size_t k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const cplx akp = a(k, p);
                    const cplx akq = a(k, q);
                    a(k, p) = c * akp - sp * akq;
                    a(k, q) = s * akp + cp * akq;
                    a(p, k) = std::conj(a(k, p));
                    a(q, k) = std::conj(a(k, q));
                }
                if (want_vectors) {
                    for (std::size_t k = 0; k < n; ++k) {
                        const cplx vkp = v(k, p);
                        const cplx vkq = v(k, q);
                        v(k, p) = c * vkp - sp * vkq;
                        v(k, q) = s * vkp + cp * vkq;
                    }
                }
            }
        }
    }
    if (!converged && off_diagonal_frobenius(a) >= tol.jacobi_off_diag)
        throw std::runtime_error("Jacobi eigensolver failed to converge");

    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = a(i, i).real() * scale;
    return {std::move(values), std::move(v)};
}

}  // namespace

std::vector<double> eigenvalues_hermitian(const ComplexMatrix& m, const Tolerances& tol) {
    require_hermitian(m, tol);
    auto res = jacobi(m, /*want_vectors=*/false, tol);
    std::sort(res.values.begin(), res.values.end());
    return res.values;
}

EigenDecomposition eigen_hermitian(const ComplexMatrix& m, const Tolerances& tol) {
    require_hermitian(m, tol);
    auto res = jacobi(m, /*want_vectors=*/true, tol);

    const std::size_t n = m.dim();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return res.values[i] < res.values[j]; });

    EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = res.values[order[k]];
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = res.vectors(i, order[k]);
    }
    return out;
}

}  // namespace qnmc
