#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace qnmc {

using cplx = std::complex<double>;

/// Dense square complex matrix, row-major storage. Small dimensions only:
/// this library works with states of dimension d+1 where d is the feature
/// count of a dataset.
class ComplexMatrix {
public:
    explicit ComplexMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {}

    static ComplexMatrix identity(std::size_t dim);
    /// v * v^dag for a complex vector v.
    static ComplexMatrix outer(std::span<const cplx> v);
    /// v * v^T for a real vector v (embedded as a complex matrix).
    static ComplexMatrix outer(std::span<const double> v);

    std::size_t dim() const { return dim_; }

    cplx& operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(double s);
    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, double s) { return a *= s; }

    ComplexMatrix multiply(const ComplexMatrix& rhs) const;
    ComplexMatrix adjoint() const;

    cplx trace() const;
    /// Sum of |a_ij|^2 over all entries (squared Frobenius norm).
    double frobenius_sq() const;
    /// Largest |a_ij| over all entries.
    double max_abs() const;

    /// Index pair of the worst Hermitian-symmetry violation, if it exceeds
    /// `tolerance`. Empty when the matrix is Hermitian within tolerance.
    std::optional<std::pair<std::size_t, std::size_t>> hermitian_violation(double tolerance) const;

private:
    std::size_t dim_;
    std::vector<cplx> a_;
};

/// max_ij |a_ij - b_ij|; dimensions must match.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qnmc
