#include "qnmc/complex_matrix.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qnmc {

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const cplx> v) {
    ComplexMatrix m(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * std::conj(v[j]);
    return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const double> v) {
    ComplexMatrix m(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * v[j];
    return m;
}

namespace {
void require_same_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        std::ostringstream msg;
        msg << what << " requires equal dimensions, got " << a << " and " << b;
        throw std::invalid_argument(msg.str());
    }
}
}  // namespace

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    require_same_dim(dim_, rhs.dim_, "matrix addition");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += rhs.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    require_same_dim(dim_, rhs.dim_, "matrix subtraction");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= rhs.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(double s) {
    for (auto& z : a_) z *= s;
    return *this;
}

ComplexMatrix ComplexMatrix::multiply(const ComplexMatrix& rhs) const {
    require_same_dim(dim_, rhs.dim_, "matrix product");
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t k = 0; k < dim_; ++k) {
            const cplx aik = (*this)(i, k);
            if (aik == cplx{}) continue;
            for (std::size_t j = 0; j < dim_; ++j) out(i, j) += aik * rhs(k, j);
        }
    return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) out(i, j) = std::conj((*this)(j, i));
    return out;
}

cplx ComplexMatrix::trace() const {
    cplx t{};
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_sq() const {
    double s = 0.0;
    for (const auto& z : a_) s += std::norm(z);
    return s;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& z : a_) m = std::max(m, std::abs(z));
    return m;
}

std::optional<std::pair<std::size_t, std::size_t>> ComplexMatrix::hermitian_violation(
    double tolerance) const {
    double worst = tolerance;
    std::optional<std::pair<std::size_t, std::size_t>> where;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i; j < dim_; ++j) {
            const double gap = std::abs((*this)(i, j) - std::conj((*this)(j, i)));
            if (gap > worst) {
                worst = gap;
                where = {i, j};
            }
        }
    return where;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a.dim(), b.dim(), "entrywise comparison");
    double m = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

}  // namespace qnmc
