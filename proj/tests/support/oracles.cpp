#include "support/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace qnmc::testing {

std::vector<double> singular_values(RealMatrix a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    bool rotated = true;
    for (int sweep = 0; sweep < 100 && rotated; ++sweep) {
        rotated = false;
        for (std::size_t p = 0; p + 1 < cols; ++p) {
            for (std::size_t q = p + 1; q < cols; ++q) {
                double app = 0.0, aqq = 0.0, apq = 0.0;
                for (std::size_t k = 0; k < rows; ++k) {
                    app += a[k][p] * a[k][p];
                    aqq += a[k][q] * a[k][q];
                    apq += a[k][p] * a[k][q];
                }
                if (std::abs(apq) <= 1e-15 * std::sqrt(app * aqq)) continue;
                rotated = true;
                const double theta = 0.5 * std::atan2(2.0 * apq, app - aqq);
                const double c = std::cos(theta), s = std::sin(theta);
                for (std::size_t k = 0; k < rows; ++k) {
                    const double kp = a[k][p], kq = a[k][q];
                    a[k][p] = c * kp + s * kq;
                    a[k][q] = -s * kp + c * kq;
                }
            }
        }
    }
    std::vector<double> sv(cols);
    for (std::size_t j = 0; j < cols; ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k < rows; ++k) s += a[k][j] * a[k][j];
        sv[j] = std::sqrt(s);
    }
    std::sort(sv.rbegin(), sv.rend());
    return sv;
}

RealMatrix real_embedding(const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    RealMatrix e(2 * n, std::vector<double>(2 * n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            e[i][j] = a(i, j).real();
            e[i][j + n] = -a(i, j).imag();
            e[i + n][j] = a(i, j).imag();
            e[i + n][j + n] = a(i, j).real();
        }
    return e;
}

double trace_distance_oracle(const DensityMatrix& a, const DensityMatrix& b) {
    const auto sv = singular_values(real_embedding(a.matrix() - b.matrix()));
    double sum = 0.0;
    for (double s : sv) sum += s;
    return 0.25 * sum;  // each singular value of the difference appears twice
}

int classify_qnmc_bruteforce(std::span<const DensityPattern> training,
                             const DensityMatrix& query) {
    if (training.empty()) throw std::invalid_argument("empty training set");
    const std::size_t dim = query.dim();

    std::map<int, std::pair<ComplexMatrix, std::size_t>> sums;
    for (const DensityPattern& p : training) {
        auto it = sums.try_emplace(p.label, ComplexMatrix(dim), 0).first;
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) it->second.first(i, j) += p.state(i, j);
        ++it->second.second;
    }

    int best_label = 0;
    double best = -1.0;
    for (auto& [label, sum_count] : sums) {
        ComplexMatrix centroid = sum_count.first;
        centroid *= 1.0 / static_cast<double>(sum_count.second);
        auto sv = singular_values(real_embedding(query.matrix() - centroid));
        double d = 0.0;
        for (double s : sv) d += s;
        d *= 0.25;
        if (best < 0.0 || d < best) {
            best = d;
            best_label = label;
        }
    }
    return best_label;
}

ComplexMatrix random_hermitian(Rng& rng, std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 2.0 * rng.next_double() - 1.0;
        for (std::size_t j = i + 1; j < dim; ++j) {
            const cplx z(2.0 * rng.next_double() - 1.0, 2.0 * rng.next_double() - 1.0);
            m(i, j) = z;
            m(j, i) = std::conj(z);
        }
    }
    return m;
}

namespace {

std::vector<cplx> random_unit_vector(Rng& rng, std::size_t dim) {
    std::vector<cplx> v(dim);
    double norm_sq = 0.0;
    for (auto& z : v) {
        z = cplx(rng.next_gaussian(), rng.next_gaussian());
        norm_sq += std::norm(z);
    }
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (auto& z : v) z *= inv;
    return v;
}

}  // namespace

DensityMatrix random_density(Rng& rng, std::size_t dim) {
    // Convex mixture of dim random pure states: PSD and unit trace by
    // construction.
    std::vector<double> weights(dim);
    double total = 0.0;
    for (double& w : weights) {
        w = rng.next_double() + 1e-3;
        total += w;
    }
    ComplexMatrix m(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        const auto v = random_unit_vector(rng, dim);
        const double w = weights[k] / total;
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) m(i, j) += w * v[i] * std::conj(v[j]);
    }
    return DensityMatrix::validated(std::move(m));
}

ComplexMatrix random_unitary(Rng& rng, std::size_t dim) {
    auto householder = [&](const std::vector<cplx>& w) {
        ComplexMatrix h = ComplexMatrix::identity(dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) h(i, j) -= 2.0 * w[i] * std::conj(w[j]);
        return h;
    };
    ComplexMatrix u = householder(random_unit_vector(rng, dim))
                          .multiply(householder(random_unit_vector(rng, dim)));
    const double phase = 2.0 * 3.14159265358979323846 * rng.next_double();
    ComplexMatrix p = ComplexMatrix::identity(dim);
    p(0, 0) = cplx(std::cos(phase), std::sin(phase));
    return u.multiply(p);
}

}  // namespace qnmc::testing
