#include "qnmc/generators.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qnmc/rng.hpp"

namespace qnmc {

namespace {

using Matrix = std::vector<std::vector<double>>;

// Lower-triangular Cholesky factor of a small SPD matrix.
Matrix cholesky(const Matrix& a) {
    const std::size_t n = a.size();
    Matrix l(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double s = a[i][j];
            for (std::size_t k = 0; k < j; ++k) s -= l[i][k] * l[j][k];
            if (i == j) {
                if (s <= 0.0) throw std::logic_error("covariance is not positive definite");
                l[i][i] = std::sqrt(s);
            } else {
                l[i][j] = s / l[j][j];
            }
        }
    }
    return l;
}

// Correlation rho on the leading `block` features, identity elsewhere.
Matrix block_correlation(std::size_t d, std::size_t block, double rho) {
    Matrix c(d, std::vector<double>(d, 0.0));
    for (std::size_t i = 0; i < d; ++i) c[i][i] = 1.0;
    for (std::size_t i = 0; i < block; ++i)
        for (std::size_t j = 0; j < block; ++j)
            if (i != j) c[i][j] = rho;
    return c;
}

void sample_class(std::vector<Pattern>& out, Rng& rng, std::size_t count, int label,
                  std::size_t d, double mean, double sigma, const Matrix* chol) {
    for (std::size_t n = 0; n < count; ++n) {
        std::vector<double> z(d);
        for (double& v : z) v = rng.next_gaussian();
        Pattern p;
        p.features.assign(d, 0.0);
        if (chol) {
            for (std::size_t i = 0; i < d; ++i) {
                double s = 0.0;
                for (std::size_t k = 0; k <= i; ++k) s += (*chol)[i][k] * z[k];
                p.features[i] = mean + sigma * s;
            }
        } else {
            for (std::size_t i = 0; i < d; ++i) p.features[i] = mean + sigma * z[i];
        }
        p.label = label;
        out.push_back(std::move(p));
    }
}

}  // namespace

Dataset gen_gaussian(GaussianFamily family, std::uint64_t seed) {
    Rng rng = Rng::stream(seed, 0x6a55);
    std::vector<Pattern> patterns;
    switch (family) {
        case GaussianFamily::I: {
            // Balanced classes, identical dispersion, correlation 0.5 on the
            // first 10 of 30 features, mean gap 0.35 on every feature.
            const Matrix chol = cholesky(block_correlation(30, 10, 0.5));
            sample_class(patterns, rng, 200, 1, 30, 0.0, 1.0, &chol);
            sample_class(patterns, rng, 200, 2, 30, 0.35, 1.0, &chol);
            return Dataset::make("gaussian-1", std::move(patterns));
        }
        case GaussianFamily::II: {
            // Heavily unbalanced, independent features, very different spread.
            sample_class(patterns, rng, 100, 1, 8, 0.0, 1.0, nullptr);
            sample_class(patterns, rng, 900, 2, 8, 1.5, 2.0, nullptr);
            return Dataset::make("gaussian-2", std::move(patterns));
        }
        case GaussianFamily::III: {
            // Three unbalanced classes, all features correlated, distinct
            // dispersions per class.
            const Matrix chol = cholesky(block_correlation(8, 8, 0.5));
            sample_class(patterns, rng, 50, 1, 8, 0.0, 0.8, &chol);
            sample_class(patterns, rng, 500, 2, 8, 1.0, 1.5, &chol);
            sample_class(patterns, rng, 1500, 3, 8, -1.0, 2.5, &chol);
            return Dataset::make("gaussian-3", std::move(patterns));
        }
    }
    throw std::invalid_argument("unknown Gaussian family");
}

Dataset gen_moon(std::size_t n_per_class, double noise, std::uint64_t seed) {
    if (n_per_class == 0) throw std::invalid_argument("moon needs a positive class size");
    Rng rng = Rng::stream(seed, 0x300d);
    std::vector<Pattern> patterns;
    patterns.reserve(2 * n_per_class);
    const double span = n_per_class > 1 ? std::numbers::pi / static_cast<double>(n_per_class - 1)
                                        : 0.0;
    for (std::size_t n = 0; n < n_per_class; ++n) {
        const double a = span * static_cast<double>(n);
        patterns.push_back({{std::cos(a) + noise * rng.next_gaussian(),
                             std::sin(a) + noise * rng.next_gaussian()},
                            1});
    }
    for (std::size_t n = 0; n < n_per_class; ++n) {
        const double a = span * static_cast<double>(n);
        patterns.push_back({{1.0 - std::cos(a) + noise * rng.next_gaussian(),
                             0.5 - std::sin(a) + noise * rng.next_gaussian()},
                            2});
    }
    return Dataset::make("moon", std::move(patterns));
}

Dataset gen_banana(std::size_t n_total, std::uint64_t seed) {
    if (n_total < 2) throw std::invalid_argument("banana needs at least two patterns");
    Rng rng = Rng::stream(seed, 0xba4a);
    // Class sizes follow the 2376:2924 proportion of the classic benchmark.
    const auto n1 = static_cast<std::size_t>(
        std::floor(static_cast<double>(n_total) * 2376.0 / 5300.0 + 0.5));
    const std::size_t n2 = n_total - n1;

    constexpr double kArc = 0.8 * std::numbers::pi;  // open ring, banana-shaped
    constexpr double kSigma = 0.5;
    std::vector<Pattern> patterns;
    patterns.reserve(n_total);
    auto arc_cluster = [&](std::size_t count, double radius, int label) {
        for (std::size_t n = 0; n < count; ++n) {
            const double a = (2.0 * rng.next_double() - 1.0) * kArc;
            patterns.push_back({{radius * std::cos(a) + kSigma * rng.next_gaussian(),
                                 radius * std::sin(a) + kSigma * rng.next_gaussian()},
                                label});
        }
    };
    arc_cluster(n1, 1.0, 1);
    arc_cluster(n2, 2.0, 2);
    return Dataset::make("banana", std::move(patterns));
}

std::optional<Dataset> generate_by_name(std::string_view name, std::uint64_t seed) {
    if (name == "moon") return gen_moon(100, 0.15, seed);
    if (name == "banana") return gen_banana(5300, seed);
    if (name == "gaussian-1") return gen_gaussian(GaussianFamily::I, seed);
    if (name == "gaussian-2") return gen_gaussian(GaussianFamily::II, seed);
    if (name == "gaussian-3") return gen_gaussian(GaussianFamily::III, seed);
    return std::nullopt;
}

}  // namespace qnmc
