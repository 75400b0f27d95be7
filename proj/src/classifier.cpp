#include "qnmc/classifier.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qnmc {

namespace {

void require_alphabet_covered(const std::map<int, std::size_t>& counts,
                              std::span<const int> alphabet) {
    for (int label : alphabet) {
        if (!counts.contains(label)) {
            std::ostringstream msg;
            msg << "class " << label << " has no training patterns; a centroid is undefined";
            throw std::invalid_argument(msg.str());
        }
    }
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

}  // namespace

ClassicalModel train_nmc(std::span<const Pattern> training, std::span<const int> alphabet) {
    if (training.empty()) throw std::invalid_argument("cannot train on an empty set");
    const std::size_t d = training.front().features.size();

    std::map<int, std::vector<double>> sums;
    std::map<int, std::size_t> counts;
    for (const Pattern& p : training) {
        if (p.features.size() != d)
            throw std::invalid_argument("training patterns have mixed feature counts");
        auto& sum = sums.try_emplace(p.label, std::vector<double>(d, 0.0)).first->second;
        for (std::size_t i = 0; i < d; ++i) sum[i] += p.features[i];
        ++counts[p.label];
    }
    require_alphabet_covered(counts, alphabet);

    ClassicalModel model;
    model.dim = d;
    for (auto& [label, sum] : sums) {
        for (double& v : sum) v /= static_cast<double>(counts[label]);
        model.centroids.emplace_back(label, std::move(sum));
    }
    return model;
}

int classify_nmc(const ClassicalModel& model, std::span<const double> x) {
    if (x.size() != model.dim) {
        std::ostringstream msg;
        msg << "pattern has " << x.size() << " features, model expects " << model.dim;
        throw std::invalid_argument(msg.str());
    }
    // Centroids are label-sorted and only a strictly smaller distance wins,
    // so ties resolve to the smallest label. Squared distances preserve the
    // Euclidean argmin.
    int best_label = model.centroids.front().first;
    double best = squared_distance(x, model.centroids.front().second);
    for (std::size_t k = 1; k < model.centroids.size(); ++k) {
        const double d = squared_distance(x, model.centroids[k].second);
        if (d < best) {
            best = d;
            best_label = model.centroids[k].first;
        }
    }
    return best_label;
}

QuantumModel train_qnmc(std::span<const DensityPattern> training, EncodingKind kind,
                        std::span<const int> alphabet) {
    if (training.empty()) throw std::invalid_argument("cannot train on an empty set");
    const std::size_t dim = training.front().state.dim();

    std::map<int, ComplexMatrix> sums;
    std::map<int, std::size_t> counts;
    for (const DensityPattern& p : training) {
        if (p.state.dim() != dim)
            throw std::invalid_argument("training states have mixed dimensions");
        auto it = sums.try_emplace(p.label, ComplexMatrix(dim)).first;
        it->second += p.state.matrix();
        ++counts[p.label];
    }
    require_alphabet_covered(counts, alphabet);

    QuantumModel model;
    model.dim = dim;
    model.encoding = kind;
    for (auto& [label, sum] : sums) {
        sum *= 1.0 / static_cast<double>(counts[label]);
        model.centroids.emplace_back(label, DensityMatrix::validated(std::move(sum)));
    }
    return model;
}

int classify_qnmc(const QuantumModel& model, const DensityMatrix& state) {
    if (state.dim() != model.dim) {
        std::ostringstream msg;
        msg << "state has dimension " << state.dim() << ", model expects " << model.dim;
        throw std::invalid_argument(msg.str());
    }
    int best_label = model.centroids.front().first;
    double best = trace_distance(state, model.centroids.front().second);
    for (std::size_t k = 1; k < model.centroids.size(); ++k) {
        const double d = trace_distance(state, model.centroids[k].second);
        if (d < best) {
            best = d;
            best_label = model.centroids[k].first;
        }
    }
    return best_label;
}

bool verify_centroid_inequality(std::span<const Pattern> training, EncodingKind kind) {
    const auto encoded = encode_dataset(training, kind);
    const QuantumModel quantum = train_qnmc(encoded, kind);
    const ClassicalModel classical = train_nmc(training);

    for (std::size_t k = 0; k < quantum.centroids.size(); ++k) {
        const auto& [label, rho] = quantum.centroids[k];
        const Pattern mean{classical.centroids[k].second, label};
        const DensityPattern encoded_mean = encode_pattern(mean, kind);
        if (max_abs_diff(rho.matrix(), encoded_mean.state.matrix()) > kTol.centroid_witness)
            return true;
    }
    return false;
}

}  // namespace qnmc
