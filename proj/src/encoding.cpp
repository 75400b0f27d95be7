#include "qnmc/encoding.hpp"

#include <cmath>
#include <sstream>

namespace qnmc {

std::string_view to_string(EncodingKind kind) {
    switch (kind) {
        case EncodingKind::Stereo2D: return "stereo2d";
        case EncodingKind::StereoProjector: return "stereo-nd";
        case EncodingKind::NormAugmented: return "norm-augmented";
    }
    return "?";
}

std::optional<EncodingKind> encoding_from_string(std::string_view name) {
    if (name == "stereo2d") return EncodingKind::Stereo2D;
    if (name == "stereo-nd") return EncodingKind::StereoProjector;
    if (name == "norm-augmented") return EncodingKind::NormAugmented;
    return std::nullopt;
}

std::size_t encoded_dim(std::size_t d, EncodingKind kind) {
    return kind == EncodingKind::Stereo2D ? 2 : d + 1;
}

namespace {

double norm_sq(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) {
        if (!std::isfinite(v)) throw EncodingError("feature vector contains a non-finite value");
        s += v * v;
    }
    return s;
}

}  // namespace

DensityPattern encode_stereo_2d(std::span<const double> x, int label) {
    if (x.size() != 2) {
        std::ostringstream msg;
        msg << "stereo2d encodes exactly 2 features, got " << x.size();
        throw EncodingError(msg.str());
    }
    const double n2 = norm_sq(x);
    ComplexMatrix m(2);
    const double w = 1.0 / (n2 + 1.0);
    m(0, 0) = w * n2;
    m(0, 1) = w * cplx(x[0], -x[1]);
    m(1, 0) = w * cplx(x[0], x[1]);
    m(1, 1) = w;
    return {DensityMatrix::validated(std::move(m)), label, std::sqrt(n2)};
}

DensityPattern encode_stereo_projector(std::span<const double> x, int label) {
    const double n2 = norm_sq(x);
    const double w = 1.0 / (n2 + 1.0);
    std::vector<double> image(x.size() + 1);
    for (std::size_t i = 0; i < x.size(); ++i) image[i] = w * 2.0 * x[i];
    image.back() = w * (n2 - 1.0);
    return {DensityMatrix::pure(image), label, std::sqrt(n2)};
}

DensityPattern encode_norm_augmented(std::span<const double> x, int label) {
    const double n2 = norm_sq(x);
    const double norm = std::sqrt(n2);
    if (norm == 0.0)
        throw EncodingError(
            "norm-augmented encoding is undefined for the zero vector (division by |x| = 0)");
    const double stretch = std::sqrt(n2 + 1.0);
    std::vector<double> augmented(x.size() + 1);
    for (std::size_t i = 0; i < x.size(); ++i) augmented[i] = x[i] / (norm * stretch);
    augmented.back() = norm / stretch;
    return {DensityMatrix::pure(augmented), label, norm};
}

DensityPattern encode_pattern(const Pattern& p, EncodingKind kind) {
    switch (kind) {
        case EncodingKind::Stereo2D: return encode_stereo_2d(p.features, p.label);
        case EncodingKind::StereoProjector: return encode_stereo_projector(p.features, p.label);
        case EncodingKind::NormAugmented: return encode_norm_augmented(p.features, p.label);
    }
    throw EncodingError("unknown encoding");
}

std::vector<DensityPattern> encode_dataset(std::span<const Pattern> patterns, EncodingKind kind) {
    std::vector<DensityPattern> out;
    out.reserve(patterns.size());
    if (!patterns.empty()) {
        const std::size_t d = patterns.front().features.size();
        if (kind == EncodingKind::Stereo2D && d != 2)
            throw EncodingError("stereo2d requires 2-feature data");
        for (std::size_t i = 0; i < patterns.size(); ++i) {
            if (patterns[i].features.size() != d) {
                std::ostringstream msg;
                msg << "pattern " << i << " has " << patterns[i].features.size()
                    << " features, expected " << d;
                throw EncodingError(msg.str());
            }
        }
    }
    for (std::size_t i = 0; i < patterns.size(); ++i) {
        try {
            out.push_back(encode_pattern(patterns[i], kind));
        } catch (const std::exception& e) {
            std::ostringstream msg;
            msg << "pattern " << i << ": " << e.what();
            throw EncodingError(msg.str());
        }
    }
    return out;
}

}  // namespace qnmc
