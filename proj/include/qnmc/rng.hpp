#pragma once

#include <cstdint>
#include <vector>

namespace qnmc {

/// SplitMix64 (Steele, Lea & Flood): 64-bit state, additive gamma, finalizer
/// mix. Chosen over std facilities because its output sequence is fully
/// specified, so splits and generated datasets are bit-identical across
/// platforms and standard libraries. Uniform and Gaussian draws are built
/// from the raw stream here for the same reason.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    /// Independent stream k of a base seed (used per split run index).
    static Rng stream(std::uint64_t seed, std::uint64_t k);

    std::uint64_t next_u64();

    /// Uniform in [0, 1), 53-bit resolution.
    double next_double();

    /// Uniform integer in [0, bound), unbiased via rejection.
    std::uint64_t next_below(std::uint64_t bound);

    /// Standard normal via Box-Muller on the uniform stream.
    double next_gaussian();

    /// Fisher-Yates shuffle driven by next_below.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(next_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace qnmc
