#include "qnmc/rng.hpp"

#include <cmath>
#include <numbers>

namespace qnmc {

namespace {
constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}
}  // namespace

Rng Rng::stream(std::uint64_t seed, std::uint64_t k) {
    // Decorrelate the stream index from the seed before it becomes a state.
    return Rng(mix(seed + kGamma * (k + 1)));
}

std::uint64_t Rng::next_u64() {
    state_ += kGamma;
    return mix(state_);
}

double Rng::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::next_below(std::uint64_t bound) {
    // Rejection below the largest multiple of bound keeps the draw unbiased.
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x;
    do {
        x = next_u64();
    } while (x >= limit);
    return x % bound;
}

double Rng::next_gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u;
    do {
        u = next_double();
    } while (u == 0.0);
    const double v = next_double();
    const double r = std::sqrt(-2.0 * std::log(u));
    const double angle = 2.0 * std::numbers::pi * v;
    spare_ = r * std::sin(angle);
    have_spare_ = true;
    return r * std::cos(angle);
}

}  // namespace qnmc
