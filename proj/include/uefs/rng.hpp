#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace uefs {

// Stream tags for sub-seed derivation. Every stochastic stage draws from its
// own stream keyed by (master seed, tag, indices), so stages never share or
// reorder draws.
namespace seedtag {
constexpr uint64_t kWaySample = 1;
constexpr uint64_t kWayFolds = 2;
constexpr uint64_t kEvalFolds = 3;
constexpr uint64_t kEvalWays = 4;
constexpr uint64_t kFoldClass = 5;
constexpr uint64_t kSynthValues = 6;
constexpr uint64_t kSynthMask = 7;
constexpr uint64_t kSynthLabelNoise = 8;
constexpr uint64_t kBaselineSelect = 9;
}  // namespace seedtag

// SplitMix64 finalizer.
inline uint64_t mix64(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline uint64_t subSeed(uint64_t seed, uint64_t a, uint64_t b = 0, uint64_t c = 0) {
    uint64_t z = mix64(seed);
    z = mix64(z ^ a);
    z = mix64(z ^ b);
    return mix64(z ^ c);
}

// mt19937_64 with hand-rolled draws. The engine's raw output is pinned by the
// standard; std::uniform_int_distribution and friends are not, so the draw
// logic lives here to keep sequences identical across standard libraries.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next() { return engine_(); }

    // Uniform in [0, n), n >= 1. Rejection sampling over a power-of-two mask.
    uint64_t below(uint64_t n) {
        if (n <= 1) return 0;
        uint64_t mask = ~uint64_t{0} >> countLeadingZeros(n - 1);
        uint64_t value;
        do {
            value = next() & mask;
        } while (value >= n);
        return value;
    }

    // Uniform in [0, 1) with 53-bit resolution.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit() < p; }

    // Box-Muller; the sine branch is discarded to keep the state minimal.
    double normal() {
        double u1 = static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
        double u2 = unit();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    template <class T>
    void shuffle(std::vector<T>& values) {
        for (size_t i = values.size(); i > 1; --i) {
            std::swap(values[i - 1], values[below(i)]);
        }
    }

    // k distinct values from [0, n), in draw order.
    std::vector<size_t> sampleWithoutReplacement(size_t n, size_t k) {
        std::vector<size_t> pool(n);
        for (size_t i = 0; i < n; ++i) pool[i] = i;
        std::vector<size_t> picked;
        picked.reserve(k);
        for (size_t i = 0; i < k && i < n; ++i) {
            size_t j = i + below(n - i);
            std::swap(pool[i], pool[j]);
            picked.push_back(pool[i]);
        }
        return picked;
    }

private:
    static int countLeadingZeros(uint64_t v) { return v == 0 ? 64 : __builtin_clzll(v); }

    std::mt19937_64 engine_;
};

}  // namespace uefs
