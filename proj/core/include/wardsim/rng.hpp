#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>

#include "wardsim/errors.hpp"

namespace wardsim {

/// splitmix64 step; advances the state and returns the next output word.
inline std::uint64_t splitmix64(std::uint64_t& state) noexcept {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Deterministic substream seed from a master seed and stream tags. Every
/// independent random stream in the library derives its seed this way, so
/// results never depend on evaluation order or worker count.
inline std::uint64_t derive_seed(std::uint64_t master,
                                 std::initializer_list<std::uint64_t> tags) noexcept {
    std::uint64_t state = master;
    splitmix64(state);
    for (std::uint64_t tag : tags) {
        state ^= tag + 0x9e3779b97f4a7c15ULL + (state << 6) + (state >> 2);
        splitmix64(state);
    }
    return splitmix64(state);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a) noexcept {
    return derive_seed(master, {a});
}
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b) noexcept {
    return derive_seed(master, {a, b});
}
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b,
                                 std::uint64_t c) noexcept {
    return derive_seed(master, {a, b, c});
}

/// Seeded random stream with explicit inverse-CDF sampling. All draws are
/// functions of the mt19937_64 bit stream only, so identical seeds give
/// identical values on any platform (std::*_distribution would not).
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1) with 53 random bits.
    double canonical() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Exponential with the given rate (per day).
    double exponential(double rate) {
        if (rate <= 0.0) throw parameter_error("exponential rate must be positive");
        return -std::log1p(-canonical()) / rate;
    }

    double exponential_mean(double mean) { return exponential(1.0 / mean); }

    /// Unbiased integer in [0, bound).
    std::uint64_t integer(std::uint64_t bound) {
        if (bound == 0) throw parameter_error("integer bound must be positive");
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = engine_();
            if (r >= threshold) return r % bound;
        }
    }

    bool bernoulli(double prob) { return canonical() < prob; }

    /// Poisson by the product method; intended for the small means used here.
    int poisson(double mean) {
        if (mean < 0.0) throw parameter_error("poisson mean must be nonnegative");
        if (mean == 0.0) return 0;
        const double limit = std::exp(-mean);
        int k = 0;
        double product = 1.0;
        do {
            ++k;
            product *= canonical();
        } while (product > limit);
        return k - 1;
    }

    /// Index drawn proportionally to the given nonnegative weights.
    std::size_t discrete(std::span<const double> weights) {
        double total = 0.0;
        for (double w : weights) {
            if (w < 0.0) throw parameter_error("discrete weights must be nonnegative");
            total += w;
        }
        if (total <= 0.0) throw parameter_error("discrete weights must not all be zero");
        double u = canonical() * total;
        double cumulative = 0.0;
        for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
            cumulative += weights[i];
            if (u < cumulative) return i;
        }
        return weights.size() - 1;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace wardsim
