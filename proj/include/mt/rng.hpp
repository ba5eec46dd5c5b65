#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

namespace mt {

// Deterministic PRNG with a fixed cross-platform output sequence
// (splitmix64). The standard <random> engines are portable but the
// distributions are not, and reproducible populations and lotteries are part
// of this library's contract, so sampling is done by hand on top of this.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound). Rejection keeps the distribution exact.
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % bound;
    }

    // Uniform in [0, 1) with 53 bits of precision.
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller (the trigonometric form; fully
    // determined by the next_unit() stream).
    double next_normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1;
        do {
            u1 = next_unit();
        } while (u1 <= 0.0);
        double u2 = next_unit();
        double r = std::sqrt(-2.0 * std::log(u1));
        double theta = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

  private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// Stable combination of a base seed and a stream index, so that derived
// streams (per run, per lottery) are decorrelated but reproducible.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index) {
    Rng r(base ^ (0x632be59bd9b4e019ULL + index * 0x9e3779b97f4a7c15ULL));
    return r.next_u64();
}

// Fisher-Yates with a fixed traversal order; same seed, same permutation.
template <typename T>
void shuffle_in_place(std::vector<T>& items, Rng& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng.next_below(i));
        std::swap(items[i - 1], items[j]);
    }
}

} // namespace mt
