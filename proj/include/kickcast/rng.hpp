#ifndef KICKCAST_RNG_HPP
#define KICKCAST_RNG_HPP

#include <cmath>
#include <cstdint>
#include <vector>

namespace kickcast {

// Deterministic PRNG used everywhere reproducibility matters. The standard
// <random> distributions are implementation-defined, so seeded runs would not
// be byte-identical across compilers; this generator is fully pinned.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    /// splitmix64 step.
    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1).
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in [a, b).
    double uniform(double a, double b) { return a + uniform01() * (b - a); }

    bool bernoulli(double p) { return uniform01() < p; }

    /// Standard normal via Box-Muller; two uniforms per draw, no caching.
    double gaussian() {
        double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
        double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    double gaussian(double mean, double sigma) { return mean + sigma * gaussian(); }

    /// Uniform integer in [0, n). Multiply-shift; bias is O(n / 2^64).
    std::uint64_t bounded(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    /// In-place Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(bounded(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_;
};

/// Folds words into one substream seed (splitmix over the concatenation).
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0,
                              std::uint64_t d = 0) {
    Rng h(a);
    std::uint64_t s = h.next_u64();
    s ^= Rng(b ^ 0xD6E8FEB86659FD93ULL).next_u64();
    s = Rng(s).next_u64();
    s ^= Rng(c ^ 0xCA5A826395121157ULL).next_u64();
    s = Rng(s).next_u64();
    s ^= Rng(d ^ 0xA0761D6478BD642FULL).next_u64();
    return Rng(s).next_u64();
}

}  // namespace kickcast

#endif  // KICKCAST_RNG_HPP
