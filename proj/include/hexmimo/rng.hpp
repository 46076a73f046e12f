// SPDX-License-Identifier: Apache-2.0
#ifndef HEXMIMO_RNG_HPP
#define HEXMIMO_RNG_HPP

#include <complex>
#include <cstdint>
#include <random>

namespace hexmimo {

// Random stream with portable draw semantics: the generator (mt19937_64) is
// fully specified by the standard and the uniform/normal maps below are
// hand-rolled, so a (seed, draw sequence) pair produces the same values on
// every platform and at every worker count.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform on [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // Uniform on (0, 1]; safe as a log() argument.
    double uniform_pos() { return 1.0 - uniform(); }

    // Standard normal via Box-Muller, one spare cached.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double r = std::sqrt(-2.0 * std::log(uniform_pos()));
        const double t = 6.283185307179586476925286766559 * uniform();
        spare_ = r * std::sin(t);
        has_spare_ = true;
        return r * std::cos(t);
    }

    // CN(0,1): real and imaginary parts i.i.d. N(0, 1/2).
    std::complex<double> cnormal() {
        const double s = 0.70710678118654752440084436210485;
        const double re = normal();
        const double im = normal();
        return {s * re, s * im};
    }

    // Uniform integer in [0, n).
    std::size_t index(std::size_t n) {
        return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n;
    }

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// SplitMix64 step; used to derive well-separated per-trial seeds from a
// master seed so trials never share stream state.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_trial_seed(std::uint64_t master_seed, std::uint64_t trial_index) {
    return splitmix64(splitmix64(master_seed) ^ splitmix64(trial_index * 0xD1B54A32D192ED03ULL + 1));
}

} // namespace hexmimo

#endif
