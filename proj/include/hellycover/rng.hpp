#pragma once

#include <cstdint>
#include <vector>

namespace hellycover {

// SplitMix64. Self-contained so that seeded runs are byte-identical across
// platforms and standard libraries (std:: distributions are not portable).
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform in [0,1) with 53 random bits
    double next_double() {
        return static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0);
    }

    // uniform integer in [0, m), rejection sampled; m >= 1
    std::uint64_t below(std::uint64_t m) {
        if (m <= 1) return 0;
        std::uint64_t threshold = (0 - m) % m;  // 2^64 mod m
        for (;;) {
            std::uint64_t x = next();
            if (x >= threshold) return x % m;
        }
    }

    // Bernoulli with exact rational probability num/den: one 64-bit draw x,
    // success iff x * den < num * 2^64 (128-bit arithmetic). Exact for 0, 1
    // and all dyadic probabilities; otherwise off by less than 2^-64.
    bool bernoulli(std::uint64_t num, std::uint64_t den) {
        if (num == 0) return false;
        if (num >= den) { next(); return true; }  // draw anyway: stream position fixed
        unsigned __int128 lhs = static_cast<unsigned __int128>(next()) * den;
        unsigned __int128 rhs = static_cast<unsigned __int128>(num) << 64;
        return lhs < rhs;
    }

    // Fisher-Yates shuffle, deterministic given the stream position.
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }
};

}  // namespace hellycover
