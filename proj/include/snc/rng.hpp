#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace snc {

// Counter-based deterministic randomness built on the SplitMix64 mixer
// (Steele, Lea & Flood; the generator behind Java's SplittableRandom).
// value(i) = mix64(key + (i+1)*GOLDEN) reproduces the i-th output of the
// sequential splitmix64 stream seeded with `key`, so draws can be indexed
// randomly (per edge, per trial) and are independent of evaluation order.
//
// Reference vectors, sequential stream seeded with 0:
//   0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

constexpr std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ull;
    }
    return h;
}

// Derives the key of an independent stream from (master seed, purpose tag,
// trial index). Distinct tags or trial indices give unrelated streams, so
// parallel trials can be generated in any order.
constexpr std::uint64_t stream_key(std::uint64_t master, std::string_view purpose,
                                   std::uint64_t trial) {
    std::uint64_t k = mix64(master);
    k = mix64(k ^ fnv1a64(purpose));
    return mix64(k ^ trial);
}

class CounterRng {
public:
    explicit CounterRng(std::uint64_t key) : key_(key) {}
    CounterRng(std::uint64_t master, std::string_view purpose, std::uint64_t trial)
        : key_(stream_key(master, purpose, trial)) {}

    std::uint64_t key() const { return key_; }

    // Random access into the stream.
    std::uint64_t at(std::uint64_t i) const { return mix64(key_ + (i + 1) * kGolden); }

    std::uint64_t next() { return at(cursor_++); }

    // Uniform in [0, 1), 53 bits of precision.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double double_at(std::uint64_t i) const { return static_cast<double>(at(i) >> 11) * 0x1.0p-53; }

    bool next_bernoulli(double p) { return next_double() < p; }

    // Uniform in [0, bound) via 128-bit multiply-shift.
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("next_below: zero bound");
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    int next_int(int bound) { return static_cast<int>(next_below(static_cast<std::uint64_t>(bound))); }

    // UniformRandomBitGenerator interface.
    using result_type = std::uint64_t;
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }
    result_type operator()() { return next(); }

private:
    std::uint64_t key_;
    std::uint64_t cursor_ = 0;
};

// k distinct values out of 0..n-1 in random order, via partial Fisher-Yates.
inline std::vector<int> sample_k_permutation(CounterRng& rng, int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("sample_k_permutation: bad size");
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    for (int i = 0; i < k; ++i) {
        int j = i + rng.next_int(n - i);
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return pool;
}

// k distinct vertices out of 0..n-1, ascending.
inline std::vector<int> sample_subset(CounterRng& rng, int n, int k) {
    std::vector<int> out = sample_k_permutation(rng, n, k);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace snc
