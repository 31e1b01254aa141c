#pragma once

#include <cstdint>
#include <vector>

namespace shotgun {

// Trial addressing: (master, stream) fully determines every draw of a trial.
// Streams are decorrelated by running the master seed through SplitMix64 with
// a stream-dependent offset before expanding into xoshiro256** state.
struct Seed {
    uint64_t master = 0;
    uint64_t stream = 0;

    Seed() = default;
    Seed(uint64_t m, uint64_t s) : master(m), stream(s) {}
};

struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t s) : state(s) {}

    uint64_t next() {
        uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

// xoshiro256** seeded via SplitMix64. This generator family is pinned: it is
// part of the experiment file format, since sweep outputs must be bit-stable
// across platforms and releases. Do not swap it for std:: distributions,
// whose streams are implementation-defined.
class Rng {
public:
    explicit Rng(Seed seed) {
        SplitMix64 sm(seed.master ^ (0x9E3779B97F4A7C15ULL * (seed.stream + 1)));
        for (auto& s : s_) s = sm.next();
    }

    uint64_t next_u64() {
        const uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform in [0, bound) by rejection; unbiased and platform-stable.
    uint64_t next_below(uint64_t bound) {
        if (bound <= 1) return 0;
        const uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    uint32_t next_u32() { return static_cast<uint32_t>(next_u64() >> 32); }

    // Uniform double in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool next_bernoulli(double p) { return next_double() < p; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(next_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    uint64_t s_[4];
};

}  // namespace shotgun
