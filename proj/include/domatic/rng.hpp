#pragma once

#include <cstdint>

namespace domatic {

// splitmix64: small seedable generator with portable output, used wherever
// reproducibility across platforms matters (std distributions are not
// implementation-stable).
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound); bound > 0
    uint64_t below(uint64_t bound) {
        // rejection sampling to avoid modulo bias
        uint64_t threshold = -bound % bound;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

private:
    uint64_t state_;
};

inline uint64_t mix_seed(uint64_t seed, uint64_t salt) {
    SplitMix64 g(seed ^ (salt * 0x9e3779b97f4a7c15ULL + 0x7f4a7c159e3779b9ULL));
    return g.next();
}

}  // namespace domatic
