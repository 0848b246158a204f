#pragma once

#include <cstdint>

#include "ellrc/field.hpp"

namespace ellrc {

/// SplitMix64: same seed, same stream on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n) by rejection.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

    Felt element(const Field& F) { return Felt{static_cast<std::uint32_t>(below(F.order()))}; }
    Felt nonzero(const Field& F) { return Felt{static_cast<std::uint32_t>(1 + below(F.order() - 1))}; }

private:
    std::uint64_t state_;
};

}  // namespace ellrc
