#pragma once

#include <cstdint>
#include <random>

namespace polyrep {

// Seeded generator with a portable bounded draw. std::uniform_int_distribution
// is implementation-defined, so bounded values are derived here by rejection;
// the same seed then gives the same stream on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // uniform on [lo, hi], inclusive
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
        if (range == 0) return static_cast<std::int64_t>(next());  // full 64-bit span
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return lo + static_cast<std::int64_t>(x % range);
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace polyrep
