#pragma once

#include <cstdint>
#include <random>

namespace quasiham {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi]. Rejection sampling on the raw engine output so
/// that sequences are identical across standard library implementations.
inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(rng());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return lo + static_cast<std::int64_t>(r % span);
}

inline std::size_t uniform_index(Rng& rng, std::size_t n) {
    return static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(n) - 1));
}

inline bool coin(Rng& rng, std::uint64_t num, std::uint64_t den) {
    return static_cast<std::uint64_t>(uniform_int(rng, 0, static_cast<std::int64_t>(den) - 1)) < num;
}

}  // namespace quasiham
