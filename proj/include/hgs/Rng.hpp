#ifndef HGS_RNG_HPP
#define HGS_RNG_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace hgs
{
/// Seeded engine shared by every randomised component. The helpers below
/// avoid the implementation-defined standard distributions so that runs are
/// reproducible across standard libraries.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound). Requires bound > 0.
inline std::size_t randint(Rng &rng, std::size_t bound)
{
    return static_cast<std::size_t>(rng() % bound);
}

/// Uniform real in [0, 1).
inline double rand01(Rng &rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

template <typename T> void shuffle(std::span<T> values, Rng &rng)
{
    for (std::size_t idx = values.size(); idx > 1; --idx)
        std::swap(values[idx - 1], values[randint(rng, idx)]);
}
}  // namespace hgs

#endif  // HGS_RNG_HPP
