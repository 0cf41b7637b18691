#ifndef HGS_TYPES_HPP
#define HGS_TYPES_HPP

#include <cstdint>
#include <limits>

namespace hgs
{
// All instance quantities are integral. Distances, durations and loads share
// one signed 64-bit width so that penalised costs can be accumulated without
// conversions.
using Distance = std::int64_t;
using Duration = std::int64_t;
using Load = std::int64_t;
using Cost = std::int64_t;

// Latest time used when a location has no closing time. Kept well below the
// type maximum so that segment arithmetic (sums and differences of a handful
// of such values) cannot overflow.
inline constexpr Duration unboundedTime
    = std::numeric_limits<Duration>::max() / 8;
}  // namespace hgs

#endif  // HGS_TYPES_HPP
