#ifndef HGS_ROUTEEVAL_HPP
#define HGS_ROUTEEVAL_HPP

#include "ProblemData.hpp"
#include "Types.hpp"

#include <algorithm>
#include <cstddef>
#include <span>

namespace hgs
{
/**
 * Time statistics of a consecutive visit sequence: total duration (travel,
 * service and waiting), accumulated time warp, and the earliest and latest
 * moments at which the sequence can start without adding time warp.
 *
 * Concatenation is associative, so statistics of any route can be assembled
 * from cached prefix and suffix segments in constant time.
 */
class DurationSegment
{
    Duration duration_ = 0;
    Duration timeWarp_ = 0;
    Duration twEarly_ = 0;
    Duration twLate_ = unboundedTime;

public:
    constexpr DurationSegment() = default;

    constexpr DurationSegment(Duration duration,
                              Duration timeWarp,
                              Duration twEarly,
                              Duration twLate)
        : duration_(duration),
          timeWarp_(timeWarp),
          twEarly_(twEarly),
          twLate_(twLate)
    {
    }

    /// Single visit to ``loc`` (the depot has no service duration).
    static DurationSegment forLocation(ProblemData const &data, std::size_t loc)
    {
        return {data.serviceDuration(loc), 0, data.twEarly(loc), data.twLate(loc)};
    }

    /// ``first`` followed by ``second``, with ``travel`` time in between.
    static constexpr DurationSegment
    concat(DurationSegment const &first, DurationSegment const &second, Duration travel)
    {
        auto const delta = first.duration_ - first.timeWarp_ + travel;
        auto const wait = std::max<Duration>(second.twEarly_ - delta - first.twLate_, 0);
        auto const warp = std::max<Duration>(first.twEarly_ + delta - second.twLate_, 0);

        return {first.duration_ + second.duration_ + travel + wait,
                first.timeWarp_ + second.timeWarp_ + warp,
                std::max(second.twEarly_ - delta, first.twEarly_) - wait,
                std::min(second.twLate_ - delta, first.twLate_) + warp};
    }

    [[nodiscard]] constexpr Duration duration() const { return duration_; }
    [[nodiscard]] constexpr Duration timeWarp() const { return timeWarp_; }
    [[nodiscard]] constexpr Duration twEarly() const { return twEarly_; }
    [[nodiscard]] constexpr Duration twLate() const { return twLate_; }

    constexpr bool operator==(DurationSegment const &) const = default;
};

struct LoadSegment
{
    Load load = 0;

    static LoadSegment forLocation(ProblemData const &data, std::size_t loc)
    {
        return {data.demand(loc)};
    }

    static constexpr LoadSegment concat(LoadSegment first, LoadSegment second)
    {
        return {first.load + second.load};
    }

    constexpr bool operator==(LoadSegment const &) const = default;
};

struct DistanceSegment
{
    Distance distance = 0;

    static constexpr DistanceSegment
    concat(DistanceSegment first, DistanceSegment second, Distance edge)
    {
        return {first.distance + edge + second.distance};
    }

    constexpr bool operator==(DistanceSegment const &) const = default;
};

struct LocationSegments
{
    DurationSegment duration;
    LoadSegment load;
    DistanceSegment distance;
};

/// Base case of the algebra: the segments of a single visit.
LocationSegments segmentOf(ProblemData const &data, std::size_t loc);

struct RouteStats
{
    Distance distance = 0;
    Load load = 0;
    Duration timeWarp = 0;
    Duration duration = 0;

    bool operator==(RouteStats const &) const = default;
};

/// Statistics of depot -> visits... -> depot. An empty route is all zeros.
RouteStats routeStats(ProblemData const &data, std::span<std::size_t const> visits);
}  // namespace hgs

#endif  // HGS_ROUTEEVAL_HPP
