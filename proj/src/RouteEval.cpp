#include "hgs/RouteEval.hpp"

hgs::LocationSegments hgs::segmentOf(ProblemData const &data, std::size_t loc)
{
    return {DurationSegment::forLocation(data, loc),
            LoadSegment::forLocation(data, loc),
            DistanceSegment{0}};
}

hgs::RouteStats hgs::routeStats(ProblemData const &data,
                                std::span<std::size_t const> visits)
{
    if (visits.empty())
        return {};

    auto durSeg = DurationSegment::forLocation(data, 0);
    LoadSegment loadSeg;
    DistanceSegment distSeg;

    std::size_t prev = 0;
    for (auto const loc : visits)
    {
        auto const seg = segmentOf(data, loc);
        durSeg = DurationSegment::concat(durSeg, seg.duration, data.duration(prev, loc));
        loadSeg = LoadSegment::concat(loadSeg, seg.load);
        distSeg = DistanceSegment::concat(distSeg, seg.distance, data.dist(prev, loc));
        prev = loc;
    }

    auto const depot = segmentOf(data, 0);
    durSeg = DurationSegment::concat(durSeg, depot.duration, data.duration(prev, 0));
    distSeg = DistanceSegment::concat(distSeg, depot.distance, data.dist(prev, 0));

    return {distSeg.distance, loadSeg.load, durSeg.timeWarp(), durSeg.duration()};
}
