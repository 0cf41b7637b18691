#include "hgs/Crossover.hpp"

#include "hgs/RouteEval.hpp"

#include <algorithm>
#include <limits>

namespace
{
using Visits = hgs::Solution::Visits;

// Prefix and suffix statistics of one route, depots included, so that the
// cost of inserting a client anywhere is a constant-time lookup.
struct RouteCache
{
    std::vector<hgs::DurationSegment> fwd;
    std::vector<hgs::DurationSegment> bwd;
    hgs::Load load = 0;

    RouteCache(hgs::ProblemData const &data, Visits const &visits)
    {
        std::vector<std::size_t> locs{0};
        locs.insert(locs.end(), visits.begin(), visits.end());
        locs.push_back(0);

        fwd.resize(locs.size());
        bwd.resize(locs.size());
        fwd.front() = hgs::DurationSegment::forLocation(data, 0);
        bwd.back() = hgs::DurationSegment::forLocation(data, 0);

        for (std::size_t pos = 1; pos != locs.size(); ++pos)
        {
            load += data.demand(locs[pos]);
            fwd[pos] = hgs::DurationSegment::concat(
                fwd[pos - 1],
                hgs::DurationSegment::forLocation(data, locs[pos]),
                data.duration(locs[pos - 1], locs[pos]));
        }

        for (auto pos = locs.size() - 1; pos-- > 0;)
            bwd[pos] = hgs::DurationSegment::concat(
                hgs::DurationSegment::forLocation(data, locs[pos]),
                bwd[pos + 1],
                data.duration(locs[pos], locs[pos + 1]));
    }
};

hgs::Cost routeCostWith(hgs::ProblemData const &data,
                        hgs::CostEvaluator const &costEvaluator,
                        hgs::Distance dist,
                        hgs::Load load,
                        hgs::Duration timeWarp)
{
    return dist + costEvaluator.loadPenalty(load, data.capacity())
           + costEvaluator.timeWarpPenalty(timeWarp);
}

std::size_t symmetricDifference(std::vector<Visits> const &routesA,
                                std::size_t startA,
                                std::vector<Visits> const &routesB,
                                std::size_t startB,
                                std::size_t window,
                                std::vector<char> &mark)
{
    std::fill(mark.begin(), mark.end(), 0);

    std::size_t sizeA = 0;
    for (std::size_t idx = 0; idx != window; ++idx)
        for (auto const client : routesA[(startA + idx) % routesA.size()])
        {
            mark[client] = 1;
            ++sizeA;
        }

    std::size_t sizeB = 0;
    std::size_t common = 0;
    for (std::size_t idx = 0; idx != window; ++idx)
        for (auto const client : routesB[(startB + idx) % routesB.size()])
        {
            ++sizeB;
            common += mark[client];
        }

    return sizeA + sizeB - 2 * common;
}

std::vector<Visits> routesOf(hgs::Solution const &solution)
{
    std::vector<Visits> routes;
    for (auto const &route : solution.routes())
        routes.push_back(route.visits());

    return routes;
}
}  // namespace

std::vector<hgs::Solution::Visits>
hgs::greedyReinsert(ProblemData const &data,
                    std::vector<Solution::Visits> routes,
                    std::vector<std::size_t> const &unplanned,
                    CostEvaluator const &costEvaluator)
{
    std::erase_if(routes, [](auto const &visits) { return visits.empty(); });

    std::vector<RouteCache> caches;
    for (auto const &visits : routes)
        caches.emplace_back(data, visits);

    for (auto const client : unplanned)
    {
        auto const clientSeg = DurationSegment::forLocation(data, client);
        auto const demand = data.demand(client);

        auto bestCost = std::numeric_limits<Cost>::max();
        std::size_t bestRoute = routes.size();
        std::size_t bestSlot = 0;

        for (std::size_t r = 0; r != routes.size(); ++r)
        {
            auto const &visits = routes[r];
            auto const &cache = caches[r];
            auto const penaltyBefore
                = costEvaluator.loadPenalty(cache.load, data.capacity())
                  + costEvaluator.timeWarpPenalty(cache.fwd.back().timeWarp());

            for (std::size_t pos = 0; pos <= visits.size(); ++pos)
            {
                auto const prev = pos == 0 ? 0 : visits[pos - 1];
                auto const next = pos == visits.size() ? 0 : visits[pos];
                auto const distDelta
                    = data.dist(prev, client) + data.dist(client, next) - data.dist(prev, next);

                auto const seg = DurationSegment::concat(
                    DurationSegment::concat(cache.fwd[pos], clientSeg, data.duration(prev, client)),
                    cache.bwd[pos + 1],
                    data.duration(client, next));

                auto const penaltyAfter
                    = costEvaluator.loadPenalty(cache.load + demand, data.capacity())
                      + costEvaluator.timeWarpPenalty(seg.timeWarp());
                auto const delta = distDelta + penaltyAfter - penaltyBefore;

                if (delta < bestCost)
                {
                    bestCost = delta;
                    bestRoute = r;
                    bestSlot = pos;
                }
            }
        }

        if (routes.size() < data.numVehicles())
        {
            auto const seg = DurationSegment::concat(
                DurationSegment::concat(DurationSegment::forLocation(data, 0),
                                        clientSeg,
                                        data.duration(0, client)),
                DurationSegment::forLocation(data, 0),
                data.duration(client, 0));

            auto const cost = routeCostWith(data,
                                            costEvaluator,
                                            data.dist(0, client) + data.dist(client, 0),
                                            demand,
                                            seg.timeWarp());
            if (cost < bestCost)
            {
                bestCost = cost;
                bestRoute = routes.size();
                bestSlot = 0;
            }
        }

        if (bestRoute == routes.size())
            routes.emplace_back();

        auto &visits = routes[bestRoute];
        visits.insert(visits.begin() + static_cast<std::ptrdiff_t>(bestSlot), client);

        if (bestRoute == caches.size())
            caches.emplace_back(data, visits);
        else
            caches[bestRoute] = RouteCache(data, visits);
    }

    return routes;
}

hgs::CrossoverOutcome hgs::srex(Solution const &first,
                                Solution const &second,
                                ProblemData const &data,
                                CostEvaluator const &costEvaluator,
                                Rng &rng)
{
    auto const routesA = routesOf(first);
    auto const routesB = routesOf(second);
    auto const numA = routesA.size();
    auto const numB = routesB.size();

    if (numA == 0 || numB == 0)
        return {first, 0, 0, 0, 0};

    auto startA = randint(rng, numA);
    auto const offsetB = randint(rng, numB);
    auto const window = 1 + randint(rng, std::min(numA, numB));

    std::vector<char> mark(data.numLocations(), 0);
    std::size_t evaluations = 0;

    // The start in B best aligned with ``fromA``; ties go to the first one
    // reached when scanning from the random offset.
    auto const alignB = [&](std::size_t fromA) {
        auto bestStart = offsetB;
        auto bestDiff = std::numeric_limits<std::size_t>::max();
        for (std::size_t idx = 0; idx != numB; ++idx)
        {
            auto const start = (offsetB + idx) % numB;
            auto const diff = symmetricDifference(routesA, fromA, routesB, start, window, mark);
            ++evaluations;
            if (diff < bestDiff)
            {
                bestDiff = diff;
                bestStart = start;
            }
        }

        return std::pair{bestStart, bestDiff};
    };

    auto [startB, diff] = alignB(startA);
    bool improved = diff > 0 && numA > 1;
    while (improved && evaluations < numA * numB)
    {
        improved = false;
        for (auto const step : {std::size_t{1}, numA - 1})
        {
            auto const candidate = (startA + step) % numA;
            auto const [candidateB, candidateDiff] = alignB(candidate);
            if (candidateDiff < diff)
            {
                startA = candidate;
                startB = candidateB;
                diff = candidateDiff;
                improved = diff > 0;
                break;
            }
        }
    }

    std::vector<char> inWindowA(data.numLocations(), 0);
    std::vector<char> inWindowB(data.numLocations(), 0);
    std::vector<char> isWindowRouteA(numA, 0);
    for (std::size_t idx = 0; idx != window; ++idx)
    {
        isWindowRouteA[(startA + idx) % numA] = 1;
        for (auto const client : routesA[(startA + idx) % numA])
            inWindowA[client] = 1;
        for (auto const client : routesB[(startB + idx) % numB])
            inWindowB[client] = 1;
    }

    // Candidate one keeps B's window routes whole and drops those clients
    // from A's retained routes; candidate two keeps A's retained routes whole
    // and only imports clients that A's window used to visit.
    std::vector<Visits> dropRetained;
    std::vector<Visits> dropImported;
    for (std::size_t r = 0; r != numA; ++r)
    {
        if (isWindowRouteA[r])
            continue;

        dropImported.push_back(routesA[r]);

        Visits kept;
        for (auto const client : routesA[r])
            if (!inWindowB[client])
                kept.push_back(client);
        dropRetained.push_back(std::move(kept));
    }

    for (std::size_t idx = 0; idx != window; ++idx)
    {
        auto const &imported = routesB[(startB + idx) % numB];
        dropRetained.push_back(imported);

        Visits kept;
        for (auto const client : imported)
            if (inWindowA[client])
                kept.push_back(client);
        dropImported.push_back(std::move(kept));
    }

    std::vector<std::size_t> unplanned;
    for (std::size_t idx = 0; idx != window; ++idx)
        for (auto const client : routesA[(startA + idx) % numA])
            if (!inWindowB[client])
                unplanned.push_back(client);

    Solution candidate1{data, greedyReinsert(data, std::move(dropRetained), unplanned, costEvaluator)};
    Solution candidate2{data, greedyReinsert(data, std::move(dropImported), unplanned, costEvaluator)};

    if (costEvaluator.penalisedCost(candidate2) < costEvaluator.penalisedCost(candidate1))
        return {std::move(candidate2), unplanned.size(), startA, startB, window};

    return {std::move(candidate1), unplanned.size(), startA, startB, window};
}
