#include "hgs/search/Neighbourhood.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

void hgs::NeighbourhoodParams::validate() const
{
    if (numNeighbours < 1)
        throw std::invalid_argument("number of neighbours must be positive");

    if (weightWaitTime < 0 || weightTimeWarp < 0)
        throw std::invalid_argument("proximity weights must be non-negative");
}

double hgs::proximity(ProblemData const &data,
                      NeighbourhoodParams const &params,
                      std::size_t from,
                      std::size_t to)
{
    auto const travel = data.duration(from, to);
    auto const service = data.serviceDuration(from);
    auto const wait = std::max<Duration>(
        data.twEarly(to) - travel - service - data.twLate(from), 0);
    auto const warp = std::max<Duration>(
        data.twEarly(from) + service + travel - data.twLate(to), 0);

    return static_cast<double>(data.dist(from, to))
           + params.weightWaitTime * static_cast<double>(wait)
           + params.weightTimeWarp * static_cast<double>(warp);
}

hgs::Neighbourhood hgs::computeNeighbours(ProblemData const &data,
                                          NeighbourhoodParams const &params)
{
    params.validate();

    auto const numLocs = data.numLocations();
    auto const numClients = data.numClients();
    auto const k = numClients > 0 ? std::min(params.numNeighbours, numClients - 1) : 0;

    Neighbourhood neighbours(numLocs);
    std::vector<std::pair<double, std::size_t>> candidates;
    for (std::size_t u = 1; u != numLocs; ++u)
    {
        candidates.clear();
        for (std::size_t v = 1; v != numLocs; ++v)
        {
            if (v == u)
                continue;

            auto prox = proximity(data, params, u, v);
            if (params.symmetricProximity)
                prox = std::min(prox, proximity(data, params, v, u));

            candidates.emplace_back(prox, v);
        }

        std::partial_sort(candidates.begin(), candidates.begin() + k, candidates.end());
        for (std::size_t idx = 0; idx != k; ++idx)
            neighbours[u].push_back(candidates[idx].second);
    }

    if (params.symmetricNeighbours)
    {
        auto const base = neighbours;
        for (std::size_t u = 1; u != numLocs; ++u)
            for (auto const v : base[u])
                if (std::find(neighbours[v].begin(), neighbours[v].end(), u)
                    == neighbours[v].end())
                    neighbours[v].push_back(u);
    }

    return neighbours;
}
