#include "hgs/Solution.hpp"

#include <fmt/format.h>

#include <numeric>
#include <stdexcept>

using hgs::Solution;

Solution::Route::Route(ProblemData const &data, Visits visits)
    : visits_(std::move(visits)), stats_(routeStats(data, visits_))
{
}

Solution::Solution(ProblemData const &data, std::vector<Visits> const &routes)
    : succ_(data.numLocations(), 0), pred_(data.numLocations(), 0)
{
    std::vector<bool> seen(data.numLocations(), false);
    for (auto const &visits : routes)
    {
        if (visits.empty())
            continue;

        for (auto const client : visits)
        {
            if (client == 0 || client > data.numClients())
                throw std::invalid_argument(
                    fmt::format("unknown client {} in route", client));

            if (seen[client])
                throw std::invalid_argument(
                    fmt::format("client {} visited more than once", client));

            seen[client] = true;
        }

        routes_.emplace_back(data, visits);
    }

    if (routes_.size() > data.numVehicles())
        throw std::invalid_argument(
            fmt::format("{} routes exceed the {} available vehicles",
                        routes_.size(),
                        data.numVehicles()));

    for (std::size_t client = 1; client <= data.numClients(); ++client)
        if (!seen[client])
            throw std::invalid_argument(
                fmt::format("client {} is not visited", client));

    for (auto const &route : routes_)
    {
        auto const &visits = route.visits();
        for (std::size_t idx = 0; idx != visits.size(); ++idx)
        {
            succ_[visits[idx]] = idx + 1 < visits.size() ? visits[idx + 1] : 0;
            pred_[visits[idx]] = idx > 0 ? visits[idx - 1] : 0;
        }

        distance_ += route.distance();
        excessLoad_ += std::max<Load>(route.load() - data.capacity(), 0);
        timeWarp_ += route.timeWarp();
    }
}

Solution Solution::random(ProblemData const &data, Rng &rng)
{
    std::vector<std::size_t> clients(data.numClients());
    std::iota(clients.begin(), clients.end(), 1);
    shuffle<std::size_t>(clients, rng);

    auto const numRoutes = std::min(data.numVehicles(), clients.size());
    std::vector<Visits> routes(numRoutes);
    for (std::size_t idx = 0; idx != clients.size(); ++idx)
        routes[idx % numRoutes].push_back(clients[idx]);

    return {data, routes};
}

bool Solution::operator==(Solution const &other) const
{
    // Successors fully determine the set of routes.
    return succ_ == other.succ_;
}

double hgs::brokenPairsDistance(Solution const &first, Solution const &second)
{
    auto const numClients = first.numClients();
    if (numClients == 0)
        return 0.0;

    std::size_t numBroken = 0;
    for (std::size_t client = 1; client <= numClients; ++client)
        numBroken += first.successor(client) != second.successor(client);

    return static_cast<double>(numBroken) / static_cast<double>(numClients);
}
