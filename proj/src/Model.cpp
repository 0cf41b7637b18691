#include "hgs/Model.hpp"

#include "hgs/GeneticAlgorithm.hpp"
#include "hgs/SolverParams.hpp"

#include <fmt/format.h>

#include <stdexcept>

using hgs::Model;

Model::Model(Distance missingEdgeValue) : missingEdge_(missingEdgeValue)
{
    if (missingEdgeValue < 0)
        throw std::invalid_argument("missing edge value must be non-negative");
}

Model::Handle
Model::addDepot(Coordinate x, Coordinate y, Duration twEarly, Duration twLate)
{
    if (depot_)
        throw std::invalid_argument("multiple depots are not supported");

    auto const handle = locs_.size();
    locs_.push_back({true, Depot{x, y, twEarly, twLate}, {}});
    order_.push_back(handle);
    depot_ = handle;
    return handle;
}

Model::Handle Model::addClient(Coordinate x,
                               Coordinate y,
                               Load demand,
                               Duration serviceDuration,
                               Duration twEarly,
                               Duration twLate)
{
    auto const handle = locs_.size();
    locs_.push_back(
        {false, {}, Client{x, y, demand, serviceDuration, twEarly, twLate}});
    order_.push_back(handle);
    return handle;
}

void Model::addVehicleType(std::size_t numAvailable, Load capacity)
{
    if (fleet_)
        throw std::invalid_argument("only one vehicle type is supported");

    fleet_ = Fleet{numAvailable, capacity};
}

void Model::addEdge(Handle from,
                    Handle to,
                    Distance distance,
                    std::optional<Duration> duration)
{
    checkHandle(from);
    checkHandle(to);

    auto const [it, inserted] = edges_.try_emplace(
        {from, to}, distance, duration.value_or(distance));

    if (!inserted)
        throw std::invalid_argument(
            fmt::format("duplicate edge ({}, {})", from, to));
}

void Model::checkHandle(Handle loc) const
{
    if (loc >= locs_.size())
        throw std::invalid_argument(
            fmt::format("unknown edge endpoint {}", loc));
}

hgs::Coordinate Model::x(Handle loc) const
{
    checkHandle(loc);
    auto const &l = locs_[loc];
    return l.isDepot ? l.depot.x : l.client.x;
}

hgs::Coordinate Model::y(Handle loc) const
{
    checkHandle(loc);
    auto const &l = locs_[loc];
    return l.isDepot ? l.depot.y : l.client.y;
}

std::size_t Model::indexOf(Handle loc) const
{
    checkHandle(loc);
    if (locs_[loc].isDepot)
        return 0;

    std::size_t idx = 1;
    for (Handle other = 0; other != loc; ++other)
        idx += !locs_[other].isDepot;

    return idx;
}

hgs::ProblemData Model::data() const
{
    if (!depot_)
        throw std::invalid_argument("depot undefined");

    if (!fleet_)
        throw std::invalid_argument("fleet undefined");

    std::vector<Client> clients;
    std::vector<std::size_t> index(locs_.size());
    for (Handle loc = 0; loc != locs_.size(); ++loc)
        if (!locs_[loc].isDepot)
        {
            clients.push_back(locs_[loc].client);
            index[loc] = clients.size();
        }

    auto const dim = clients.size() + 1;
    Matrix<Distance> dist(dim, missingEdge_);
    Matrix<Duration> dur(dim, missingEdge_);
    for (std::size_t i = 0; i != dim; ++i)
    {
        dist(i, i) = 0;
        dur(i, i) = 0;
    }

    for (auto const &[key, value] : edges_)
    {
        auto const [from, to] = key;
        dist(index[from], index[to]) = value.first;
        dur(index[from], index[to]) = value.second;
    }

    return {locs_[*depot_].depot, std::move(clients), *fleet_, dist, dur};
}

hgs::Result Model::solve(StoppingCriterion const &stop, std::uint64_t seed) const
{
    auto const instance = data();
    return solve(stop, seed, SolverParams::forInstance(instance));
}

hgs::Result Model::solve(StoppingCriterion const &stop,
                         std::uint64_t seed,
                         SolverParams const &params) const
{
    auto const instance = data();
    return GeneticAlgorithm(instance, params, seed).run(stop);
}
