#include "hgs/search/LocalSearch.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

using hgs::LocalSearch;

LocalSearch::LocalSearch(ProblemData const &data, Neighbourhood neighbours)
    : data_(data), neighbours_(std::move(neighbours)), routes_(data)
{
    if (neighbours_.size() != data.numLocations())
        throw std::invalid_argument("neighbourhood does not match the instance");

    order_.resize(data.numClients());
    std::iota(order_.begin(), order_.end(), 1);
}

void LocalSearch::addNodeOperator(std::unique_ptr<NodeOperator> op)
{
    nodeOps_.push_back(std::move(op));
}

void LocalSearch::addRouteOperator(std::unique_ptr<RouteOperator> op)
{
    routeOps_.push_back(std::move(op));
}

hgs::Solution LocalSearch::run(Solution const &solution,
                               CostEvaluator const &costEvaluator,
                               Rng &rng)
{
    routes_.load(solution);

    auto const numRoutes = routes_.numRoutes();
    counter_ = 1;
    lastModified_.assign(numRoutes, 1);
    lastTested_.assign(data_.numLocations(), 0);
    lastTestedPair_.assign(numRoutes * numRoutes, 0);

    std::iota(order_.begin(), order_.end(), 1);
    shuffle(std::span(order_), rng);

    while (true)
    {
        while (nodePass(costEvaluator))
            ;

        if (emptyRoutePass(costEvaluator))
            continue;

        if (!routePass(costEvaluator))
            break;
    }

    return routes_.exportSolution();
}

void LocalSearch::applyMove(Move const &move)
{
    routes_.apply(move);
    ++counter_;
    ++numMoves_;
    for (std::size_t idx = 0; idx != move.numRoutes; ++idx)
        lastModified_[move.routes[idx].route] = counter_;
}

bool LocalSearch::applyNodeOps(Loc u, Loc v, CostEvaluator const &costEvaluator)
{
    for (auto const &op : nodeOps_)
    {
        auto const move = op->propose(routes_, u, v);
        if (move && routes_.delta(*move, costEvaluator) < 0)
        {
            applyMove(*move);
            return true;
        }
    }

    return false;
}

bool LocalSearch::nodePass(CostEvaluator const &costEvaluator)
{
    bool improved = false;
    for (auto const u : order_)
    {
        auto const testedAt = lastTested_[u];
        lastTested_[u] = counter_;

        for (auto const v : neighbours_[u])
        {
            auto const lu = routes_.where(u);
            auto const lv = routes_.where(v);
            if (std::max(lastModified_[lu.route], lastModified_[lv.route]) <= testedAt)
                continue;

            if (applyNodeOps(lu, lv, costEvaluator))
            {
                improved = true;
                continue;
            }

            if (lv.pos == 1 && applyNodeOps(lu, {lv.route, 0}, costEvaluator))
                improved = true;
        }
    }

    return improved;
}

bool LocalSearch::emptyRoutePass(CostEvaluator const &costEvaluator)
{
    bool improved = false;
    for (auto const u : order_)
    {
        auto const empty = routes_.firstEmptyRoute();
        if (empty == routes_.numRoutes())
            break;

        if (applyNodeOps(routes_.where(u), {empty, 0}, costEvaluator))
            improved = true;
    }

    return improved;
}

bool LocalSearch::routePass(CostEvaluator const &costEvaluator)
{
    if (routeOps_.empty())
        return false;

    auto const numRoutes = routes_.numRoutes();
    bool improved = false;

    for (std::size_t first = 0; first != numRoutes; ++first)
        for (std::size_t second = first + 1; second != numRoutes; ++second)
        {
            if (routes_.route(first).empty() || routes_.route(second).empty())
                continue;

            auto &testedAt = lastTestedPair_[first * numRoutes + second];
            if (std::max(lastModified_[first], lastModified_[second]) <= testedAt)
                continue;

            testedAt = counter_;
            for (auto const &op : routeOps_)
            {
                auto const found = op->best(routes_, first, second, costEvaluator);
                if (found && found->delta.delta < 0)
                {
                    applyMove(found->move);
                    improved = true;
                    break;
                }
            }
        }

    return improved;
}
