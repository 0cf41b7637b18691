#include "hgs/search/RouteSet.hpp"

#include <stdexcept>

using hgs::RouteSet;

void hgs::RouteProposal::add(std::size_t from,
                             std::size_t first,
                             std::size_t last,
                             bool reversed)
{
    if (first > last)
        return;

    if (numPieces == maxPieces)
        throw std::logic_error("route proposal has too many pieces");

    pieces[numPieces++] = {from, first, last, reversed};
}

hgs::RouteProposal &hgs::Move::newRoute(std::size_t route)
{
    auto &proposal = routes[numRoutes++];
    proposal.route = route;
    proposal.numPieces = 0;
    return proposal;
}

hgs::Distance
RouteSet::Route::distBetween(std::size_t first, std::size_t last, bool reversed) const
{
    auto const &cum = reversed ? cumRevDist_ : cumDist_;
    return cum[last] - cum[first];
}

hgs::Load RouteSet::Route::loadBetween(std::size_t first, std::size_t last) const
{
    return cumLoad_[last] - (first > 0 ? cumLoad_[first - 1] : 0);
}

RouteSet::RouteSet(ProblemData const &data)
    : data_(data),
      timed_(data.hasTimeWindows()),
      routes_(data.numVehicles()),
      locs_(data.numLocations())
{
    for (std::size_t idx = 0; idx != routes_.size(); ++idx)
        update(idx);
}

void RouteSet::update(std::size_t route)
{
    auto &r = routes_[route];
    auto const &visits = r.visits_;
    auto const len = visits.size();

    r.cumDist_.assign(len, 0);
    r.cumRevDist_.assign(len, 0);
    r.cumLoad_.assign(len, 0);
    for (std::size_t pos = 1; pos != len; ++pos)
    {
        r.cumDist_[pos] = r.cumDist_[pos - 1] + data_.dist(visits[pos - 1], visits[pos]);
        r.cumRevDist_[pos]
            = r.cumRevDist_[pos - 1] + data_.dist(visits[pos], visits[pos - 1]);
        r.cumLoad_[pos] = r.cumLoad_[pos - 1] + data_.demand(visits[pos]);
    }

    r.fwd_.resize(len);
    r.bwd_.resize(len);
    r.fwd_[0] = DurationSegment::forLocation(data_, visits[0]);
    r.bwd_[len - 1] = DurationSegment::forLocation(data_, visits[len - 1]);
    if (timed_)
    {
        for (std::size_t pos = 1; pos != len; ++pos)
            r.fwd_[pos] = DurationSegment::concat(
                r.fwd_[pos - 1],
                DurationSegment::forLocation(data_, visits[pos]),
                data_.duration(visits[pos - 1], visits[pos]));

        for (std::size_t pos = len - 1; pos-- > 0;)
            r.bwd_[pos] = DurationSegment::concat(
                DurationSegment::forLocation(data_, visits[pos]),
                r.bwd_[pos + 1],
                data_.duration(visits[pos], visits[pos + 1]));
    }
    else
    {
        for (std::size_t pos = 1; pos != len; ++pos)
            r.fwd_[pos] = r.fwd_[0];
        for (std::size_t pos = 0; pos + 1 < len; ++pos)
            r.bwd_[pos] = r.bwd_[len - 1];
    }

    for (std::size_t pos = 1; pos + 1 < len; ++pos)
        locs_[visits[pos]] = {route, pos};
}

void RouteSet::load(Solution const &solution)
{
    auto const &routes = solution.routes();
    for (std::size_t idx = 0; idx != routes_.size(); ++idx)
    {
        auto &visits = routes_[idx].visits_;
        visits.assign(1, 0);
        if (idx < routes.size())
            visits.insert(visits.end(),
                          routes[idx].visits().begin(),
                          routes[idx].visits().end());
        visits.push_back(0);
        update(idx);
    }
}

hgs::Solution RouteSet::exportSolution() const
{
    std::vector<Solution::Visits> routes;
    for (auto const &route : routes_)
        if (!route.empty())
            routes.emplace_back(route.visits_.begin() + 1, route.visits_.end() - 1);

    return {data_, routes};
}

hgs::Cost RouteSet::routeCost(std::size_t route, CostEvaluator const &costEvaluator) const
{
    auto const &r = routes_[route];
    return r.distance() + costEvaluator.loadPenalty(r.load(), data_.capacity())
           + costEvaluator.timeWarpPenalty(r.timeWarp());
}

hgs::ProposalStats RouteSet::proposalStats(RouteProposal const &proposal) const
{
    Distance dist = 0;
    Load load = 0;
    DurationSegment segment;
    std::size_t prevLoc = 0;

    for (std::size_t idx = 0; idx != proposal.numPieces; ++idx)
    {
        auto const &piece = proposal.pieces[idx];
        auto const &r = routes_[piece.route];
        auto const firstLoc = piece.reversed ? r[piece.last] : r[piece.first];
        auto const lastLoc = piece.reversed ? r[piece.first] : r[piece.last];

        dist += r.distBetween(piece.first, piece.last, piece.reversed);
        load += r.loadBetween(piece.first, piece.last);
        if (idx > 0)
            dist += data_.dist(prevLoc, firstLoc);

        if (timed_)
        {
            DurationSegment part;
            if (!piece.reversed && piece.first == 0)
                part = r.prefix(piece.last);
            else if (!piece.reversed && piece.last == r.endPos())
                part = r.suffix(piece.first);
            else if (!piece.reversed)
            {
                part = DurationSegment::forLocation(data_, r[piece.first]);
                for (auto pos = piece.first + 1; pos <= piece.last; ++pos)
                    part = DurationSegment::concat(
                        part,
                        DurationSegment::forLocation(data_, r[pos]),
                        data_.duration(r[pos - 1], r[pos]));
            }
            else
            {
                part = DurationSegment::forLocation(data_, r[piece.last]);
                for (auto pos = piece.last; pos-- > piece.first;)
                    part = DurationSegment::concat(
                        part,
                        DurationSegment::forLocation(data_, r[pos]),
                        data_.duration(r[pos + 1], r[pos]));
            }

            segment = idx == 0 ? part
                               : DurationSegment::concat(
                                   segment, part, data_.duration(prevLoc, firstLoc));
        }

        prevLoc = lastLoc;
    }

    return {dist, load, segment.timeWarp()};
}

hgs::Cost RouteSet::proposalCost(RouteProposal const &proposal,
                                 CostEvaluator const &costEvaluator) const
{
    auto const stats = proposalStats(proposal);
    return stats.distance + costEvaluator.loadPenalty(stats.load, data_.capacity())
           + costEvaluator.timeWarpPenalty(stats.timeWarp);
}

hgs::Cost RouteSet::delta(Move const &move, CostEvaluator const &costEvaluator) const
{
    Cost delta = 0;
    for (std::size_t idx = 0; idx != move.numRoutes; ++idx)
    {
        auto const &proposal = move.routes[idx];
        delta += proposalCost(proposal, costEvaluator) - routeCost(proposal.route, costEvaluator);
    }

    return delta;
}

void RouteSet::apply(Move const &move)
{
    std::array<std::vector<std::size_t>, 2> built;
    for (std::size_t idx = 0; idx != move.numRoutes; ++idx)
    {
        auto const &proposal = move.routes[idx];
        for (std::size_t p = 0; p != proposal.numPieces; ++p)
        {
            auto const &piece = proposal.pieces[p];
            auto const &visits = routes_[piece.route].visits_;
            if (piece.reversed)
                for (auto pos = piece.last + 1; pos-- > piece.first;)
                    built[idx].push_back(visits[pos]);
            else
                for (auto pos = piece.first; pos <= piece.last; ++pos)
                    built[idx].push_back(visits[pos]);
        }
    }

    for (std::size_t idx = 0; idx != move.numRoutes; ++idx)
    {
        auto const route = move.routes[idx].route;
        routes_[route].visits_ = std::move(built[idx]);
        update(route);
    }
}

hgs::Cost RouteSet::penalisedCost(CostEvaluator const &costEvaluator) const
{
    Cost total = 0;
    for (std::size_t idx = 0; idx != routes_.size(); ++idx)
        total += routeCost(idx, costEvaluator);

    return total;
}

std::size_t RouteSet::firstEmptyRoute() const
{
    for (std::size_t idx = 0; idx != routes_.size(); ++idx)
        if (routes_[idx].empty())
            return idx;

    return routes_.size();
}
