#include "hgs/search/Operators.hpp"

#include <fmt/format.h>

#include <array>
#include <limits>
#include <stdexcept>

using hgs::Loc;
using hgs::Move;

namespace
{
// The n clients starting at u either move after v (m = 0), or swap with the
// m clients starting at v.
std::optional<Move> exchangeMove(
    hgs::RouteSet const &routes, Loc u, std::size_t n, Loc v, std::size_t m, bool reverseU)
{
    auto const &ru = routes.route(u.route);
    auto const &rv = routes.route(v.route);

    if (u.pos == 0 || u.pos + n - 1 > ru.size())
        return std::nullopt;

    if (m == 0 && v.pos > rv.size())
        return std::nullopt;

    if (m > 0 && (v.pos == 0 || v.pos + m - 1 > rv.size()))
        return std::nullopt;

    auto const uLast = u.pos + n - 1;
    Move move;

    if (u.route == v.route)
    {
        auto &r = move.newRoute(u.route);
        if (m == 0)
        {
            if (u.pos <= v.pos && v.pos <= uLast)
                return std::nullopt;

            if (v.pos < u.pos)
            {
                r.add(u.route, 0, v.pos);
                r.add(u.route, u.pos, uLast, reverseU);
                r.add(u.route, v.pos + 1, u.pos - 1);
                r.add(u.route, uLast + 1, ru.endPos());
            }
            else
            {
                r.add(u.route, 0, u.pos - 1);
                r.add(u.route, uLast + 1, v.pos);
                r.add(u.route, u.pos, uLast, reverseU);
                r.add(u.route, v.pos + 1, ru.endPos());
            }

            return move;
        }

        auto const vLast = v.pos + m - 1;
        if (u.pos < v.pos)
        {
            if (uLast >= v.pos)
                return std::nullopt;

            r.add(u.route, 0, u.pos - 1);
            r.add(u.route, v.pos, vLast);
            r.add(u.route, uLast + 1, v.pos - 1);
            r.add(u.route, u.pos, uLast, reverseU);
            r.add(u.route, vLast + 1, ru.endPos());
        }
        else
        {
            if (vLast >= u.pos)
                return std::nullopt;

            r.add(u.route, 0, v.pos - 1);
            r.add(u.route, u.pos, uLast, reverseU);
            r.add(u.route, vLast + 1, u.pos - 1);
            r.add(u.route, v.pos, vLast);
            r.add(u.route, uLast + 1, ru.endPos());
        }

        return move;
    }

    auto &newU = move.newRoute(u.route);
    auto &newV = move.newRoute(v.route);

    newU.add(u.route, 0, u.pos - 1);
    if (m > 0)
        newU.add(v.route, v.pos, v.pos + m - 1);
    newU.add(u.route, uLast + 1, ru.endPos());

    if (m == 0)
    {
        newV.add(v.route, 0, v.pos);
        newV.add(u.route, u.pos, uLast, reverseU);
        newV.add(v.route, v.pos + 1, rv.endPos());
    }
    else
    {
        newV.add(v.route, 0, v.pos - 1);
        newV.add(u.route, u.pos, uLast, reverseU);
        newV.add(v.route, v.pos + m, rv.endPos());
    }

    return move;
}

// Route ``into`` with the client at ``removed`` taken out and the client at
// ``inserted`` (another route) placed after position ``after``.
void replaceInto(hgs::RouteProposal &proposal,
                 hgs::RouteSet const &routes,
                 std::size_t into,
                 std::size_t removed,
                 Loc inserted,
                 std::size_t after)
{
    auto const end = routes.route(into).endPos();
    if (after == removed)
        after = removed - 1;

    if (after < removed)
    {
        proposal.add(into, 0, after);
        proposal.add(inserted.route, inserted.pos, inserted.pos);
        proposal.add(into, after + 1, removed - 1);
        proposal.add(into, removed + 1, end);
    }
    else
    {
        proposal.add(into, 0, removed - 1);
        proposal.add(into, removed + 1, after);
        proposal.add(inserted.route, inserted.pos, inserted.pos);
        proposal.add(into, after + 1, end);
    }
}
}  // namespace

hgs::MoveDelta hgs::NodeOperator::evaluate(RouteSet const &routes,
                                           Loc u,
                                           Loc v,
                                           CostEvaluator const &costEvaluator) const
{
    auto const move = propose(routes, u, v);
    if (!move)
        return {};

    return {routes.delta(*move, costEvaluator), true};
}

template <std::size_t N, std::size_t M>
std::optional<Move> hgs::Exchange<N, M>::propose(RouteSet const &routes, Loc u, Loc v) const
{
    return exchangeMove(routes, u, N, v, M, false);
}

template <std::size_t N, std::size_t M> std::string_view hgs::Exchange<N, M>::name() const
{
    static auto const label = fmt::format("exchange{}{}", N, M);
    return label;
}

template class hgs::Exchange<1, 0>;
template class hgs::Exchange<2, 0>;
template class hgs::Exchange<3, 0>;
template class hgs::Exchange<1, 1>;
template class hgs::Exchange<2, 1>;
template class hgs::Exchange<2, 2>;
template class hgs::Exchange<3, 1>;
template class hgs::Exchange<3, 2>;
template class hgs::Exchange<3, 3>;

std::optional<Move>
hgs::MoveTwoClientsReversed::propose(RouteSet const &routes, Loc u, Loc v) const
{
    return exchangeMove(routes, u, 2, v, 0, true);
}

std::optional<Move> hgs::TwoOpt::propose(RouteSet const &routes, Loc u, Loc v) const
{
    auto const &ru = routes.route(u.route);
    auto const &rv = routes.route(v.route);

    if (u.pos == 0 || u.pos > ru.size() || v.pos > rv.size())
        return std::nullopt;

    Move move;
    if (u.route == v.route)
    {
        if (v.pos <= u.pos)
            return std::nullopt;

        auto &r = move.newRoute(u.route);
        r.add(u.route, 0, u.pos);
        r.add(u.route, u.pos + 1, v.pos, true);
        r.add(u.route, v.pos + 1, ru.endPos());
        return move;
    }

    auto &newU = move.newRoute(u.route);
    newU.add(u.route, 0, u.pos);
    newU.add(v.route, v.pos + 1, rv.endPos());

    auto &newV = move.newRoute(v.route);
    newV.add(v.route, 0, v.pos);
    newV.add(u.route, u.pos + 1, ru.endPos());
    return move;
}

Move hgs::relocateMove(RouteSet const &routes, Loc from, Loc after)
{
    auto move = exchangeMove(routes, from, 1, after, 0, false);
    if (!move)
        throw std::invalid_argument("relocation does not apply");

    return *move;
}

Move hgs::swapMove(RouteSet const &routes,
                   Loc first,
                   std::size_t firstAfter,
                   Loc second,
                   std::size_t secondAfter)
{
    if (first.route == second.route)
        throw std::invalid_argument("swap needs two different routes");

    Move move;
    replaceInto(move.newRoute(first.route), routes, first.route, first.pos, second, secondAfter);
    replaceInto(move.newRoute(second.route), routes, second.route, second.pos, first, firstAfter);
    return move;
}

std::optional<hgs::RouteMove> hgs::RelocateStar::best(RouteSet const &routes,
                                                      std::size_t first,
                                                      std::size_t second,
                                                      CostEvaluator const &costEvaluator) const
{
    std::optional<RouteMove> best;

    auto const search = [&](std::size_t from, std::size_t to) {
        auto const &rFrom = routes.route(from);
        auto const &rTo = routes.route(to);
        auto const fromCost = routes.routeCost(from, costEvaluator);
        auto const toCost = routes.routeCost(to, costEvaluator);

        for (std::size_t pos = 1; pos <= rFrom.size(); ++pos)
        {
            RouteProposal removal;
            removal.route = from;
            removal.add(from, 0, pos - 1);
            removal.add(from, pos + 1, rFrom.endPos());
            auto const removalDelta = routes.proposalCost(removal, costEvaluator) - fromCost;

            for (std::size_t after = 0; after <= rTo.size(); ++after)
            {
                RouteProposal insertion;
                insertion.route = to;
                insertion.add(to, 0, after);
                insertion.add(from, pos, pos);
                insertion.add(to, after + 1, rTo.endPos());

                auto const delta
                    = removalDelta + routes.proposalCost(insertion, costEvaluator) - toCost;

                if (!best || delta < best->delta.delta)
                {
                    Move move;
                    move.newRoute(from) = removal;
                    move.newRoute(to) = insertion;
                    best = RouteMove{move, {delta, true}};
                }
            }
        }
    };

    search(first, second);
    search(second, first);
    return best;
}

std::optional<hgs::RouteMove> hgs::SwapStar::best(RouteSet const &routes,
                                                  std::size_t first,
                                                  std::size_t second,
                                                  CostEvaluator const &costEvaluator) const
{
    auto const &data = routes.data();
    auto const twPenalty = costEvaluator.twPenalty();
    auto const timed = routes.timed();

    struct Insertion
    {
        Cost cost = std::numeric_limits<Cost>::max();
        std::size_t after = 0;
    };

    using Top3 = std::array<Insertion, 3>;

    // Per client of ``from``: distance delta of removal, its time warp
    // penalty delta, and the three cheapest insertion points in ``to``.
    struct Side
    {
        std::vector<Cost> removalDist;
        std::vector<Cost> removalTw;
        std::vector<Top3> top;
    };

    auto const prepare = [&](std::size_t from, std::size_t to) {
        auto const &rFrom = routes.route(from);
        auto const &rTo = routes.route(to);
        Side side;
        side.removalDist.resize(rFrom.endPos());
        side.removalTw.resize(rFrom.endPos());
        side.top.resize(rFrom.endPos());

        for (std::size_t pos = 1; pos <= rFrom.size(); ++pos)
        {
            auto const prev = rFrom[pos - 1];
            auto const client = rFrom[pos];
            auto const next = rFrom[pos + 1];
            side.removalDist[pos]
                = data.dist(prev, next) - data.dist(prev, client) - data.dist(client, next);

            if (timed)
            {
                RouteProposal removal;
                removal.route = from;
                removal.add(from, 0, pos - 1);
                removal.add(from, pos + 1, rFrom.endPos());
                side.removalTw[pos]
                    = twPenalty * (routes.proposalStats(removal).timeWarp - rFrom.timeWarp());
            }

            auto &top = side.top[pos];
            for (std::size_t after = 0; after <= rTo.size(); ++after)
            {
                auto const a = rTo[after];
                auto const b = rTo[after + 1];
                Cost cost = data.dist(a, client) + data.dist(client, b) - data.dist(a, b);

                if (timed)
                {
                    RouteProposal insertion;
                    insertion.route = to;
                    insertion.add(to, 0, after);
                    insertion.add(from, pos, pos);
                    insertion.add(to, after + 1, rTo.endPos());
                    cost += twPenalty
                            * (routes.proposalStats(insertion).timeWarp - rTo.timeWarp());
                }

                if (cost < top[0].cost)
                {
                    top[2] = top[1];
                    top[1] = top[0];
                    top[0] = {cost, after};
                }
                else if (cost < top[1].cost)
                {
                    top[2] = top[1];
                    top[1] = {cost, after};
                }
                else if (cost < top[2].cost)
                    top[2] = {cost, after};
            }
        }

        return side;
    };

    auto const sideU = prepare(first, second);
    auto const sideV = prepare(second, first);

    auto const &r1 = routes.route(first);
    auto const &r2 = routes.route(second);
    auto const capacityLoadPenalty = [&](Load load) {
        return costEvaluator.loadPenalty(load, data.capacity());
    };

    // Cheapest way to put the client at ``inserted`` into route ``into``
    // after the client at ``removed`` leaves it.
    auto const place = [&](Side const &side,
                           std::size_t into,
                           std::size_t removed,
                           Loc inserted,
                           Side const &insertedSide) -> Insertion {
        auto const &r = routes.route(into);
        auto const prev = r[removed - 1];
        auto const next = r[removed + 1];
        auto const client = inserted.route == first ? r1[inserted.pos] : r2[inserted.pos];
        auto const gone = r[removed];

        Insertion best{data.dist(prev, client) + data.dist(client, next)
                           - data.dist(prev, gone) - data.dist(gone, next),
                       removed - 1};

        if (timed)
        {
            RouteProposal inPlace;
            inPlace.route = into;
            inPlace.add(into, 0, removed - 1);
            inPlace.add(inserted.route, inserted.pos, inserted.pos);
            inPlace.add(into, removed + 1, r.endPos());
            best.cost += twPenalty * (routes.proposalStats(inPlace).timeWarp - r.timeWarp());
        }

        for (auto const &candidate : insertedSide.top[inserted.pos])
        {
            if (candidate.cost == std::numeric_limits<Cost>::max())
                break;

            if (candidate.after == removed || candidate.after + 1 == removed)
                continue;

            auto const cost = candidate.cost + side.removalDist[removed] + side.removalTw[removed];
            if (cost < best.cost)
                best = {cost, candidate.after};
        }

        return best;
    };

    std::optional<RouteMove> best;
    Cost bestEstimate = std::numeric_limits<Cost>::max();
    std::size_t bestU = 0, bestV = 0, bestUAfter = 0, bestVAfter = 0;

    auto const load1 = r1.load();
    auto const load2 = r2.load();
    auto const basePenalty = capacityLoadPenalty(load1) + capacityLoadPenalty(load2);

    for (std::size_t pu = 1; pu <= r1.size(); ++pu)
        for (std::size_t pv = 1; pv <= r2.size(); ++pv)
        {
            auto const qu = data.demand(r1[pu]);
            auto const qv = data.demand(r2[pv]);
            auto const loadDelta = capacityLoadPenalty(load1 - qu + qv)
                                   + capacityLoadPenalty(load2 - qv + qu) - basePenalty;

            auto const intoSecond = place(sideV, second, pv, {first, pu}, sideU);
            auto const intoFirst = place(sideU, first, pu, {second, pv}, sideV);

            auto const estimate = loadDelta + intoSecond.cost + intoFirst.cost;
            if (estimate < bestEstimate)
            {
                bestEstimate = estimate;
                bestU = pu;
                bestV = pv;
                bestUAfter = intoSecond.after;
                bestVAfter = intoFirst.after;
            }
        }

    if (bestU == 0)
        return best;

    auto const move = swapMove(routes, {first, bestU}, bestUAfter, {second, bestV}, bestVAfter);
    best = RouteMove{move, {routes.delta(move, costEvaluator), true}};
    return best;
}

std::vector<std::string> hgs::defaultNodeOperators()
{
    return {"exchange10",
            "exchange20",
            "exchange30",
            "move-two-clients-reversed",
            "exchange11",
            "exchange21",
            "exchange22",
            "exchange32",
            "exchange33",
            "two-opt"};
}

std::vector<std::string> hgs::defaultRouteOperators()
{
    return {"relocate-star", "swap-star"};
}

std::unique_ptr<hgs::NodeOperator> hgs::makeNodeOperator(std::string_view name)
{
    if (name == "exchange10")
        return std::make_unique<Exchange<1, 0>>();
    if (name == "exchange20")
        return std::make_unique<Exchange<2, 0>>();
    if (name == "exchange30")
        return std::make_unique<Exchange<3, 0>>();
    if (name == "exchange11")
        return std::make_unique<Exchange<1, 1>>();
    if (name == "exchange21")
        return std::make_unique<Exchange<2, 1>>();
    if (name == "exchange22")
        return std::make_unique<Exchange<2, 2>>();
    if (name == "exchange31")
        return std::make_unique<Exchange<3, 1>>();
    if (name == "exchange32")
        return std::make_unique<Exchange<3, 2>>();
    if (name == "exchange33")
        return std::make_unique<Exchange<3, 3>>();
    if (name == "move-two-clients-reversed")
        return std::make_unique<MoveTwoClientsReversed>();
    if (name == "two-opt")
        return std::make_unique<TwoOpt>();

    throw std::invalid_argument(fmt::format("unknown node operator '{}'", name));
}

std::unique_ptr<hgs::RouteOperator> hgs::makeRouteOperator(std::string_view name)
{
    if (name == "relocate-star")
        return std::make_unique<RelocateStar>();
    if (name == "swap-star")
        return std::make_unique<SwapStar>();

    throw std::invalid_argument(fmt::format("unknown route operator '{}'", name));
}
