#ifndef HGS_SEARCH_OPERATORS_HPP
#define HGS_SEARCH_OPERATORS_HPP

#include "RouteSet.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hgs
{
/// Move evaluator over a pair of positions; ``u`` is always a client.
class NodeOperator
{
public:
    virtual ~NodeOperator() = default;

    /// The move for (u, v), or nothing when it does not apply there.
    [[nodiscard]] virtual std::optional<Move>
    propose(RouteSet const &routes, Loc u, Loc v) const = 0;

    [[nodiscard]] virtual std::string_view name() const = 0;

    [[nodiscard]] MoveDelta evaluate(RouteSet const &routes,
                                     Loc u,
                                     Loc v,
                                     CostEvaluator const &costEvaluator) const;
};

/**
 * (N, M)-exchange. With M = 0 the N clients starting at u are moved after v;
 * otherwise they trade places with the M clients starting at v. Segments may
 * not contain a depot or overlap.
 */
template <std::size_t N, std::size_t M> class Exchange final : public NodeOperator
{
    static_assert(N >= M && N > 0);

public:
    [[nodiscard]] std::optional<Move> propose(RouteSet const &routes, Loc u, Loc v) const override;
    [[nodiscard]] std::string_view name() const override;
};

/// u and its successor, in reverse order, moved after v.
class MoveTwoClientsReversed final : public NodeOperator
{
public:
    [[nodiscard]] std::optional<Move> propose(RouteSet const &routes, Loc u, Loc v) const override;
    [[nodiscard]] std::string_view name() const override { return "move-two-clients-reversed"; }
};

/// Replaces u -> x and v -> y by u -> y and v -> x across routes; within a
/// route (u before v) this reverses x..v.
class TwoOpt final : public NodeOperator
{
public:
    [[nodiscard]] std::optional<Move> propose(RouteSet const &routes, Loc u, Loc v) const override;
    [[nodiscard]] std::string_view name() const override { return "two-opt"; }
};

struct RouteMove
{
    Move move;
    MoveDelta delta;
};

/// Move evaluator over a pair of distinct non-empty routes.
class RouteOperator
{
public:
    virtual ~RouteOperator() = default;

    /// Best move found between the routes, with its exact delta.
    [[nodiscard]] virtual std::optional<RouteMove> best(RouteSet const &routes,
                                                        std::size_t first,
                                                        std::size_t second,
                                                        CostEvaluator const &costEvaluator) const
        = 0;

    [[nodiscard]] virtual std::string_view name() const = 0;
};

/// Best single-client relocation between the two routes, in either
/// direction and to any position.
class RelocateStar final : public RouteOperator
{
public:
    [[nodiscard]] std::optional<RouteMove> best(RouteSet const &routes,
                                                std::size_t first,
                                                std::size_t second,
                                                CostEvaluator const &costEvaluator) const override;
    [[nodiscard]] std::string_view name() const override { return "relocate-star"; }
};

/**
 * Best swap of a client u of one route with a client v of the other, each
 * reinserted at its best position in the other route. Insertion positions
 * come from the three cheapest insertion points in the unmodified route plus
 * the position vacated by the swapped client. Without time windows the
 * selected move is optimal over all such swaps; with time windows selection
 * uses an additive time warp estimate, but the returned delta is exact.
 */
class SwapStar final : public RouteOperator
{
public:
    [[nodiscard]] std::optional<RouteMove> best(RouteSet const &routes,
                                                std::size_t first,
                                                std::size_t second,
                                                CostEvaluator const &costEvaluator) const override;
    [[nodiscard]] std::string_view name() const override { return "swap-star"; }
};

/// Client at ``from`` removed and reinserted after position ``after`` of
/// another route.
Move relocateMove(RouteSet const &routes, Loc from, Loc after);

/// Client at ``first`` goes after ``firstAfter`` in the route of ``second``
/// and vice versa. An insertion point equal to the removed client's own
/// position, or its predecessor's, means taking over the vacated slot.
Move swapMove(RouteSet const &routes, Loc first, std::size_t firstAfter, Loc second, std::size_t secondAfter);

/// Node operator names in their default order.
std::vector<std::string> defaultNodeOperators();
std::vector<std::string> defaultRouteOperators();

/// Throws std::invalid_argument for an unknown name.
std::unique_ptr<NodeOperator> makeNodeOperator(std::string_view name);
std::unique_ptr<RouteOperator> makeRouteOperator(std::string_view name);
}  // namespace hgs

#endif  // HGS_SEARCH_OPERATORS_HPP
