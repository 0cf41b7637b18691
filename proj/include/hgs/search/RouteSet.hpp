#ifndef HGS_SEARCH_ROUTESET_HPP
#define HGS_SEARCH_ROUTESET_HPP

#include "hgs/CostEvaluator.hpp"
#include "hgs/ProblemData.hpp"
#include "hgs/RouteEval.hpp"
#include "hgs/Solution.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace hgs
{
/// A position in the search state: route index and offset into that route's
/// visits, where offset 0 is the start depot.
struct Loc
{
    std::size_t route = 0;
    std::size_t pos = 0;

    bool operator==(Loc const &) const = default;
};

/// Consecutive positions ``first..last`` (inclusive) of one route, possibly
/// traversed in reverse. Ranges with first > last are empty.
struct Piece
{
    std::size_t route = 0;
    std::size_t first = 0;
    std::size_t last = 0;
    bool reversed = false;
};

/// Replacement visit sequence for one route, spelled out as pieces of the
/// current routes. Must start at a start depot and end at an end depot.
struct RouteProposal
{
    static constexpr std::size_t maxPieces = 5;

    std::size_t route = 0;
    std::array<Piece, maxPieces> pieces{};
    std::size_t numPieces = 0;

    /// Appends the range unless it is empty.
    void add(std::size_t from, std::size_t first, std::size_t last, bool reversed = false);
};

/// A move rewrites at most two routes.
struct Move
{
    std::array<RouteProposal, 2> routes{};
    std::size_t numRoutes = 0;

    RouteProposal &newRoute(std::size_t route);
};

/// Raw totals of a proposed route.
struct ProposalStats
{
    Distance distance = 0;
    Load load = 0;
    Duration timeWarp = 0;
};

struct MoveDelta
{
    Cost delta = 0;
    bool applicable = false;
};

/**
 * Mutable routes used by the local search. Every route holds numVehicles
 * slots (some possibly empty) with depot sentinels at both ends, and caches
 * prefix and suffix statistics so that the pieces of a proposal can be
 * evaluated without materialising the move.
 */
class RouteSet
{
public:
    class Route
    {
    public:
        [[nodiscard]] std::vector<std::size_t> const &visits() const { return visits_; }

        /// Number of clients.
        [[nodiscard]] std::size_t size() const { return visits_.size() - 2; }
        [[nodiscard]] bool empty() const { return size() == 0; }
        [[nodiscard]] std::size_t endPos() const { return visits_.size() - 1; }
        [[nodiscard]] std::size_t operator[](std::size_t pos) const { return visits_[pos]; }

        [[nodiscard]] Distance distance() const { return cumDist_.back(); }
        [[nodiscard]] Load load() const { return cumLoad_.back(); }
        [[nodiscard]] Duration timeWarp() const { return fwd_.back().timeWarp(); }

        /// Distance of positions first..last, either direction.
        [[nodiscard]] Distance distBetween(std::size_t first, std::size_t last, bool reversed) const;
        [[nodiscard]] Load loadBetween(std::size_t first, std::size_t last) const;
        [[nodiscard]] DurationSegment const &prefix(std::size_t pos) const { return fwd_[pos]; }
        [[nodiscard]] DurationSegment const &suffix(std::size_t pos) const { return bwd_[pos]; }

    private:
        friend class RouteSet;

        std::vector<std::size_t> visits_{0, 0};
        std::vector<Distance> cumDist_;
        std::vector<Distance> cumRevDist_;
        std::vector<Load> cumLoad_;
        std::vector<DurationSegment> fwd_;
        std::vector<DurationSegment> bwd_;
    };

    explicit RouteSet(ProblemData const &data);

    /// Replaces the current routes by those of ``solution``.
    void load(Solution const &solution);

    [[nodiscard]] Solution exportSolution() const;

    [[nodiscard]] std::size_t numRoutes() const { return routes_.size(); }
    [[nodiscard]] Route const &route(std::size_t idx) const { return routes_[idx]; }
    [[nodiscard]] Loc where(std::size_t client) const { return locs_[client]; }
    [[nodiscard]] ProblemData const &data() const { return data_; }

    /// False when no location has a binding time window; durations are then
    /// not tracked at all.
    [[nodiscard]] bool timed() const { return timed_; }

    /// Distance plus load and time warp penalties of one route.
    [[nodiscard]] Cost routeCost(std::size_t route, CostEvaluator const &costEvaluator) const;

    [[nodiscard]] ProposalStats proposalStats(RouteProposal const &proposal) const;

    /// Penalised cost of the route described by ``proposal``.
    [[nodiscard]] Cost proposalCost(RouteProposal const &proposal,
                                    CostEvaluator const &costEvaluator) const;

    /// Exact change in penalised cost if ``move`` were applied.
    [[nodiscard]] Cost delta(Move const &move, CostEvaluator const &costEvaluator) const;

    void apply(Move const &move);

    /// Sum of routeCost over all routes.
    [[nodiscard]] Cost penalisedCost(CostEvaluator const &costEvaluator) const;

    /// Index of the first empty route, or numRoutes() when none exists.
    [[nodiscard]] std::size_t firstEmptyRoute() const;

private:
    ProblemData const &data_;
    bool timed_;
    std::vector<Route> routes_;
    std::vector<Loc> locs_;

    void update(std::size_t route);
};
}  // namespace hgs

#endif  // HGS_SEARCH_ROUTESET_HPP
