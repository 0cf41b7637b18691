#ifndef HGS_SOLUTION_HPP
#define HGS_SOLUTION_HPP

#include "ProblemData.hpp"
#include "RouteEval.hpp"
#include "Rng.hpp"

#include <cstddef>
#include <vector>

namespace hgs
{
/**
 * Immutable set of non-empty routes that together visit every client exactly
 * once. Route and solution statistics are computed once on construction.
 */
class Solution
{
public:
    using Visits = std::vector<std::size_t>;

    class Route
    {
        Visits visits_;
        RouteStats stats_;

    public:
        Route(ProblemData const &data, Visits visits);

        [[nodiscard]] Visits const &visits() const { return visits_; }
        [[nodiscard]] std::size_t size() const { return visits_.size(); }
        [[nodiscard]] Distance distance() const { return stats_.distance; }
        [[nodiscard]] Load load() const { return stats_.load; }
        [[nodiscard]] Duration timeWarp() const { return stats_.timeWarp; }
        [[nodiscard]] Duration duration() const { return stats_.duration; }

        bool operator==(Route const &other) const { return visits_ == other.visits_; }
    };

    /// Throws std::invalid_argument on a missing, duplicated or unknown
    /// client, or when more non-empty routes are given than vehicles exist.
    /// Empty routes are dropped.
    Solution(ProblemData const &data, std::vector<Visits> const &routes);

    /// Clients shuffled uniformly and dealt round-robin over the vehicles.
    static Solution random(ProblemData const &data, Rng &rng);

    [[nodiscard]] std::vector<Route> const &routes() const { return routes_; }
    [[nodiscard]] std::size_t numRoutes() const { return routes_.size(); }
    [[nodiscard]] std::size_t numClients() const { return succ_.size() - 1; }

    [[nodiscard]] Distance distance() const { return distance_; }
    [[nodiscard]] Load excessLoad() const { return excessLoad_; }
    [[nodiscard]] Duration timeWarp() const { return timeWarp_; }

    [[nodiscard]] bool hasExcessLoad() const { return excessLoad_ > 0; }
    [[nodiscard]] bool hasTimeWarp() const { return timeWarp_ > 0; }
    [[nodiscard]] bool isFeasible() const { return !hasExcessLoad() && !hasTimeWarp(); }

    /// Next location after ``client`` in its route; 0 when it is the last.
    [[nodiscard]] std::size_t successor(std::size_t client) const { return succ_[client]; }

    /// Location before ``client`` in its route; 0 when it is the first.
    [[nodiscard]] std::size_t predecessor(std::size_t client) const { return pred_[client]; }

    /// Route sets compare equal irrespective of route order.
    bool operator==(Solution const &other) const;

private:
    std::vector<Route> routes_;
    std::vector<std::size_t> succ_;
    std::vector<std::size_t> pred_;
    Distance distance_ = 0;
    Load excessLoad_ = 0;
    Duration timeWarp_ = 0;
};

/// Fraction of clients whose successor differs between the two solutions.
double brokenPairsDistance(Solution const &first, Solution const &second);
}  // namespace hgs

#endif  // HGS_SOLUTION_HPP
