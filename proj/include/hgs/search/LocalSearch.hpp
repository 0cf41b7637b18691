#ifndef HGS_SEARCH_LOCALSEARCH_HPP
#define HGS_SEARCH_LOCALSEARCH_HPP

#include "Neighbourhood.hpp"
#include "Operators.hpp"
#include "RouteSet.hpp"
#include "hgs/CostEvaluator.hpp"
#include "hgs/Rng.hpp"
#include "hgs/Solution.hpp"

#include <cstddef>
#include <memory>
#include <vector>

namespace hgs
{
/**
 * First-improvement local search over a granular neighbourhood. Node moves
 * are tried for every client u and v in N(u), in a fresh random client
 * order per run. Moves into an empty route are only tried once no node move
 * improves, and route operators only once neither does. Stops when a full
 * round applies nothing.
 */
class LocalSearch
{
public:
    LocalSearch(ProblemData const &data, Neighbourhood neighbours);

    void addNodeOperator(std::unique_ptr<NodeOperator> op);
    void addRouteOperator(std::unique_ptr<RouteOperator> op);

    /// Local optimum reached from ``solution``; never costlier under
    /// ``costEvaluator``.
    [[nodiscard]] Solution run(Solution const &solution,
                               CostEvaluator const &costEvaluator,
                               Rng &rng);

    [[nodiscard]] Neighbourhood const &neighbours() const { return neighbours_; }
    [[nodiscard]] std::size_t numMovesApplied() const { return numMoves_; }

private:
    ProblemData const &data_;
    Neighbourhood neighbours_;
    RouteSet routes_;
    std::vector<std::unique_ptr<NodeOperator>> nodeOps_;
    std::vector<std::unique_ptr<RouteOperator>> routeOps_;

    std::vector<std::size_t> order_;
    std::vector<std::size_t> lastModified_;
    std::vector<std::size_t> lastTested_;
    std::vector<std::size_t> lastTestedPair_;
    std::size_t counter_ = 0;
    std::size_t numMoves_ = 0;

    bool applyNodeOps(Loc u, Loc v, CostEvaluator const &costEvaluator);
    void applyMove(Move const &move);

    bool nodePass(CostEvaluator const &costEvaluator);
    bool emptyRoutePass(CostEvaluator const &costEvaluator);
    bool routePass(CostEvaluator const &costEvaluator);
};
}  // namespace hgs

#endif  // HGS_SEARCH_LOCALSEARCH_HPP
