#ifndef HGS_COSTEVALUATOR_HPP
#define HGS_COSTEVALUATOR_HPP

#include "Solution.hpp"
#include "Types.hpp"

#include <algorithm>

namespace hgs
{
/**
 * Penalised objective: distance plus linear penalties on excess load and
 * time warp. Both penalty weights are at least one.
 */
class CostEvaluator
{
    Cost capacityPenalty_;
    Cost twPenalty_;

public:
    CostEvaluator(Cost capacityPenalty, Cost twPenalty);

    [[nodiscard]] Cost capacityPenalty() const { return capacityPenalty_; }
    [[nodiscard]] Cost twPenalty() const { return twPenalty_; }

    /// Penalty for a route carrying ``load`` with vehicle ``capacity``.
    [[nodiscard]] Cost loadPenalty(Load load, Load capacity) const
    {
        return capacityPenalty_ * std::max<Load>(load - capacity, 0);
    }

    [[nodiscard]] Cost timeWarpPenalty(Duration timeWarp) const
    {
        return twPenalty_ * timeWarp;
    }

    /// Throws std::overflow_error if the sum does not fit.
    [[nodiscard]] Cost penalisedCost(Solution const &solution) const;

    /// Distance if the solution is feasible, otherwise the largest Cost.
    [[nodiscard]] Cost cost(Solution const &solution) const;

    bool operator==(CostEvaluator const &) const = default;
};
}  // namespace hgs

#endif  // HGS_COSTEVALUATOR_HPP
