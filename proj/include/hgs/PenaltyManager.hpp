#ifndef HGS_PENALTYMANAGER_HPP
#define HGS_PENALTYMANAGER_HPP

#include "CostEvaluator.hpp"
#include "Types.hpp"

#include <cstddef>
#include <vector>

namespace hgs
{
struct PenaltyParams
{
    Cost initCapacityPenalty = 20;
    Cost initTimeWarpPenalty = 6;
    Cost repairBooster = 12;
    std::size_t numRegistrationsBetweenUpdates = 50;
    double penaltyIncrease = 1.34;
    double penaltyDecrease = 0.32;
    double targetFeasible = 0.43;

    /// Throws std::invalid_argument when a field is out of range.
    void validate() const;
};

/**
 * Adapts the capacity and time warp penalties so that roughly
 * ``targetFeasible`` of the registered solutions satisfy each constraint.
 * Load and time feasibility are tracked, and updated, independently.
 */
class PenaltyManager
{
public:
    static constexpr Cost minPenalty = 1;
    static constexpr Cost maxPenalty = 100'000;

    explicit PenaltyManager(PenaltyParams params = {});

    void registerLoadFeasible(bool isLoadFeasible);
    void registerTimeFeasible(bool isTimeFeasible);

    /// Registers both constraint outcomes of ``solution``.
    void registerSolution(Solution const &solution);

    [[nodiscard]] Cost capacityPenalty() const { return capacityPenalty_; }
    [[nodiscard]] Cost twPenalty() const { return twPenalty_; }

    [[nodiscard]] CostEvaluator costEvaluator() const;

    /// Evaluator with both penalties multiplied by the repair booster.
    [[nodiscard]] CostEvaluator boosterCostEvaluator() const;

    [[nodiscard]] PenaltyParams const &params() const { return params_; }

private:
    PenaltyParams params_;
    Cost capacityPenalty_;
    Cost twPenalty_;
    std::vector<bool> loadFeas_;
    std::vector<bool> timeFeas_;

    [[nodiscard]] Cost compute(Cost penalty, double feasFraction) const;
    void record(std::vector<bool> &buffer, Cost &penalty, bool isFeasible);
};
}  // namespace hgs

#endif  // HGS_PENALTYMANAGER_HPP
