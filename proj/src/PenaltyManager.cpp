#include "hgs/PenaltyManager.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

using hgs::PenaltyManager;

namespace
{
// Products like 20 * 0.85 are not exact in binary floating point; rounding is
// done with this slack so such values land on the intended integer.
constexpr double roundingSlack = 1e-9;
}  // namespace

void hgs::PenaltyParams::validate() const
{
    if (initCapacityPenalty < 1 || initTimeWarpPenalty < 1)
        throw std::invalid_argument("initial penalties must be at least 1");

    if (repairBooster < 1)
        throw std::invalid_argument("repair booster must be at least 1");

    if (numRegistrationsBetweenUpdates < 1)
        throw std::invalid_argument("registrations between updates must be positive");

    if (!(penaltyIncrease > 1.0))
        throw std::invalid_argument("penalty increase must exceed 1");

    if (!(penaltyDecrease > 0.0 && penaltyDecrease < 1.0))
        throw std::invalid_argument("penalty decrease must be in (0, 1)");

    if (!(targetFeasible > 0.0 && targetFeasible < 1.0))
        throw std::invalid_argument("target feasible must be in (0, 1)");
}

PenaltyManager::PenaltyManager(PenaltyParams params)
    : params_(params),
      capacityPenalty_(std::clamp(params.initCapacityPenalty, minPenalty, maxPenalty)),
      twPenalty_(std::clamp(params.initTimeWarpPenalty, minPenalty, maxPenalty))
{
    params_.validate();
    loadFeas_.reserve(params_.numRegistrationsBetweenUpdates);
    timeFeas_.reserve(params_.numRegistrationsBetweenUpdates);
}

hgs::Cost PenaltyManager::compute(Cost penalty, double feasFraction) const
{
    auto const value = static_cast<double>(penalty);

    double updated = value;
    if (feasFraction < params_.targetFeasible)
        updated = std::ceil(value * params_.penaltyIncrease - roundingSlack);
    else if (feasFraction > params_.targetFeasible)
        updated = std::floor(value * params_.penaltyDecrease + roundingSlack);

    updated = std::clamp(updated,
                         static_cast<double>(minPenalty),
                         static_cast<double>(maxPenalty));

    return static_cast<Cost>(updated);
}

void PenaltyManager::record(std::vector<bool> &buffer, Cost &penalty, bool isFeasible)
{
    buffer.push_back(isFeasible);
    if (buffer.size() < params_.numRegistrationsBetweenUpdates)
        return;

    auto const numFeas = std::count(buffer.begin(), buffer.end(), true);
    auto const fraction = static_cast<double>(numFeas) / static_cast<double>(buffer.size());

    penalty = compute(penalty, fraction);
    buffer.clear();
}

void PenaltyManager::registerLoadFeasible(bool isLoadFeasible)
{
    record(loadFeas_, capacityPenalty_, isLoadFeasible);
}

void PenaltyManager::registerTimeFeasible(bool isTimeFeasible)
{
    record(timeFeas_, twPenalty_, isTimeFeasible);
}

void PenaltyManager::registerSolution(Solution const &solution)
{
    registerLoadFeasible(!solution.hasExcessLoad());
    registerTimeFeasible(!solution.hasTimeWarp());
}

hgs::CostEvaluator PenaltyManager::costEvaluator() const
{
    return {capacityPenalty_, twPenalty_};
}

hgs::CostEvaluator PenaltyManager::boosterCostEvaluator() const
{
    return {capacityPenalty_ * params_.repairBooster, twPenalty_ * params_.repairBooster};
}
