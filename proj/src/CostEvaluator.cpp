#include "hgs/CostEvaluator.hpp"

#include <limits>
#include <stdexcept>

using hgs::CostEvaluator;

namespace
{
hgs::Cost checkedMulAdd(hgs::Cost acc, hgs::Cost weight, hgs::Cost amount)
{
    hgs::Cost product = 0;
    hgs::Cost sum = 0;
    if (__builtin_mul_overflow(weight, amount, &product)
        || __builtin_add_overflow(acc, product, &sum))
        throw std::overflow_error("penalised cost overflows 64 bits");

    return sum;
}
}  // namespace

CostEvaluator::CostEvaluator(Cost capacityPenalty, Cost twPenalty)
    : capacityPenalty_(capacityPenalty), twPenalty_(twPenalty)
{
    if (capacityPenalty < 1 || twPenalty < 1)
        throw std::invalid_argument("penalty weights must be at least 1");
}

hgs::Cost CostEvaluator::penalisedCost(Solution const &solution) const
{
    auto cost = checkedMulAdd(solution.distance(), capacityPenalty_, solution.excessLoad());
    return checkedMulAdd(cost, twPenalty_, solution.timeWarp());
}

hgs::Cost CostEvaluator::cost(Solution const &solution) const
{
    return solution.isFeasible() ? solution.distance()
                                 : std::numeric_limits<Cost>::max();
}
