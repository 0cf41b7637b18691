#ifndef HGS_CROSSOVER_HPP
#define HGS_CROSSOVER_HPP

#include "CostEvaluator.hpp"
#include "ProblemData.hpp"
#include "Rng.hpp"
#include "Solution.hpp"

#include <cstddef>
#include <vector>

namespace hgs
{
struct CrossoverOutcome
{
    Solution offspring;
    std::size_t numReinserted = 0;

    // The exchanged windows: routes startA.. of the first parent were
    // replaced by routes startB.. of the second, wrapping around.
    std::size_t startA = 0;
    std::size_t startB = 0;
    std::size_t numExchanged = 0;
};

/**
 * Selective route exchange. A window of consecutive routes of the first
 * parent is replaced by an equally sized window of the second, the windows
 * being aligned to share as many clients as possible. Of the two ways to
 * resolve clients that end up visited twice, the cheaper offspring wins.
 */
CrossoverOutcome srex(Solution const &first,
                      Solution const &second,
                      ProblemData const &data,
                      CostEvaluator const &costEvaluator,
                      Rng &rng);

/// Inserts ``unplanned`` clients one at a time, in order, each where it adds
/// the least penalised cost. A new route is an option while vehicles remain.
/// Ties go to the earliest route, then the earliest slot.
std::vector<Solution::Visits> greedyReinsert(ProblemData const &data,
                                             std::vector<Solution::Visits> routes,
                                             std::vector<std::size_t> const &unplanned,
                                             CostEvaluator const &costEvaluator);
}  // namespace hgs

#endif  // HGS_CROSSOVER_HPP
