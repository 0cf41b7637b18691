#ifndef HGS_GENETICALGORITHM_HPP
#define HGS_GENETICALGORITHM_HPP

#include "ProblemData.hpp"
#include "Solution.hpp"
#include "SolverParams.hpp"
#include "Statistics.hpp"
#include "StoppingCriterion.hpp"

#include <cstddef>
#include <cstdint>

namespace hgs
{
struct Result
{
    /// Best feasible solution observed, or the best infeasible one when no
    /// feasible solution was ever found.
    Solution best;
    std::size_t iterations = 0;
    double runtime = 0.0;
    Statistics stats;

    [[nodiscard]] bool isFeasible() const { return best.isFeasible(); }

    /// Total distance of the best solution.
    [[nodiscard]] Cost cost() const { return best.distance(); }
};

/**
 * Hybrid genetic search. Each iteration selects two parents by tournament,
 * recombines them, improves the offspring by local search (sometimes
 * repairing it with boosted penalties) and adds the outcome to the
 * population. The population restarts after too many iterations without a
 * new best feasible solution.
 */
class GeneticAlgorithm
{
public:
    GeneticAlgorithm(ProblemData const &data, SolverParams params, std::uint64_t seed);

    [[nodiscard]] Result run(StoppingCriterion const &stop);

private:
    ProblemData const &data_;
    SolverParams params_;
    std::uint64_t seed_;
};
}  // namespace hgs

#endif  // HGS_GENETICALGORITHM_HPP
