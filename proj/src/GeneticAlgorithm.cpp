#include "hgs/GeneticAlgorithm.hpp"

#include "hgs/Crossover.hpp"
#include "hgs/PenaltyManager.hpp"
#include "hgs/Population.hpp"
#include "hgs/search/LocalSearch.hpp"

#include <chrono>
#include <memory>
#include <optional>

using hgs::GeneticAlgorithm;

namespace
{
using Clock = std::chrono::steady_clock;

double secondsSince(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}
}  // namespace

GeneticAlgorithm::GeneticAlgorithm(ProblemData const &data,
                                   SolverParams params,
                                   std::uint64_t seed)
    : data_(data), params_(std::move(params)), seed_(seed)
{
    params_.validate();
}

hgs::Result GeneticAlgorithm::run(StoppingCriterion const &stop)
{
    auto const start = Clock::now();

    Rng rng(seed_);
    PenaltyManager penalties(params_.penalty);
    Population population(params_.population);

    LocalSearch search(data_, computeNeighbours(data_, params_.neighbourhood));
    for (auto const &name : params_.operators.nodeOperators())
        search.addNodeOperator(makeNodeOperator(name));
    for (auto const &name : params_.operators.routeOperators())
        search.addRouteOperator(makeRouteOperator(name));

    std::optional<Solution> bestFeasible;
    std::optional<Solution> bestInfeasible;
    Cost bestInfeasibleCost = 0;

    // True on a strictly better feasible solution.
    auto const track = [&](Solution const &candidate, CostEvaluator const &costEvaluator) {
        if (candidate.isFeasible())
        {
            if (!bestFeasible || candidate.distance() < bestFeasible->distance())
            {
                bestFeasible = candidate;
                return true;
            }

            return false;
        }

        if (!bestFeasible)
        {
            auto const cost = costEvaluator.penalisedCost(candidate);
            if (!bestInfeasible || cost < bestInfeasibleCost)
            {
                bestInfeasible = candidate;
                bestInfeasibleCost = cost;
            }
        }

        return false;
    };

    auto const initialise = [&]() {
        for (std::size_t idx = 0; idx != params_.ga.numInitialSolutions; ++idx)
        {
            auto const costEvaluator = penalties.costEvaluator();
            auto improved = search.run(Solution::random(data_, rng), costEvaluator, rng);
            penalties.registerSolution(improved);
            track(improved, costEvaluator);
            population.add(std::make_shared<Solution const>(std::move(improved)),
                           costEvaluator);
        }
    };

    initialise();

    Statistics stats;
    SearchProgress progress;
    progress.elapsed = secondsSince(start);
    std::size_t sinceRestart = 0;

    while (!stop.shouldStop(progress))
    {
        auto const iterStart = Clock::now();

        if (sinceRestart >= params_.ga.numIterNoImprovement)
        {
            population.clear();
            initialise();
            sinceRestart = 0;
        }

        auto const costEvaluator = penalties.costEvaluator();
        auto const [first, second] = population.select(rng, costEvaluator);
        auto offspring = srex(*first, *second, data_, costEvaluator, rng).offspring;

        auto improved = search.run(offspring, costEvaluator, rng);
        penalties.registerSolution(improved);
        bool isNewBest = track(improved, costEvaluator);

        if (!improved.isFeasible() && rand01(rng) < params_.ga.repairProbability)
        {
            auto repaired = search.run(improved, penalties.boosterCostEvaluator(), rng);
            isNewBest = track(repaired, costEvaluator) || isNewBest;

            if (repaired.isFeasible()
                || costEvaluator.penalisedCost(repaired) < costEvaluator.penalisedCost(improved))
                improved = std::move(repaired);
        }

        population.add(std::make_shared<Solution const>(std::move(improved)), costEvaluator);

        ++progress.iteration;
        progress.sinceImprovement = isNewBest ? 0 : progress.sinceImprovement + 1;
        sinceRestart = isNewBest ? 0 : sinceRestart + 1;
        progress.elapsed = secondsSince(start);

        stats.collect(population,
                      penalties.costEvaluator(),
                      progress.iteration,
                      progress.elapsed,
                      secondsSince(iterStart));
    }

    return {bestFeasible ? *bestFeasible : *bestInfeasible,
            progress.iteration,
            secondsSince(start),
            std::move(stats)};
}
