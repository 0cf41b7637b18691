#include "hgs/Statistics.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <algorithm>
#include <ostream>

using hgs::Statistics;

namespace
{
hgs::SubPopulationStats summarise(hgs::SubPopulation const &subPop,
                                  hgs::CostEvaluator const &costEvaluator)
{
    hgs::SubPopulationStats stats;
    stats.size = subPop.size();
    stats.diversity = subPop.avgDiversity();
    if (subPop.empty())
        return stats;

    hgs::Cost best = costEvaluator.penalisedCost(*subPop[0].solution);
    double total = 0.0;
    for (auto const &member : subPop)
    {
        auto const cost = costEvaluator.penalisedCost(*member.solution);
        best = std::min(best, cost);
        total += static_cast<double>(cost);
    }

    stats.best = best;
    stats.average = total / static_cast<double>(subPop.size());
    return stats;
}

std::string columns(hgs::SubPopulationStats const &stats)
{
    return fmt::format("{},{},{},{:.6f}",
                       stats.size,
                       stats.best ? fmt::format("{}", *stats.best) : "",
                       stats.average ? fmt::format("{:.2f}", *stats.average) : "",
                       stats.diversity);
}
}  // namespace

void Statistics::collect(Population const &population,
                         CostEvaluator const &costEvaluator,
                         std::size_t iteration,
                         double elapsed,
                         double iterationRuntime)
{
    rows_.push_back({iteration,
                     elapsed,
                     summarise(population.feasible(), costEvaluator),
                     summarise(population.infeasible(), costEvaluator),
                     iterationRuntime});
}

void Statistics::writeCsv(std::ostream &out, bool withTiming) const
{
    if (withTiming)
        out << "iteration,elapsed_s,feas_size,feas_best,feas_avg,feas_div,"
               "infeas_size,infeas_best,infeas_avg,infeas_div,iter_s\n";
    else
        out << "iteration,feas_size,feas_best,feas_avg,feas_div,"
               "infeas_size,infeas_best,infeas_avg,infeas_div\n";

    for (auto const &row : rows_)
    {
        if (withTiming)
            fmt::print(out,
                       "{},{:.6f},{},{},{:.6f}\n",
                       row.iteration,
                       row.elapsed,
                       columns(row.feasible),
                       columns(row.infeasible),
                       row.iterationRuntime);
        else
            fmt::print(out,
                       "{},{},{}\n",
                       row.iteration,
                       columns(row.feasible),
                       columns(row.infeasible));
    }
}
