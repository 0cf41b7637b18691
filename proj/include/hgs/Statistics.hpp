#ifndef HGS_STATISTICS_HPP
#define HGS_STATISTICS_HPP

#include "CostEvaluator.hpp"
#include "Population.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

namespace hgs
{
struct SubPopulationStats
{
    std::size_t size = 0;
    std::optional<Cost> best;     // empty when the subpopulation is
    std::optional<double> average;
    double diversity = 0.0;
};

struct StatisticsRow
{
    std::size_t iteration = 0;
    double elapsed = 0.0;
    SubPopulationStats feasible;
    SubPopulationStats infeasible;
    double iterationRuntime = 0.0;
};

/// Per-iteration trace of the population. Costs are penalised costs under
/// the evaluator of that iteration, which for feasible solutions is their
/// distance.
class Statistics
{
public:
    void collect(Population const &population,
                 CostEvaluator const &costEvaluator,
                 std::size_t iteration,
                 double elapsed,
                 double iterationRuntime);

    [[nodiscard]] std::vector<StatisticsRow> const &rows() const { return rows_; }
    [[nodiscard]] bool empty() const { return rows_.empty(); }

    /// CSV with a header row. Without timing the elapsed_s and iter_s
    /// columns are left out, which makes traces of identical runs identical.
    void writeCsv(std::ostream &out, bool withTiming = true) const;

private:
    std::vector<StatisticsRow> rows_;
};
}  // namespace hgs

#endif  // HGS_STATISTICS_HPP
