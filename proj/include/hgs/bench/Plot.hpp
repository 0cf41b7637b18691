#ifndef HGS_BENCH_PLOT_HPP
#define HGS_BENCH_PLOT_HPP

#include "hgs/ProblemData.hpp"
#include "hgs/Solution.hpp"
#include "hgs/Statistics.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace hgs::bench
{
struct Series
{
    std::string name;
    std::vector<std::pair<double, double>> points;
};

struct Chart
{
    std::string title;
    std::string xLabel;
    std::string yLabel;
    std::vector<Series> series;
};

/// Static SVG line chart with axes, tick labels and a legend.
void writeLineChart(std::ostream &out, Chart const &chart);

/// Population diversity, best and average objectives, and iteration runtimes
/// over the iterations of a run.
Chart diversityChart(Statistics const &stats);
Chart objectiveChart(Statistics const &stats);
Chart runtimeChart(Statistics const &stats);

/// Writes diversity.svg, objectives.svg and runtimes.svg into ``dir``,
/// creating it when needed. Returns the paths written.
std::vector<std::filesystem::path> writeStatisticsPlots(Statistics const &stats,
                                                        std::filesystem::path const &dir);

/// Routes drawn over the location coordinates, the depot as a square.
void writeSolutionPlot(std::ostream &out, ProblemData const &data, Solution const &solution);
}  // namespace hgs::bench

#endif  // HGS_BENCH_PLOT_HPP
