#ifndef HGS_SOLVERPARAMS_HPP
#define HGS_SOLVERPARAMS_HPP

#include "PenaltyManager.hpp"
#include "Population.hpp"
#include "ProblemData.hpp"
#include "search/Neighbourhood.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace hgs
{
struct GaParams
{
    double repairProbability = 0.8;
    std::size_t numIterNoImprovement = 20'000;
    std::size_t numInitialSolutions = 25;

    void validate() const;
};

/// Operator groups that can be switched on or off.
struct OperatorParams
{
    bool relocate = true;  // (1,0), (2,0), (3,0)-exchange and MoveTwoClientsReversed
    bool swap = true;      // (1,1), (2,1), (2,2), (3,2), (3,3)-exchange
    bool twoOpt = true;
    bool relocateStar = true;
    bool swapStar = true;

    [[nodiscard]] std::vector<std::string> nodeOperators() const;
    [[nodiscard]] std::vector<std::string> routeOperators() const;
};

struct SolverParams
{
    GaParams ga;
    PenaltyParams penalty;
    PopulationParams population;
    NeighbourhoodParams neighbourhood;
    OperatorParams operators;

    static SolverParams cvrp();
    static SolverParams vrptw();

    /// "cvrp" or "vrptw"; throws std::invalid_argument otherwise.
    static SolverParams profile(std::string_view name);

    /// The vrptw profile when the instance has time windows, else cvrp.
    static SolverParams forInstance(ProblemData const &data);

    /**
     * Applies ``key = value`` lines on top of ``base``. Blank lines and lines
     * starting with '#' are skipped. A ``profile`` line replaces everything
     * set so far by that profile. Throws std::invalid_argument naming the
     * line on unknown keys or bad values.
     */
    static SolverParams parseConfig(std::string_view text, SolverParams base);

    /// Sets one parameter by its config key.
    void set(std::string_view key, std::string_view value);

    /// Every parameter as config text; parseConfig of the result round-trips.
    [[nodiscard]] std::string toConfig() const;

    void validate() const;
};
}  // namespace hgs

#endif  // HGS_SOLVERPARAMS_HPP
