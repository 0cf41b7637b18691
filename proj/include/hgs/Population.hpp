#ifndef HGS_POPULATION_HPP
#define HGS_POPULATION_HPP

#include "CostEvaluator.hpp"
#include "Rng.hpp"
#include "Solution.hpp"

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

namespace hgs
{
struct PopulationParams
{
    std::size_t minPopSize = 25;
    std::size_t generationSize = 40;
    std::size_t numElite = 4;
    std::size_t numClose = 5;
    double lbDiversity = 0.1;
    double ubDiversity = 0.5;
    std::size_t tournamentK = 2;

    [[nodiscard]] std::size_t maxPopSize() const { return minPopSize + generationSize; }

    void validate() const;
};

/**
 * Either the feasible or the infeasible part of the population. Every member
 * keeps a list of broken pairs distances to all other members, sorted
 * ascending. Once the size exceeds minPopSize + generationSize, survivor
 * selection shrinks it back to minPopSize.
 */
class SubPopulation
{
public:
    using SolutionPtr = std::shared_ptr<Solution const>;

    enum class Kind
    {
        Feasible,
        Infeasible
    };

    struct Member
    {
        SolutionPtr solution;
        double fitness = 0.0;
        std::vector<std::pair<double, Solution const *>> proximity;
    };

    SubPopulation(PopulationParams const &params, Kind kind);

    /// Throws std::invalid_argument if the solution's feasibility does not
    /// match this subpopulation.
    void add(SolutionPtr solution, CostEvaluator const &costEvaluator);

    /// Removes duplicates first, then worst biased fitness, until exactly
    /// minPopSize members remain. Fitness is recomputed after every removal.
    void purge(CostEvaluator const &costEvaluator);

    /// Recomputes the biased fitness of every member; lower is better.
    void updateFitness(CostEvaluator const &costEvaluator);

    /// Mean broken pairs distance to the closest members, honouring the
    /// diversity bounds where such members exist.
    [[nodiscard]] double avgDistanceClosest(Member const &member) const;

    /// Mean of avgDistanceClosest over all members; zero when empty.
    [[nodiscard]] double avgDiversity() const;

    [[nodiscard]] std::size_t size() const { return members_.size(); }
    [[nodiscard]] bool empty() const { return members_.empty(); }
    [[nodiscard]] Member const &operator[](std::size_t idx) const { return members_[idx]; }
    [[nodiscard]] auto begin() const { return members_.begin(); }
    [[nodiscard]] auto end() const { return members_.end(); }
    [[nodiscard]] Kind kind() const { return kind_; }

    void clear() { members_.clear(); }

private:
    PopulationParams params_;
    Kind kind_;
    std::vector<Member> members_;

    void remove(std::size_t idx);
};

class Population
{
public:
    using SolutionPtr = SubPopulation::SolutionPtr;

    explicit Population(PopulationParams params = {});

    void add(SolutionPtr solution, CostEvaluator const &costEvaluator);

    /// k-way tournament over both subpopulations, drawing with replacement.
    /// Throws std::runtime_error when the population is empty.
    [[nodiscard]] SolutionPtr tournament(Rng &rng,
                                         CostEvaluator const &costEvaluator,
                                         std::size_t k);

    /// Two tournament winners; the second is drawn again once if it
    /// duplicates the first.
    [[nodiscard]] std::pair<SolutionPtr, SolutionPtr>
    select(Rng &rng, CostEvaluator const &costEvaluator);

    [[nodiscard]] SubPopulation const &feasible() const { return feasible_; }
    [[nodiscard]] SubPopulation const &infeasible() const { return infeasible_; }
    [[nodiscard]] std::size_t size() const { return feasible_.size() + infeasible_.size(); }
    [[nodiscard]] PopulationParams const &params() const { return params_; }

    void clear();

private:
    PopulationParams params_;
    SubPopulation feasible_;
    SubPopulation infeasible_;
};
}  // namespace hgs

#endif  // HGS_POPULATION_HPP
