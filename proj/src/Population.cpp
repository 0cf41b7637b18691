#include "hgs/Population.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

using hgs::Population;
using hgs::SubPopulation;

void hgs::PopulationParams::validate() const
{
    if (minPopSize < 1 || generationSize < 1 || numElite < 1 || numClose < 1
        || tournamentK < 1)
        throw std::invalid_argument("population sizes must be positive");

    if (!(0.0 <= lbDiversity && lbDiversity < ubDiversity && ubDiversity <= 1.0))
        throw std::invalid_argument("diversity bounds must satisfy 0 <= lb < ub <= 1");
}

SubPopulation::SubPopulation(PopulationParams const &params, Kind kind)
    : params_(params), kind_(kind)
{
    params_.validate();
}

void SubPopulation::add(SolutionPtr solution, CostEvaluator const &costEvaluator)
{
    if (solution->isFeasible() != (kind_ == Kind::Feasible))
        throw std::invalid_argument("solution does not belong in this subpopulation");

    Member member{std::move(solution), 0.0, {}};
    auto const *sol = member.solution.get();

    auto const byDistance = [](auto const &lhs, auto const &rhs) {
        return lhs.first < rhs.first;
    };

    for (auto &other : members_)
    {
        auto const dist = brokenPairsDistance(*sol, *other.solution);

        auto &otherProx = other.proximity;
        auto const place = std::upper_bound(
            otherProx.begin(), otherProx.end(), std::pair{dist, sol}, byDistance);
        otherProx.emplace(place, dist, sol);

        member.proximity.emplace_back(dist, other.solution.get());
    }

    std::stable_sort(member.proximity.begin(), member.proximity.end(), byDistance);
    members_.push_back(std::move(member));

    if (members_.size() > params_.maxPopSize())
        purge(costEvaluator);
}

void SubPopulation::remove(std::size_t idx)
{
    auto const *sol = members_[idx].solution.get();
    for (auto &other : members_)
        std::erase_if(other.proximity,
                      [sol](auto const &entry) { return entry.second == sol; });

    members_.erase(members_.begin() + static_cast<std::ptrdiff_t>(idx));
}

void SubPopulation::purge(CostEvaluator const &costEvaluator)
{
    while (members_.size() > params_.minPopSize)
    {
        auto const dup = std::find_if(members_.begin(), members_.end(), [](auto const &m) {
            return !m.proximity.empty() && m.proximity.front().first == 0.0;
        });

        if (dup != members_.end())
        {
            remove(static_cast<std::size_t>(dup - members_.begin()));
            continue;
        }

        updateFitness(costEvaluator);
        auto const worst = std::max_element(
            members_.begin(), members_.end(), [](auto const &lhs, auto const &rhs) {
                return lhs.fitness < rhs.fitness;
            });

        remove(static_cast<std::size_t>(worst - members_.begin()));
    }

    updateFitness(costEvaluator);
}

double SubPopulation::avgDistanceClosest(Member const &member) const
{
    double total = 0.0;
    std::size_t count = 0;

    for (auto const &[dist, other] : member.proximity)
    {
        if (count == params_.numClose)
            break;

        if (params_.lbDiversity <= dist && dist <= params_.ubDiversity)
        {
            total += dist;
            ++count;
        }
    }

    if (count == 0)  // no member inside the bounds; use the closest ones
        for (auto const &[dist, other] : member.proximity)
        {
            if (count == params_.numClose)
                break;

            total += dist;
            ++count;
        }

    return count == 0 ? 0.0 : total / static_cast<double>(count);
}

double SubPopulation::avgDiversity() const
{
    if (members_.empty())
        return 0.0;

    double total = 0.0;
    for (auto const &member : members_)
        total += avgDistanceClosest(member);

    return total / static_cast<double>(members_.size());
}

void SubPopulation::updateFitness(CostEvaluator const &costEvaluator)
{
    auto const popSize = members_.size();
    if (popSize == 0)
        return;

    std::vector<Cost> costs(popSize);
    std::vector<double> diversity(popSize);
    for (std::size_t idx = 0; idx != popSize; ++idx)
    {
        costs[idx] = costEvaluator.penalisedCost(*members_[idx].solution);
        diversity[idx] = avgDistanceClosest(members_[idx]);
    }

    std::vector<std::size_t> byCost(popSize);
    std::iota(byCost.begin(), byCost.end(), 0);
    std::stable_sort(byCost.begin(), byCost.end(), [&](auto lhs, auto rhs) {
        return costs[lhs] < costs[rhs];
    });

    std::vector<std::size_t> byDiversity(popSize);
    std::iota(byDiversity.begin(), byDiversity.end(), 0);
    std::stable_sort(byDiversity.begin(), byDiversity.end(), [&](auto lhs, auto rhs) {
        return diversity[lhs] > diversity[rhs];  // most diverse first
    });

    std::vector<std::size_t> divRank(popSize);
    for (std::size_t rank = 0; rank != popSize; ++rank)
        divRank[byDiversity[rank]] = rank;

    auto const numElite = std::min(params_.numElite, popSize);
    auto const divWeight
        = 1.0 - static_cast<double>(numElite) / static_cast<double>(popSize);

    for (std::size_t rank = 0; rank != popSize; ++rank)
    {
        auto const idx = byCost[rank];
        auto const weighted = static_cast<double>(rank)
                              + divWeight * static_cast<double>(divRank[idx]);
        members_[idx].fitness = weighted / static_cast<double>(popSize);
    }
}

Population::Population(PopulationParams params)
    : params_(params),
      feasible_(params, SubPopulation::Kind::Feasible),
      infeasible_(params, SubPopulation::Kind::Infeasible)
{
}

void Population::add(SolutionPtr solution, CostEvaluator const &costEvaluator)
{
    if (solution->isFeasible())
        feasible_.add(std::move(solution), costEvaluator);
    else
        infeasible_.add(std::move(solution), costEvaluator);
}

Population::SolutionPtr
Population::tournament(Rng &rng, CostEvaluator const &costEvaluator, std::size_t k)
{
    if (size() == 0)
        throw std::runtime_error("cannot select from an empty population");

    feasible_.updateFitness(costEvaluator);
    infeasible_.updateFitness(costEvaluator);

    auto const draw = [&]() -> SubPopulation::Member const & {
        auto const idx = randint(rng, size());
        return idx < feasible_.size() ? feasible_[idx] : infeasible_[idx - feasible_.size()];
    };

    auto const *best = &draw();
    for (std::size_t round = 1; round < k; ++round)
    {
        auto const &candidate = draw();
        if (candidate.fitness < best->fitness)
            best = &candidate;
    }

    return best->solution;
}

std::pair<Population::SolutionPtr, Population::SolutionPtr>
Population::select(Rng &rng, CostEvaluator const &costEvaluator)
{
    auto first = tournament(rng, costEvaluator, params_.tournamentK);
    auto second = tournament(rng, costEvaluator, params_.tournamentK);

    if (*first == *second)
        second = tournament(rng, costEvaluator, params_.tournamentK);

    return {std::move(first), std::move(second)};
}

void Population::clear()
{
    feasible_.clear();
    infeasible_.clear();
}
