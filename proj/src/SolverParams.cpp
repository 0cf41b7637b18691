#include "hgs/SolverParams.hpp"

#include <fmt/format.h>

#include <charconv>
#include <functional>
#include <stdexcept>
#include <utility>

using hgs::SolverParams;

namespace
{
std::string_view trim(std::string_view text)
{
    auto const first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        return {};

    auto const last = text.find_last_not_of(" \t\r\n");
    return text.substr(first, last - first + 1);
}

template <typename T> T parseNumber(std::string_view key, std::string_view value)
{
    T result{};
    auto const *end = value.data() + value.size();
    auto const [ptr, ec] = std::from_chars(value.data(), end, result);
    if (ec != std::errc() || ptr != end)
        throw std::invalid_argument(
            fmt::format("invalid value '{}' for {}", value, key));

    return result;
}

bool parseBool(std::string_view key, std::string_view value)
{
    if (value == "true" || value == "True" || value == "1")
        return true;

    if (value == "false" || value == "False" || value == "0")
        return false;

    throw std::invalid_argument(fmt::format("invalid value '{}' for {}", value, key));
}

struct Field
{
    std::string_view key;
    std::function<void(SolverParams &, std::string_view, std::string_view)> set;
    std::function<std::string(SolverParams const &)> get;
};

template <typename T> Field number(std::string_view key, T SolverParams::*group, auto member)
{
    return {key,
            [group, member](SolverParams &params, std::string_view k, std::string_view value) {
                using V = std::remove_cvref_t<decltype((params.*group).*member)>;
                (params.*group).*member = parseNumber<V>(k, value);
            },
            [group, member](SolverParams const &params) {
                return fmt::format("{}", (params.*group).*member);
            }};
}

template <typename T> Field flag(std::string_view key, T SolverParams::*group, bool T::*member)
{
    return {key,
            [group, member](SolverParams &params, std::string_view k, std::string_view value) {
                (params.*group).*member = parseBool(k, value);
            },
            [group, member](SolverParams const &params) {
                return std::string((params.*group).*member ? "true" : "false");
            }};
}

std::vector<Field> const &fields()
{
    using S = SolverParams;
    static std::vector<Field> const table = {
        number("repair_probability", &S::ga, &hgs::GaParams::repairProbability),
        number("non_improving_iterations_before_restart", &S::ga, &hgs::GaParams::numIterNoImprovement),
        number("initial_solutions", &S::ga, &hgs::GaParams::numInitialSolutions),
        number("minimum_population_size", &S::population, &hgs::PopulationParams::minPopSize),
        number("population_generation_size", &S::population, &hgs::PopulationParams::generationSize),
        number("number_of_elite_solutions", &S::population, &hgs::PopulationParams::numElite),
        number("number_of_close_solutions", &S::population, &hgs::PopulationParams::numClose),
        number("lower_bound_diversity", &S::population, &hgs::PopulationParams::lbDiversity),
        number("upper_bound_diversity", &S::population, &hgs::PopulationParams::ubDiversity),
        number("tournament_size", &S::population, &hgs::PopulationParams::tournamentK),
        number("initial_capacity_penalty", &S::penalty, &hgs::PenaltyParams::initCapacityPenalty),
        number("initial_time_warp_penalty", &S::penalty, &hgs::PenaltyParams::initTimeWarpPenalty),
        number("repair_booster", &S::penalty, &hgs::PenaltyParams::repairBooster),
        number("registrations_between_penalty_updates", &S::penalty, &hgs::PenaltyParams::numRegistrationsBetweenUpdates),
        number("penalty_increase", &S::penalty, &hgs::PenaltyParams::penaltyIncrease),
        number("penalty_decrease", &S::penalty, &hgs::PenaltyParams::penaltyDecrease),
        number("target_feasible", &S::penalty, &hgs::PenaltyParams::targetFeasible),
        number("number_of_neighbours", &S::neighbourhood, &hgs::NeighbourhoodParams::numNeighbours),
        number("weight_waiting_time", &S::neighbourhood, &hgs::NeighbourhoodParams::weightWaitTime),
        number("weight_time_warp", &S::neighbourhood, &hgs::NeighbourhoodParams::weightTimeWarp),
        flag("symmetric_proximity", &S::neighbourhood, &hgs::NeighbourhoodParams::symmetricProximity),
        flag("symmetric_neighbours", &S::neighbourhood, &hgs::NeighbourhoodParams::symmetricNeighbours),
        flag("relocate_operators", &S::operators, &hgs::OperatorParams::relocate),
        flag("swap_operators", &S::operators, &hgs::OperatorParams::swap),
        flag("include_two_opt", &S::operators, &hgs::OperatorParams::twoOpt),
        flag("include_relocate_star", &S::operators, &hgs::OperatorParams::relocateStar),
        flag("include_swap_star", &S::operators, &hgs::OperatorParams::swapStar),
    };

    return table;
}
}  // namespace

void hgs::GaParams::validate() const
{
    if (!(0.0 <= repairProbability && repairProbability <= 1.0))
        throw std::invalid_argument("repair probability must be in [0, 1]");

    if (numIterNoImprovement < 1)
        throw std::invalid_argument("restart iterations must be positive");

    if (numInitialSolutions < 1)
        throw std::invalid_argument("need at least one initial solution");
}

std::vector<std::string> hgs::OperatorParams::nodeOperators() const
{
    std::vector<std::string> names;
    if (relocate)
        names.insert(names.end(),
                     {"exchange10", "exchange20", "exchange30", "move-two-clients-reversed"});
    if (swap)
        names.insert(names.end(),
                     {"exchange11", "exchange21", "exchange22", "exchange32", "exchange33"});
    if (twoOpt)
        names.emplace_back("two-opt");

    return names;
}

std::vector<std::string> hgs::OperatorParams::routeOperators() const
{
    std::vector<std::string> names;
    if (relocateStar)
        names.emplace_back("relocate-star");
    if (swapStar)
        names.emplace_back("swap-star");

    return names;
}

SolverParams SolverParams::cvrp()
{
    SolverParams params;
    params.ga.repairProbability = 0.5;
    params.penalty.numRegistrationsBetweenUpdates = 100;
    params.penalty.penaltyIncrease = 1.25;
    params.penalty.penaltyDecrease = 0.85;
    params.neighbourhood.numNeighbours = 20;
    params.neighbourhood.symmetricNeighbours = true;
    return params;
}

SolverParams SolverParams::vrptw()
{
    SolverParams params;
    params.ga.repairProbability = 0.8;
    params.penalty.numRegistrationsBetweenUpdates = 50;
    params.penalty.penaltyIncrease = 1.34;
    params.penalty.penaltyDecrease = 0.32;
    params.neighbourhood.numNeighbours = 40;
    params.neighbourhood.symmetricNeighbours = false;
    return params;
}

SolverParams SolverParams::profile(std::string_view name)
{
    if (name == "cvrp")
        return cvrp();

    if (name == "vrptw")
        return vrptw();

    throw std::invalid_argument(fmt::format("unknown profile '{}'", name));
}

SolverParams SolverParams::forInstance(ProblemData const &data)
{
    return data.hasTimeWindows() ? vrptw() : cvrp();
}

void SolverParams::set(std::string_view key, std::string_view value)
{
    for (auto const &field : fields())
        if (field.key == key)
        {
            field.set(*this, key, value);
            return;
        }

    throw std::invalid_argument(fmt::format("unknown parameter '{}'", key));
}

SolverParams SolverParams::parseConfig(std::string_view text, SolverParams base)
{
    std::size_t lineNo = 0;
    while (!text.empty())
    {
        auto const eol = text.find('\n');
        auto const line = trim(text.substr(0, eol));
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++lineNo;

        if (line.empty() || line.front() == '#')
            continue;

        auto const eq = line.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument(
                fmt::format("config line {}: expected key = value", lineNo));

        auto const key = trim(line.substr(0, eq));
        auto const value = trim(line.substr(eq + 1));

        try
        {
            if (key == "profile")
                base = profile(value);
            else
                base.set(key, value);
        }
        catch (std::invalid_argument const &error)
        {
            throw std::invalid_argument(fmt::format("config line {}: {}", lineNo, error.what()));
        }
    }

    base.validate();
    return base;
}

std::string SolverParams::toConfig() const
{
    std::string text;
    for (auto const &field : fields())
        text += fmt::format("{} = {}\n", field.key, field.get(*this));

    return text;
}

void SolverParams::validate() const
{
    ga.validate();
    penalty.validate();
    population.validate();
    neighbourhood.validate();

    if (operators.nodeOperators().empty() && operators.routeOperators().empty())
        throw std::invalid_argument("at least one search operator must be enabled");
}
