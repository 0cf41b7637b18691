#include "hgs/SolverParams.hpp"
#include "hgs/StoppingCriterion.hpp"

#include "support/Instances.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace hgs;

TEST_CASE("profiles")
{
    auto const cvrp = SolverParams::cvrp();
    CHECK(cvrp.ga.repairProbability == 0.5);
    CHECK(cvrp.penalty.numRegistrationsBetweenUpdates == 100);
    CHECK(cvrp.penalty.penaltyIncrease == 1.25);
    CHECK(cvrp.penalty.penaltyDecrease == 0.85);
    CHECK(cvrp.neighbourhood.numNeighbours == 20);
    CHECK(cvrp.neighbourhood.symmetricNeighbours);

    auto const vrptw = SolverParams::vrptw();
    CHECK(vrptw.ga.repairProbability == 0.8);
    CHECK(vrptw.penalty.numRegistrationsBetweenUpdates == 50);
    CHECK(vrptw.penalty.penaltyIncrease == 1.34);
    CHECK(vrptw.penalty.penaltyDecrease == 0.32);
    CHECK(vrptw.neighbourhood.numNeighbours == 40);
    CHECK_FALSE(vrptw.neighbourhood.symmetricNeighbours);

    for (auto const *params : {&cvrp, &vrptw})
    {
        CHECK(params->ga.numIterNoImprovement == 20'000);
        CHECK(params->ga.numInitialSolutions == 25);
        CHECK(params->population.minPopSize == 25);
        CHECK(params->population.generationSize == 40);
        CHECK(params->population.numElite == 4);
        CHECK(params->population.numClose == 5);
        CHECK(params->population.lbDiversity == 0.1);
        CHECK(params->population.ubDiversity == 0.5);
        CHECK(params->penalty.initCapacityPenalty == 20);
        CHECK(params->penalty.initTimeWarpPenalty == 6);
        CHECK(params->penalty.repairBooster == 12);
        CHECK(params->penalty.targetFeasible == 0.43);
    }

    CHECK(SolverParams::profile("vrptw").toConfig() == vrptw.toConfig());
    CHECK_THROWS_WITH_AS(SolverParams::profile("tsp"), "unknown profile 'tsp'", std::invalid_argument);

    CHECK(SolverParams::forInstance(test::tinyInstance()).toConfig() == cvrp.toConfig());
    Rng rng(1);
    auto const timed = test::randomInstance(rng, {5, true});
    CHECK(SolverParams::forInstance(timed).toConfig() == vrptw.toConfig());
}

TEST_CASE("config text")
{
    SUBCASE("values override the base")
    {
        auto const params = SolverParams::parseConfig(
            "# tuned\n"
            "number_of_neighbours = 30\n"
            "\n"
            "repair_probability=0.25\n"
            "include_swap_star = false\n",
            SolverParams::cvrp());
        CHECK(params.neighbourhood.numNeighbours == 30);
        CHECK(params.ga.repairProbability == 0.25);
        CHECK_FALSE(params.operators.swapStar);
        CHECK(params.penalty.penaltyIncrease == 1.25);
    }

    SUBCASE("a profile line resets earlier values")
    {
        auto const params = SolverParams::parseConfig("number_of_neighbours = 30\nprofile = vrptw\n", SolverParams::cvrp());
        CHECK(params.toConfig() == SolverParams::vrptw().toConfig());
    }

    SUBCASE("round trip")
    {
        auto params = SolverParams::vrptw();
        params.population.lbDiversity = 0.125;
        params.neighbourhood.weightWaitTime = 0.3;
        params.operators.twoOpt = false;
        auto const text = params.toConfig();
        CHECK(SolverParams::parseConfig(text, SolverParams::cvrp()).toConfig() == text);
    }

    SUBCASE("errors name the line")
    {
        CHECK_THROWS_WITH_AS(SolverParams::parseConfig("\nbogus = 1\n", {}),
                             "config line 2: unknown parameter 'bogus'",
                             std::invalid_argument);
        CHECK_THROWS_WITH_AS(SolverParams::parseConfig("number_of_neighbours = many\n", {}),
                             "config line 1: invalid value 'many' for number_of_neighbours",
                             std::invalid_argument);
        CHECK_THROWS_WITH_AS(SolverParams::parseConfig("no equals sign\n", {}),
                             "config line 1: expected key = value",
                             std::invalid_argument);
    }

    SUBCASE("out of range values are rejected")
    {
        CHECK_THROWS_AS(SolverParams::parseConfig("repair_probability = 2\n", {}), std::invalid_argument);
        auto const allOff = "relocate_operators = false\nswap_operators = false\ninclude_two_opt = false\n"
                            "include_relocate_star = false\ninclude_swap_star = false\n";
        CHECK_THROWS_WITH_AS(SolverParams::parseConfig(allOff, {}),
                             "at least one search operator must be enabled",
                             std::invalid_argument);
    }
}

TEST_CASE("operator groups")
{
    OperatorParams ops;
    CHECK(ops.nodeOperators().size() == 10);
    CHECK(ops.routeOperators() == std::vector<std::string>{"relocate-star", "swap-star"});

    ops.relocate = false;
    ops.swapStar = false;
    CHECK(ops.nodeOperators().size() == 6);
    CHECK(ops.routeOperators() == std::vector<std::string>{"relocate-star"});
}

TEST_CASE("stopping criteria")
{
    SUBCASE("max iterations")
    {
        auto const stop = StoppingCriterion::maxIterations(3);
        CHECK_FALSE(stop.shouldStop({2, 100.0, 50}));
        CHECK(stop.shouldStop({3, 0.0, 0}));
        CHECK(StoppingCriterion::maxIterations(0).shouldStop({}));
    }

    SUBCASE("max runtime")
    {
        auto const stop = StoppingCriterion::maxRuntime(1.5);
        CHECK_FALSE(stop.shouldStop({1'000'000, 1.49, 0}));
        CHECK(stop.shouldStop({0, 1.5, 0}));
        CHECK_THROWS_AS(StoppingCriterion::maxRuntime(-1), std::invalid_argument);
        CHECK_THROWS_AS(StoppingCriterion::maxRuntime(std::numeric_limits<double>::quiet_NaN()),
                        std::invalid_argument);
    }

    SUBCASE("no improvement")
    {
        auto const stop = StoppingCriterion::noImprovement(10);
        CHECK_FALSE(stop.shouldStop({500, 10.0, 9}));
        CHECK(stop.shouldStop({10, 0.0, 10}));
    }

    CHECK(StoppingCriterion::maxIterations(100).describe() == "max iterations 100");
    CHECK(StoppingCriterion::maxRuntime(2.5).describe() == "max runtime 2.5 s");
}
