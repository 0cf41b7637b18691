#include "hgs/GeneticAlgorithm.hpp"
#include "hgs/io/Files.hpp"

#include "support/Instances.hpp"

#include <doctest.h>

#include <sstream>

using namespace hgs;

namespace
{
std::string trace(Statistics const &stats)
{
    std::ostringstream out;
    stats.writeCsv(out, false);
    return out.str();
}
}  // namespace

TEST_CASE("zero iterations returns the best initial solution")
{
    Rng rng(1);
    auto const data = test::randomInstance(rng, {20, false, 6});
    auto const result = GeneticAlgorithm(data, SolverParams::cvrp(), 1).run(StoppingCriterion::maxIterations(0));
    CHECK(result.iterations == 0);
    CHECK(result.stats.empty());
    CHECK(result.best.numClients() == data.numClients());
}

TEST_CASE("runs are deterministic for a seed")
{
    Rng rng(2);
    auto const data = test::randomInstance(rng, {30, true, 10});
    auto const params = SolverParams::vrptw();
    auto const stop = StoppingCriterion::maxIterations(500);

    auto const first = GeneticAlgorithm(data, params, 7).run(stop);
    auto const second = GeneticAlgorithm(data, params, 7).run(stop);
    CHECK(first.best == second.best);
    CHECK(first.iterations == 500);
    CHECK(trace(first.stats) == trace(second.stats));
    CHECK(first.stats.rows().size() == 500);
}

TEST_CASE("the result is at least as good as anything in the trace")
{
    Rng rng(3);
    auto const data = test::randomInstance(rng, {25, false, 8});
    auto const result = GeneticAlgorithm(data, SolverParams::cvrp(), 3).run(StoppingCriterion::maxIterations(300));
    REQUIRE(result.isFeasible());

    for (auto const &row : result.stats.rows())
        if (row.feasible.best)
            REQUIRE(result.cost() <= *row.feasible.best);
}

TEST_CASE("the best solution is feasible when rebuilt from its routes")
{
    auto const data = io::readInstance(test::dataDir() / "E-n22-k4.vrp", io::RoundingConvention{});
    auto const result = GeneticAlgorithm(data, SolverParams::cvrp(), 1).run(StoppingCriterion::maxIterations(200));
    REQUIRE(result.isFeasible());

    std::vector<Solution::Visits> routes;
    for (auto const &route : result.best.routes())
        routes.push_back(route.visits());

    Solution const rebuilt(data, routes);
    CHECK(rebuilt.isFeasible());
    CHECK(rebuilt.distance() == result.cost());
    CHECK(rebuilt.numRoutes() <= data.numVehicles());
}

TEST_CASE("a single client instance")
{
    Matrix<Distance> d({{0, 5}, {5, 0}});
    ProblemData const data(Depot{}, {Client{0, 0, 1}}, {1, 10}, d, d);
    auto const result = GeneticAlgorithm(data, SolverParams::cvrp(), 1).run(StoppingCriterion::maxIterations(10));
    CHECK(result.isFeasible());
    CHECK(result.cost() == 10);
}
