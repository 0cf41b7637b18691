#include "hgs/Solution.hpp"

#include "oracle/Oracles.hpp"
#include "support/Instances.hpp"

#include <doctest.h>

using namespace hgs;

TEST_CASE("excess load of a single route")
{
    auto const data = test::tinyInstance();
    Solution const sol(data, {{1, 2, 3, 4}});
    CHECK(sol.excessLoad() == 14 - 10);
    CHECK(sol.hasExcessLoad());
    CHECK_FALSE(sol.isFeasible());
}

TEST_CASE("each client on its own route has no time warp")
{
    Rng rng(3);
    auto data = test::randomInstance(rng, {6, false});
    Solution const sol(data, {{1}, {2}, {3}, {4}, {5}, {6}});
    CHECK(sol.timeWarp() == 0);
    CHECK(sol.numRoutes() == 6);
}

TEST_CASE("cached totals equal a from-scratch recomputation")
{
    Rng rng(5);
    for (int trial = 0; trial != 50; ++trial)
    {
        auto const data = test::randomInstance(rng, {20, trial % 2 == 0});
        auto const routes = test::randomRoutes(data, rng, 1 + randint(rng, 6));
        Solution const sol(data, routes);

        Distance dist = 0;
        Load excess = 0;
        Duration warp = 0;
        for (auto const &route : routes)
        {
            dist += oracle::routeDistance(data, route);
            excess += std::max<Load>(oracle::routeLoad(data, route) - data.capacity(), 0);
            warp += oracle::simulateTimeWarp(data, route);
        }

        REQUIRE(sol.distance() == dist);
        REQUIRE(sol.excessLoad() == excess);
        REQUIRE(sol.timeWarp() == warp);
        REQUIRE(sol.isFeasible() == (excess == 0 && warp == 0));
    }
}

TEST_CASE("decomposing and rebuilding preserves routes")
{
    Rng rng(9);
    auto const data = test::randomInstance(rng, {15, false});
    auto const routes = test::randomRoutes(data, rng, 4);
    Solution const sol(data, routes);

    std::vector<Solution::Visits> decomposed;
    for (auto const &route : sol.routes())
        decomposed.push_back(route.visits());

    CHECK(decomposed == routes);
    CHECK(Solution(data, decomposed) == sol);
}

TEST_CASE("invalid route sets")
{
    auto const data = test::tinyInstance();
    CHECK_THROWS_AS(Solution(data, {{1, 2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Solution(data, {{1, 2, 3, 4, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(Solution(data, {{1, 2, 3, 5}}), std::invalid_argument);
    CHECK_THROWS_AS(Solution(data, {{1}, {2}, {3, 4}}), std::invalid_argument);
    CHECK_NOTHROW(Solution(data, {{1, 2}, {}, {3, 4}}));
}

TEST_CASE("random solutions deal clients round robin")
{
    auto const data = test::tinyInstance();
    Rng rng(1);
    auto const sol = Solution::random(data, rng);
    REQUIRE(sol.numRoutes() == 2);
    CHECK(sol.routes()[0].size() == 2);
    CHECK(sol.routes()[1].size() == 2);

    Rng first(42), second(42);
    CHECK(Solution::random(data, first) == Solution::random(data, second));

    Matrix<Distance> d({{0, 1}, {1, 0}});
    ProblemData const single(Depot{}, {Client{0, 0, 1}}, {3, 10}, d, d);
    auto const one = Solution::random(single, rng);
    REQUIRE(one.numRoutes() == 1);
    CHECK(one.routes()[0].visits() == Solution::Visits{1});
}

TEST_CASE("successors and predecessors")
{
    auto const data = test::tinyInstance();
    Solution const sol(data, {{1, 2}, {3, 4}});
    CHECK(sol.successor(1) == 2);
    CHECK(sol.successor(2) == 0);
    CHECK(sol.predecessor(1) == 0);
    CHECK(sol.predecessor(4) == 3);
}

TEST_CASE("broken pairs distance")
{
    Matrix<Distance> d(4);
    ProblemData const data(Depot{}, {Client{}, Client{}, Client{}}, {3, 10}, d, d);

    Solution const a(data, {{1, 2, 3}});
    CHECK(brokenPairsDistance(a, a) == 0.0);
    CHECK(brokenPairsDistance(a, Solution(data, {{1, 3, 2}})) == doctest::Approx(1.0));
    CHECK(brokenPairsDistance(Solution(data, {{1, 2}, {3}}), a) == doctest::Approx(1.0 / 3));
}

TEST_CASE("broken pairs distance stays within the unit interval")
{
    Rng rng(21);
    auto const data = test::randomInstance(rng, {12, false});
    for (int trial = 0; trial != 200; ++trial)
    {
        auto const a = test::randomSolution(data, rng);
        auto const b = test::randomSolution(data, rng);
        auto const bpd = brokenPairsDistance(a, b);
        REQUIRE(bpd >= 0.0);
        REQUIRE(bpd <= 1.0);
        REQUIRE(bpd == brokenPairsDistance(b, a));
    }
}
