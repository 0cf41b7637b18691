// Acceptance checks. Prints one PASS or FAIL line per criterion and exits
// non-zero when any fails. ``--quality`` runs the 60 second benchmark runs
// instead.

#include "hgs/GeneticAlgorithm.hpp"
#include "hgs/PenaltyManager.hpp"
#include "hgs/Population.hpp"
#include "hgs/RouteEval.hpp"
#include "hgs/bench/Benchmark.hpp"
#include "hgs/io/Files.hpp"
#include "hgs/search/Operators.hpp"

#include "oracle/Oracles.hpp"
#include "support/Instances.hpp"
#include "support/Search.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <vector>

using namespace hgs;

namespace
{
struct Outcome
{
    bool pass = false;
    std::string detail;
};

struct Criterion
{
    std::string name;
    std::function<Outcome()> check;
};

Outcome gapArithmetic()
{
    auto const cvrp = bench::gapMetrics({63275.5}, {63106.7}).gapOfMean;
    auto const vrptw = bench::gapMetrics({33296.4}, {33143.8}).gapOfMean;
    bool const pass = std::abs(cvrp - 0.27) <= 0.005 && std::abs(vrptw - 0.46) <= 0.005;
    return {pass, fmt::format("gap of mean {:.4f}% and {:.4f}%", cvrp, vrptw)};
}

Outcome appendixRow()
{
    std::vector<std::pair<std::string, double>> const rows{
        {"C1_10_1", 42444.8}, {"C1_10_5", 42434.8}, {"C1_10_6", 42437.0}, {"C2_10_1", 16841.1}};

    io::BksTable bks;
    std::vector<bench::InstanceResult> results;
    for (auto const &[name, cost] : rows)
    {
        bks[name] = cost;
        bench::InstanceResult result;
        result.name = name;
        result.costs = {cost};
        results.push_back(result);
    }

    auto const report = bench::summarise(results, bks);
    std::ostringstream table;
    bench::writeReport(table, report);

    bool pass = report.metrics && report.metrics->meanGap == 0.0 && report.metrics->gapOfMean == 0.0;
    for (auto const &inst : report.instances)
        pass = pass && inst.gap && fmt::format("{:.2f}", *inst.gap) == "0.00";
    pass = pass && table.str().find("C1_10_1,42444.8,0.00,42444.8\n") != std::string::npos;

    return {pass, fmt::format("{} rows at gap 0.00, aggregates {:.2f}% and {:.2f}%",
                              report.instances.size(),
                              report.metrics ? report.metrics->meanGap : -1,
                              report.metrics ? report.metrics->gapOfMean : -1)};
}

Outcome timeLimits()
{
    auto const perSize = bench::TimeRule::parse("per-size");
    auto const dimacs = bench::TimeRule::parse("dimacs");

    // Expected values as reduced fractions, worked out independently.
    auto const reduced = [](std::int64_t num, std::int64_t den) {
        auto const g = std::gcd(num, den);
        return bench::Seconds{num / g, den / g};
    };

    bool pass = bench::scaledTimeLimit(1000, perSize, 1, 1) == bench::Seconds{2400, 1};
    pass = pass && bench::scaledTimeLimit(1000, perSize, 2183, 2014) == reduced(2400 * 2183, 2014);
    pass = pass && bench::scaledTimeLimit(100, perSize, 2183, 2014) == reduced(240 * 2183, 2014);
    pass = pass && bench::scaledTimeLimit(1000, dimacs, 1, 1) == bench::Seconds{7200, 1};
    pass = pass && bench::scaledTimeLimit(1000, dimacs, 2000, 2000) == bench::Seconds{7200, 1};
    pass = pass && bench::scaledTimeLimit(1000, dimacs, 2000, 3000) == bench::Seconds{4800, 1};
    pass = pass && bench::scaledTimeLimit(200, dimacs, 2000, 2183) == reduced(1440 * 2000, 2183);

    auto const scaled = bench::scaledTimeLimit(1000, perSize, 2183, 2014);
    return {pass, fmt::format("2400 s base, x2183/2014 = {}/{} s, 7200 s base", scaled.num, scaled.den)};
}

Outcome segmentOracle()
{
    Rng rng(2024);
    std::size_t numRoutes = 0, numWarped = 0;

    while (numRoutes != 10'000)
    {
        auto const data = test::randomInstance(rng, {10, true, 0, 0, numRoutes % 3 == 0});
        for (int sample = 0; sample != 100; ++sample)
        {
            std::vector<std::size_t> clients(data.numClients());
            std::iota(clients.begin(), clients.end(), 1);
            shuffle(std::span(clients), rng);
            clients.resize(1 + randint(rng, clients.size()));

            auto const stats = routeStats(data, clients);
            auto const expected = oracle::simulateTimeWarp(data, clients);
            if (stats.timeWarp != expected)
                return {false, fmt::format("route {}: time warp {} but simulation gives {}", numRoutes, stats.timeWarp, expected)};

            numWarped += expected > 0;
            ++numRoutes;
        }
    }

    return {true, fmt::format("{} routes agree, {} with time warp", numRoutes, numWarped)};
}

// A random instance with up to 25 clients and a random route set over it.
struct Sample
{
    ProblemData data;
    Solution solution;
};

Sample randomSample(Rng &rng)
{
    auto const n = 3 + randint(rng, 23);
    auto const timed = randint(rng, 2) == 1;
    auto const numVehicles = 2 + randint(rng, 5);
    auto const data = test::randomInstance(rng, {n, timed, numVehicles, 0, randint(rng, 3) == 0});
    auto const used = 1 + randint(rng, std::min(numVehicles, n));
    auto solution = Solution(data, test::randomRoutes(data, rng, used));
    return {data, std::move(solution)};
}

Outcome nodeOperatorOracle(std::string const &name, std::size_t n, std::size_t m, bool reverse, bool twoOpt)
{
    Rng rng(std::hash<std::string>{}(name) % 100'000);
    auto const op = makeNodeOperator(name);
    CostEvaluator const ce(20, 6);
    std::size_t numApplicable = 0, numTried = 0, numImproving = 0;

    while (numApplicable != 1000 && numTried != 1'000'000)
    {
        auto const sample = randomSample(rng);
        auto const &data = sample.data;
        RouteSet routes(data);
        routes.load(sample.solution);
        auto const before = oracle::routesOf(routes);
        auto const beforeCost = oracle::penalisedCost(data, before, ce);

        for (int pick = 0; pick != 20 && numApplicable != 1000; ++pick, ++numTried)
        {
            auto const u = routes.where(1 + randint(rng, data.numClients()));
            Loc v;
            if (randint(rng, 4) == 0)
                v = {randint(rng, routes.numRoutes()), 0};
            else
                v = routes.where(1 + randint(rng, data.numClients()));

            if (u == v)
                continue;

            auto const expected = twoOpt ? oracle::twoOpt(before, u, v) : oracle::exchange(before, u, n, v, m, reverse);
            auto const move = op->propose(routes, u, v);
            if (move.has_value() != expected.has_value())
                return {false, fmt::format("applicability differs at u = ({}, {}), v = ({}, {})", u.route, u.pos, v.route, v.pos)};

            if (!move)
                continue;

            auto const delta = routes.delta(*move, ce);
            auto const recomputed = oracle::penalisedCost(data, *expected, ce) - beforeCost;
            if (delta != recomputed)
                return {false, fmt::format("delta {} but recomputation gives {}", delta, recomputed)};

            RouteSet copy(data);
            copy.load(sample.solution);
            copy.apply(*move);
            if (oracle::routesOf(copy) != *expected)
                return {false, "applied move differs from the reference lists"};

            numImproving += delta < 0;
            ++numApplicable;
        }
    }

    return {numApplicable == 1000, fmt::format("{} samples agree, {} improving", numApplicable, numImproving)};
}

Outcome routeOperatorOracle(std::string const &name)
{
    Rng rng(std::hash<std::string>{}(name) % 100'000);
    auto const op = makeRouteOperator(name);
    CostEvaluator const ce(20, 6);
    std::size_t numSamples = 0, numImproving = 0;

    while (numSamples != 1000)
    {
        auto const sample = randomSample(rng);
        auto const &data = sample.data;
        RouteSet routes(data);
        routes.load(sample.solution);

        std::vector<std::size_t> nonEmpty;
        for (std::size_t r = 0; r != routes.numRoutes(); ++r)
            if (!routes.route(r).empty())
                nonEmpty.push_back(r);
        if (nonEmpty.size() < 2)
            continue;

        shuffle(std::span(nonEmpty), rng);
        auto const best = op->best(routes, nonEmpty[0], nonEmpty[1], ce);
        if (!best)
            continue;

        auto const before = oracle::penalisedCost(data, oracle::routesOf(routes), ce);
        routes.apply(best->move);
        auto const recomputed = oracle::penalisedCost(data, oracle::routesOf(routes), ce) - before;
        if (best->delta.delta != recomputed)
            return {false, fmt::format("delta {} but recomputation gives {}", best->delta.delta, recomputed)};

        numImproving += recomputed < 0;
        ++numSamples;
    }

    return {true, fmt::format("{} samples agree, {} improving", numSamples, numImproving)};
}

Outcome monotonicity()
{
    CostEvaluator const ce(20, 6);
    std::size_t numStarts = 0;
    Cost totalGain = 0;

    for (std::uint64_t instance = 0; instance != 5; ++instance)
    {
        Rng rng(500 + instance);
        auto const data = test::randomInstance(rng, {30 + 5 * instance, instance % 2 == 1, 5 + instance});
        NeighbourhoodParams params;
        params.numNeighbours = 10;
        auto ls = test::defaultLocalSearch(data, params);

        for (int start = 0; start != 40; ++start, ++numStarts)
        {
            auto const initial = test::randomSolution(data, rng);
            auto const result = ls->run(initial, ce, rng);
            auto const before = ce.penalisedCost(initial);
            auto const after = ce.penalisedCost(result);
            if (after > before)
                return {false, fmt::format("instance {} start {}: cost rose from {} to {}", instance, start, before, after)};

            RouteSet routes(data);
            routes.load(result);
            auto const remaining = oracle::bestNodeMove(data, oracle::routesOf(routes), ls->neighbours(), ce);
            if (remaining < 0)
                return {false, fmt::format("instance {} start {}: a node move still improves by {}", instance, start, -remaining)};

            totalGain += before - after;
        }
    }

    return {true, fmt::format("{} starts never worsened (total gain {}), no improving node move left", numStarts, totalGain)};
}

// Number of groups of members at broken pairs distance zero from each other.
std::size_t numDistinct(std::vector<std::shared_ptr<Solution const>> const &members)
{
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i != members.size(); ++i)
        if (std::none_of(reps.begin(), reps.end(), [&](auto r) { return brokenPairsDistance(*members[r], *members[i]) == 0.0; }))
            reps.push_back(i);
    return reps.size();
}

Outcome populationMechanics()
{
    Rng rng(77);
    CostEvaluator const ce(20, 6);
    std::size_t numDuplicatesAdded = 0;

    for (int sim = 0; sim != 500; ++sim)
    {
        PopulationParams params;
        params.minPopSize = 3 + randint(rng, 10);
        params.generationSize = 1 + randint(rng, 15);
        params.numElite = 1 + randint(rng, 5);
        params.numClose = 1 + randint(rng, 5);

        auto const n = 6 + randint(rng, 10);
        auto const data = test::randomInstance(rng, {n, false, n, 1'000});
        SubPopulation sub(params, SubPopulation::Kind::Feasible);

        std::vector<std::shared_ptr<Solution const>> added;
        for (std::size_t i = 0; i != params.maxPopSize() + 1; ++i)
        {
            if (!added.empty() && randint(rng, 4) == 0)
            {
                added.push_back(std::make_shared<Solution const>(*added[randint(rng, added.size())]));
                ++numDuplicatesAdded;
            }
            else
                added.push_back(std::make_shared<Solution const>(test::randomSolution(data, rng)));

            sub.add(added.back(), ce);
        }

        if (sub.size() != params.minPopSize)
            return {false, fmt::format("simulation {}: {} members left, expected {}", sim, sub.size(), params.minPopSize)};

        std::vector<std::shared_ptr<Solution const>> survivors;
        for (auto const &member : sub)
            survivors.push_back(member.solution);

        auto const expectedDistinct = std::min(numDistinct(added), params.minPopSize);
        if (numDistinct(survivors) != expectedDistinct)
            return {false, fmt::format("simulation {}: a distinct member went before a duplicate", sim)};

        Cost bestCost = std::numeric_limits<Cost>::max();
        for (auto const &sol : added)
            bestCost = std::min(bestCost, ce.penalisedCost(*sol));
        if (std::none_of(survivors.begin(), survivors.end(), [&](auto const &sol) { return ce.penalisedCost(*sol) == bestCost; }))
            return {false, fmt::format("simulation {}: the cheapest member was purged", sim)};
    }

    return {true, fmt::format("500 purges kept minPopSize members, duplicates first, the cheapest always ({} duplicates added)", numDuplicatesAdded)};
}

Outcome determinism()
{
    auto const data = io::readInstance(test::dataDir() / "X-n101-k25.vrp", io::RoundingConvention{});
    auto const stop = StoppingCriterion::maxIterations(1000);

    std::string traces[2];
    Cost costs[2];
    for (int run = 0; run != 2; ++run)
    {
        auto const result = GeneticAlgorithm(data, SolverParams::cvrp(), 42).run(stop);
        std::ostringstream csv;
        result.stats.writeCsv(csv, false);
        traces[run] = csv.str();
        costs[run] = result.cost();
    }

    bool const pass = traces[0] == traces[1] && costs[0] == costs[1] && !traces[0].empty();
    return {pass, fmt::format("{} byte traces {}, best costs {} and {}",
                              traces[0].size(), traces[0] == traces[1] ? "identical" : "differ", costs[0], costs[1])};
}

Outcome penaltyController()
{
    std::size_t numUpdates = 0;

    for (auto const &profile : {SolverParams::cvrp(), SolverParams::vrptw()})
        for (bool timeStream : {false, true})
            for (double p : {0.0, 1.0})
            {
                PenaltyManager pm(profile.penalty);
                auto const current = [&] { return timeStream ? pm.twPenalty() : pm.capacityPenalty(); };
                auto previous = current();

                for (int cycle = 0; cycle != 50; ++cycle)
                {
                    for (std::size_t reg = 0; reg != profile.penalty.numRegistrationsBetweenUpdates; ++reg)
                        if (timeStream)
                            pm.registerTimeFeasible(p == 1.0);
                        else
                            pm.registerLoadFeasible(p == 1.0);

                    auto const now = current();
                    if (now < PenaltyManager::minPenalty || now > PenaltyManager::maxPenalty)
                        return {false, fmt::format("penalty {} out of bounds", now)};

                    bool const moved = p == 0.0 ? (now > previous || now == PenaltyManager::maxPenalty)
                                                : (now < previous || now == PenaltyManager::minPenalty);
                    if (!moved)
                        return {false, fmt::format("cycle {} at p = {}: penalty went from {} to {}", cycle, p, previous, now)};

                    previous = now;
                    ++numUpdates;
                }
            }

    return {true, fmt::format("{} updates moved the right way within [1, 100000]", numUpdates)};
}

std::filesystem::path benchDir()
{
    if (auto const *dir = std::getenv("HGS_BENCH_DIR"))
        return dir;
    return test::dataDir();
}

Outcome qualityCvrp()
{
    auto const dir = benchDir();
    bench::BenchmarkConfig config;
    config.instances = {dir / "X-n101-k25.vrp", dir / "X-n106-k14.vrp", dir / "X-n110-k13.vrp"};
    config.seeds = {1, 2, 3, 4, 5};
    config.timeRule = bench::TimeRule::parse("fixed:60");
    config.params = SolverParams::cvrp();

    auto const report = bench::runBenchmark(config, io::readBks(test::dataDir() / "bks.csv"));
    std::string detail;
    bool allFeasible = true;
    for (auto const &inst : report.instances)
    {
        detail += fmt::format("{} {:.1f} ({:.2f}%), ", inst.name, inst.meanCost, inst.gap.value_or(-1));
        allFeasible = allFeasible && inst.numFeasible == config.seeds.size();
    }

    bool const pass = allFeasible && report.metrics && report.numMissingBks == 0 && report.metrics->meanGap <= 1.5;
    return {pass, detail + fmt::format("mean gap {:.2f}%", report.metrics ? report.metrics->meanGap : -1)};
}

Outcome qualityVrptw()
{
    bench::BenchmarkConfig config;
    config.instances = {benchDir() / "RC208.txt"};
    config.seeds = {1, 2, 3, 4, 5};
    config.convention = io::RoundingConvention::parse("dimacs");
    config.timeRule = bench::TimeRule::parse("fixed:60");

    auto const report = bench::runBenchmark(config, io::readBks(test::dataDir() / "bks.csv"));
    auto const &inst = report.instances.front();
    bool const pass = inst.numFeasible == config.seeds.size() && inst.gap && *inst.gap <= 2.0;
    return {pass, fmt::format("{} feasible in {} of {} runs, mean {:.1f}, gap {:.2f}%",
                              inst.name, inst.numFeasible, config.seeds.size(), inst.meanCost, inst.gap.value_or(-1))};
}
}  // namespace

int main(int argc, char **argv)
{
    CLI::App app("Acceptance checks");
    bool quality = false;
    app.add_flag("--quality", quality, "run the 60 second benchmark criteria");
    CLI11_PARSE(app, argc, argv);

    std::vector<Criterion> criteria;
    if (quality)
    {
        criteria = {
            {"desk-scale quality, CVRP", qualityCvrp},
            {"desk-scale quality, VRPTW", qualityVrptw},
        };
    }
    else
    {
        criteria = {
            {"gap arithmetic", gapArithmetic},
            {"appendix row", appendixRow},
            {"time limit protocol", timeLimits},
            {"segment algebra oracle", segmentOracle},
        };

        std::vector<std::tuple<std::string, std::size_t, std::size_t, bool, bool>> const nodeOps{
            {"exchange10", 1, 0, false, false},
            {"exchange20", 2, 0, false, false},
            {"exchange30", 3, 0, false, false},
            {"exchange11", 1, 1, false, false},
            {"exchange21", 2, 1, false, false},
            {"exchange22", 2, 2, false, false},
            {"exchange32", 3, 2, false, false},
            {"exchange33", 3, 3, false, false},
            {"move-two-clients-reversed", 2, 0, true, false},
            {"two-opt", 0, 0, false, true},
        };
        for (auto const &[name, n, m, reverse, twoOpt] : nodeOps)
            criteria.push_back({"delta oracle, " + name, [=] { return nodeOperatorOracle(name, n, m, reverse, twoOpt); }});
        for (std::string name : {"relocate-star", "swap-star"})
            criteria.push_back({"delta oracle, " + name, [=] { return routeOperatorOracle(name); }});

        criteria.push_back({"local search monotonicity", monotonicity});
        criteria.push_back({"population mechanics", populationMechanics});
        criteria.push_back({"determinism", determinism});
        criteria.push_back({"penalty controller", penaltyController});
    }

    int numFailed = 0;
    for (auto const &criterion : criteria)
    {
        Outcome outcome;
        try
        {
            outcome = criterion.check();
        }
        catch (std::exception const &error)
        {
            outcome = {false, fmt::format("threw: {}", error.what())};
        }

        fmt::print("{} {}: {}\n", outcome.pass ? "PASS" : "FAIL", criterion.name, outcome.detail);
        std::fflush(stdout);
        numFailed += !outcome.pass;
    }

    return numFailed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
