#include "hgs/GeneticAlgorithm.hpp"
#include "hgs/bench/Benchmark.hpp"
#include "hgs/bench/Plot.hpp"
#include "hgs/io/Files.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include <glob.h>

#include <fstream>
#include <iostream>
#include <optional>

namespace
{
enum Exit
{
    Ok = 0,
    SolverFailure = 1,
    UsageOrIo = 2,
};

// Thrown for problems with the input, reported with exit code 2.
struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct StopFlags
{
    std::optional<double> maxRuntime;
    std::optional<std::size_t> maxIterations;
    std::optional<std::size_t> noImprovement;

    void attach(CLI::App &app, std::string const &suffix = "")
    {
        auto *rt = app.add_option("--max-runtime", maxRuntime, "Stop after this many seconds" + suffix);
        auto *it = app.add_option("--max-iterations", maxIterations, "Stop after this many iterations" + suffix);
        auto *ni = app.add_option(
            "--no-improvement", noImprovement, "Stop after this many iterations without improvement" + suffix);
        rt->excludes(it)->excludes(ni);
        it->excludes(ni);
    }

    [[nodiscard]] hgs::StoppingCriterion resolve(hgs::StoppingCriterion fallback) const
    {
        if (maxRuntime)
            return hgs::StoppingCriterion::maxRuntime(*maxRuntime);
        if (maxIterations)
            return hgs::StoppingCriterion::maxIterations(*maxIterations);
        if (noImprovement)
            return hgs::StoppingCriterion::noImprovement(*noImprovement);
        return fallback;
    }
};

struct ParamFlags
{
    std::string profile;
    std::string config;

    void attach(CLI::App &app)
    {
        app.add_option("--profile", profile, "Parameter profile: cvrp or vrptw (default: from the instance)")
            ->check(CLI::IsMember({"cvrp", "vrptw"}));
        app.add_option("--config", config, "key=value parameter file applied on top of the profile");
    }

    [[nodiscard]] std::optional<hgs::SolverParams> resolve(hgs::ProblemData const *data) const
    {
        if (profile.empty() && config.empty())
            return data ? std::optional(hgs::SolverParams::forInstance(*data)) : std::nullopt;

        hgs::SolverParams base = !profile.empty() ? hgs::SolverParams::profile(profile)
                                 : data           ? hgs::SolverParams::forInstance(*data)
                                                  : hgs::SolverParams::cvrp();
        if (config.empty())
            return base;

        try
        {
            return hgs::SolverParams::parseConfig(hgs::io::readFile(config), base);
        }
        catch (std::invalid_argument const &e)
        {
            throw UsageError(fmt::format("{}: {}", config, e.what()));
        }
    }
};

hgs::io::RoundingConvention convention(std::string const &text)
{
    try
    {
        return hgs::io::RoundingConvention::parse(text);
    }
    catch (std::invalid_argument const &e)
    {
        throw UsageError(e.what());
    }
}

std::ofstream openOutput(std::string const &path)
{
    std::ofstream out(path);
    if (!out)
        throw hgs::io::FileError(fmt::format("cannot write {}", path));
    return out;
}

std::vector<std::filesystem::path> expand(std::vector<std::string> const &patterns)
{
    std::vector<std::filesystem::path> paths;
    for (auto const &pattern : patterns)
    {
        glob_t matches{};
        auto const rc = ::glob(pattern.c_str(), 0, nullptr, &matches);
        if (rc == 0)
            for (std::size_t i = 0; i != matches.gl_pathc; ++i)
                paths.emplace_back(matches.gl_pathv[i]);
        globfree(&matches);

        if (rc == GLOB_NOMATCH)
            throw UsageError(fmt::format("no instances match '{}'", pattern));
        if (rc != 0)
            throw UsageError(fmt::format("cannot expand '{}'", pattern));
    }
    return paths;
}

int solveCommand(std::string const &instance,
                 std::string const &round,
                 std::uint64_t seed,
                 StopFlags const &stopFlags,
                 ParamFlags const &paramFlags,
                 std::string const &out,
                 std::string const &stats,
                 std::string const &plot)
{
    auto const conv = convention(round);
    auto const data = hgs::io::readInstance(instance, conv);
    auto const params = *paramFlags.resolve(&data);
    auto const stop = stopFlags.resolve(hgs::StoppingCriterion::maxIterations(10'000));

    auto const result = hgs::GeneticAlgorithm(data, params, seed).run(stop);
    auto const cost = static_cast<double>(result.cost()) / conv.scale();

    fmt::print("instance    {}\n", hgs::io::instanceName(instance));
    fmt::print("clients     {}\n", data.numClients());
    fmt::print("stop        {}\n", stop.describe());
    fmt::print("cost        {}\n", cost);
    fmt::print("feasible    {}\n", result.isFeasible() ? "yes" : "no");
    fmt::print("routes      {}\n", result.best.numRoutes());
    fmt::print("iterations  {}\n", result.iterations);
    fmt::print("runtime     {:.2f} s\n", result.runtime);

    if (!out.empty())
        hgs::io::writeSolution(std::filesystem::path(out), result.best, cost);

    if (!stats.empty())
    {
        auto file = openOutput(stats);
        result.stats.writeCsv(file);
    }

    if (!plot.empty())
    {
        hgs::bench::writeStatisticsPlots(result.stats, plot);
        auto file = openOutput((std::filesystem::path(plot) / "solution.svg").string());
        hgs::bench::writeSolutionPlot(file, data, result.best);
    }

    if (!result.isFeasible())
    {
        fmt::print(std::cerr, "no feasible solution found\n");
        return SolverFailure;
    }

    return Ok;
}

int fleetCommand(std::string const &instance,
                 std::string const &round,
                 std::uint64_t seed,
                 StopFlags const &stopFlags,
                 ParamFlags const &paramFlags,
                 std::string const &out)
{
    auto const conv = convention(round);
    auto const data = hgs::io::readInstance(instance, conv);
    auto const params = *paramFlags.resolve(&data);
    auto const stop = stopFlags.resolve(hgs::StoppingCriterion::maxIterations(2'000));

    auto const fleet = hgs::bench::minimiseFleet(data, params, stop, seed);
    if (fleet.infeasibleAtStart)
    {
        fmt::print(std::cerr, "infeasible at start: no feasible solution with {} vehicles\n", data.numVehicles());
        return SolverFailure;
    }

    auto const cost = static_cast<double>(fleet.solution->distance()) / conv.scale();
    fmt::print("instance    {}\n", hgs::io::instanceName(instance));
    fmt::print("vehicles    {}\n", fleet.numVehicles);
    fmt::print("cost        {}\n", cost);
    fmt::print("attempts    {}\n", fleet.attempts);

    if (!out.empty())
        hgs::io::writeSolution(std::filesystem::path(out), *fleet.solution, cost);

    return Ok;
}

struct BenchFlags
{
    std::vector<std::string> instances;
    std::string bks;
    std::string seeds = "1..10";
    std::string timeRule = "per-size";
    std::int64_t passmarkRef = 1;
    std::int64_t passmark = 1;
    std::size_t jobs = 1;
    std::string report;
    std::string round = "round";
    std::optional<std::size_t> maxIterations;
    bool quiet = false;
};

int benchCommand(BenchFlags const &flags, ParamFlags const &paramFlags)
{
    hgs::bench::BenchmarkConfig config;
    try
    {
        config.seeds = hgs::bench::parseSeeds(flags.seeds);
        config.timeRule = hgs::bench::TimeRule::parse(flags.timeRule);
    }
    catch (std::invalid_argument const &e)
    {
        throw UsageError(e.what());
    }

    if (flags.passmarkRef <= 0 || flags.passmark <= 0)
        throw UsageError("passmark scores must be positive");

    config.instances = expand(flags.instances);
    config.convention = convention(flags.round);
    config.passmarkRef = flags.passmarkRef;
    config.passmarkActual = flags.passmark;
    config.params = paramFlags.resolve(nullptr);
    config.maxIterations = flags.maxIterations;
    config.jobs = flags.jobs;

    auto const bks = flags.bks.empty() ? hgs::io::BksTable{} : hgs::io::readBks(flags.bks);

    auto progress = [&](std::string const &name, std::uint64_t seed, hgs::Result const &result) {
        if (!flags.quiet)
            fmt::print(std::cerr,
                       "{} seed {}: {} ({}, {} iterations, {:.1f} s)\n",
                       name,
                       seed,
                       static_cast<double>(result.cost()) / config.convention.scale(),
                       result.isFeasible() ? "feasible" : "infeasible",
                       result.iterations,
                       result.runtime);
    };

    auto const report = hgs::bench::runBenchmark(config, bks, progress);

    if (flags.report.empty())
        hgs::bench::writeReport(std::cout, report);
    else
    {
        auto file = openOutput(flags.report);
        hgs::bench::writeReport(file, report);
    }

    if (report.numMissingBks > 0)
        fmt::print(std::cerr,
                   "warning: {} instance(s) without a best known cost; aggregates cover the rest\n",
                   report.numMissingBks);

    for (auto const &inst : report.instances)
        if (inst.numFeasible != inst.costs.size())
        {
            fmt::print(std::cerr, "{}: {} of {} runs infeasible\n", inst.name, inst.costs.size() - inst.numFeasible, inst.costs.size());
            return SolverFailure;
        }

    return Ok;
}
}  // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Hybrid genetic search for capacitated vehicle routing, with and without time windows"};
    app.require_subcommand(1);

    std::string instance;
    std::string round = "round";
    std::uint64_t seed = 1;
    std::string out;
    std::string stats;
    std::string plot;

    auto *solve = app.add_subcommand("solve", "Solve one instance");
    StopFlags solveStop;
    ParamFlags solveParams;
    solve->add_option("instance", instance, "VRPLIB or Solomon instance file")->required();
    solve->add_option("--round", round, "Rounding convention: round, trunc, dimacs or exact:<factor>");
    solve->add_option("--seed", seed, "Random seed");
    solveStop.attach(*solve, " (default: 10000 iterations)");
    solveParams.attach(*solve);
    solve->add_option("--out", out, "Write the best solution here");
    solve->add_option("--stats", stats, "Write the per-iteration statistics CSV here");
    solve->add_option("--plot", plot, "Write SVG plots of the run into this directory");

    auto *bench = app.add_subcommand("bench", "Run a multi-seed benchmark and report gaps");
    BenchFlags benchFlags;
    ParamFlags benchParams;
    bench->add_option("--instances", benchFlags.instances, "Instance files or glob patterns")->required();
    bench->add_option("--bks", benchFlags.bks, "CSV of best known costs (instance,cost)");
    bench->add_option("--seeds", benchFlags.seeds, "Seeds, as a range 1..10 or a list 1,2,3");
    bench->add_option("--time-rule", benchFlags.timeRule, "fixed:SEC, per-size or dimacs");
    bench->add_option("--passmark-ref", benchFlags.passmarkRef, "Reference CPU PassMark score");
    bench->add_option("--passmark", benchFlags.passmark, "PassMark score of this CPU");
    bench->add_option("--jobs", benchFlags.jobs, "Parallel runs")->check(CLI::PositiveNumber);
    bench->add_option("--report", benchFlags.report, "Write the result table here instead of stdout");
    bench->add_option("--round", benchFlags.round, "Rounding convention: round, trunc, dimacs or exact:<factor>");
    bench->add_option("--max-iterations", benchFlags.maxIterations, "Iteration limit replacing the time rule");
    bench->add_flag("--quiet", benchFlags.quiet, "Do not print per-run progress");
    benchParams.attach(*bench);

    auto *fleet = app.add_subcommand("fleet", "Find a small feasible fleet by removing vehicles one at a time");
    StopFlags fleetStop;
    ParamFlags fleetParams;
    fleet->add_option("instance", instance, "VRPLIB or Solomon instance file")->required();
    fleet->add_option("--round", round, "Rounding convention: round, trunc, dimacs or exact:<factor>");
    fleet->add_option("--seed", seed, "Random seed");
    fleetStop.attach(*fleet, " per attempt (default: 2000 iterations)");
    fleetParams.attach(*fleet);
    fleet->add_option("--out", out, "Write the final solution here");

    try
    {
        app.parse(argc, argv);
    }
    catch (CLI::ParseError const &e)
    {
        auto const code = app.exit(e);
        return code == 0 ? Ok : UsageOrIo;
    }

    try
    {
        if (*solve)
            return solveCommand(instance, round, seed, solveStop, solveParams, out, stats, plot);
        if (*bench)
            return benchCommand(benchFlags, benchParams);
        return fleetCommand(instance, round, seed, fleetStop, fleetParams, out);
    }
    catch (UsageError const &e)
    {
        fmt::print(std::cerr, "error: {}\n", e.what());
        return UsageOrIo;
    }
    catch (hgs::io::FileError const &e)
    {
        fmt::print(std::cerr, "error: {}\n", e.what());
        return UsageOrIo;
    }
    catch (hgs::io::ParseError const &e)
    {
        fmt::print(std::cerr, "error: {}\n", e.what());
        return UsageOrIo;
    }
    catch (std::exception const &e)
    {
        fmt::print(std::cerr, "error: {}\n", e.what());
        return SolverFailure;
    }
}
