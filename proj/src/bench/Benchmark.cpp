#include "hgs/bench/Benchmark.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <thread>

using namespace hgs::bench;

namespace
{
Seconds reduce(std::int64_t num, std::int64_t den)
{
    auto const g = std::gcd(num, den);
    return g == 0 ? Seconds{0, 1} : Seconds{num / g, den / g};
}

std::uint64_t parseUnsigned(std::string_view text, std::string_view what)
{
    std::uint64_t value = 0;
    auto const *end = text.data() + text.size();
    auto const [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc() || ptr != end)
        throw std::invalid_argument(fmt::format("invalid {} '{}'", what, text));
    return value;
}

// "12", "12.5" or ".25" as an exact fraction.
Seconds parseDecimal(std::string_view text)
{
    auto const dot = text.find('.');
    auto const whole = text.substr(0, dot);
    auto const frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);

    if ((whole.empty() && frac.empty()) || frac.size() > 9)
        throw std::invalid_argument(fmt::format("invalid seconds '{}'", text));

    std::int64_t den = 1;
    for (std::size_t i = 0; i != frac.size(); ++i)
        den *= 10;

    auto const w = whole.empty() ? 0 : parseUnsigned(whole, "seconds");
    auto const f = frac.empty() ? 0 : parseUnsigned(frac, "seconds");
    return reduce(static_cast<std::int64_t>(w) * den + static_cast<std::int64_t>(f), den);
}

double roundOneDecimal(double value) { return std::round(value * 10.0) / 10.0; }
}  // namespace

TimeRule TimeRule::parse(std::string_view text)
{
    if (text == "per-size")
        return {Kind::PerSize, {}};
    if (text == "dimacs")
        return {Kind::Dimacs, {}};

    constexpr std::string_view prefix = "fixed:";
    if (text.starts_with(prefix))
        return {Kind::Fixed, parseDecimal(text.substr(prefix.size()))};

    throw std::invalid_argument(fmt::format("unknown time rule '{}'", text));
}

Seconds hgs::bench::scaledTimeLimit(std::size_t numClients,
                                    TimeRule const &rule,
                                    std::int64_t passmarkRef,
                                    std::int64_t passmarkActual)
{
    if (passmarkRef <= 0 || passmarkActual <= 0)
        throw std::invalid_argument("passmark scores must be positive");

    auto const n = static_cast<std::int64_t>(numClients);
    Seconds base;
    switch (rule.kind)
    {
    case TimeRule::Kind::Fixed:
        base = rule.fixed;
        break;
    case TimeRule::Kind::PerSize:
        base = reduce(n * 240, 100);
        break;
    case TimeRule::Kind::Dimacs:
        base = reduce(n * 7200, 1000);
        break;
    }

    // Cross-reduce first so the products stay small.
    auto const a = reduce(base.num, passmarkActual);
    auto const b = reduce(passmarkRef, base.den);
    return reduce(a.num * b.num, a.den * b.den);
}

double hgs::bench::gap(double cost, double bks)
{
    if (!(bks > 0))
        throw std::invalid_argument("best known cost must be positive");
    return 100.0 * (cost / bks - 1.0);
}

GapMetrics hgs::bench::gapMetrics(std::vector<double> const &costs, std::vector<double> const &bks)
{
    if (costs.size() != bks.size())
        throw std::invalid_argument(
            fmt::format("{} costs but {} best known costs", costs.size(), bks.size()));
    if (costs.empty())
        throw std::invalid_argument("no instances to compare");

    double sumGap = 0, sumCost = 0, sumBks = 0;
    for (std::size_t i = 0; i != costs.size(); ++i)
    {
        sumGap += gap(costs[i], bks[i]);
        sumCost += costs[i];
        sumBks += bks[i];
    }

    return {sumGap / static_cast<double>(costs.size()), 100.0 * (sumCost / sumBks - 1.0)};
}

std::vector<std::uint64_t> hgs::bench::parseSeeds(std::string_view text)
{
    std::vector<std::uint64_t> seeds;

    if (auto const dots = text.find(".."); dots != std::string_view::npos)
    {
        auto const first = parseUnsigned(text.substr(0, dots), "seed");
        auto const last = parseUnsigned(text.substr(dots + 2), "seed");
        if (last < first)
            throw std::invalid_argument(fmt::format("empty seed range '{}'", text));
        for (auto seed = first; seed <= last; ++seed)
            seeds.push_back(seed);
        return seeds;
    }

    std::size_t start = 0;
    while (start <= text.size())
    {
        auto const comma = std::min(text.find(',', start), text.size());
        seeds.push_back(parseUnsigned(text.substr(start, comma - start), "seed"));
        start = comma + 1;
    }

    return seeds;
}

BenchmarkReport hgs::bench::summarise(std::vector<InstanceResult> instances, io::BksTable const &bks)
{
    BenchmarkReport report;
    std::vector<double> covered;
    std::vector<double> coveredBks;

    for (auto &inst : instances)
    {
        if (inst.costs.empty())
            throw std::invalid_argument(fmt::format("no runs for instance {}", inst.name));

        auto const sum = std::accumulate(inst.costs.begin(), inst.costs.end(), 0.0);
        inst.meanCost = roundOneDecimal(sum / static_cast<double>(inst.costs.size()));

        if (auto const it = bks.find(inst.name); it != bks.end())
        {
            inst.bks = it->second;
            inst.gap = gap(inst.meanCost, it->second);
            covered.push_back(inst.meanCost);
            coveredBks.push_back(it->second);
        }
        else
            report.numMissingBks++;
    }

    if (!covered.empty())
        report.metrics = gapMetrics(covered, coveredBks);

    report.instances = std::move(instances);
    return report;
}

void hgs::bench::writeReport(std::ostream &out, BenchmarkReport const &report)
{
    fmt::print(out, "instance,cost,gap,bks\n");

    double sumCost = 0, sumBks = 0;
    std::size_t numCovered = 0;
    for (auto const &inst : report.instances)
    {
        if (inst.bks)
        {
            fmt::print(out, "{},{:.1f},{:.2f},{:.1f}\n", inst.name, inst.meanCost, *inst.gap, *inst.bks);
            sumCost += inst.meanCost;
            sumBks += *inst.bks;
            numCovered++;
        }
        else
            fmt::print(out, "{},{:.1f},n/a,n/a\n", inst.name, inst.meanCost);
    }

    auto const label = report.numMissingBks == 0
                           ? std::string("Mean")
                           : fmt::format("Mean ({} of {} instances)", numCovered, report.instances.size());

    if (!report.metrics)
    {
        fmt::print(out, "{},n/a,n/a,n/a\nGap of mean,,n/a,\n", label);
        return;
    }

    auto const n = static_cast<double>(numCovered);
    fmt::print(out, "{},{:.1f},{:.2f},{:.1f}\n", label, sumCost / n, report.metrics->meanGap, sumBks / n);
    fmt::print(out, "Gap of mean,,{:.2f},\n", report.metrics->gapOfMean);
}

BenchmarkReport hgs::bench::runBenchmark(
    BenchmarkConfig const &config,
    io::BksTable const &bks,
    std::function<void(std::string const &, std::uint64_t, Result const &)> const &onRun)
{
    if (config.seeds.empty())
        throw std::invalid_argument("at least one seed is required");
    if (config.passmarkRef <= 0 || config.passmarkActual <= 0)
        throw std::invalid_argument("passmark scores must be positive");

    struct Loaded
    {
        ProblemData data;
        SolverParams params;
        StoppingCriterion stop;
    };

    std::vector<Loaded> loaded;
    std::vector<InstanceResult> results;
    loaded.reserve(config.instances.size());

    for (auto const &path : config.instances)
    {
        auto data = io::readInstance(path, config.convention);
        auto params = config.params ? *config.params : SolverParams::forInstance(data);
        auto const limit = scaledTimeLimit(
            data.numClients(), config.timeRule, config.passmarkRef, config.passmarkActual);
        auto stop = config.maxIterations ? StoppingCriterion::maxIterations(*config.maxIterations)
                                         : StoppingCriterion::maxRuntime(limit.value());

        InstanceResult result;
        result.name = io::instanceName(path);
        result.numClients = data.numClients();
        result.costs.assign(config.seeds.size(), 0.0);
        results.push_back(std::move(result));
        loaded.push_back({std::move(data), std::move(params), stop});
    }

    auto const numTasks = loaded.size() * config.seeds.size();
    auto const scale = config.convention.scale();
    std::atomic<std::size_t> next = 0;
    std::mutex mutex;
    std::exception_ptr failure;

    auto worker = [&] {
        for (auto task = next++; task < numTasks; task = next++)
        {
            auto const inst = task / config.seeds.size();
            auto const s = task % config.seeds.size();
            try
            {
                auto const &[data, params, stop] = loaded[inst];
                GeneticAlgorithm algo(data, params, config.seeds[s]);
                auto const result = algo.run(stop);

                std::lock_guard lock(mutex);
                results[inst].costs[s] = static_cast<double>(result.cost()) / scale;
                results[inst].numFeasible += result.isFeasible();
                if (onRun)
                    onRun(results[inst].name, config.seeds[s], result);
            }
            catch (...)
            {
                std::lock_guard lock(mutex);
                if (!failure)
                    failure = std::current_exception();
                next = numTasks;
            }
        }
    };

    auto const numThreads = std::clamp<std::size_t>(config.jobs, 1, std::max<std::size_t>(numTasks, 1));
    std::vector<std::thread> threads;
    for (std::size_t t = 1; t < numThreads; ++t)
        threads.emplace_back(worker);
    worker();
    for (auto &thread : threads)
        thread.join();

    if (failure)
        std::rethrow_exception(failure);

    return summarise(std::move(results), bks);
}

FleetResult hgs::bench::minimiseFleet(ProblemData const &data,
                                      SolverParams const &params,
                                      StoppingCriterion const &perStep,
                                      std::uint64_t seed)
{
    FleetResult out;
    auto numVehicles = data.numVehicles();

    while (numVehicles > 0)
    {
        auto const instance = data.withFleet({numVehicles, data.capacity()});
        auto const result = GeneticAlgorithm(instance, params, seed).run(perStep);
        out.attempts++;

        if (!result.isFeasible())
        {
            out.infeasibleAtStart = !out.solution.has_value();
            break;
        }

        out.numVehicles = result.best.numRoutes();
        out.solution = result.best;
        if (out.numVehicles == 0)
            break;
        numVehicles = out.numVehicles - 1;
    }

    return out;
}
