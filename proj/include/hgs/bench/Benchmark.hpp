#ifndef HGS_BENCH_BENCHMARK_HPP
#define HGS_BENCH_BENCHMARK_HPP

#include "hgs/GeneticAlgorithm.hpp"
#include "hgs/SolverParams.hpp"
#include "hgs/io/Files.hpp"
#include "hgs/io/Rounding.hpp"

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hgs::bench
{
/// Exact non-negative fraction of seconds.
struct Seconds
{
    std::int64_t num = 0;
    std::int64_t den = 1;

    [[nodiscard]] double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(Seconds const &) const = default;
};

struct TimeRule
{
    enum class Kind
    {
        Fixed,    // a given number of seconds
        PerSize,  // n * 240 / 100 seconds
        Dimacs,   // 7200 seconds at n = 1000, proportional in n
    };

    Kind kind = Kind::PerSize;
    Seconds fixed{};

    /// "fixed:SEC" (SEC integral or decimal), "per-size" or "dimacs".
    static TimeRule parse(std::string_view text);
};

/// Base seconds of ``rule`` for n clients, times passmarkRef / passmarkActual,
/// reduced to lowest terms. Throws std::invalid_argument unless both
/// PassMark scores are positive.
Seconds scaledTimeLimit(std::size_t numClients,
                        TimeRule const &rule,
                        std::int64_t passmarkRef,
                        std::int64_t passmarkActual);

struct GapMetrics
{
    double meanGap = 0.0;    // percent
    double gapOfMean = 0.0;  // percent
};

/// meanGap = 100 mean(c_i / b_i - 1) and gapOfMean = 100 (sum c / sum b - 1).
/// Throws std::invalid_argument on length mismatch, empty input or a
/// non-positive BKS.
GapMetrics gapMetrics(std::vector<double> const &costs, std::vector<double> const &bks);

/// Gap in percent of one cost.
double gap(double cost, double bks);

/// Seed list such as "1..10", "3" or "1,4,7".
std::vector<std::uint64_t> parseSeeds(std::string_view text);

struct BenchmarkConfig
{
    std::vector<std::filesystem::path> instances;
    std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    io::RoundingConvention convention{};
    TimeRule timeRule{};
    std::int64_t passmarkRef = 1;
    std::int64_t passmarkActual = 1;

    /// Parameters per instance; the profile matching the instance when unset.
    std::optional<SolverParams> params;

    /// Replaces the time limit, making tables reproducible byte for byte.
    std::optional<std::size_t> maxIterations;

    std::size_t jobs = 1;
};

struct InstanceResult
{
    std::string name;
    std::size_t numClients = 0;
    std::vector<double> costs;  // per seed, in original units
    std::size_t numFeasible = 0;
    double meanCost = 0.0;      // rounded to one decimal
    std::optional<double> bks;
    std::optional<double> gap;  // percent
};

struct BenchmarkReport
{
    std::vector<InstanceResult> instances;

    /// Aggregates over instances with a known BKS.
    std::optional<GapMetrics> metrics;
    std::size_t numMissingBks = 0;
};

/// Solves every (instance, seed) pair, using up to ``config.jobs`` threads.
/// ``onRun`` is called after each completed run, from the worker thread.
BenchmarkReport runBenchmark(
    BenchmarkConfig const &config,
    io::BksTable const &bks,
    std::function<void(std::string const &, std::uint64_t, Result const &)> const &onRun = {});

/// Combines per-instance seed costs into the report rows and aggregates.
BenchmarkReport summarise(std::vector<InstanceResult> instances, io::BksTable const &bks);

/// CSV table: one row per instance (instance,cost,gap,bks), then the rows
/// "Mean" and "Gap of mean". Unknown gaps are written as n/a.
void writeReport(std::ostream &out, BenchmarkReport const &report);

struct FleetResult
{
    bool infeasibleAtStart = false;
    std::size_t numVehicles = 0;
    std::optional<Solution> solution;
    std::size_t attempts = 0;
};

/// Solves with the given fleet, then keeps solving with one vehicle fewer
/// than the last feasible solution used, until that fails.
FleetResult minimiseFleet(ProblemData const &data,
                          SolverParams const &params,
                          StoppingCriterion const &perStep,
                          std::uint64_t seed);
}  // namespace hgs::bench

#endif  // HGS_BENCH_BENCHMARK_HPP
