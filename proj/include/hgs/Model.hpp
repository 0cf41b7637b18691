#ifndef HGS_MODEL_HPP
#define HGS_MODEL_HPP

#include "ProblemData.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace hgs
{
struct Result;
class StoppingCriterion;
struct SolverParams;

/**
 * Incremental builder for ProblemData. Locations are identified by the
 * handle returned from addDepot / addClient. The depot always receives
 * location index 0 and clients are numbered 1..n in the order they were
 * added, regardless of when the depot was added.
 */
class Model
{
public:
    using Handle = std::size_t;

    static constexpr Distance defaultMissingEdge = 10'000'000;

    explicit Model(Distance missingEdgeValue = defaultMissingEdge);

    Handle addDepot(Coordinate x,
                    Coordinate y,
                    Duration twEarly = 0,
                    Duration twLate = unboundedTime);

    Handle addClient(Coordinate x,
                     Coordinate y,
                     Load demand = 0,
                     Duration serviceDuration = 0,
                     Duration twEarly = 0,
                     Duration twLate = unboundedTime);

    void addVehicleType(std::size_t numAvailable, Load capacity);

    /// Duration defaults to the distance when omitted.
    void addEdge(Handle from,
                 Handle to,
                 Distance distance,
                 std::optional<Duration> duration = std::nullopt);

    /// All location handles, in the order they were added.
    [[nodiscard]] std::vector<Handle> const &locations() const { return order_; }

    [[nodiscard]] Coordinate x(Handle loc) const;
    [[nodiscard]] Coordinate y(Handle loc) const;

    /// Location index of ``loc`` in the ProblemData produced by data().
    [[nodiscard]] std::size_t indexOf(Handle loc) const;

    /// Throws std::invalid_argument ("fleet undefined", "depot undefined",
    /// or any ProblemData invariant violation).
    [[nodiscard]] ProblemData data() const;

    /// Builds the instance and runs the genetic algorithm on it.
    [[nodiscard]] Result solve(StoppingCriterion const &stop,
                               std::uint64_t seed = 1) const;

    [[nodiscard]] Result solve(StoppingCriterion const &stop,
                               std::uint64_t seed,
                               SolverParams const &params) const;

private:
    struct Location
    {
        bool isDepot;
        Depot depot;
        Client client;
    };

    Distance missingEdge_;
    std::vector<Location> locs_;
    std::vector<Handle> order_;
    std::optional<Handle> depot_;
    std::optional<Fleet> fleet_;
    std::map<std::pair<Handle, Handle>, std::pair<Distance, Duration>> edges_;

    void checkHandle(Handle loc) const;
};
}  // namespace hgs

#endif  // HGS_MODEL_HPP
