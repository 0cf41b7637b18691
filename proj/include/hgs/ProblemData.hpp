#ifndef HGS_PROBLEMDATA_HPP
#define HGS_PROBLEMDATA_HPP

#include "Matrix.hpp"
#include "Types.hpp"

#include <cstddef>
#include <vector>

namespace hgs
{
using Coordinate = std::int64_t;

struct Client
{
    Coordinate x = 0;
    Coordinate y = 0;
    Load demand = 0;
    Duration serviceDuration = 0;
    Duration twEarly = 0;               // earliest service start
    Duration twLate = unboundedTime;    // latest service start

    bool operator==(Client const &) const = default;
};

struct Depot
{
    Coordinate x = 0;
    Coordinate y = 0;
    Duration twEarly = 0;
    Duration twLate = unboundedTime;

    bool operator==(Depot const &) const = default;
};

struct Fleet
{
    std::size_t numVehicles = 0;
    Load capacity = 0;

    bool operator==(Fleet const &) const = default;
};

/**
 * Immutable instance: one depot (location 0), clients 1..n, a homogeneous
 * fleet, and integer distance and duration matrices over all n + 1
 * locations. Construction validates every invariant and throws
 * std::invalid_argument naming the offending index.
 */
class ProblemData
{
    Depot depot_;
    std::vector<Client> clients_;
    Fleet fleet_;
    Matrix<Distance> dist_;
    Matrix<Duration> dur_;

    // Location-indexed copies of the per-client attributes (depot at 0).
    std::vector<Load> demand_;
    std::vector<Duration> service_;
    std::vector<Duration> twEarly_;
    std::vector<Duration> twLate_;

    bool hasTimeWindows_ = false;
    bool symmetricDistances_ = false;

    void validate() const;

public:
    ProblemData(Depot depot,
                std::vector<Client> clients,
                Fleet fleet,
                Matrix<Distance> distances,
                Matrix<Duration> durations);

    [[nodiscard]] Depot const &depot() const { return depot_; }

    /// Client with location index ``idx`` in 1..numClients().
    [[nodiscard]] Client const &client(std::size_t idx) const
    {
        return clients_[idx - 1];
    }

    [[nodiscard]] std::vector<Client> const &clients() const
    {
        return clients_;
    }

    [[nodiscard]] Fleet const &fleet() const { return fleet_; }
    [[nodiscard]] std::size_t numClients() const { return clients_.size(); }
    [[nodiscard]] std::size_t numLocations() const { return clients_.size() + 1; }
    [[nodiscard]] std::size_t numVehicles() const { return fleet_.numVehicles; }
    [[nodiscard]] Load capacity() const { return fleet_.capacity; }

    [[nodiscard]] Distance dist(std::size_t from, std::size_t to) const
    {
        return dist_(from, to);
    }

    [[nodiscard]] Duration duration(std::size_t from, std::size_t to) const
    {
        return dur_(from, to);
    }

    [[nodiscard]] Matrix<Distance> const &distanceMatrix() const { return dist_; }
    [[nodiscard]] Matrix<Duration> const &durationMatrix() const { return dur_; }

    [[nodiscard]] Load demand(std::size_t loc) const { return demand_[loc]; }
    [[nodiscard]] Duration serviceDuration(std::size_t loc) const { return service_[loc]; }
    [[nodiscard]] Duration twEarly(std::size_t loc) const { return twEarly_[loc]; }
    [[nodiscard]] Duration twLate(std::size_t loc) const { return twLate_[loc]; }

    /// True when some location has a closing time, so time warp can occur.
    [[nodiscard]] bool hasTimeWindows() const { return hasTimeWindows_; }

    [[nodiscard]] bool hasSymmetricDistances() const { return symmetricDistances_; }

    /// Copy of this instance with a different fleet.
    [[nodiscard]] ProblemData withFleet(Fleet fleet) const;

    bool operator==(ProblemData const &other) const;
};
}  // namespace hgs

#endif  // HGS_PROBLEMDATA_HPP
