#include "hgs/ProblemData.hpp"

#include <fmt/format.h>

#include <stdexcept>

using hgs::ProblemData;

namespace
{
template <typename T>
void checkMatrix(hgs::Matrix<T> const &matrix, std::size_t dim, char const *name)
{
    if (matrix.size() != dim)
        throw std::invalid_argument(
            fmt::format("{} matrix dimension {} does not match {} locations",
                        name,
                        matrix.size(),
                        dim));

    for (std::size_t i = 0; i != dim; ++i)
    {
        if (matrix(i, i) != 0)
            throw std::invalid_argument(
                fmt::format("nonzero diagonal {} at location {}", name, i));

        for (std::size_t j = 0; j != dim; ++j)
            if (matrix(i, j) < 0)
                throw std::invalid_argument(fmt::format(
                    "negative {} from location {} to {}", name, i, j));
    }
}
}  // namespace

ProblemData::ProblemData(Depot depot,
                         std::vector<Client> clients,
                         Fleet fleet,
                         Matrix<Distance> distances,
                         Matrix<Duration> durations)
    : depot_(depot),
      clients_(std::move(clients)),
      fleet_(fleet),
      dist_(std::move(distances)),
      dur_(std::move(durations))
{
    validate();

    auto const numLocs = numLocations();
    demand_.resize(numLocs);
    service_.resize(numLocs);
    twEarly_.resize(numLocs);
    twLate_.resize(numLocs);

    twEarly_[0] = depot_.twEarly;
    twLate_[0] = depot_.twLate;
    for (std::size_t idx = 1; idx != numLocs; ++idx)
    {
        auto const &c = client(idx);
        demand_[idx] = c.demand;
        service_[idx] = c.serviceDuration;
        twEarly_[idx] = c.twEarly;
        twLate_[idx] = c.twLate;
    }

    for (std::size_t idx = 0; idx != numLocs; ++idx)
        if (twLate_[idx] < unboundedTime)
            hasTimeWindows_ = true;

    symmetricDistances_ = true;
    for (std::size_t i = 0; i != numLocs && symmetricDistances_; ++i)
        for (std::size_t j = i + 1; j != numLocs; ++j)
            if (dist_(i, j) != dist_(j, i))
            {
                symmetricDistances_ = false;
                break;
            }
}

void ProblemData::validate() const
{
    if (fleet_.numVehicles < 1)
        throw std::invalid_argument("fleet needs at least one vehicle");

    if (fleet_.capacity <= 0)
        throw std::invalid_argument("vehicle capacity must be positive");

    if (depot_.twEarly < 0 || depot_.twEarly > depot_.twLate)
        throw std::invalid_argument("time window inverted at depot");

    for (std::size_t idx = 1; idx <= clients_.size(); ++idx)
    {
        auto const &c = clients_[idx - 1];

        if (c.demand < 0)
            throw std::invalid_argument(
                fmt::format("negative demand at client {}", idx));

        if (c.serviceDuration < 0)
            throw std::invalid_argument(
                fmt::format("negative service duration at client {}", idx));

        if (c.twEarly < 0)
            throw std::invalid_argument(
                fmt::format("negative time window start at client {}", idx));

        if (c.twEarly > c.twLate)
            throw std::invalid_argument(
                fmt::format("time window inverted at client {}", idx));
    }

    checkMatrix(dist_, numLocations(), "distance");
    checkMatrix(dur_, numLocations(), "duration");
}

ProblemData ProblemData::withFleet(Fleet fleet) const
{
    return {depot_, clients_, fleet, dist_, dur_};
}

bool ProblemData::operator==(ProblemData const &other) const
{
    return depot_ == other.depot_ && clients_ == other.clients_
           && fleet_ == other.fleet_ && dist_ == other.dist_
           && dur_ == other.dur_;
}
