#ifndef HGS_SEARCH_NEIGHBOURHOOD_HPP
#define HGS_SEARCH_NEIGHBOURHOOD_HPP

#include "hgs/ProblemData.hpp"

#include <cstddef>
#include <vector>

namespace hgs
{
struct NeighbourhoodParams
{
    std::size_t numNeighbours = 40;
    double weightWaitTime = 0.2;
    double weightTimeWarp = 1.0;
    bool symmetricProximity = true;
    bool symmetricNeighbours = false;

    void validate() const;
};

/// Indexed by location; entry 0 (the depot) is always empty.
using Neighbourhood = std::vector<std::vector<std::size_t>>;

/// Spatial and temporal closeness of client ``to`` when visited right after
/// client ``from``. Smaller is closer.
double proximity(ProblemData const &data,
                 NeighbourhoodParams const &params,
                 std::size_t from,
                 std::size_t to);

/// The numNeighbours closest clients of every client, closest first, ties
/// going to the smaller index. With symmetricNeighbours, v is added to the
/// list of u whenever u is in the list of v.
Neighbourhood computeNeighbours(ProblemData const &data, NeighbourhoodParams const &params);
}  // namespace hgs

#endif  // HGS_SEARCH_NEIGHBOURHOOD_HPP
