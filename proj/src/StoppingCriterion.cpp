#include "hgs/StoppingCriterion.hpp"

#include <fmt/format.h>

#include <cmath>
#include <stdexcept>

using hgs::StoppingCriterion;

StoppingCriterion StoppingCriterion::maxRuntime(double seconds)
{
    if (!std::isfinite(seconds) || seconds < 0)
        throw std::invalid_argument("runtime limit must be a non-negative number");

    return {Kind::MaxRuntime, seconds};
}

StoppingCriterion StoppingCriterion::maxIterations(std::size_t count)
{
    return {Kind::MaxIterations, static_cast<double>(count)};
}

StoppingCriterion StoppingCriterion::noImprovement(std::size_t count)
{
    return {Kind::NoImprovement, static_cast<double>(count)};
}

bool StoppingCriterion::shouldStop(SearchProgress const &progress) const
{
    switch (kind_)
    {
    case Kind::MaxRuntime:
        return progress.elapsed >= limit_;
    case Kind::MaxIterations:
        return static_cast<double>(progress.iteration) >= limit_;
    case Kind::NoImprovement:
        return static_cast<double>(progress.sinceImprovement) >= limit_;
    }

    return true;
}

std::string StoppingCriterion::describe() const
{
    switch (kind_)
    {
    case Kind::MaxRuntime:
        return fmt::format("max runtime {} s", limit_);
    case Kind::MaxIterations:
        return fmt::format("max iterations {}", limit_);
    case Kind::NoImprovement:
        return fmt::format("{} iterations without improvement", limit_);
    }

    return {};
}
