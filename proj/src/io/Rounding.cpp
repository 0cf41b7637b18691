#include "hgs/io/Rounding.hpp"

#include <fmt/format.h>

#include <charconv>
#include <cmath>
#include <stdexcept>

using hgs::io::RoundingConvention;

namespace
{
// 10 * 2.3 evaluates to 22.999999999999996; flooring needs a little slack to
// land on the decimal value the file meant.
constexpr double floorSlack = 1e-9;
}  // namespace

RoundingConvention RoundingConvention::parse(std::string_view text)
{
    if (text == "round")
        return {Kind::Round, 1.0};
    if (text == "trunc")
        return {Kind::Trunc, 1.0};
    if (text == "dimacs")
        return {Kind::Dimacs, 10.0};

    constexpr std::string_view prefix = "exact:";
    if (text.starts_with(prefix))
    {
        auto const number = text.substr(prefix.size());
        double factor = 0;
        auto const *end = number.data() + number.size();
        auto const [ptr, ec] = std::from_chars(number.data(), end, factor);
        if (ec == std::errc() && ptr == end && factor > 0 && std::isfinite(factor))
            return {Kind::ExactScaled, factor};
    }

    throw std::invalid_argument(fmt::format("unknown rounding convention '{}'", text));
}

double RoundingConvention::scale() const
{
    switch (kind)
    {
    case Kind::Dimacs:
        return 10.0;
    case Kind::ExactScaled:
        return factor;
    default:
        return 1.0;
    }
}

std::string RoundingConvention::name() const
{
    switch (kind)
    {
    case Kind::Round:
        return "round";
    case Kind::Trunc:
        return "trunc";
    case Kind::Dimacs:
        return "dimacs";
    case Kind::ExactScaled:
        return fmt::format("exact:{}", factor);
    }

    return {};
}

std::int64_t hgs::io::roundValue(double value, RoundingConvention const &convention)
{
    switch (convention.kind)
    {
    case RoundingConvention::Kind::Round:
        return static_cast<std::int64_t>(std::round(value));
    case RoundingConvention::Kind::Trunc:
        return static_cast<std::int64_t>(std::floor(value + floorSlack));
    case RoundingConvention::Kind::Dimacs:
        return static_cast<std::int64_t>(std::floor(10.0 * value + floorSlack));
    case RoundingConvention::Kind::ExactScaled:
        return static_cast<std::int64_t>(std::round(convention.factor * value));
    }

    return 0;
}
