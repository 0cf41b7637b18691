#ifndef HGS_IO_ROUNDING_HPP
#define HGS_IO_ROUNDING_HPP

#include "hgs/Types.hpp"

#include <string>
#include <string_view>

namespace hgs::io
{
/// How real-valued instance data becomes integral.
struct RoundingConvention
{
    enum class Kind
    {
        Round,        // nearest integer, halves away from zero
        Trunc,        // floor
        Dimacs,       // floor(10 x): one-decimal fixed point
        ExactScaled,  // round(factor x)
    };

    Kind kind = Kind::Round;
    double factor = 1.0;

    /// Accepts "round", "trunc", "dimacs" and "exact:<factor>". Throws
    /// std::invalid_argument otherwise.
    static RoundingConvention parse(std::string_view text);

    /// Integer units per original unit: 10 for dimacs, the factor for
    /// exact-scaled, otherwise 1.
    [[nodiscard]] double scale() const;

    [[nodiscard]] std::string name() const;
};

std::int64_t roundValue(double value, RoundingConvention const &convention);
}  // namespace hgs::io

#endif  // HGS_IO_ROUNDING_HPP
