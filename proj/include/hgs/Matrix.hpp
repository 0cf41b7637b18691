#ifndef HGS_MATRIX_HPP
#define HGS_MATRIX_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hgs
{
/// Dense square matrix stored row-major.
template <typename T> class Matrix
{
    std::size_t dim_ = 0;
    std::vector<T> data_;

public:
    Matrix() = default;

    explicit Matrix(std::size_t dimension, T value = {})
        : dim_(dimension), data_(dimension * dimension, value)
    {
    }

    /// Throws std::invalid_argument when the rows do not form a square.
    Matrix(std::vector<std::vector<T>> const &rows) : dim_(rows.size())
    {
        data_.reserve(dim_ * dim_);
        for (std::size_t idx = 0; idx != rows.size(); ++idx)
        {
            if (rows[idx].size() != dim_)
                throw std::invalid_argument(
                    "matrix row " + std::to_string(idx) + " has "
                    + std::to_string(rows[idx].size()) + " entries, expected "
                    + std::to_string(dim_));

            data_.insert(data_.end(), rows[idx].begin(), rows[idx].end());
        }
    }

    [[nodiscard]] std::size_t size() const { return dim_; }

    T &operator()(std::size_t row, std::size_t col)
    {
        return data_[dim_ * row + col];
    }

    T operator()(std::size_t row, std::size_t col) const
    {
        return data_[dim_ * row + col];
    }

    [[nodiscard]] std::span<T const> row(std::size_t row) const
    {
        return {data_.data() + dim_ * row, dim_};
    }

    [[nodiscard]] std::span<T const> values() const { return data_; }

    bool operator==(Matrix const &other) const = default;
};
}  // namespace hgs

#endif  // HGS_MATRIX_HPP
