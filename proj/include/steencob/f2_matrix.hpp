#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace steencob {

// Dense matrix over F2, one packed bit row per matrix row.
class F2Matrix {
  public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    bool get(std::size_t r, std::size_t c) const noexcept
    {
        return (data_[r * words_ + c / 64] >> (c % 64)) & 1U;
    }
    void set(std::size_t r, std::size_t c, bool v) noexcept;

    std::size_t rank() const;
    bool invertible() const { return rows_ == cols_ && rank() == rows_; }

    F2Matrix transposed() const;

    // Solves A x = b. Returns nullopt if the system is inconsistent; when the
    // solution is not unique the free variables are set to zero. Pivots are
    // chosen as the first nonzero row at or below the current one, so results
    // are deterministic.
    std::optional<std::vector<bool>> solve(const std::vector<bool>& b) const;

    // Indices of pivot columns found by row reduction, ascending.
    std::vector<std::size_t> pivot_columns() const;

    bool operator==(const F2Matrix&) const = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> data_;
};

}  // namespace steencob
