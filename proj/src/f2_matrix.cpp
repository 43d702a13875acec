#include "steencob/f2_matrix.hpp"

#include "steencob/error.hpp"

#include <utility>

namespace steencob {

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * ((cols + 63) / 64), 0)
{
}

void F2Matrix::set(std::size_t r, std::size_t c, bool v) noexcept
{
    auto& w = data_[r * words_ + c / 64];
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    if (v)
        w |= bit;
    else
        w &= ~bit;
}

namespace {

// Row echelon form of an augmented copy; returns the pivot column of each
// pivot row in order.
std::vector<std::size_t> eliminate(std::vector<std::vector<std::uint64_t>>& rows, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
        const std::size_t w = c / 64;
        const std::uint64_t bit = std::uint64_t{1} << (c % 64);
        std::size_t piv = next;
        while (piv < rows.size() && !(rows[piv][w] & bit))
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[piv], rows[next]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != next && (rows[r][w] & bit)) {
                for (std::size_t k = 0; k < rows[r].size(); ++k)
                    rows[r][k] ^= rows[next][k];
            }
        }
        pivots.push_back(c);
        ++next;
    }
    return pivots;
}

}  // namespace

std::size_t F2Matrix::rank() const
{
    return pivot_columns().size();
}

std::vector<std::size_t> F2Matrix::pivot_columns() const
{
    std::vector<std::vector<std::uint64_t>> rows(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        rows[r].assign(data_.begin() + static_cast<std::ptrdiff_t>(r * words_),
                       data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * words_));
    return eliminate(rows, cols_);
}

F2Matrix F2Matrix::transposed() const
{
    F2Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c))
                t.set(c, r, true);
    return t;
}

std::optional<std::vector<bool>> F2Matrix::solve(const std::vector<bool>& b) const
{
    if (b.size() != rows_)
        throw InvalidArgument("F2Matrix::solve: right-hand side has wrong length");
    const std::size_t aug_words = (cols_ + 1 + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows(rows_, std::vector<std::uint64_t>(aug_words, 0));
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c))
                rows[r][c / 64] |= std::uint64_t{1} << (c % 64);
        if (b[r])
            rows[r][cols_ / 64] |= std::uint64_t{1} << (cols_ % 64);
    }
    const auto pivots = eliminate(rows, cols_ + 1);
    std::vector<bool> x(cols_, false);
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        if (pivots[k] == cols_)
            return std::nullopt;
        x[pivots[k]] = (rows[k][cols_ / 64] >> (cols_ % 64)) & 1U;
    }
    return x;
}

}  // namespace steencob
