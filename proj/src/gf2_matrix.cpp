#include "qbetti/gf2_matrix.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace qbetti::homology
{

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows),
      cols_(cols),
      words_per_row_((cols + 63) / 64),
      words_(rows * words_per_row_, 0)
{
}

Gf2Matrix Gf2Matrix::identity(std::size_t n)
{
    Gf2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, true);
    return m;
}

bool Gf2Matrix::get(std::size_t r, std::size_t c) const
{
    return (row_ptr(r)[c / 64] >> (c % 64)) & 1u;
}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool value)
{
    std::uint64_t const mask = std::uint64_t{1} << (c % 64);
    if (value)
        row_ptr(r)[c / 64] |= mask;
    else
        row_ptr(r)[c / 64] &= ~mask;
}

void Gf2Matrix::flip(std::size_t r, std::size_t c)
{
    row_ptr(r)[c / 64] ^= std::uint64_t{1} << (c % 64);
}

void Gf2Matrix::add_row(std::size_t r, std::size_t src)
{
    std::uint64_t* dst = row_ptr(r);
    std::uint64_t const* from = row_ptr(src);
    for (std::size_t w = 0; w < words_per_row_; ++w)
        dst[w] ^= from[w];
}

void Gf2Matrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    std::swap_ranges(row_ptr(a), row_ptr(a) + words_per_row_, row_ptr(b));
}

SparseGf2Matrix::SparseGf2Matrix(std::size_t rows, std::vector<Column> columns)
    : rows_(rows),
      columns_(std::move(columns))
{
    for (auto& col : columns_)
    {
        std::sort(col.begin(), col.end());
        // Repeated entries cancel over GF(2).
        Column reduced;
        for (std::size_t t = 0; t < col.size();)
        {
            std::size_t run = 1;
            while (t + run < col.size() && col[t + run] == col[t])
                ++run;
            if (run % 2 == 1)
                reduced.push_back(col[t]);
            t += run;
        }
        if (!reduced.empty() && reduced.back() >= rows_)
            throw std::out_of_range("sparse GF(2) column entry beyond row count");
        col = std::move(reduced);
    }
}

Gf2Matrix SparseGf2Matrix::to_dense() const
{
    Gf2Matrix m(rows_, columns_.size());
    for (std::size_t c = 0; c < columns_.size(); ++c)
        for (auto r : columns_[c])
            m.set(r, c, true);
    return m;
}

SparseGf2Matrix SparseGf2Matrix::from_dense(Gf2Matrix const& m)
{
    std::vector<Column> cols(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (m.get(r, c))
                cols[c].push_back(static_cast<std::uint32_t>(r));
    return SparseGf2Matrix(m.rows(), std::move(cols));
}

bool SparseGf2Matrix::is_zero() const
{
    return std::all_of(columns_.begin(), columns_.end(), [](Column const& c) { return c.empty(); });
}

std::size_t gf2_rank(Gf2Matrix m)
{
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c)
    {
        std::size_t pivot = rank;
        while (pivot < m.rows() && !m.get(pivot, c))
            ++pivot;
        if (pivot == m.rows())
            continue;
        m.swap_rows(rank, pivot);
        for (std::size_t r = rank + 1; r < m.rows(); ++r)
            if (m.get(r, c))
                m.add_row(r, rank);
        ++rank;
    }
    return rank;
}

std::vector<std::int64_t> reduce_columns(std::vector<SparseGf2Matrix::Column>& columns, std::size_t rows,
                                         std::vector<bool> const* skip)
{
    std::vector<std::int64_t> low(columns.size(), -1);
    // pivot_column[r] = index of the reduced column whose lowest one is r.
    std::vector<std::int64_t> pivot_column(rows, -1);
    SparseGf2Matrix::Column scratch;

    for (std::size_t c = 0; c < columns.size(); ++c)
    {
        if (skip && (*skip)[c])
        {
            columns[c].clear();
            continue;
        }
        auto& col = columns[c];
        while (!col.empty())
        {
            auto const r = col.back();
            auto const other = pivot_column[r];
            if (other < 0)
                break;
            auto const& add = columns[static_cast<std::size_t>(other)];
            scratch.clear();
            std::set_symmetric_difference(col.begin(), col.end(), add.begin(), add.end(),
                                          std::back_inserter(scratch));
            col.swap(scratch);
        }
        if (!col.empty())
        {
            low[c] = col.back();
            pivot_column[col.back()] = static_cast<std::int64_t>(c);
        }
    }
    return low;
}

std::size_t gf2_rank(SparseGf2Matrix const& m)
{
    auto columns = m.columns();
    auto const low = reduce_columns(columns, m.rows());
    return static_cast<std::size_t>(std::count_if(low.begin(), low.end(), [](std::int64_t v) { return v >= 0; }));
}

SparseGf2Matrix multiply(SparseGf2Matrix const& a, SparseGf2Matrix const& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("GF(2) multiply: shape mismatch");
    std::vector<SparseGf2Matrix::Column> out(b.cols());
    for (std::size_t c = 0; c < b.cols(); ++c)
    {
        auto& dst = out[c];
        for (auto mid : b.column(c))
        {
            auto const& add = a.column(mid);
            dst.insert(dst.end(), add.begin(), add.end());
        }
        // Constructor cancels pairs.
    }
    return SparseGf2Matrix(a.rows(), std::move(out));
}

} // namespace qbetti::homology
