#ifndef QBETTI_GF2_MATRIX_HPP
#define QBETTI_GF2_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace qbetti::homology
{

/// Dense matrix over GF(2), rows packed into 64-bit words.
class Gf2Matrix
{
public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols);

    static Gf2Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value);
    void flip(std::size_t r, std::size_t c);

    /// rows[r] ^= rows[src]
    void add_row(std::size_t r, std::size_t src);
    void swap_rows(std::size_t a, std::size_t b);

    bool operator==(Gf2Matrix const&) const = default;

private:
    std::uint64_t* row_ptr(std::size_t r) { return words_.data() + r * words_per_row_; }
    std::uint64_t const* row_ptr(std::size_t r) const { return words_.data() + r * words_per_row_; }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_per_row_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Column-sparse GF(2) matrix: each column is the sorted list of row indices
/// holding a one. Boundary matrices of cubical complexes use this form.
class SparseGf2Matrix
{
public:
    using Column = std::vector<std::uint32_t>;

    SparseGf2Matrix() = default;
    SparseGf2Matrix(std::size_t rows, std::vector<Column> columns);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return columns_.size(); }
    Column const& column(std::size_t c) const { return columns_[c]; }
    std::vector<Column> const& columns() const { return columns_; }

    Gf2Matrix to_dense() const;
    static SparseGf2Matrix from_dense(Gf2Matrix const& m);

    bool is_zero() const;

private:
    std::size_t rows_ = 0;
    std::vector<Column> columns_;
};

/// Rank over GF(2) by Gaussian elimination, pivoting on the first row with
/// a one in the current column.
std::size_t gf2_rank(Gf2Matrix m);

/// Rank over GF(2) by column reduction (lowest-one pivots). Agrees with the
/// dense routine; used for large boundary matrices.
std::size_t gf2_rank(SparseGf2Matrix const& m);

/// a * b over GF(2).
SparseGf2Matrix multiply(SparseGf2Matrix const& a, SparseGf2Matrix const& b);

/// Reduces columns in place; returns for every column its lowest row index
/// after reduction, or -1 for a zero column. Columns flagged in `skip` are
/// left untouched and reported as -1.
std::vector<std::int64_t> reduce_columns(std::vector<SparseGf2Matrix::Column>& columns, std::size_t rows,
                                         std::vector<bool> const* skip = nullptr);

} // namespace qbetti::homology

#endif
