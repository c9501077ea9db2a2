#ifndef QBETTI_HOMOLOGY_HPP
#define QBETTI_HOMOLOGY_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qbetti/cubical.hpp"
#include "qbetti/gf2_matrix.hpp"
#include "qbetti/verdict.hpp"

namespace qbetti::homology
{

/// Z2 Betti numbers b_0..b_n. Entries past the stored length read as zero,
/// and equality ignores trailing zeros, so (1,1) == (1,1,0).
class BettiVector
{
public:
    BettiVector() = default;
    BettiVector(std::initializer_list<std::size_t> values);
    explicit BettiVector(std::vector<std::size_t> values);

    std::size_t operator[](std::size_t i) const { return i < values_.size() ? values_[i] : 0; }
    std::size_t size() const { return values_.size(); }
    std::vector<std::size_t> const& values() const { return values_; }

    /// b(X) = sum of all b_i.
    std::size_t total() const;
    std::int64_t euler_characteristic() const;

    /// Rank of reduced homology in degree i.
    std::size_t reduced(std::size_t i) const;

    BettiVector operator+(BettiVector const& other) const;
    BettiVector scaled(std::size_t factor) const;

    bool operator==(BettiVector const& other) const;

    std::string to_string() const;

private:
    std::vector<std::size_t> values_;
};

/// Boundary matrices d_1..d_n of a cubical complex over GF(2). Column c of
/// boundary(d) is the d-cell cells(d)[c]; rows are (d-1)-cells.
class ChainComplex
{
public:
    explicit ChainComplex(CubicalComplex const& complex);

    int top_dimension() const { return static_cast<int>(cell_counts_.size()) - 1; }
    std::size_t cell_count(int d) const;
    /// d in [1, top_dimension()].
    SparseGf2Matrix const& boundary(int d) const;

    /// d_{d} o d_{d+1} == 0 for every d.
    bool boundary_squares_to_zero() const;

private:
    std::vector<std::size_t> cell_counts_;
    std::vector<SparseGf2Matrix> boundaries_; // boundaries_[d-1] = d_d
};

/// b_d = #d-cells - rank d_d - rank d_{d+1}. Length is ambient+1.
BettiVector betti(CubicalComplex const& complex);

/// Same numbers from an explicit chain complex (dense ranks, for oracles on
/// small inputs).
BettiVector betti_dense(ChainComplex const& chain);

/// Betti vectors of intersections X_J for nonempty J in {1..count}.
class PieceFamily
{
public:
    explicit PieceFamily(int count);

    int count() const { return count_; }

    /// `subset` lists 1-based piece indices, any order, no repeats.
    void set(std::vector<int> subset, BettiVector betti);
    BettiVector const* find(std::vector<int> subset) const;

    /// Fills every nonempty subset with the homology of the corresponding
    /// intersection of `pieces`.
    static PieceFamily from_complexes(std::span<CubicalComplex const> pieces);

private:
    std::uint64_t mask_of(std::vector<int> const& subset) const;

    int count_;
    std::map<std::uint64_t, BettiVector> entries_;
};

/// A subset the inequality needs was not supplied; no verdict is possible.
class MissingPieceError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct MayerVietorisResult
{
    Verdict verdict = Verdict::Pass;
    int degree = 0;
    std::size_t union_betti = 0;
    std::size_t bound = 0;
};

/// b_i(union) <= sum_{j=1}^{i+1} sum_{|J|=j} b_{i-j+1}(X_J).
/// Throws MissingPieceError when some J with |J| <= i+1 is absent.
MayerVietorisResult mayer_vietoris_audit(BettiVector const& union_betti, PieceFamily const& pieces, int i);

} // namespace qbetti::homology

#endif
