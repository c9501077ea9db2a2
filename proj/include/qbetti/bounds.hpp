#ifndef QBETTI_BOUNDS_HPP
#define QBETTI_BOUNDS_HPP

#include <optional>
#include <span>
#include <vector>

#include "qbetti/rational.hpp"

/// Closed formulas and recurrences for Betti-number bounds of sets defined
/// by quadratic inequalities, and for total Betti numbers of non-singular
/// complex complete intersections.
///
/// Everything here is exact. Integer results are BigInt because binomial
/// sums leave 64 bits well inside k <= 60. Out-of-range arguments throw
/// std::domain_error.
namespace qbetti::bounds
{

/// Degrees (d_1, ..., d_j) of the hypersurfaces cutting out a complete
/// intersection. May be empty (j = 0).
class DegreeSequence
{
public:
    DegreeSequence() = default;
    explicit DegreeSequence(std::vector<int> degrees);

    static DegreeSequence all_twos(int j);

    int size() const { return static_cast<int>(degrees_.size()); }
    bool empty() const { return degrees_.empty(); }
    int operator[](int idx) const { return degrees_[static_cast<std::size_t>(idx)]; }
    std::span<int const> degrees() const { return degrees_; }

    /// First n degrees.
    DegreeSequence prefix(int n) const;

    bool operator==(DegreeSequence const&) const = default;

private:
    std::vector<int> degrees_;
};

/// Number of polynomials s, ambient dimension k, homology degree i.
/// Valid when 1 <= s <= k and 0 <= i <= k-1.
struct BoundQuery
{
    int s = 1;
    int k = 1;
    int i = 0;

    bool valid() const;
    void validate() const;
};

BigInt binomial(int n, int r);
BigInt pow2(int e);

/// q(j,k): k+1 for j = 0, 2^j for j = k, else 2q(j-1,k-1) - q(j,k-1).
/// May be negative.
BigInt q_quad(int j, int k);

/// Total Z2 Betti number b(j,k) of a non-singular complete intersection of
/// j quadrics in complex projective k-space.
BigInt b_quad(int j, int k);

/// c(j,k,d): k+1 for j = 0, d_1...d_j for j = k, otherwise
///   d_j c(j-1, k-1, (d_1..d_{j-1})) - (d_j - 1) c(j, k-1, d).
BigInt c_ci(int j, int k, DegreeSequence const& d);

/// Total Betti number b(j,k,d) of a non-singular complete intersection of
/// multidegree d in complex projective k-space.
BigInt b_ci(int j, int k, DegreeSequence const& d);

/// 1/2 * sum_{j=0}^{min(s, k-i)} C(s,j) C(k+1,j) 2^j, un-rounded.
Rational bound_betti(BoundQuery const& q);

/// Betti numbers are integers, so floor(bound_betti) is the usable bound.
BigInt bound_betti_floor(BoundQuery const& q);

/// 1/2 * 3^s * C(k+1, s); requires 2 <= s <= k/2.
Rational simple_bound(int s, int k);

/// 1/2 * (3e(k+1)/s)^s in floating point; requires 2 <= s <= k/2.
double exp_form_bound(int s, int k);

/// 1/2 * k * sum_{j=0}^{s} C(s,j) C(k+1,j) 2^j; requires 1 <= s <= k.
Rational total_bound(int s, int k);

struct AggregateBound
{
    std::optional<Rational> simple;
    std::optional<double> exp_form; // not exact
    std::optional<Rational> total;
};

/// Each field is present only when its own range condition holds. Throws
/// when neither holds.
AggregateBound bound_aggregate(int s, int k);

/// Row-by-row DP table of q(j,k) for 0 <= j <= k <= k_max, for callers that
/// sweep ranges.
class QTable
{
public:
    explicit QTable(int k_max);

    int k_max() const { return k_max_; }
    BigInt const& q(int j, int k) const;
    BigInt b(int j, int k) const;

private:
    int k_max_;
    std::vector<std::vector<BigInt>> rows_; // rows_[k][j]
};

} // namespace qbetti::bounds

#endif
