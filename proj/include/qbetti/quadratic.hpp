#ifndef QBETTI_QUADRATIC_HPP
#define QBETTI_QUADRATIC_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qbetti/rational.hpp"

namespace qbetti::quad
{

/// n x n symmetric matrix of exact rationals. set(i,j) writes both (i,j)
/// and (j,i), so symmetry cannot be broken.
class SymmetricMatrix
{
public:
    explicit SymmetricMatrix(int n = 0);

    static SymmetricMatrix identity(int n);

    /// Rejects non-square or non-symmetric input.
    static SymmetricMatrix from_rows(std::vector<std::vector<Rational>> const& rows);

    int size() const { return n_; }
    Rational const& operator()(int i, int j) const { return data_[index(i, j)]; }
    void set(int i, int j, Rational value);

    bool is_zero() const;

    bool operator==(SymmetricMatrix const&) const = default;

private:
    std::size_t index(int i, int j) const
    {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
    }

    int n_ = 0;
    std::vector<Rational> data_;
};

/// x^T A x + b^T x + c in k variables, exact coefficients.
class QuadraticPoly
{
public:
    explicit QuadraticPoly(int k = 0);
    QuadraticPoly(SymmetricMatrix quad, std::vector<Rational> lin, Rational constant);

    int variables() const { return quad_.size(); }
    SymmetricMatrix const& quad() const { return quad_; }
    std::vector<Rational> const& lin() const { return lin_; }
    Rational const& constant() const { return constant_; }

    SymmetricMatrix& quad() { return quad_; }
    void set_lin(int i, Rational value);
    void set_constant(Rational value) { constant_ = std::move(value); }

    Rational evaluate(std::span<Rational const> x) const;

    /// 0 for the zero polynomial's "degree" is reported as -1.
    int degree() const;
    /// No constant term; either purely quadratic or purely linear.
    bool is_homogeneous() const;

    QuadraticPoly operator-() const;
    QuadraticPoly operator+(QuadraticPoly const& other) const;
    QuadraticPoly scaled(Rational const& factor) const;

    std::string to_string() const;

    bool operator==(QuadraticPoly const&) const = default;

private:
    SymmetricMatrix quad_;
    std::vector<Rational> lin_;
    Rational constant_;
};

/// Homogeneous quadratic x^T M x in n variables.
class QuadraticForm
{
public:
    explicit QuadraticForm(int n = 0);
    explicit QuadraticForm(SymmetricMatrix gram);

    int variables() const { return gram_.size(); }
    SymmetricMatrix const& gram() const { return gram_; }

    Rational evaluate(std::span<Rational const> x) const;

    /// The same form viewed as a (homogeneous) QuadraticPoly.
    QuadraticPoly as_poly() const;

    bool operator==(QuadraticForm const&) const = default;

private:
    SymmetricMatrix gram_;
};

/// Degree-2 homogenization with respect to a new last variable: the
/// quadratic part is kept, linear terms pick up one factor of X_{k+1}, the
/// constant picks up X_{k+1}^2.
QuadraticForm homogenize(QuadraticPoly const& p);

/// Substitutes X_n = 1 in an n-variable form; inverse of homogenize.
QuadraticPoly dehomogenize(QuadraticForm const& f);

/// (2/eps)^2 - sum_{i=1}^{k+1} X_i^2, a polynomial in k+1 variables.
QuadraticPoly make_p_eps(Rational const& eps, int k);

/// Seeded positive definite form M^T M + I, M an n x n integer matrix with
/// entries in {-1, 0, 1}. Identical per (n, seed) on every platform.
QuadraticForm random_pd_form(int n, std::uint64_t seed);

/// (1-t) q + t h, coefficientwise.
QuadraticForm deform(QuadraticForm const& q, QuadraticForm const& h, Rational const& t);

/// All leading principal minors > 0, decided exactly.
bool is_positive_definite(QuadraticForm const& f);

Rational determinant(SymmetricMatrix const& m);

/// A quadric hypersurface is non-singular iff its Gram matrix is invertible.
bool is_nonsingular_quadric(QuadraticForm const& f);

/// Perturbation parameters: 0 < delta < eps, 0 <= t <= 1.
struct DeformationParams
{
    Rational eps = Rational(1, 10);
    Rational delta = Rational(1, 1000);
    Rational t = 0;

    void validate() const;
};

} // namespace qbetti::quad

#endif
