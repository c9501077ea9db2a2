#ifndef QBETTI_GRID_HPP
#define QBETTI_GRID_HPP

#include <span>
#include <vector>

#include "qbetti/cubical.hpp"
#include "qbetti/quadratic.hpp"

namespace qbetti::quad
{

enum class MembershipRule
{
    CenterPoint, // a top cell is in iff its center satisfies every inequality
};

struct RationalInterval
{
    Rational lo;
    Rational hi;
};

/// Axis-aligned box cut into cubes of side `resolution`. Every box width
/// must be a positive integer multiple of the resolution.
struct GridSpec
{
    std::vector<RationalInterval> box;
    Rational resolution = Rational(1, 4);
    MembershipRule rule = MembershipRule::CenterPoint;

    /// [lo, hi]^k.
    static GridSpec cube(int k, Rational const& lo, Rational const& hi, Rational const& resolution);

    int dimension() const { return static_cast<int>(box.size()); }
    /// Throws std::invalid_argument when the box does not divide evenly.
    void validate() const;
    int cells_along(int axis) const;
    /// Largest squared distance from the origin over the box corners.
    Rational max_norm_squared() const;
};

/// Face closure of the top cells of `spec` whose centers satisfy P >= 0
/// for every P in `system`, evaluated exactly. An empty system keeps every
/// cell. Cube coordinates are grid indices relative to the box corner.
homology::CubicalComplex grid_complex(std::span<QuadraticPoly const> system, GridSpec const& spec);

/// Half-width of the band used to thicken a sphere into a grid region.
Rational sphere_band_halfwidth(int n, Rational const& resolution);

/// {(R+h)^2 - |x|^2 >= 0, |x|^2 - (R-h)^2 >= 0} with h from
/// sphere_band_halfwidth.
std::vector<QuadraticPoly> sphere_band_system(int n, Rational const& radius, Rational const& resolution);

/// Grid approximation of the common zeros of homogeneous `forms` on the
/// sphere of radius `radius`: cells in the sphere band with |Q(c)| <= tau
/// for every form. tau should be on the order of |grad Q| times the
/// resolution. Forms of degree 1 are accepted here.
homology::CubicalComplex sphere_zero_complex(std::span<QuadraticPoly const> forms, Rational const& radius,
                                             GridSpec const& spec, Rational const& tau);

homology::CubicalComplex sphere_zero_complex(std::span<QuadraticForm const> forms, Rational const& radius,
                                             GridSpec const& spec, Rational const& tau);

/// [-B, B]^n with B the smallest multiple of `resolution` at least
/// radius + 2 * resolution.
GridSpec sphere_grid_spec(int n, Rational const& radius, Rational const& resolution);

} // namespace qbetti::quad

#endif
