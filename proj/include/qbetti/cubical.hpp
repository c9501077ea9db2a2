#ifndef QBETTI_CUBICAL_HPP
#define QBETTI_CUBICAL_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qbetti::homology
{

inline constexpr int kMaxAmbient = 8;

/// Closed interval [lo, hi] with hi == lo or hi == lo + 1.
struct Interval
{
    std::int32_t lo = 0;
    std::int32_t hi = 0;
};

/// Product of degenerate and unit intervals. Stored in doubled
/// coordinates: axis value 2m is the point [m,m], 2m+1 is [m,m+1].
class ElementaryCube
{
public:
    ElementaryCube() = default;

    static ElementaryCube from_intervals(std::span<Interval const> intervals);

    /// Doubled coordinates directly.
    static ElementaryCube from_doubled(std::span<std::int32_t const> coords);

    int ambient() const { return ambient_; }
    int dimension() const;

    std::int32_t doubled(int axis) const { return coords_[static_cast<std::size_t>(axis)]; }
    Interval interval(int axis) const;
    bool is_degenerate(int axis) const { return (coords_[static_cast<std::size_t>(axis)] & 1) == 0; }

    /// The 2*dimension() codimension-one faces.
    std::vector<ElementaryCube> facets() const;

    /// Same cube shifted by `offset` grid units on every axis.
    ElementaryCube translated(std::span<std::int32_t const> offset) const;

    std::string to_string() const;

    auto operator<=>(ElementaryCube const&) const = default;

private:
    std::array<std::int32_t, kMaxAmbient> coords_{};
    std::uint8_t ambient_ = 0;
};

/// Face-closed finite set of elementary cubes, grouped by dimension and
/// sorted. Immutable once built.
class CubicalComplex
{
public:
    /// Empty complex in the given ambient dimension.
    explicit CubicalComplex(int ambient = 0);

    int ambient_dimension() const { return ambient_; }

    /// Highest d with a d-cell, or -1 if empty.
    int top_dimension() const;
    bool empty() const { return total_cells() == 0; }
    std::size_t total_cells() const;
    std::size_t count(int d) const;
    std::span<ElementaryCube const> cells(int d) const;

    bool contains(ElementaryCube const& cube) const;
    /// Position of `cube` in cells(cube.dimension()), or -1.
    std::int64_t index_of(ElementaryCube const& cube) const;

    std::int64_t euler_characteristic() const;

    /// Cells shared by both complexes (face-closed by construction).
    CubicalComplex intersection(CubicalComplex const& other) const;
    CubicalComplex set_union(CubicalComplex const& other) const;
    CubicalComplex translated(std::span<std::int32_t const> offset) const;

    /// Checks face closure and uniqueness; used by tests and debug paths.
    bool is_face_closed() const;

    /// Builds from cells that are already face-closed and duplicate-free.
    /// Throws std::invalid_argument if the claim is false.
    static CubicalComplex from_closed_cells(int ambient, std::vector<ElementaryCube> cells);

    bool operator==(CubicalComplex const&) const = default;

private:
    friend CubicalComplex close_under_faces(std::span<ElementaryCube const>, int);
    friend CubicalComplex close_grid_cells(std::span<std::int32_t const>, std::span<ElementaryCube const>);

    // Buckets must already be sorted, duplicate-free and face-closed.
    static CubicalComplex adopt(int ambient, std::vector<std::vector<ElementaryCube>> buckets);

    int ambient_ = 0;
    std::vector<std::vector<ElementaryCube>> by_dim_; // ambient_+1 buckets, sorted
};

CubicalComplex close_under_faces(std::span<ElementaryCube const> cubes, int ambient);
CubicalComplex close_grid_cells(std::span<std::int32_t const> extent, std::span<ElementaryCube const> top_cells);

/// Smallest face-closed complex containing `cubes`. All cubes must share an
/// ambient dimension; `ambient` fixes it for the empty input.
CubicalComplex close_under_faces(std::span<ElementaryCube const> cubes, int ambient = -1);

/// Face closure of a set of top-dimensional cells on a bounded box,
/// computed on a dense doubled-coordinate bitmap. `extent[a]` is the number
/// of unit cells along axis a; cube coordinates must lie inside the box.
CubicalComplex close_grid_cells(std::span<std::int32_t const> extent, std::span<ElementaryCube const> top_cells);

} // namespace qbetti::homology

#endif
