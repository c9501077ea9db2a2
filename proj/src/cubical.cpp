#include "qbetti/cubical.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qbetti::homology
{

namespace
{

void check_ambient(std::size_t n)
{
    if (n > static_cast<std::size_t>(kMaxAmbient))
        throw std::invalid_argument("ambient dimension exceeds " + std::to_string(kMaxAmbient));
}

// Calls fn(face) for every face of `cube` including itself: each
// non-degenerate axis independently keeps its interval or drops to one end.
template <class Fn>
void for_each_face(ElementaryCube const& cube, Fn&& fn)
{
    int const n = cube.ambient();
    std::array<std::int32_t, kMaxAmbient> coords{};
    std::array<int, kMaxAmbient> open_axes{};
    int open = 0;
    for (int a = 0; a < n; ++a)
    {
        coords[static_cast<std::size_t>(a)] = cube.doubled(a);
        if (!cube.is_degenerate(a))
            open_axes[static_cast<std::size_t>(open++)] = a;
    }
    int total = 1;
    for (int t = 0; t < open; ++t)
        total *= 3;
    for (int code = 0; code < total; ++code)
    {
        auto face = coords;
        int rest = code;
        for (int t = 0; t < open; ++t)
        {
            int const choice = rest % 3; // 0 keep, 1 lower end, 2 upper end
            rest /= 3;
            auto const a = static_cast<std::size_t>(open_axes[static_cast<std::size_t>(t)]);
            if (choice == 1)
                face[a] -= 1;
            else if (choice == 2)
                face[a] += 1;
        }
        fn(ElementaryCube::from_doubled(std::span<std::int32_t const>(face.data(), static_cast<std::size_t>(n))));
    }
}

} // namespace

ElementaryCube ElementaryCube::from_intervals(std::span<Interval const> intervals)
{
    check_ambient(intervals.size());
    ElementaryCube cube;
    cube.ambient_ = static_cast<std::uint8_t>(intervals.size());
    for (std::size_t a = 0; a < intervals.size(); ++a)
    {
        auto const [lo, hi] = intervals[a];
        if (hi == lo)
            cube.coords_[a] = 2 * lo;
        else if (hi == lo + 1)
            cube.coords_[a] = 2 * lo + 1;
        else
            throw std::invalid_argument("elementary interval must be [m,m] or [m,m+1]");
    }
    return cube;
}

ElementaryCube ElementaryCube::from_doubled(std::span<std::int32_t const> coords)
{
    check_ambient(coords.size());
    ElementaryCube cube;
    cube.ambient_ = static_cast<std::uint8_t>(coords.size());
    std::copy(coords.begin(), coords.end(), cube.coords_.begin());
    return cube;
}

int ElementaryCube::dimension() const
{
    int d = 0;
    for (int a = 0; a < ambient_; ++a)
        d += coords_[static_cast<std::size_t>(a)] & 1;
    return d;
}

Interval ElementaryCube::interval(int axis) const
{
    std::int32_t const c = coords_[static_cast<std::size_t>(axis)];
    // Floor division for negative coordinates.
    std::int32_t const m = (c >= 0) ? c / 2 : -((-c + 1) / 2);
    return (c & 1) ? Interval{m, m + 1} : Interval{m, m};
}

std::vector<ElementaryCube> ElementaryCube::facets() const
{
    std::vector<ElementaryCube> out;
    for (int a = 0; a < ambient_; ++a)
    {
        if (is_degenerate(a))
            continue;
        for (int side : {-1, 1})
        {
            ElementaryCube f = *this;
            f.coords_[static_cast<std::size_t>(a)] += side;
            out.push_back(f);
        }
    }
    return out;
}

ElementaryCube ElementaryCube::translated(std::span<std::int32_t const> offset) const
{
    if (offset.size() != ambient_)
        throw std::invalid_argument("translation offset has wrong length");
    ElementaryCube out = *this;
    for (std::size_t a = 0; a < offset.size(); ++a)
        out.coords_[a] += 2 * offset[a];
    return out;
}

std::string ElementaryCube::to_string() const
{
    std::ostringstream os;
    for (int a = 0; a < ambient_; ++a)
    {
        if (a)
            os << "x";
        auto const [lo, hi] = interval(a);
        os << "[" << lo << "," << hi << "]";
    }
    return os.str();
}

CubicalComplex::CubicalComplex(int ambient)
    : ambient_(ambient),
      by_dim_(static_cast<std::size_t>(ambient) + 1)
{
    if (ambient < 0)
        throw std::invalid_argument("negative ambient dimension");
    check_ambient(static_cast<std::size_t>(ambient));
}

int CubicalComplex::top_dimension() const
{
    for (int d = ambient_; d >= 0; --d)
        if (!by_dim_[static_cast<std::size_t>(d)].empty())
            return d;
    return -1;
}

std::size_t CubicalComplex::total_cells() const
{
    std::size_t n = 0;
    for (auto const& bucket : by_dim_)
        n += bucket.size();
    return n;
}

std::size_t CubicalComplex::count(int d) const
{
    if (d < 0 || d > ambient_)
        return 0;
    return by_dim_[static_cast<std::size_t>(d)].size();
}

std::span<ElementaryCube const> CubicalComplex::cells(int d) const
{
    if (d < 0 || d > ambient_)
        return {};
    return by_dim_[static_cast<std::size_t>(d)];
}

std::int64_t CubicalComplex::index_of(ElementaryCube const& cube) const
{
    if (cube.ambient() != ambient_)
        return -1;
    auto const& bucket = by_dim_[static_cast<std::size_t>(cube.dimension())];
    auto it = std::lower_bound(bucket.begin(), bucket.end(), cube);
    if (it == bucket.end() || *it != cube)
        return -1;
    return it - bucket.begin();
}

bool CubicalComplex::contains(ElementaryCube const& cube) const
{
    return index_of(cube) >= 0;
}

std::int64_t CubicalComplex::euler_characteristic() const
{
    std::int64_t chi = 0;
    for (int d = 0; d <= ambient_; ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(count(d));
    return chi;
}

CubicalComplex CubicalComplex::intersection(CubicalComplex const& other) const
{
    if (other.ambient_ != ambient_)
        throw std::invalid_argument("intersection of complexes with different ambient dimension");
    CubicalComplex out(ambient_);
    for (std::size_t d = 0; d < by_dim_.size(); ++d)
        std::set_intersection(by_dim_[d].begin(), by_dim_[d].end(), other.by_dim_[d].begin(),
                              other.by_dim_[d].end(), std::back_inserter(out.by_dim_[d]));
    return out;
}

CubicalComplex CubicalComplex::set_union(CubicalComplex const& other) const
{
    if (other.ambient_ != ambient_)
        throw std::invalid_argument("union of complexes with different ambient dimension");
    CubicalComplex out(ambient_);
    for (std::size_t d = 0; d < by_dim_.size(); ++d)
        std::set_union(by_dim_[d].begin(), by_dim_[d].end(), other.by_dim_[d].begin(), other.by_dim_[d].end(),
                       std::back_inserter(out.by_dim_[d]));
    return out;
}

CubicalComplex CubicalComplex::translated(std::span<std::int32_t const> offset) const
{
    CubicalComplex out(ambient_);
    for (std::size_t d = 0; d < by_dim_.size(); ++d)
    {
        auto& bucket = out.by_dim_[d];
        bucket.reserve(by_dim_[d].size());
        for (auto const& cube : by_dim_[d])
            bucket.push_back(cube.translated(offset));
        // Uniform translation preserves order.
    }
    return out;
}

bool CubicalComplex::is_face_closed() const
{
    for (auto const& bucket : by_dim_)
    {
        if (std::adjacent_find(bucket.begin(), bucket.end()) != bucket.end())
            return false;
        for (auto const& cube : bucket)
        {
            if (cube.ambient() != ambient_)
                return false;
            for (auto const& f : cube.facets())
                if (!contains(f))
                    return false;
        }
    }
    return true;
}

CubicalComplex CubicalComplex::from_closed_cells(int ambient, std::vector<ElementaryCube> cells)
{
    CubicalComplex out(ambient);
    for (auto const& cube : cells)
    {
        if (cube.ambient() != ambient)
            throw std::invalid_argument("cube ambient dimension does not match complex");
        out.by_dim_[static_cast<std::size_t>(cube.dimension())].push_back(cube);
    }
    for (auto& bucket : out.by_dim_)
        std::sort(bucket.begin(), bucket.end());
    if (!out.is_face_closed())
        throw std::invalid_argument("cells are not face-closed or contain duplicates");
    return out;
}

CubicalComplex CubicalComplex::adopt(int ambient, std::vector<std::vector<ElementaryCube>> buckets)
{
    CubicalComplex out(ambient);
    out.by_dim_ = std::move(buckets);
    return out;
}

CubicalComplex close_under_faces(std::span<ElementaryCube const> cubes, int ambient)
{
    if (cubes.empty())
        return CubicalComplex(ambient < 0 ? 0 : ambient);
    int const n = cubes.front().ambient();
    if (ambient >= 0 && ambient != n)
        throw std::invalid_argument("cubes do not match the requested ambient dimension");

    std::vector<ElementaryCube> all;
    all.reserve(cubes.size() * 4);
    for (auto const& cube : cubes)
    {
        if (cube.ambient() != n)
            throw std::invalid_argument("mixed ambient dimensions in close_under_faces");
        for_each_face(cube, [&](ElementaryCube const& f) { all.push_back(f); });
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());

    std::vector<std::vector<ElementaryCube>> buckets(static_cast<std::size_t>(n) + 1);
    for (auto const& cube : all)
        buckets[static_cast<std::size_t>(cube.dimension())].push_back(cube);
    // Buckets inherit sorted order from `all`.
    return CubicalComplex::adopt(n, std::move(buckets));
}

CubicalComplex close_grid_cells(std::span<std::int32_t const> extent, std::span<ElementaryCube const> top_cells)
{
    auto const n = extent.size();
    check_ambient(n);
    std::array<std::size_t, kMaxAmbient> side{};
    std::array<std::size_t, kMaxAmbient> stride{};
    std::size_t volume = 1;
    for (std::size_t a = n; a-- > 0;)
    {
        if (extent[a] < 0)
            throw std::invalid_argument("negative grid extent");
        side[a] = 2 * static_cast<std::size_t>(extent[a]) + 1;
        stride[a] = volume;
        volume *= side[a];
    }

    std::vector<std::uint8_t> mark(volume, 0);
    auto index_of = [&](ElementaryCube const& c) {
        std::size_t idx = 0;
        for (std::size_t a = 0; a < n; ++a)
        {
            auto const v = c.doubled(static_cast<int>(a));
            if (v < 0 || static_cast<std::size_t>(v) >= side[a])
                throw std::out_of_range("grid cell outside box: " + c.to_string());
            idx += static_cast<std::size_t>(v) * stride[a];
        }
        return idx;
    };
    for (auto const& cube : top_cells)
    {
        if (cube.ambient() != static_cast<int>(n))
            throw std::invalid_argument("grid cell has wrong ambient dimension");
        for_each_face(cube, [&](ElementaryCube const& f) { mark[index_of(f)] = 1; });
    }

    // Row-major scan with axis 0 slowest yields lexicographic order.
    std::vector<std::vector<ElementaryCube>> buckets(n + 1);
    std::array<std::int32_t, kMaxAmbient> coords{};
    for (std::size_t idx = 0; idx < volume; ++idx)
    {
        if (!mark[idx])
            continue;
        std::size_t rest = idx;
        int dim = 0;
        for (std::size_t a = 0; a < n; ++a)
        {
            coords[a] = static_cast<std::int32_t>(rest / stride[a]);
            rest %= stride[a];
            dim += coords[a] & 1;
        }
        buckets[static_cast<std::size_t>(dim)].push_back(
            ElementaryCube::from_doubled(std::span<std::int32_t const>(coords.data(), n)));
    }
    return CubicalComplex::adopt(static_cast<int>(n), std::move(buckets));
}

} // namespace qbetti::homology
