#include "qbetti/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace qbetti::quad
{

namespace
{

using Int128 = __int128;

// Sign-equivalent integer polynomial in the odd lattice z (cell center
// x = lo + z * resolution/2 with z = 2m+1).
class CenterEvaluator
{
public:
    CenterEvaluator(QuadraticPoly const& p, GridSpec const& spec)
        : k_(p.variables())
    {
        Rational const s = spec.resolution / 2;
        std::vector<Rational> lo;
        for (auto const& iv : spec.box)
            lo.push_back(iv.lo);

        // Coefficients over monomials z_a z_b (a <= b), z_a, and 1.
        std::vector<Rational> quad_terms;
        for (int a = 0; a < k_; ++a)
            for (int b = a; b < k_; ++b)
                quad_terms.push_back((a == b ? 1 : 2) * s * s * p.quad()(a, b));
        std::vector<Rational> lin_terms;
        for (int a = 0; a < k_; ++a)
        {
            Rational row = 0;
            for (int b = 0; b < k_; ++b)
                row += p.quad()(a, b) * lo[static_cast<std::size_t>(b)];
            lin_terms.push_back(s * (2 * row + p.lin()[static_cast<std::size_t>(a)]));
        }
        Rational const constant = p.evaluate(lo);

        BigInt den = denominator(constant);
        for (auto const* terms : {&quad_terms, &lin_terms})
            for (auto const& v : *terms)
                den = boost::multiprecision::lcm(den, denominator(v));

        auto scale = [&](Rational const& v) { return BigInt(numerator(v) * (den / denominator(v))); };
        for (auto const& v : quad_terms)
            big_quad_.push_back(scale(v));
        for (auto const& v : lin_terms)
            big_lin_.push_back(scale(v));
        big_const_ = scale(constant);

        BigInt zmax = 1;
        for (int a = 0; a < spec.dimension(); ++a)
            zmax = std::max(zmax, BigInt(2 * spec.cells_along(a)));
        BigInt magnitude = abs(big_const_);
        for (auto const& v : big_quad_)
            magnitude += abs(v) * zmax * zmax;
        for (auto const& v : big_lin_)
            magnitude += abs(v) * zmax;
        BigInt const word = BigInt(1) << 62;
        bool fits = abs(big_const_) < word;
        for (auto const* terms : {&big_quad_, &big_lin_})
            for (auto const& v : *terms)
                fits = fits && abs(v) < word;
        fast_ = fits && magnitude < (BigInt(1) << 120);
        if (fast_)
        {
            for (auto const& v : big_quad_)
                quad_.push_back(v.convert_to<long long>());
            for (auto const& v : big_lin_)
                lin_.push_back(v.convert_to<long long>());
            const_ = big_const_.convert_to<long long>();
        }
    }

    bool nonnegative(std::span<std::int64_t const> z) const
    {
        if (fast_)
        {
            Int128 acc = const_;
            std::size_t t = 0;
            for (int a = 0; a < k_; ++a)
            {
                Int128 const za = z[static_cast<std::size_t>(a)];
                acc += static_cast<Int128>(lin_[static_cast<std::size_t>(a)]) * za;
                for (int b = a; b < k_; ++b)
                    acc += static_cast<Int128>(quad_[t++]) * za * z[static_cast<std::size_t>(b)];
            }
            return acc >= 0;
        }
        BigInt acc = big_const_;
        std::size_t t = 0;
        for (int a = 0; a < k_; ++a)
        {
            BigInt const za = z[static_cast<std::size_t>(a)];
            acc += big_lin_[static_cast<std::size_t>(a)] * za;
            for (int b = a; b < k_; ++b)
                acc += big_quad_[t++] * za * z[static_cast<std::size_t>(b)];
        }
        return acc >= 0;
    }

private:
    int k_;
    bool fast_ = false;
    std::vector<long long> quad_, lin_;
    long long const_ = 0;
    std::vector<BigInt> big_quad_, big_lin_;
    BigInt big_const_;
};

} // namespace

GridSpec GridSpec::cube(int k, Rational const& lo, Rational const& hi, Rational const& resolution)
{
    GridSpec spec;
    spec.box.assign(static_cast<std::size_t>(k), RationalInterval{lo, hi});
    spec.resolution = resolution;
    spec.validate();
    return spec;
}

void GridSpec::validate() const
{
    if (resolution <= 0)
        throw std::invalid_argument("grid resolution must be positive");
    if (box.empty())
        throw std::invalid_argument("grid box must have at least one axis");
    if (box.size() > static_cast<std::size_t>(homology::kMaxAmbient))
        throw std::invalid_argument("grid box has too many axes");
    for (auto const& iv : box)
    {
        Rational const cells = (iv.hi - iv.lo) / resolution;
        if (cells <= 0 || denominator(cells) != 1)
            throw std::invalid_argument("resolution does not divide box width " + to_fraction_string(iv.hi - iv.lo));
        if (cells > 1'000'000)
            throw std::invalid_argument("grid too fine along one axis");
    }
}

int GridSpec::cells_along(int axis) const
{
    auto const& iv = box.at(static_cast<std::size_t>(axis));
    return numerator((iv.hi - iv.lo) / resolution).convert_to<int>();
}

Rational GridSpec::max_norm_squared() const
{
    Rational total = 0;
    for (auto const& iv : box)
    {
        Rational const a = iv.lo * iv.lo;
        Rational const b = iv.hi * iv.hi;
        total += std::max(a, b);
    }
    return total;
}

homology::CubicalComplex grid_complex(std::span<QuadraticPoly const> system, GridSpec const& spec)
{
    spec.validate();
    int const n = spec.dimension();
    for (auto const& p : system)
        if (p.variables() != n)
            throw std::invalid_argument("polynomial variable count differs from grid dimension");

    std::vector<CenterEvaluator> evaluators;
    evaluators.reserve(system.size());
    for (auto const& p : system)
        evaluators.emplace_back(p, spec);

    std::vector<std::int32_t> extent;
    for (int a = 0; a < n; ++a)
        extent.push_back(spec.cells_along(a));

    auto const slices = static_cast<std::size_t>(extent[0]);
    std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, slices);
    std::vector<std::vector<homology::ElementaryCube>> found(workers);

    // Worker w scans axis-0 slices [w*slices/workers, (w+1)*slices/workers);
    // concatenating in worker order keeps output deterministic.
    auto scan = [&](std::size_t w) {
        std::size_t const begin = w * slices / workers;
        std::size_t const end = (w + 1) * slices / workers;
        std::vector<std::int64_t> m(static_cast<std::size_t>(n), 0);
        std::vector<std::int64_t> z(static_cast<std::size_t>(n), 0);
        std::vector<std::int32_t> doubled(static_cast<std::size_t>(n), 0);
        auto& out = found[w];
        for (std::size_t first = begin; first < end; ++first)
        {
            std::fill(m.begin(), m.end(), 0);
            m[0] = static_cast<std::int64_t>(first);
            while (true)
            {
                for (std::size_t a = 0; a < m.size(); ++a)
                    z[a] = 2 * m[a] + 1;
                bool inside = true;
                for (auto const& ev : evaluators)
                    if (!ev.nonnegative(z))
                    {
                        inside = false;
                        break;
                    }
                if (inside)
                {
                    for (std::size_t a = 0; a < m.size(); ++a)
                        doubled[a] = static_cast<std::int32_t>(z[a]);
                    out.push_back(homology::ElementaryCube::from_doubled(doubled));
                }
                // Odometer over axes 1..n-1, last axis fastest.
                int a = n - 1;
                while (a >= 1)
                {
                    auto const u = static_cast<std::size_t>(a);
                    if (++m[u] < extent[u])
                        break;
                    m[u] = 0;
                    --a;
                }
                if (a < 1)
                    break;
            }
        }
    };

    if (workers == 1)
        scan(0);
    else
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back(scan, w);
    }

    std::vector<homology::ElementaryCube> tops;
    for (auto& part : found)
        tops.insert(tops.end(), part.begin(), part.end());
    return homology::close_grid_cells(extent, tops);
}

Rational sphere_band_halfwidth(int n, Rational const& resolution)
{
    // At least the half-diagonal of a cell, so the band has no gaps.
    auto const factor = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
    return resolution * std::max(factor, 1);
}

std::vector<QuadraticPoly> sphere_band_system(int n, Rational const& radius, Rational const& resolution)
{
    if (radius <= 0)
        throw std::domain_error("sphere radius must be positive");
    Rational const h = sphere_band_halfwidth(n, resolution);
    Rational const outer = radius + h;
    Rational const inner = radius > h ? Rational(radius - h) : Rational(0);

    QuadraticPoly below_outer(n);
    QuadraticPoly above_inner(n);
    for (int i = 0; i < n; ++i)
    {
        below_outer.quad().set(i, i, -1);
        above_inner.quad().set(i, i, 1);
    }
    below_outer.set_constant(outer * outer);
    above_inner.set_constant(-inner * inner);
    return {below_outer, above_inner};
}

homology::CubicalComplex sphere_zero_complex(std::span<QuadraticPoly const> forms, Rational const& radius,
                                             GridSpec const& spec, Rational const& tau)
{
    spec.validate();
    if (tau <= 0)
        throw std::domain_error("tau must be positive");
    int const n = spec.dimension();
    auto system = sphere_band_system(n, radius, spec.resolution);
    for (auto const& f : forms)
    {
        if (f.variables() != n)
            throw std::invalid_argument("form variable count differs from grid dimension");
        if (!f.is_homogeneous())
            throw std::invalid_argument("sphere_zero_complex needs homogeneous polynomials");
        QuadraticPoly upper = -f;
        upper.set_constant(tau);
        QuadraticPoly lower = f;
        lower.set_constant(tau);
        system.push_back(std::move(upper));
        system.push_back(std::move(lower));
    }
    return grid_complex(system, spec);
}

homology::CubicalComplex sphere_zero_complex(std::span<QuadraticForm const> forms, Rational const& radius,
                                             GridSpec const& spec, Rational const& tau)
{
    std::vector<QuadraticPoly> polys;
    for (auto const& f : forms)
        polys.push_back(f.as_poly());
    return sphere_zero_complex(polys, radius, spec, tau);
}

GridSpec sphere_grid_spec(int n, Rational const& radius, Rational const& resolution)
{
    if (resolution <= 0)
        throw std::invalid_argument("grid resolution must be positive");
    BigInt const steps = ceil_of(radius / resolution) + 2;
    Rational const bound = Rational(steps) * resolution;
    return GridSpec::cube(n, -bound, bound, resolution);
}

} // namespace qbetti::quad
