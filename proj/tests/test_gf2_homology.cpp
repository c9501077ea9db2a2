#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "qbetti/homology.hpp"

using namespace qbetti;
using namespace qbetti::homology;

namespace
{

ElementaryCube cube(std::vector<Interval> const& iv)
{
    return ElementaryCube::from_intervals(iv);
}

CubicalComplex closure(std::vector<ElementaryCube> const& cubes, int ambient = -1)
{
    return close_under_faces(cubes, ambient);
}

// Every proper face of [0,1]^3.
CubicalComplex cube_surface()
{
    std::vector<ElementaryCube> squares;
    for (int axis = 0; axis < 3; ++axis)
        for (int side = 0; side <= 1; ++side)
        {
            std::vector<Interval> iv(3, Interval{0, 1});
            iv[static_cast<std::size_t>(axis)] = Interval{side, side};
            squares.push_back(cube(iv));
        }
    return closure(squares);
}

CubicalComplex random_complex(std::mt19937_64& rng)
{
    int const ambient = 1 + static_cast<int>(rng() % 4);
    int const side = 3;
    std::size_t const n = 1 + rng() % 12;
    std::vector<ElementaryCube> cubes;
    for (std::size_t c = 0; c < n; ++c)
    {
        std::vector<std::int32_t> coords(static_cast<std::size_t>(ambient));
        for (auto& x : coords)
            x = static_cast<std::int32_t>(rng() % (2 * side + 1));
        cubes.push_back(ElementaryCube::from_doubled(coords));
    }
    return closure(cubes);
}

Gf2Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, unsigned density)
{
    Gf2Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (rng() % 100 < density)
                m.set(r, c, true);
    return m;
}

} // namespace

TEST_CASE("close_under_faces examples")
{
    auto const square = closure({cube({{0, 1}, {0, 1}})});
    CHECK(square.count(0) == 4);
    CHECK(square.count(1) == 4);
    CHECK(square.count(2) == 1);
    CHECK(square.is_face_closed());

    auto const empty = closure({}, 2);
    CHECK(empty.empty());
    CHECK(empty.top_dimension() == -1);

    auto const points = closure({cube({{0, 0}}), cube({{2, 2}})});
    CHECK(points.count(0) == 2);
    CHECK(points.total_cells() == 2);
}

TEST_CASE("close_under_faces rejects mixed ambient dimensions")
{
    CHECK_THROWS_AS(closure({cube({{0, 1}}), cube({{0, 1}, {0, 0}})}), std::invalid_argument);
}

TEST_CASE("from_closed_cells rejects a missing face")
{
    std::vector<ElementaryCube> cells{cube({{0, 1}}), cube({{0, 0}})};
    CHECK_THROWS_AS(CubicalComplex::from_closed_cells(1, cells), std::invalid_argument);
    cells.push_back(cube({{1, 1}}));
    CHECK_NOTHROW(CubicalComplex::from_closed_cells(1, cells));
}

TEST_CASE("elementary cube coordinates")
{
    auto const c = cube({{-2, -1}, {3, 3}});
    CHECK(c.dimension() == 1);
    CHECK(c.interval(0).lo == -2);
    CHECK(c.interval(0).hi == -1);
    CHECK(c.is_degenerate(1));
    CHECK(c.facets().size() == 2);
    CHECK_THROWS(cube({{0, 2}}));
}

TEST_CASE("gf2_rank examples")
{
    CHECK(gf2_rank(Gf2Matrix::identity(3)) == 3);
    Gf2Matrix ones(2, 2);
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c)
            ones.set(r, c, true);
    CHECK(gf2_rank(ones) == 1);
    CHECK(gf2_rank(Gf2Matrix(5, 7)) == 0);
    CHECK(gf2_rank(Gf2Matrix(0, 0)) == 0);
}

TEST_CASE("dense and sparse ranks agree and ignore permutations")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial)
    {
        std::size_t const rows = 1 + rng() % 90;
        std::size_t const cols = 1 + rng() % 90;
        auto const m = random_matrix(rng, rows, cols, static_cast<unsigned>(5 + rng() % 50));
        std::size_t const rank = gf2_rank(m);
        REQUIRE(gf2_rank(SparseGf2Matrix::from_dense(m)) == rank);
        REQUIRE(SparseGf2Matrix::from_dense(m).to_dense() == m);

        std::vector<std::size_t> rp(rows), cp(cols);
        std::iota(rp.begin(), rp.end(), 0);
        std::iota(cp.begin(), cp.end(), 0);
        std::shuffle(rp.begin(), rp.end(), rng);
        std::shuffle(cp.begin(), cp.end(), rng);
        Gf2Matrix permuted(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                permuted.set(rp[r], cp[c], m.get(r, c));
        REQUIRE(gf2_rank(permuted) == rank);
    }
}

TEST_CASE("sparse columns cancel repeated entries")
{
    SparseGf2Matrix const m(3, {{0, 2, 0}, {1}});
    CHECK(m.column(0) == SparseGf2Matrix::Column{2});
    CHECK(gf2_rank(m) == 2);
}

TEST_CASE("betti examples")
{
    auto const hollow = closure({cube({{0, 1}, {0, 0}}), cube({{0, 1}, {1, 1}}), cube({{0, 0}, {0, 1}}),
                                 cube({{1, 1}, {0, 1}})});
    CHECK(betti(hollow) == BettiVector{1, 1});
    CHECK(betti(closure({cube({{0, 1}, {0, 1}})})) == BettiVector{1, 0});
    CHECK(betti(cube_surface()) == BettiVector{1, 0, 1});
    CHECK(betti(closure({}, 3)) == BettiVector{});
    CHECK(betti(closure({}, 3)).total() == 0);
}

TEST_CASE("closure of a single d-cube is acyclic")
{
    for (int d = 0; d <= 4; ++d)
    {
        std::vector<Interval> iv(static_cast<std::size_t>(std::max(d, 1)), Interval{0, 0});
        for (int a = 0; a < d; ++a)
            iv[static_cast<std::size_t>(a)] = Interval{0, 1};
        auto const b = betti(closure({cube(iv)}));
        CHECK(b == BettiVector{1});
        CHECK(b.size() == iv.size() + 1);
    }
}

TEST_CASE("eight disjoint boxes have eight components")
{
    std::vector<ElementaryCube> boxes;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z)
                boxes.push_back(cube({{3 * x, 3 * x + 1}, {3 * y, 3 * y + 1}, {3 * z, 3 * z + 1}}));
    CHECK(betti(closure(boxes)) == BettiVector{8, 0, 0});
}

TEST_CASE("random complexes: boundary squares to zero, Euler, sparse equals dense")
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 500; ++trial)
    {
        auto const c = random_complex(rng);
        REQUIRE(c.is_face_closed());
        ChainComplex const chain(c);
        REQUIRE(chain.boundary_squares_to_zero());
        auto const b = betti(c);
        REQUIRE(b.euler_characteristic() == c.euler_characteristic());
        REQUIRE(betti_dense(chain) == b);
    }
}

TEST_CASE("betti is additive on disjoint unions")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial)
    {
        auto const a = random_complex(rng);
        auto b = random_complex(rng);
        if (b.ambient_dimension() != a.ambient_dimension())
            continue;
        std::vector<std::int32_t> const shift(static_cast<std::size_t>(a.ambient_dimension()), 10);
        b = b.translated(shift);
        REQUIRE(a.intersection(b).empty());
        REQUIRE(betti(a.set_union(b)) == betti(a) + betti(b));
    }
}

TEST_CASE("BettiVector helpers")
{
    BettiVector const v{2, 3, 1};
    CHECK(v.total() == 6);
    CHECK(v.euler_characteristic() == 0);
    CHECK(v.reduced(0) == 1);
    CHECK(v.reduced(1) == 3);
    CHECK(BettiVector{1, 1} == BettiVector{1, 1, 0});
    CHECK(v.scaled(2) == BettiVector{4, 6, 2});
    CHECK(BettiVector{}.reduced(0) == 0);
}

TEST_CASE("Mayer-Vietoris examples")
{
    PieceFamily wedge(2);
    wedge.set({1}, {1, 1});
    wedge.set({2}, {1, 1});
    wedge.set({1, 2}, {1, 0});
    auto const r = mayer_vietoris_audit({1, 2}, wedge, 1);
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.union_betti == 2);
    CHECK(r.bound == 3);

    PieceFamily disjoint(2);
    disjoint.set({1}, {1, 1});
    disjoint.set({2}, {1, 1});
    disjoint.set({2, 1}, {});
    CHECK(mayer_vietoris_audit({2, 2}, disjoint, 0).verdict == Verdict::Pass);
    CHECK(mayer_vietoris_audit({2, 2}, disjoint, 0).bound == 2);

    CHECK(mayer_vietoris_audit({1, 10}, wedge, 1).verdict == Verdict::Violation);
}

TEST_CASE("Mayer-Vietoris requires every subset up to size i+1")
{
    PieceFamily partial(2);
    partial.set({1}, {1, 1});
    partial.set({2}, {1, 1});
    CHECK_NOTHROW(mayer_vietoris_audit({1, 2}, partial, 0));
    CHECK_THROWS_AS(mayer_vietoris_audit({1, 2}, partial, 1), MissingPieceError);
    CHECK_THROWS(partial.set({1, 1}, {}));
    CHECK_THROWS(partial.set({3}, {}));
}

TEST_CASE("Mayer-Vietoris on computed pieces of a figure eight")
{
    std::vector<CubicalComplex> pieces;
    for (int offset : {0, 1})
        pieces.push_back(closure({cube({{offset, offset + 1}, {offset, offset}}),
                                  cube({{offset, offset + 1}, {offset + 1, offset + 1}}),
                                  cube({{offset, offset}, {offset, offset + 1}}),
                                  cube({{offset + 1, offset + 1}, {offset, offset + 1}})}));
    auto const whole = pieces[0].set_union(pieces[1]);
    CHECK(betti(whole) == BettiVector{1, 2});
    auto const family = PieceFamily::from_complexes(pieces);
    REQUIRE(family.find({1, 2}) != nullptr);
    CHECK(*family.find({1, 2}) == BettiVector{1});
    for (int i = 0; i <= 2; ++i)
        CHECK(mayer_vietoris_audit(betti(whole), family, i).verdict == Verdict::Pass);
}
