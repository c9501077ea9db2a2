#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "qbetti/ci_probe.hpp"
#include "qbetti/grid.hpp"
#include "qbetti/homology.hpp"
#include "qbetti/quadratic.hpp"
#include "qbetti/system_io.hpp"

using namespace qbetti;
using namespace qbetti::quad;
using homology::betti;
using homology::BettiVector;

namespace
{

SymmetricMatrix diag(std::vector<Rational> const& d)
{
    SymmetricMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.size(); ++i)
        m.set(i, i, d[static_cast<std::size_t>(i)]);
    return m;
}

QuadraticForm diag_form(std::vector<Rational> const& d)
{
    return QuadraticForm(diag(d));
}

QuadraticPoly linear(int n, int axis)
{
    QuadraticPoly p(n);
    p.set_lin(axis, 1);
    return p;
}

} // namespace

TEST_CASE("homogenize examples")
{
    // X1^2 - X1 + 1
    QuadraticPoly p(diag({1}), {Rational(-1)}, 1);
    auto const f = homogenize(p);
    REQUIRE(f.variables() == 2);
    CHECK(f.gram()(0, 0) == 1);
    CHECK(f.gram()(0, 1) == Rational(-1, 2));
    CHECK(f.gram()(1, 1) == 1);
    CHECK(dehomogenize(f) == p);

    auto const h = homogenize(QuadraticPoly(diag({1, 3}), {0, 0}, 0));
    CHECK(h.gram() == diag({1, 3, 0}));

    QuadraticPoly one(2);
    one.set_constant(1);
    CHECK(homogenize(one).gram() == diag({0, 0, 1}));
}

TEST_CASE("homogenize agrees with evaluation at X_{k+1} = 1")
{
    SymmetricMatrix a(3);
    a.set(0, 1, Rational(3, 7));
    a.set(2, 2, -2);
    a.set(0, 0, Rational(1, 3));
    QuadraticPoly const p(a, {Rational(1, 2), -5, 0}, Rational(-9, 4));
    auto const f = homogenize(p);
    for (int s = -3; s <= 3; ++s)
    {
        std::vector<Rational> x{Rational(s, 2), Rational(1 - s), Rational(s * s, 5)};
        std::vector<Rational> xh = x;
        xh.push_back(1);
        CHECK(f.evaluate(xh) == p.evaluate(x));
        // degree-2 homogeneity
        std::vector<Rational> scaled;
        for (auto const& v : xh)
            scaled.push_back(3 * v);
        CHECK(f.evaluate(scaled) == 9 * p.evaluate(x));
    }
}

TEST_CASE("make_p_eps example")
{
    auto const p = make_p_eps(Rational(1, 10), 1);
    CHECK(p.constant() == 400);
    CHECK(p.quad() == diag({-1, -1}));
    CHECK(p.degree() == 2);
    CHECK_THROWS(make_p_eps(0, 1));
}

TEST_CASE("random_pd_form is positive definite and deterministic")
{
    for (std::uint64_t seed = 0; seed < 30; ++seed)
        for (int n = 1; n <= 5; ++n)
        {
            auto const f = random_pd_form(n, seed);
            CHECK(is_positive_definite(f));
            CHECK(f == random_pd_form(n, seed));
        }
    CHECK_FALSE(random_pd_form(3, 1) == random_pd_form(3, 2));
}

TEST_CASE("deform examples")
{
    auto const q = diag_form({1, 0});
    auto const h = diag_form({0, 1});
    CHECK(deform(q, h, 0) == q);
    CHECK(deform(q, h, 1) == h);
    CHECK(deform(q, h, Rational(1, 2)) == diag_form({Rational(1, 2), Rational(1, 2)}));
    CHECK_THROWS(deform(q, h, Rational(3, 2)));
    CHECK_THROWS(deform(q, diag_form({1}), 0));
}

TEST_CASE("is_positive_definite examples")
{
    CHECK(is_positive_definite(diag_form({1, 1, 1})));
    CHECK_FALSE(is_positive_definite(diag_form({1, -1})));
    SymmetricMatrix m(2);
    m.set(0, 0, 2);
    m.set(1, 1, 2);
    m.set(0, 1, 1);
    CHECK(is_positive_definite(QuadraticForm(m)));
    CHECK_FALSE(is_positive_definite(diag_form({1, 0})));
}

TEST_CASE("is_nonsingular_quadric examples")
{
    CHECK(is_nonsingular_quadric(diag_form({1, 1, 1})));
    SymmetricMatrix xy(2);
    xy.set(0, 1, Rational(1, 2));
    CHECK(determinant(xy) == Rational(-1, 4));
    CHECK(is_nonsingular_quadric(QuadraticForm(xy)));
    CHECK_FALSE(is_nonsingular_quadric(diag_form({1, 0})));
    CHECK_FALSE(is_nonsingular_quadric(diag_form({1, 0, 0})));
}

TEST_CASE("SymmetricMatrix rejects asymmetric rows")
{
    CHECK_THROWS_AS(SymmetricMatrix::from_rows({{1, 2}, {3, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(SymmetricMatrix::from_rows({{1, 2}}), std::invalid_argument);
}

TEST_CASE("ci_probe examples")
{
    std::vector<QuadraticForm> const cone{diag_form({1, 1, 1, -1})};
    CHECK(ci_probe(cone, 16, 0, 1e-6).verdict == ProbeVerdict::LikelyNonsingular);

    std::vector<QuadraticForm> const square{diag_form({1, 0, 0})};
    auto const sq = ci_probe(square, 16, 0, 1e-6);
    CHECK(sq.verdict != ProbeVerdict::LikelyNonsingular);
    CHECK(sq.zeros_found > 0);
    CHECK(sq.min_singular_value < 1e-6);

    std::vector<QuadraticForm> const positive{diag_form({1, 1, 1})};
    CHECK(ci_probe(positive, 16, 0, 1e-6).verdict == ProbeVerdict::Unknown);
}

TEST_CASE("grid_complex examples")
{
    // X1 (X1 - 1) >= 0
    std::vector<QuadraticPoly> const sys{QuadraticPoly(diag({1}), {Rational(-1)}, 0)};
    auto const spec = GridSpec::cube(1, -1, 2, Rational(1, 4));
    auto const c = grid_complex(sys, spec);
    CHECK(c.is_face_closed());
    CHECK(betti(c) == BettiVector{2});

    auto const box = GridSpec::cube(3, -1, 1, Rational(1, 4));
    auto const full = grid_complex({}, box);
    CHECK(full.count(3) == 512);
    CHECK(betti(full) == BettiVector{1});

    std::vector<QuadraticPoly> const infeasible{QuadraticPoly(diag({-1, -1}), {0, 0}, -1)};
    CHECK(grid_complex(infeasible, GridSpec::cube(2, -2, 2, Rational(1, 2))).empty());
}

TEST_CASE("grid_complex rejects a box that does not divide evenly")
{
    auto spec = GridSpec::cube(1, 0, 1, Rational(1, 3));
    spec.box[0].hi = Rational(1, 2);
    CHECK_THROWS_AS(grid_complex({}, spec), std::invalid_argument);
    std::vector<QuadraticPoly> const wrong{QuadraticPoly(2)};
    CHECK_THROWS(grid_complex(wrong, GridSpec::cube(1, 0, 1, 1)));
}

TEST_CASE("adding an inequality can only remove top cells")
{
    auto const spec = GridSpec::cube(2, -2, 2, Rational(1, 4));
    std::vector<QuadraticPoly> sys{QuadraticPoly(diag({-1, -1}), {0, 0}, 3)};
    auto const before = grid_complex(sys, spec);
    sys.push_back(QuadraticPoly(diag({1, -1}), {Rational(1, 3), 0}, 0));
    auto const after = grid_complex(sys, spec);
    CHECK(after.count(2) <= before.count(2));
    for (auto const& cell : after.cells(2))
        CHECK(before.contains(cell));
}

TEST_CASE("grid complex on large coefficients falls back to exact big arithmetic")
{
    // Disk of radius 10^12 scaled down: same topology as the unit disk.
    Rational const big("1000000000000000000000000");
    std::vector<QuadraticPoly> const sys{QuadraticPoly(diag({-big, -big}), {0, 0}, big)};
    auto const c = grid_complex(sys, GridSpec::cube(2, -2, 2, Rational(1, 4)));
    CHECK(betti(c) == BettiVector{1, 0});
}

TEST_CASE("sphere_zero_complex examples")
{
    Rational const res(1, 10);
    auto const spec = sphere_grid_spec(3, 1, res);

    std::vector<QuadraticPoly> const equator{linear(3, 2)};
    CHECK(betti(sphere_zero_complex(equator, 1, spec, res)) == BettiVector{1, 1});

    std::vector<QuadraticForm> const cone{diag_form({1, 1, -1})};
    auto const fine = sphere_grid_spec(3, 1, Rational(1, 20));
    CHECK(betti(sphere_zero_complex(cone, 1, fine, Rational(1, 10))) == BettiVector{2, 2});

    std::vector<QuadraticForm> const positive{diag_form({1, 1, 1})};
    CHECK(sphere_zero_complex(positive, 1, spec, Rational(1, 100)).empty());

    CHECK(betti(sphere_zero_complex(std::vector<QuadraticForm>{}, 1, spec, res)) == BettiVector{1, 0, 1});
}

TEST_CASE("sphere_zero_complex requires homogeneous input")
{
    auto const spec = sphere_grid_spec(2, 1, Rational(1, 10));
    std::vector<QuadraticPoly> const affine{QuadraticPoly(diag({1, 1}), {0, 0}, -1)};
    CHECK_THROWS_AS(sphere_zero_complex(affine, 1, spec, Rational(1, 10)), std::invalid_argument);
}

TEST_CASE("system documents round-trip and reject floats")
{
    auto const sys = parse_system(R"({"k":2,"polys":[{"quad":[["1","1/2"],["1/2","-3"]],"lin":["0","7"],"const":"-1/4"}]})");
    REQUIRE(sys.polys.size() == 1);
    CHECK(sys.polys[0].quad()(0, 1) == Rational(1, 2));
    CHECK(sys.polys[0].constant() == Rational(-1, 4));
    auto const again = system_from_json(to_json(sys));
    CHECK(again.polys[0] == sys.polys[0]);

    CHECK_THROWS_AS(parse_system(R"({"k":1,"polys":[{"quad":[[1.5]],"lin":["0"],"const":"0"}]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_system(R"({"k":1,"polys":[{"quad":[["0.5"]],"lin":["0"],"const":"0"}]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_system(R"({"k":1,"polys":[{"quad":[["1"]],"lin":["0"]}]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_system(R"({"k":2,"polys":[{"quad":[["1","2"],["3","1"]],"lin":["0","0"],"const":"0"}]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_system("{not json"), std::invalid_argument);
}
