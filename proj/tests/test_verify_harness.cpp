#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "qbetti/audits.hpp"
#include "qbetti/bounds.hpp"
#include "qbetti/scenarios.hpp"
#include "qbetti/suite.hpp"

using namespace qbetti;
using namespace qbetti::verify;
using homology::BettiVector;

namespace
{

quad::QuadraticPoly diag_poly(std::vector<Rational> const& d)
{
    quad::SymmetricMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.size(); ++i)
        m.set(i, i, d[static_cast<std::size_t>(i)]);
    return quad::QuadraticPoly(m, std::vector<Rational>(d.size(), 0), 0);
}

quad::DeformationParams default_params()
{
    return {};
}

quad::GridSpec lifted(int k)
{
    return lifted_grid_spec(k, Rational(1, 10), Rational(1, 2));
}

} // namespace

TEST_CASE("scenario oracles")
{
    for (int k = 1; k <= 6; ++k)
    {
        auto const sc = scenario_products(k);
        CHECK(sc.s == k);
        REQUIRE(sc.oracle_betti);
        CHECK((*sc.oracle_betti)[0] == (std::size_t{1} << k));
        CHECK(sc.oracle_betti->total() == (std::size_t{1} << k));
    }
    CHECK(*scenario_shell(2, Rational(1, 2), 1).oracle_betti == BettiVector{1, 1});
    CHECK(*scenario_shell(3, Rational(1, 2), 1).oracle_betti == BettiVector{1, 0, 1});
    CHECK(*scenario_empty(2).oracle_betti == BettiVector{1});
    CHECK_THROWS(scenario_products(0));
    CHECK_THROWS(scenario_products(7));
    CHECK_THROWS(scenario_shell(3, 1, Rational(1, 2)));
    CHECK_THROWS(scenario_by_name("nonsense", 2));
}

TEST_CASE("bound_audit on oracles")
{
    auto const r3 = bound_audit(scenario_products(3), UseOracle{});
    CHECK(r3.source == "oracle");
    CHECK(r3.overall == Verdict::Pass);
    REQUIRE(r3.rows.size() == 3);
    CHECK(r3.rows[0].betti == 8);
    CHECK(r3.rows[0].bound == Rational(129, 2));

    auto const shell = bound_audit(scenario_shell(2, Rational(1, 2), 1), UseOracle{});
    CHECK(shell.rows[1].betti == 1);
    CHECK(shell.rows[1].bound == Rational(13, 2));
    CHECK(shell.overall == Verdict::Pass);

    auto const p1 = bound_audit(scenario_products(1), UseOracle{});
    CHECK(p1.rows[0].bound == Rational(5, 2));
    CHECK(p1.rows[0].betti == 2);
    CHECK(p1.overall == Verdict::Pass);

    CHECK_THROWS_AS(bound_audit(scenario_empty(2), UseOracle{}), std::domain_error);
}

TEST_CASE("bound_audit flags a false oracle as a violation")
{
    auto sc = scenario_products(1);
    sc.oracle_betti = BettiVector{3};
    CHECK(bound_audit(sc, UseOracle{}).overall == Verdict::Violation);
}

TEST_CASE("bound_audit on grids reproduces the oracle")
{
    for (int k = 1; k <= 3; ++k)
    {
        auto const sc = scenario_products(k);
        auto const r = bound_audit(sc, sc.grid);
        CHECK(r.source == "oracle");
        REQUIRE(r.grid_betti);
        CHECK(*r.grid_betti == *sc.oracle_betti);
        CHECK(r.overall == Verdict::Pass);
    }
    auto const annulus = scenario_shell(2, Rational(1, 2), 1);
    auto const r = bound_audit(annulus, annulus.grid);
    CHECK(*r.grid_betti == BettiVector{1, 1});
    CHECK(r.overall == Verdict::Pass);

    auto const bare = scenario_from_system("annulus", annulus.system, annulus.grid);
    auto const g = bound_audit(bare, bare.grid);
    CHECK(g.source == "grid");
    CHECK(g.rows[1].betti == 1);
    CHECK(g.overall == Verdict::Pass);
}

TEST_CASE("grid-sourced rows never report a violation")
{
    // Coarse grid on a system with no oracle: one cell per unit, so the two
    // pieces of X1(X1-1) >= 0 may merge or split. Whatever comes out, a grid
    // count can only pass or be inconclusive.
    auto const base = scenario_products(2);
    for (auto const& res : {Rational(1), Rational(1, 2), Rational(1, 4)})
    {
        auto const sc = scenario_from_system("coarse", base.system, quad::GridSpec::cube(2, -1, 2, res));
        auto const r = bound_audit(sc, sc.grid);
        CHECK(r.source == "grid");
        for (auto const& row : r.rows)
            CHECK(row.verdict != Verdict::Violation);
        CHECK(r.overall != Verdict::Violation);
    }
}

TEST_CASE("smith audit on the cone is the equality case")
{
    std::vector<quad::QuadraticPoly> const cone{diag_poly({1, 1, -1})};
    auto const spec = quad::sphere_grid_spec(3, 1, Rational(1, 20));
    auto const r = smith_audit(cone, 1, spec, Rational(1, 10));
    CHECK(r.sphere_betti == BettiVector{2, 2});
    CHECK(r.sphere_total == 4);
    CHECK(r.projective_total == 2);
    CHECK(r.complex_bound == bounds::b_ci(1, 2, bounds::DegreeSequence({2})));
    CHECK(r.verdict == Verdict::Pass);
}

TEST_CASE("smith audit rejects singular and non-quadratic input")
{
    auto const spec = quad::sphere_grid_spec(3, 1, Rational(1, 10));
    std::vector<quad::QuadraticPoly> const singular{diag_poly({1, 0, 0})};
    CHECK_THROWS_AS(smith_audit(singular, 1, spec, Rational(1, 10)), std::domain_error);
    quad::QuadraticPoly plane(3);
    plane.set_lin(2, 1);
    std::vector<quad::QuadraticPoly> const linear{plane};
    CHECK_THROWS_AS(smith_audit(linear, 1, spec, Rational(1, 10)), std::domain_error);
}

TEST_CASE("smith audit on two forms runs the numeric probe")
{
    // X^2 + Y^2 - Z^2 - W^2 and X^2 - Y^2 + Z^2 - W^2 meet in the torus-like
    // curve pair on S^3; the probe only adds diagnostics.
    std::vector<quad::QuadraticPoly> const pair{diag_poly({1, 1, -1, -1}), diag_poly({1, -1, 1, -1})};
    auto const spec = quad::sphere_grid_spec(4, 1, Rational(1, 6));
    auto const r = smith_audit(pair, 1, spec, Rational(1, 6));
    CHECK(r.probe.has_value());
    CHECK(r.verdict != Verdict::Violation);
}

TEST_CASE("double cover doubles the Betti numbers")
{
    auto const params = default_params();
    auto const products = double_cover_audit(scenario_products(2), params, lifted(2));
    CHECK(products.base_betti == BettiVector{4});
    CHECK(products.lifted_betti == BettiVector{8});
    CHECK(products.doubling_holds);
    CHECK(products.verdict == Verdict::Pass);

    auto const shell = double_cover_audit(scenario_shell(2, Rational(1, 2), 1), params, lifted(2));
    CHECK(shell.lifted_betti == BettiVector{2, 2, 0});
    CHECK(shell.verdict == Verdict::Pass);

    auto const empty = double_cover_audit(scenario_empty(2), params, lifted(2));
    CHECK(empty.lifted_betti == BettiVector{2});
    CHECK(empty.verdict == Verdict::Pass);
}

TEST_CASE("double cover of products holds for k = 1")
{
    auto const r = double_cover_audit(scenario_products(1), default_params(), lifted(1));
    CHECK(r.lifted_betti == BettiVector{4});
    CHECK(r.verdict == Verdict::Pass);
}

TEST_CASE("deformation keeps the lifted Betti numbers")
{
    auto const params = default_params();
    std::vector<Rational> const ts{0, Rational(1, 1000)};
    for (auto const& sc : {scenario_products(2), scenario_shell(2, Rational(1, 2), 1)})
    {
        auto const r = deformation_audit(sc, params, ts, lifted(2));
        REQUIRE(r.steps.size() == 2);
        CHECK(r.steps[0].t == 0);
        CHECK(r.steps[0].betti == r.steps[1].betti);
        CHECK(r.constant);
        CHECK(r.verdict == Verdict::Pass);
    }
    CHECK_THROWS_AS(deformation_audit(scenario_products(2), params, {Rational(1, 10)}, lifted(2)), std::domain_error);
}

TEST_CASE("lifted system at t = 0 is the homogenized system plus band and cap")
{
    auto const sc = scenario_products(2);
    auto const sys = lifted_system(sc, default_params(), lifted(2), 0);
    CHECK(sys.size() == sc.system.size() + 3);
    for (auto const& p : sys)
        CHECK(p.variables() == 3);
}

TEST_CASE("mayer-vietoris harness scenarios pass")
{
    for (auto const& sc : {union_wedge_of_circles(), union_disjoint_circles(), union_three_arcs()})
    {
        auto const r = mayer_vietoris_report(sc);
        CHECK(r.verdict == Verdict::Pass);
        CHECK(!r.rows.empty());
    }
    CHECK(mayer_vietoris_report(union_wedge_of_circles()).union_betti == BettiVector{1, 2});
    CHECK(mayer_vietoris_report(union_disjoint_circles()).union_betti == BettiVector{2, 2});
    CHECK(mayer_vietoris_report(union_three_arcs()).union_betti == BettiVector{1, 1});
}

TEST_CASE("mayer-vietoris report on fabricated numbers")
{
    homology::PieceFamily pieces(2);
    pieces.set({1}, {1, 1});
    pieces.set({2}, {1, 1});
    pieces.set({1, 2}, {1, 0});
    CHECK(mayer_vietoris_report("fabricated", {1, 10}, pieces, 1).verdict == Verdict::Violation);
    CHECK(mayer_vietoris_report("honest", {1, 2}, pieces, 1).verdict == Verdict::Pass);
}

TEST_CASE("alexander duality on cubical spheres")
{
    auto const sphere = cube_surface(4);
    CHECK(homology::betti(sphere) == BettiVector{1, 0, 1});
    auto const loop = surface_loop(4, 2);
    CHECK(homology::betti(loop) == BettiVector{1, 1});
    auto const r = alexander_audit("equator", sphere, loop, 2);
    CHECK(r.verdict == Verdict::Pass);

    auto const six = cube_surface(6);
    auto const two = surface_loop(6, 1).set_union(surface_loop(6, 5));
    CHECK(alexander_audit("two loops", six, two, 2).verdict == Verdict::Pass);
}

TEST_CASE("reports serialize bounds as exact strings")
{
    auto const j = to_json(bound_audit(scenario_products(3), UseOracle{}));
    CHECK(j["rows"][0]["bound_num"] == "129");
    CHECK(j["rows"][0]["bound_den"] == "2");
}

TEST_CASE("full suite passes and is deterministic")
{
    auto const a = run_verification_suite({});
    for (auto const& e : a.entries)
    {
        INFO(e.name << " " << e.audit);
        CHECK(e.verdict == Verdict::Pass);
    }
    CHECK(a.overall == Verdict::Pass);
    auto const b = run_verification_suite({});
    CHECK(to_json(a).dump() == to_json(b).dump());
}
