#include "qbetti/audits.hpp"

#include <algorithm>
#include <stdexcept>

#include "qbetti/bounds.hpp"

namespace qbetti::verify
{

using homology::BettiVector;
using homology::CubicalComplex;
using homology::ElementaryCube;
using homology::Interval;
using quad::GridSpec;
using quad::QuadraticForm;
using quad::QuadraticPoly;

namespace
{

Verdict bound_verdict(bool holds, bool exact)
{
    if (holds)
        return Verdict::Pass;
    return exact ? Verdict::Violation : Verdict::Inconclusive;
}

ElementaryCube cube_of(std::vector<Interval> const& iv)
{
    return ElementaryCube::from_intervals(iv);
}

CubicalComplex unit_square_boundary(int x0, int y0)
{
    std::vector<ElementaryCube> edges = {
        cube_of({{x0, x0 + 1}, {y0, y0}}),
        cube_of({{x0, x0 + 1}, {y0 + 1, y0 + 1}}),
        cube_of({{x0, x0}, {y0, y0 + 1}}),
        cube_of({{x0 + 1, x0 + 1}, {y0, y0 + 1}}),
    };
    return homology::close_under_faces(edges);
}

// Edge between lattice points that differ by one on one axis.
ElementaryCube lattice_edge(std::pair<int, int> a, std::pair<int, int> b)
{
    auto const [ax, ay] = a;
    auto const [bx, by] = b;
    return cube_of({{std::min(ax, bx), std::max(ax, bx)}, {std::min(ay, by), std::max(ay, by)}});
}

std::vector<ElementaryCube> vertices_of(ElementaryCube const& cube)
{
    std::vector<ElementaryCube> out;
    int const n = cube.ambient();
    std::vector<int> open;
    for (int a = 0; a < n; ++a)
        if (!cube.is_degenerate(a))
            open.push_back(a);
    for (unsigned mask = 0; mask < (1u << open.size()); ++mask)
    {
        std::vector<Interval> iv;
        for (int a = 0; a < n; ++a)
            iv.push_back(cube.interval(a));
        for (std::size_t t = 0; t < open.size(); ++t)
        {
            auto& slot = iv[static_cast<std::size_t>(open[t])];
            std::int32_t const end = (mask >> t & 1) ? slot.hi : slot.lo;
            slot = {end, end};
        }
        out.push_back(ElementaryCube::from_intervals(iv));
    }
    return out;
}

BettiVector grid_betti(std::vector<QuadraticPoly> const& system, GridSpec const& spec)
{
    return homology::betti(quad::grid_complex(system, spec));
}

} // namespace

BoundAuditReport bound_audit(Scenario const& sc, BettiSource const& source)
{
    if (sc.s < 1 || sc.s > sc.k)
        throw std::domain_error("bound_audit needs 1 <= s <= k, got s=" + std::to_string(sc.s) + ", k=" +
                                std::to_string(sc.k));

    BoundAuditReport report;
    report.scenario = sc.name;
    report.s = sc.s;
    report.k = sc.k;

    if (auto const* spec = std::get_if<GridSpec>(&source))
    {
        report.grid = *spec;
        report.grid_betti = grid_betti(sc.system, *spec);
    }
    else if (!sc.oracle_betti)
    {
        report.notes.push_back("no oracle available; fell back to the scenario's recommended grid");
        report.grid = sc.grid;
        report.grid_betti = grid_betti(sc.system, sc.grid);
    }

    bool const exact = sc.oracle_betti.has_value();
    BettiVector const& betti = exact ? *sc.oracle_betti : *report.grid_betti;
    report.source = exact ? "oracle" : "grid";
    if (exact && report.grid_betti && !(*report.grid_betti == *sc.oracle_betti))
        report.notes.push_back("grid homology " + report.grid_betti->to_string() + " differs from oracle " +
                               sc.oracle_betti->to_string() + "; refine the resolution");

    std::vector<Verdict> verdicts;
    for (int i = 0; i < sc.k; ++i)
    {
        BoundAuditRow row;
        row.i = i;
        row.betti = betti[static_cast<std::size_t>(i)];
        row.bound = bounds::bound_betti({sc.s, sc.k, i});
        row.verdict = bound_verdict(Rational(row.betti) <= row.bound, exact);
        verdicts.push_back(row.verdict);
        report.rows.push_back(std::move(row));
    }

    report.total_betti = betti.total();
    report.total_bound = bounds::total_bound(sc.s, sc.k);
    report.total_verdict = bound_verdict(Rational(report.total_betti) <= report.total_bound, exact);
    verdicts.push_back(report.total_verdict);
    report.overall = combine(verdicts);
    if (!exact && report.overall == Verdict::Inconclusive)
        report.notes.push_back("grid value exceeds a bound; halve the resolution and re-run");
    return report;
}

SmithReport smith_audit(std::vector<QuadraticPoly> const& forms, Rational const& radius, GridSpec const& spec,
                        Rational const& tau, std::uint64_t seed)
{
    if (forms.empty())
        throw std::domain_error("smith_audit needs at least one form");
    int const n = forms.front().variables();
    std::vector<QuadraticForm> as_forms;
    for (auto const& p : forms)
    {
        if (p.variables() != n)
            throw std::domain_error("smith_audit: forms have different variable counts");
        if (p.degree() != 2 || !p.is_homogeneous())
            throw std::domain_error("smith_audit accepts quadratic forms only, got " + p.to_string());
        QuadraticForm f(p.quad());
        if (!quad::is_nonsingular_quadric(f))
            throw std::domain_error("smith_audit: singular quadric " + p.to_string());
        as_forms.push_back(std::move(f));
    }

    SmithReport report;
    report.forms = static_cast<int>(forms.size());
    report.projective_dim = n - 1;
    if (report.forms > report.projective_dim)
        throw std::domain_error("smith_audit: more forms than the projective dimension");

    if (report.forms >= 2)
    {
        report.probe = quad::ci_probe(as_forms, 16, seed, 1e-6);
        report.notes.push_back(std::string("complete-intersection probe: ") +
                               std::string(quad::to_string(report.probe->verdict)) + " (diagnostic only)");
    }

    report.sphere_betti = homology::betti(quad::sphere_zero_complex(forms, radius, spec, tau));
    report.sphere_total = report.sphere_betti.total();
    report.complex_bound = bounds::b_ci(report.forms, report.projective_dim,
                                        bounds::DegreeSequence::all_twos(report.forms));

    if (report.sphere_total % 2 != 0)
    {
        report.verdict = Verdict::Inconclusive;
        report.notes.push_back("odd sphere total breaks antipodal symmetry; refine resolution or tau");
        report.projective_total = report.sphere_total / 2;
        return report;
    }
    report.projective_total = report.sphere_total / 2;
    if (BigInt(report.projective_total) <= report.complex_bound)
        report.verdict = Verdict::Pass;
    else
    {
        report.verdict = Verdict::Inconclusive;
        report.notes.push_back("grid total exceeds the complex bound; refine resolution or tau");
    }
    return report;
}

GridSpec lifted_grid_spec(int k, Rational const& eps, Rational const& resolution)
{
    if (eps <= 0)
        throw std::domain_error("eps must be positive");
    return quad::sphere_grid_spec(k + 1, Rational(2) / eps, resolution);
}

std::vector<QuadraticPoly> lifted_system(Scenario const& sc, quad::DeformationParams const& params,
                                         GridSpec const& lifted_spec, Rational const& t, std::uint64_t seed)
{
    int const n = sc.k + 1;
    if (lifted_spec.dimension() != n)
        throw std::invalid_argument("lifted grid must have k+1 axes");

    Rational const radius = Rational(2) / params.eps;
    std::vector<QuadraticPoly> system;
    for (std::size_t i = 0; i < sc.system.size(); ++i)
    {
        QuadraticPoly lifted = quad::homogenize(sc.system[i]).as_poly();
        if (t != 0)
        {
            // H~_i = H_i(X_1..X_{k+1}, 1) for a positive definite H_i in k+2
            // variables. H_i is divided by (k+2) max|G_ab| (R^2+1), which
            // bounds |H~_i| by 1 on the sphere of radius R.
            quad::QuadraticForm const form = quad::random_pd_form(sc.k + 2, seed + i);
            Rational largest = 0;
            for (int a = 0; a < form.variables(); ++a)
                for (int b = 0; b < form.variables(); ++b)
                    largest = std::max(largest, abs(form.gram()(a, b)));
            Rational const r2 = radius * radius;
            QuadraticPoly const pd = quad::dehomogenize(form).scaled(Rational(1) / ((sc.k + 2) * largest * (r2 + 1)));
            lifted = lifted.scaled(1 - t) + pd.scaled(t);
        }
        system.push_back(std::move(lifted));
    }

    for (auto& band : quad::sphere_band_system(n, radius, lifted_spec.resolution))
        system.push_back(std::move(band));

    // Central projection of the ball of radius 1/eps at height one:
    // X_{k+1}^2 - eps^2 (X_1^2 + ... + X_k^2) >= 0.
    QuadraticPoly cap(n);
    for (int a = 0; a < sc.k; ++a)
        cap.quad().set(a, a, -params.eps * params.eps);
    cap.quad().set(sc.k, sc.k, 1);
    system.push_back(std::move(cap));
    return system;
}

DoubleCoverReport double_cover_audit(Scenario const& sc, quad::DeformationParams const& params,
                                     GridSpec const& lifted_spec)
{
    params.validate();
    DoubleCoverReport report;
    report.scenario = sc.name;
    report.oracle_betti = sc.oracle_betti;

    Rational const ball = Rational(1) / params.eps;
    if (sc.grid.max_norm_squared() > ball * ball)
    {
        report.verdict = Verdict::Inconclusive;
        report.notes.push_back("scenario grid reaches past the ball of radius 1/eps = " + to_fraction_string(ball) +
                               "; shrink eps");
        return report;
    }

    report.base_betti = grid_betti(sc.system, sc.grid);
    report.lifted_betti = grid_betti(lifted_system(sc, params, lifted_spec, 0), lifted_spec);

    bool holds = report.lifted_betti == report.base_betti.scaled(2);
    if (sc.oracle_betti)
        holds = holds && report.lifted_betti == sc.oracle_betti->scaled(2);
    report.doubling_holds = holds;
    report.verdict = holds ? Verdict::Pass : Verdict::Inconclusive;
    if (!holds)
        report.notes.push_back("lifted Betti numbers are not twice the base; halve the lifted resolution");
    return report;
}

DeformationReport deformation_audit(Scenario const& sc, quad::DeformationParams const& params,
                                    std::vector<Rational> const& t_values, GridSpec const& lifted_spec,
                                    std::uint64_t seed)
{
    params.validate();
    for (auto const& t : t_values)
        if (t < 0 || t > params.delta)
            throw std::domain_error("deformation time " + to_fraction_string(t) + " outside [0, delta]");

    DeformationReport report;
    report.scenario = sc.name;
    report.notes.push_back("closed-set grid approximation stands in for both the open and closed perturbed sets");

    std::vector<Rational> times{Rational(0)};
    for (auto const& t : t_values)
        if (std::find(times.begin(), times.end(), t) == times.end())
            times.push_back(t);

    for (auto const& t : times)
        report.steps.push_back({t, grid_betti(lifted_system(sc, params, lifted_spec, t, seed), lifted_spec)});

    report.constant = std::all_of(report.steps.begin(), report.steps.end(),
                                  [&](DeformationStep const& st) { return st.betti == report.steps.front().betti; });
    report.verdict = report.constant ? Verdict::Pass : Verdict::Inconclusive;
    if (!report.constant)
        report.notes.push_back("Betti numbers moved along the deformation; shrink delta or refine the grid");
    return report;
}

UnionScenario union_wedge_of_circles()
{
    return {"wedge_of_two_circles", {unit_square_boundary(0, 0), unit_square_boundary(1, 1)}};
}

UnionScenario union_disjoint_circles()
{
    return {"two_disjoint_circles", {unit_square_boundary(0, 0), unit_square_boundary(3, 0)}};
}

UnionScenario union_three_arcs()
{
    // Boundary of [0,2]^2 walked counter-clockwise, cut into three arcs that
    // meet pairwise in single vertices.
    std::vector<std::pair<int, int>> const cycle = {{0, 0}, {1, 0}, {2, 0}, {2, 1},
                                                    {2, 2}, {1, 2}, {0, 2}, {0, 1}};
    auto arc = [&](std::size_t from, std::size_t to) {
        std::vector<ElementaryCube> edges;
        for (std::size_t v = from; v != to; v = (v + 1) % cycle.size())
            edges.push_back(lattice_edge(cycle[v], cycle[(v + 1) % cycle.size()]));
        return homology::close_under_faces(edges);
    };
    return {"circle_from_three_arcs", {arc(0, 3), arc(3, 6), arc(6, 0)}};
}

MayerVietorisReport mayer_vietoris_report(UnionScenario const& sc)
{
    if (sc.pieces.empty())
        throw std::invalid_argument("union scenario has no pieces");
    CubicalComplex whole = sc.pieces.front();
    for (std::size_t p = 1; p < sc.pieces.size(); ++p)
        whole = whole.set_union(sc.pieces[p]);
    auto const family = homology::PieceFamily::from_complexes(sc.pieces);
    return mayer_vietoris_report(sc.name, homology::betti(whole), family, whole.ambient_dimension());
}

MayerVietorisReport mayer_vietoris_report(std::string name, BettiVector const& union_betti,
                                          homology::PieceFamily const& pieces, int max_degree)
{
    MayerVietorisReport report;
    report.name = std::move(name);
    report.union_betti = union_betti;
    std::vector<Verdict> verdicts;
    for (int i = 0; i <= max_degree; ++i)
    {
        report.rows.push_back(homology::mayer_vietoris_audit(union_betti, pieces, i));
        verdicts.push_back(report.rows.back().verdict);
    }
    report.verdict = combine(verdicts);
    return report;
}

AlexanderReport alexander_audit(std::string name, CubicalComplex const& sphere, CubicalComplex const& subset,
                                int sphere_dim)
{
    if (sphere.ambient_dimension() != subset.ambient_dimension())
        throw std::invalid_argument("alexander_audit: ambient dimensions differ");
    if (sphere.top_dimension() != sphere_dim)
        throw std::invalid_argument("alexander_audit: sphere complex has the wrong dimension");

    std::vector<ElementaryCube> kept;
    for (auto const& top : sphere.cells(sphere_dim))
    {
        auto const verts = vertices_of(top);
        bool const touches = std::any_of(verts.begin(), verts.end(),
                                         [&](ElementaryCube const& v) { return subset.contains(v); });
        if (!touches)
            kept.push_back(top);
    }
    auto const complement = homology::betti(homology::close_under_faces(kept, sphere.ambient_dimension()));
    auto const a = homology::betti(subset);

    AlexanderReport report;
    report.name = std::move(name);
    report.sphere_dim = sphere_dim;
    std::vector<Verdict> verdicts;
    for (int i = 0; i < sphere_dim; ++i)
    {
        AlexanderRow row;
        row.i = i;
        row.complement_reduced = complement.reduced(static_cast<std::size_t>(i));
        // Over a field, cohomology and homology ranks agree.
        row.subset_reduced = a.reduced(static_cast<std::size_t>(sphere_dim - i - 1));
        row.verdict = row.complement_reduced == row.subset_reduced ? Verdict::Pass : Verdict::Inconclusive;
        verdicts.push_back(row.verdict);
        report.rows.push_back(row);
    }
    report.verdict = combine(verdicts);
    return report;
}

CubicalComplex cube_surface(int n)
{
    if (n < 1)
        throw std::invalid_argument("cube_surface needs n >= 1");
    std::vector<ElementaryCube> faces;
    for (int fixed = 0; fixed < 3; ++fixed)
        for (int side : {0, n})
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                {
                    std::vector<Interval> iv(3);
                    int const a = (fixed + 1) % 3;
                    int const b = (fixed + 2) % 3;
                    iv[static_cast<std::size_t>(fixed)] = {side, side};
                    iv[static_cast<std::size_t>(a)] = {u, u + 1};
                    iv[static_cast<std::size_t>(b)] = {v, v + 1};
                    faces.push_back(ElementaryCube::from_intervals(iv));
                }
    return homology::close_under_faces(faces);
}

CubicalComplex surface_loop(int n, int z)
{
    if (z < 0 || z > n)
        throw std::invalid_argument("surface_loop height outside the cube");
    std::vector<ElementaryCube> edges;
    for (int u = 0; u < n; ++u)
    {
        edges.push_back(cube_of({{u, u + 1}, {0, 0}, {z, z}}));
        edges.push_back(cube_of({{u, u + 1}, {n, n}, {z, z}}));
        edges.push_back(cube_of({{0, 0}, {u, u + 1}, {z, z}}));
        edges.push_back(cube_of({{n, n}, {u, u + 1}, {z, z}}));
    }
    return homology::close_under_faces(edges);
}

nlohmann::json to_json(BettiVector const& b)
{
    return nlohmann::json(b.values());
}

nlohmann::json to_json(GridSpec const& g)
{
    nlohmann::json box = nlohmann::json::array();
    for (auto const& iv : g.box)
        box.push_back({to_fraction_string(iv.lo), to_fraction_string(iv.hi)});
    return {{"box", std::move(box)}, {"resolution", to_fraction_string(g.resolution)}, {"rule", "center-point"}};
}

nlohmann::json to_json(BoundAuditReport const& r)
{
    nlohmann::json rows = nlohmann::json::array();
    for (auto const& row : r.rows)
        rows.push_back({{"i", row.i},
                        {"betti", row.betti},
                        {"bound_num", numerator(row.bound).str()},
                        {"bound_den", denominator(row.bound).str()},
                        {"verdict", to_string(row.verdict)}});
    nlohmann::json doc = {{"scenario", r.scenario},
                          {"s", r.s},
                          {"k", r.k},
                          {"source", r.source},
                          {"rows", std::move(rows)},
                          {"total",
                           {{"betti", r.total_betti},
                            {"bound_num", numerator(r.total_bound).str()},
                            {"bound_den", denominator(r.total_bound).str()},
                            {"verdict", to_string(r.total_verdict)}}},
                          {"overall", to_string(r.overall)},
                          {"notes", r.notes}};
    if (r.grid)
        doc["grid"] = to_json(*r.grid);
    if (r.grid_betti)
        doc["grid_betti"] = to_json(*r.grid_betti);
    return doc;
}

nlohmann::json to_json(SmithReport const& r)
{
    nlohmann::json doc = {{"forms", r.forms},
                          {"projective_dim", r.projective_dim},
                          {"sphere_betti", to_json(r.sphere_betti)},
                          {"sphere_total", r.sphere_total},
                          {"projective_total", r.projective_total},
                          {"complex_bound", r.complex_bound.str()},
                          {"verdict", to_string(r.verdict)},
                          {"notes", r.notes}};
    if (r.probe)
        doc["probe"] = {{"verdict", quad::to_string(r.probe->verdict)},
                        {"zeros_found", r.probe->zeros_found},
                        {"min_singular_value", r.probe->min_singular_value}};
    return doc;
}

nlohmann::json to_json(DoubleCoverReport const& r)
{
    nlohmann::json doc = {{"scenario", r.scenario},
                          {"base_betti", to_json(r.base_betti)},
                          {"lifted_betti", to_json(r.lifted_betti)},
                          {"doubling_holds", r.doubling_holds},
                          {"verdict", to_string(r.verdict)},
                          {"notes", r.notes}};
    if (r.oracle_betti)
        doc["oracle_betti"] = to_json(*r.oracle_betti);
    return doc;
}

nlohmann::json to_json(DeformationReport const& r)
{
    nlohmann::json steps = nlohmann::json::array();
    for (auto const& st : r.steps)
        steps.push_back({{"t", to_fraction_string(st.t)}, {"betti", to_json(st.betti)}});
    return {{"scenario", r.scenario},
            {"steps", std::move(steps)},
            {"constant", r.constant},
            {"verdict", to_string(r.verdict)},
            {"notes", r.notes}};
}

nlohmann::json to_json(MayerVietorisReport const& r)
{
    nlohmann::json rows = nlohmann::json::array();
    for (auto const& row : r.rows)
        rows.push_back({{"i", row.degree},
                        {"union_betti", row.union_betti},
                        {"bound", row.bound},
                        {"verdict", to_string(row.verdict)}});
    return {{"name", r.name}, {"union_betti", to_json(r.union_betti)}, {"rows", std::move(rows)},
            {"verdict", to_string(r.verdict)}};
}

nlohmann::json to_json(AlexanderReport const& r)
{
    nlohmann::json rows = nlohmann::json::array();
    for (auto const& row : r.rows)
        rows.push_back({{"i", row.i},
                        {"complement_reduced", row.complement_reduced},
                        {"subset_reduced", row.subset_reduced},
                        {"verdict", to_string(row.verdict)}});
    return {{"name", r.name}, {"sphere_dim", r.sphere_dim}, {"rows", std::move(rows)},
            {"verdict", to_string(r.verdict)}};
}

} // namespace qbetti::verify
