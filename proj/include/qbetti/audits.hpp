#ifndef QBETTI_AUDITS_HPP
#define QBETTI_AUDITS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "qbetti/ci_probe.hpp"
#include "qbetti/grid.hpp"
#include "qbetti/homology.hpp"
#include "qbetti/scenarios.hpp"
#include "qbetti/verdict.hpp"

namespace qbetti::verify
{

/// Ask bound_audit to rely on the scenario's oracle Betti numbers.
struct UseOracle
{
};

using BettiSource = std::variant<quad::GridSpec, UseOracle>;

struct BoundAuditRow
{
    int i = 0;
    std::size_t betti = 0;
    Rational bound;
    Verdict verdict = Verdict::Pass;
};

/// Per-degree comparison of b_i(S) against the per-degree bound and
/// of b(S) against the aggregate total bound.
///
/// Rows sourced from an oracle can be VIOLATION; rows sourced from a grid
/// can only be PASS or INCONCLUSIVE.
struct BoundAuditReport
{
    std::string scenario;
    int s = 0;
    int k = 0;
    std::string source; // "oracle" or "grid"
    std::vector<BoundAuditRow> rows;
    std::size_t total_betti = 0;
    Rational total_bound;
    Verdict total_verdict = Verdict::Pass;
    Verdict overall = Verdict::Pass;
    std::optional<quad::GridSpec> grid;
    std::optional<homology::BettiVector> grid_betti;
    std::vector<std::string> notes;
};

/// Throws std::domain_error when s > k or s < 1.
BoundAuditReport bound_audit(Scenario const& sc, BettiSource const& source);

struct SmithReport
{
    int forms = 0;         // j
    int projective_dim = 0; // k: the forms live in k+1 variables
    homology::BettiVector sphere_betti;
    std::size_t sphere_total = 0;
    std::size_t projective_total = 0;
    BigInt complex_bound;
    Verdict verdict = Verdict::Pass;
    std::optional<quad::CiProbeReport> probe;
    std::vector<std::string> notes;
};

/// Real projective zero set (through its sphere double cover) against the
/// total Betti number of the complex complete intersection of the same
/// degrees. Each input must be a non-singular quadratic form; anything else
/// throws std::domain_error. Tuples of two or more forms also get a
/// numeric ci_probe, reported as a diagnostic only.
SmithReport smith_audit(std::vector<quad::QuadraticPoly> const& forms, Rational const& radius,
                        quad::GridSpec const& spec, Rational const& tau, std::uint64_t seed = 0);

/// Sphere grid for lifted sets: radius 2/eps in k+1 variables.
quad::GridSpec lifted_grid_spec(int k, Rational const& eps, Rational const& resolution);

struct DoubleCoverReport
{
    std::string scenario;
    homology::BettiVector base_betti;   // grid homology of S on the scenario grid
    homology::BettiVector lifted_betti; // grid homology of the lifted set on the sphere
    std::optional<homology::BettiVector> oracle_betti;
    bool doubling_holds = false;
    Verdict verdict = Verdict::Inconclusive;
    std::vector<std::string> notes;
};

/// Lifts S to the sphere of radius 2/eps in R^{k+1} (both hemispheres of
/// the central projection of S x {1}, restricted to the projection of the
/// ball of radius 1/eps) and checks b_i(lift) = 2 b_i(S).
DoubleCoverReport double_cover_audit(Scenario const& sc, quad::DeformationParams const& params,
                                     quad::GridSpec const& lifted_spec);

struct DeformationStep
{
    Rational t;
    homology::BettiVector betti;
};

struct DeformationReport
{
    std::string scenario;
    std::vector<DeformationStep> steps; // t = 0 first
    bool constant = false;
    Verdict verdict = Verdict::Inconclusive;
    std::vector<std::string> notes;
};

/// Perturbs the lifted system towards seeded positive definite forms,
/// (1-t) P_i^h + t H~_i for each t, with each H~_i rescaled so that
/// |H~_i| <= 1 on the lifted sphere, and checks the lifted Betti numbers
/// do not move. Every t must lie in [0, delta].
DeformationReport deformation_audit(Scenario const& sc, quad::DeformationParams const& params,
                                    std::vector<Rational> const& t_values, quad::GridSpec const& lifted_spec,
                                    std::uint64_t seed = 0);

/// The polynomials defining the lifted set at deformation time t (t = 0 is
/// the plain homogenized system), including sphere band and cap.
std::vector<quad::QuadraticPoly> lifted_system(Scenario const& sc, quad::DeformationParams const& params,
                                               quad::GridSpec const& lifted_spec, Rational const& t,
                                               std::uint64_t seed = 0);

/// Union of cubical pieces with every intersection's Betti numbers.
struct UnionScenario
{
    std::string name;
    std::vector<homology::CubicalComplex> pieces;
};

UnionScenario union_wedge_of_circles();
UnionScenario union_disjoint_circles();
UnionScenario union_three_arcs();

struct MayerVietorisReport
{
    std::string name;
    homology::BettiVector union_betti;
    std::vector<homology::MayerVietorisResult> rows;
    Verdict verdict = Verdict::Pass;
};

/// Checks the inequality in every degree 0..top of the union.
MayerVietorisReport mayer_vietoris_report(UnionScenario const& sc);

/// Runs the inequality on supplied numbers, every degree 0..max_degree.
MayerVietorisReport mayer_vietoris_report(std::string name, homology::BettiVector const& union_betti,
                                          homology::PieceFamily const& pieces, int max_degree);

struct AlexanderRow
{
    int i = 0;
    std::size_t complement_reduced = 0; // reduced b_i(S^k \ A)
    std::size_t subset_reduced = 0;     // reduced b_{k-i-1}(A)
    Verdict verdict = Verdict::Pass;
};

struct AlexanderReport
{
    std::string name;
    int sphere_dim = 0;
    std::vector<AlexanderRow> rows;
    Verdict verdict = Verdict::Pass;
};

/// Reduced-rank Alexander duality on a cubical k-sphere: the complement is
/// approximated by the closed top cells of `sphere` that share no vertex
/// with `subset`. Mismatches are INCONCLUSIVE.
AlexanderReport alexander_audit(std::string name, homology::CubicalComplex const& sphere,
                                homology::CubicalComplex const& subset, int sphere_dim);

/// Boundary of [0,n]^3, a cubical 2-sphere.
homology::CubicalComplex cube_surface(int n);

/// Horizontal loop of unit edges around cube_surface(n) at height z.
homology::CubicalComplex surface_loop(int n, int z);

nlohmann::json to_json(BoundAuditReport const& r);
nlohmann::json to_json(SmithReport const& r);
nlohmann::json to_json(DoubleCoverReport const& r);
nlohmann::json to_json(DeformationReport const& r);
nlohmann::json to_json(MayerVietorisReport const& r);
nlohmann::json to_json(AlexanderReport const& r);
nlohmann::json to_json(homology::BettiVector const& b);
nlohmann::json to_json(quad::GridSpec const& g);

} // namespace qbetti::verify

#endif
