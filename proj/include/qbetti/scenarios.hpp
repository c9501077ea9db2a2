#ifndef QBETTI_SCENARIOS_HPP
#define QBETTI_SCENARIOS_HPP

#include <optional>
#include <string>
#include <vector>

#include "qbetti/grid.hpp"
#include "qbetti/homology.hpp"
#include "qbetti/quadratic.hpp"

namespace qbetti::verify
{

/// A basic closed set {P_1 >= 0, ..., P_s >= 0} in R^k with, when known,
/// its Betti numbers b_0..b_k. Oracle values are hardcoded from the
/// topology of the set, never computed by the code under test.
struct Scenario
{
    std::string name;
    std::vector<quad::QuadraticPoly> system;
    int s = 0;
    int k = 0;
    std::optional<homology::BettiVector> oracle_betti;
    std::string oracle_provenance;
    quad::GridSpec grid;
    /// The recommended grid reproduces the set's cells exactly (no boundary
    /// cell is ambiguous).
    bool grid_exact = false;
};

/// X_1(X_1-1) >= 0, ..., X_k(X_k-1) >= 0: 2^k disjoint boxes after
/// truncation, oracle (2^k, 0, ..., 0). 1 <= k <= 6.
Scenario scenario_products(int k);

/// r_out^2 - |x|^2 >= 0, |x|^2 - r_in^2 >= 0 in R^k, homotopic to S^{k-1}.
/// 2 <= k <= 3, 0 < r_in < r_out. Resolution defaults to 1/20 (k=2) or
/// 1/10 (k=3).
Scenario scenario_shell(int k, Rational const& r_in, Rational const& r_out,
                        std::optional<Rational> resolution = std::nullopt);

/// Empty system in R^k on the box [-1,1]^k (s = 0). Only meaningful for
/// the double-cover audit.
Scenario scenario_empty(int k);

/// Scenario from a user system with no oracle.
Scenario scenario_from_system(std::string name, std::vector<quad::QuadraticPoly> system, quad::GridSpec grid);

/// Looks up "products", "shell", or "empty" by name for the CLI.
Scenario scenario_by_name(std::string const& name, int k);

} // namespace qbetti::verify

#endif
