#include "qbetti/scenarios.hpp"

#include <stdexcept>

namespace qbetti::verify
{

using homology::BettiVector;
using quad::GridSpec;
using quad::QuadraticPoly;

Scenario scenario_products(int k)
{
    if (k < 1 || k > 6)
        throw std::domain_error("scenario_products: k must be in [1, 6]");
    Scenario sc;
    sc.name = "products_k" + std::to_string(k);
    sc.k = k;
    sc.s = k;
    for (int i = 0; i < k; ++i)
    {
        QuadraticPoly p(k);
        p.quad().set(i, i, 1);
        p.set_lin(i, -1);
        sc.system.push_back(std::move(p));
    }
    std::vector<std::size_t> b(static_cast<std::size_t>(k) + 1, 0);
    b[0] = std::size_t{1} << k;
    sc.oracle_betti = BettiVector(std::move(b));
    sc.oracle_provenance = "product of k two-point sets {x<=0} u {x>=1}: 2^k contractible components";
    // Cell boundaries sit on 0 and 1, so the box [-1,2] at 1/4 has no
    // ambiguous cell.
    sc.grid = GridSpec::cube(k, -1, 2, Rational(1, 4));
    sc.grid_exact = true;
    return sc;
}

Scenario scenario_shell(int k, Rational const& r_in, Rational const& r_out, std::optional<Rational> resolution)
{
    if (k < 2 || k > 3)
        throw std::domain_error("scenario_shell: k must be 2 or 3");
    if (!(r_in > 0 && r_in < r_out))
        throw std::domain_error("scenario_shell: need 0 < r_in < r_out");

    Scenario sc;
    sc.name = "shell_k" + std::to_string(k);
    sc.k = k;
    sc.s = 2;
    QuadraticPoly outer(k);
    QuadraticPoly inner(k);
    for (int i = 0; i < k; ++i)
    {
        outer.quad().set(i, i, -1);
        inner.quad().set(i, i, 1);
    }
    outer.set_constant(r_out * r_out);
    inner.set_constant(-r_in * r_in);
    sc.system = {outer, inner};

    if (k == 2)
    {
        sc.oracle_betti = BettiVector{1, 1, 0};
        sc.oracle_provenance = "annulus deformation-retracts to a circle";
    }
    else
    {
        sc.oracle_betti = BettiVector{1, 0, 1, 0};
        sc.oracle_provenance = "spherical shell deformation-retracts to S^2";
    }

    Rational const res = resolution.value_or(k == 2 ? Rational(1, 20) : Rational(1, 10));
    Rational const bound = Rational(ceil_of(r_out / res)) * res;
    sc.grid = GridSpec::cube(k, -bound, bound, res);
    return sc;
}

Scenario scenario_empty(int k)
{
    if (k < 1 || k > 6)
        throw std::domain_error("scenario_empty: k must be in [1, 6]");
    Scenario sc;
    sc.name = "empty_system_k" + std::to_string(k);
    sc.k = k;
    sc.s = 0;
    std::vector<std::size_t> b(static_cast<std::size_t>(k) + 1, 0);
    b[0] = 1;
    sc.oracle_betti = BettiVector(std::move(b));
    sc.oracle_provenance = "no constraints: the (truncated) whole space is contractible";
    sc.grid = GridSpec::cube(k, -1, 1, Rational(1, 4));
    sc.grid_exact = true;
    return sc;
}

Scenario scenario_from_system(std::string name, std::vector<QuadraticPoly> system, GridSpec grid)
{
    grid.validate();
    Scenario sc;
    sc.name = std::move(name);
    sc.k = grid.dimension();
    for (auto const& p : system)
        if (p.variables() != sc.k)
            throw std::invalid_argument("system variable count differs from grid dimension");
    sc.s = static_cast<int>(system.size());
    sc.system = std::move(system);
    sc.grid = std::move(grid);
    return sc;
}

Scenario scenario_by_name(std::string const& name, int k)
{
    if (name == "products")
        return scenario_products(k);
    if (name == "shell")
        return scenario_shell(k, Rational(1, 2), Rational(1));
    if (name == "empty")
        return scenario_empty(k);
    throw std::invalid_argument("unknown scenario '" + name + "' (expected products, shell, empty)");
}

} // namespace qbetti::verify
