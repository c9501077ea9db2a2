#ifndef QBETTI_SYSTEM_IO_HPP
#define QBETTI_SYSTEM_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qbetti/quadratic.hpp"

namespace qbetti::quad
{

/// A system of quadratic inequalities P_i >= 0 in k variables.
///
/// Document form:
///
///     {"k": 2,
///      "polys": [{"quad": [["1","0"],["0","1"]], "lin": ["0","0"], "const": "-1/4"}]}
///
/// Every coefficient is an exact rational string ("p/q" or "p"). Floats,
/// JSON numbers and decimal strings are rejected.
struct QuadraticSystem
{
    int k = 0;
    std::vector<QuadraticPoly> polys;
};

QuadraticSystem system_from_json(nlohmann::json const& doc);
QuadraticSystem parse_system(std::string_view text);
QuadraticSystem load_system(std::filesystem::path const& path);

nlohmann::json to_json(QuadraticSystem const& system);

} // namespace qbetti::quad

#endif
