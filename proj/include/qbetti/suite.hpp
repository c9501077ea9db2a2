#ifndef QBETTI_SUITE_HPP
#define QBETTI_SUITE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "qbetti/rational.hpp"
#include "qbetti/verdict.hpp"

namespace qbetti::verify
{

struct SuiteEntry
{
    std::string name;
    std::string audit;
    Verdict verdict = Verdict::Pass;
    nlohmann::json detail;
};

struct SuiteOptions
{
    std::uint64_t seed = 0;
    Rational eps = Rational(1, 10);
    Rational delta = Rational(1, 1000);
    /// Cell width of the sphere grids used by lifted-set audits.
    Rational lifted_resolution = Rational(1, 2);
};

struct SuiteResult
{
    std::vector<SuiteEntry> entries;
    Verdict overall = Verdict::Pass;
};

/// Every built-in audit: oracle and grid bound audits, Smith, double cover,
/// deformation, Mayer-Vietoris and Alexander duality examples. Audits run
/// concurrently; entry order is fixed.
SuiteResult run_verification_suite(SuiteOptions const& options);

nlohmann::json to_json(SuiteResult const& result);

} // namespace qbetti::verify

#endif
