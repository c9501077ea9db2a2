#ifndef QBETTI_VERDICT_HPP
#define QBETTI_VERDICT_HPP

#include <span>
#include <string_view>

namespace qbetti
{

/// VIOLATION is reserved for exact contradictions. Anything coming from a
/// grid approximation that disagrees is INCONCLUSIVE.
enum class Verdict
{
    Pass,
    Violation,
    Inconclusive,
};

std::string_view to_string(Verdict v);

/// VIOLATION if any, else INCONCLUSIVE if any, else PASS. Empty -> PASS.
Verdict combine(std::span<Verdict const> verdicts);

} // namespace qbetti

#endif
