#include "qbetti/verdict.hpp"

#include <algorithm>

namespace qbetti
{

std::string_view to_string(Verdict v)
{
    switch (v)
    {
    case Verdict::Pass:
        return "PASS";
    case Verdict::Violation:
        return "VIOLATION";
    case Verdict::Inconclusive:
        return "INCONCLUSIVE";
    }
    return "?";
}

Verdict combine(std::span<Verdict const> verdicts)
{
    if (std::find(verdicts.begin(), verdicts.end(), Verdict::Violation) != verdicts.end())
        return Verdict::Violation;
    if (std::find(verdicts.begin(), verdicts.end(), Verdict::Inconclusive) != verdicts.end())
        return Verdict::Inconclusive;
    return Verdict::Pass;
}

} // namespace qbetti
