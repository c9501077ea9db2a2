#ifndef QBETTI_CI_PROBE_HPP
#define QBETTI_CI_PROBE_HPP

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "qbetti/quadratic.hpp"

namespace qbetti::quad
{

enum class ProbeVerdict
{
    LikelyNonsingular,
    SingularSuspected,
    Unknown, // no real common zero located
};

std::string_view to_string(ProbeVerdict v);

/// Floating-point evidence only. Common zeros are searched on the unit
/// sphere (forms are homogeneous, so this covers projective space).
struct CiProbeReport
{
    ProbeVerdict verdict = ProbeVerdict::Unknown;
    int zeros_found = 0;
    /// Smallest singular value of the forms' Jacobian over all zeros found;
    /// meaningless when zeros_found == 0.
    double min_singular_value = 0.0;
    std::vector<std::vector<double>> zeros;
};

/// Gauss-Newton from `samples` seeded random starts on the system
/// {Q_i(x) = 0, |x|^2 = 1}. Never a proof of non-singularity.
CiProbeReport ci_probe(std::span<QuadraticForm const> forms, int samples, std::uint64_t seed, double tol);

} // namespace qbetti::quad

#endif
