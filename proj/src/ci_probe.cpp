#include "qbetti/ci_probe.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>

namespace qbetti::quad
{

std::string_view to_string(ProbeVerdict v)
{
    switch (v)
    {
    case ProbeVerdict::LikelyNonsingular:
        return "LIKELY_NONSINGULAR";
    case ProbeVerdict::SingularSuspected:
        return "SINGULAR_SUSPECTED";
    case ProbeVerdict::Unknown:
        return "UNKNOWN";
    }
    return "?";
}

namespace
{

constexpr int kMaxIterations = 400;
constexpr double kZeroResidual = 1e-12;

} // namespace

CiProbeReport ci_probe(std::span<QuadraticForm const> forms, int samples, std::uint64_t seed, double tol)
{
    if (forms.empty())
        throw std::invalid_argument("ci_probe needs at least one form");
    int const n = forms.front().variables();
    for (auto const& f : forms)
        if (f.variables() != n)
            throw std::invalid_argument("ci_probe: forms have different variable counts");
    if (samples < 1)
        throw std::invalid_argument("ci_probe: samples must be positive");

    auto const m = static_cast<Eigen::Index>(forms.size());
    std::vector<Eigen::MatrixXd> grams;
    for (auto const& f : forms)
    {
        Eigen::MatrixXd g(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                g(i, j) = to_double(f.gram()(i, j));
        grams.push_back(std::move(g));
    }

    CiProbeReport report;
    report.min_singular_value = std::numeric_limits<double>::infinity();
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);

    for (int sample = 0; sample < samples; ++sample)
    {
        Eigen::VectorXd x(n);
        for (int i = 0; i < n; ++i)
            x(i) = normal(rng);
        x.normalize();

        Eigen::VectorXd residual(m + 1);
        Eigen::MatrixXd jac(m + 1, n);
        for (int it = 0; it < kMaxIterations; ++it)
        {
            for (Eigen::Index r = 0; r < m; ++r)
            {
                auto const& g = grams[static_cast<std::size_t>(r)];
                residual(r) = x.dot(g * x);
                jac.row(r) = 2.0 * (g * x).transpose();
            }
            residual(m) = x.squaredNorm() - 1.0;
            jac.row(m) = 2.0 * x.transpose();
            // Double roots converge only linearly, so keep iterating well
            // past the acceptance residual.
            if (residual.norm() < 1e-30)
                break;
            Eigen::VectorXd const step = jac.completeOrthogonalDecomposition().solve(residual);
            x -= step;
            if (step.norm() < 1e-300)
                break;
        }
        for (Eigen::Index r = 0; r < m; ++r)
            residual(r) = x.dot(grams[static_cast<std::size_t>(r)] * x);
        residual(m) = x.squaredNorm() - 1.0;
        if (!(residual.norm() < kZeroResidual))
            continue;

        Eigen::MatrixXd forms_jac(m, n);
        for (Eigen::Index r = 0; r < m; ++r)
            forms_jac.row(r) = 2.0 * (grams[static_cast<std::size_t>(r)] * x).transpose();
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(forms_jac);
        double const smallest = svd.singularValues().minCoeff();
        report.min_singular_value = std::min(report.min_singular_value, smallest);
        ++report.zeros_found;
        report.zeros.emplace_back(x.data(), x.data() + n);
    }

    if (report.zeros_found == 0)
    {
        report.verdict = ProbeVerdict::Unknown;
        report.min_singular_value = 0.0;
    }
    else
        report.verdict = report.min_singular_value > tol ? ProbeVerdict::LikelyNonsingular
                                                          : ProbeVerdict::SingularSuspected;
    return report;
}

} // namespace qbetti::quad
