#include "qbetti/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qbetti::bounds
{

namespace
{

void check_jk(int j, int k, char const* what)
{
    if (j < 0 || k < 0 || j > k)
        throw std::domain_error(std::string(what) + ": need 0 <= j <= k, got j=" + std::to_string(j) +
                                ", k=" + std::to_string(k));
}

// Parity branch shared by b_quad and b_ci.
BigInt fold_parity(int j, int k, BigInt const& inner)
{
    if ((k - j) % 2 == 0)
        return inner;
    return BigInt(2 * (k - j + 1)) - inner;
}

BigInt halved_sum_times_two(int s, int k, int upper)
{
    BigInt sum = 0;
    for (int j = 0; j <= upper; ++j)
        sum += binomial(s, j) * binomial(k + 1, j) * pow2(j);
    return sum;
}

} // namespace

DegreeSequence::DegreeSequence(std::vector<int> degrees)
    : degrees_(std::move(degrees))
{
    for (int d : degrees_)
        if (d < 1)
            throw std::domain_error("degree sequence entries must be >= 1, got " + std::to_string(d));
}

DegreeSequence DegreeSequence::all_twos(int j)
{
    if (j < 0)
        throw std::domain_error("negative length for degree sequence");
    return DegreeSequence(std::vector<int>(static_cast<std::size_t>(j), 2));
}

DegreeSequence DegreeSequence::prefix(int n) const
{
    return DegreeSequence(std::vector<int>(degrees_.begin(), degrees_.begin() + n));
}

bool BoundQuery::valid() const
{
    return 1 <= s && s <= k && 0 <= i && i <= k - 1;
}

void BoundQuery::validate() const
{
    if (!valid())
        throw std::domain_error("bound query needs 1 <= s <= k and 0 <= i <= k-1, got s=" + std::to_string(s) +
                                ", k=" + std::to_string(k) + ", i=" + std::to_string(i));
}

BigInt binomial(int n, int r)
{
    if (n < 0 || r < 0 || r > n)
        return 0;
    if (r > n - r)
        r = n - r;
    BigInt result = 1;
    for (int t = 1; t <= r; ++t)
        result = result * (n - r + t) / t;
    return result;
}

BigInt pow2(int e)
{
    if (e < 0)
        throw std::domain_error("negative exponent");
    BigInt one = 1;
    return one << e;
}

BigInt q_quad(int j, int k)
{
    check_jk(j, k, "q_quad");
    // Column j of the table only needs columns <= j; sweep k upward keeping
    // one row.
    std::vector<BigInt> row(static_cast<std::size_t>(j) + 1);
    for (int kk = 0; kk <= k; ++kk)
    {
        int const top = std::min(j, kk);
        // Descending jj so row[jj-1] still holds q(jj-1, kk-1).
        for (int jj = top; jj >= 0; --jj)
        {
            auto const u = static_cast<std::size_t>(jj);
            if (jj == 0)
                row[u] = kk + 1;
            else if (jj == kk)
                row[u] = pow2(jj);
            else
                row[u] = 2 * row[u - 1] - row[u];
        }
    }
    return row[static_cast<std::size_t>(j)];
}

BigInt b_quad(int j, int k)
{
    return fold_parity(j, k, q_quad(j, k));
}

BigInt c_ci(int j, int k, DegreeSequence const& d)
{
    check_jk(j, k, "c_ci");
    if (d.size() != j)
        throw std::domain_error("c_ci: degree sequence length " + std::to_string(d.size()) + " != j=" +
                                std::to_string(j));

    // row[jj] = c(jj, kk, d_1..d_jj), swept over kk like q_quad.
    std::vector<BigInt> row(static_cast<std::size_t>(j) + 1);
    std::vector<BigInt> prefix_product(static_cast<std::size_t>(j) + 1, BigInt(1));
    for (int jj = 1; jj <= j; ++jj)
        prefix_product[static_cast<std::size_t>(jj)] = prefix_product[static_cast<std::size_t>(jj) - 1] * d[jj - 1];

    for (int kk = 0; kk <= k; ++kk)
    {
        int const top = std::min(j, kk);
        for (int jj = top; jj >= 0; --jj)
        {
            auto const u = static_cast<std::size_t>(jj);
            if (jj == 0)
                row[u] = kk + 1;
            else if (jj == kk)
                row[u] = prefix_product[u];
            else
            {
                int const last = d[jj - 1];
                row[u] = last * row[u - 1] - (last - 1) * row[u];
            }
        }
    }
    return row[static_cast<std::size_t>(j)];
}

BigInt b_ci(int j, int k, DegreeSequence const& d)
{
    return fold_parity(j, k, c_ci(j, k, d));
}

Rational bound_betti(BoundQuery const& q)
{
    q.validate();
    return Rational(halved_sum_times_two(q.s, q.k, std::min(q.s, q.k - q.i)), 2);
}

BigInt bound_betti_floor(BoundQuery const& q)
{
    return floor_of(bound_betti(q));
}

Rational simple_bound(int s, int k)
{
    if (s < 2 || 2 * s > k)
        throw std::domain_error("simple bound needs 2 <= s <= k/2, got s=" + std::to_string(s) + ", k=" +
                                std::to_string(k));
    BigInt three_pow = boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(s));
    return Rational(three_pow * binomial(k + 1, s), 2);
}

double exp_form_bound(int s, int k)
{
    if (s < 2 || 2 * s > k)
        throw std::domain_error("exponential-form bound needs 2 <= s <= k/2, got s=" + std::to_string(s) +
                                ", k=" + std::to_string(k));
    double const base = 3.0 * std::numbers::e * (k + 1) / s;
    return 0.5 * std::pow(base, s);
}

Rational total_bound(int s, int k)
{
    if (s < 1 || s > k)
        throw std::domain_error("total bound needs 1 <= s <= k, got s=" + std::to_string(s) + ", k=" +
                                std::to_string(k));
    return Rational(BigInt(k) * halved_sum_times_two(s, k, s), 2);
}

AggregateBound bound_aggregate(int s, int k)
{
    AggregateBound out;
    if (s >= 2 && 2 * s <= k)
    {
        out.simple = simple_bound(s, k);
        out.exp_form = exp_form_bound(s, k);
    }
    if (s >= 1 && s <= k)
        out.total = total_bound(s, k);
    if (!out.simple && !out.total)
        throw std::domain_error("bound_aggregate: no bound defined for s=" + std::to_string(s) + ", k=" +
                                std::to_string(k));
    return out;
}

QTable::QTable(int k_max)
    : k_max_(k_max)
{
    if (k_max < 0)
        throw std::domain_error("QTable: negative k_max");
    rows_.resize(static_cast<std::size_t>(k_max) + 1);
    for (int k = 0; k <= k_max; ++k)
    {
        auto& row = rows_[static_cast<std::size_t>(k)];
        row.resize(static_cast<std::size_t>(k) + 1);
        for (int j = 0; j <= k; ++j)
        {
            auto const u = static_cast<std::size_t>(j);
            if (j == 0)
                row[u] = k + 1;
            else if (j == k)
                row[u] = pow2(j);
            else
            {
                auto const& prev = rows_[static_cast<std::size_t>(k) - 1];
                row[u] = 2 * prev[u - 1] - prev[u];
            }
        }
    }
}

BigInt const& QTable::q(int j, int k) const
{
    check_jk(j, k, "QTable::q");
    if (k > k_max_)
        throw std::domain_error("QTable::q: k beyond table");
    return rows_[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
}

BigInt QTable::b(int j, int k) const
{
    return fold_parity(j, k, q(j, k));
}

} // namespace qbetti::bounds
