#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <limits>
#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "qbetti/bounds.hpp"

using namespace qbetti;
using namespace qbetti::bounds;

namespace
{

// Direct transcription of the recurrences, memoized, with the last degree
// recursing out. Independent of the library's rolling-row DP.
BigInt naive_c(int j, int k, std::vector<int> const& d)
{
    static std::map<std::tuple<int, int, std::vector<int>>, BigInt> memo;
    auto key = std::make_tuple(j, k, d);
    if (auto it = memo.find(key); it != memo.end())
        return it->second;
    BigInt v;
    if (j == 0)
        v = k + 1;
    else if (j == k)
    {
        v = 1;
        for (int x : d)
            v *= x;
    }
    else
    {
        std::vector<int> const head(d.begin(), d.end() - 1);
        v = d.back() * naive_c(j - 1, k - 1, head) - (d.back() - 1) * naive_c(j, k - 1, d);
    }
    memo.emplace(key, v);
    return v;
}

BigInt naive_binomial(int n, int r)
{
    // Pascal's triangle.
    std::vector<BigInt> row{1};
    for (int m = 1; m <= n; ++m)
    {
        std::vector<BigInt> next(static_cast<std::size_t>(m) + 1, 0);
        for (int t = 0; t <= m; ++t)
            next[static_cast<std::size_t>(t)] = (t > 0 ? row[static_cast<std::size_t>(t) - 1] : BigInt(0)) +
                                                 (t < m ? row[static_cast<std::size_t>(t)] : BigInt(0));
        row = std::move(next);
    }
    return (r < 0 || r > n) ? BigInt(0) : row[static_cast<std::size_t>(r)];
}

} // namespace

TEST_CASE("q_quad examples")
{
    CHECK(q_quad(0, 5) == 6);
    CHECK(q_quad(3, 3) == 8);
    CHECK(q_quad(2, 3) == 0);
}

TEST_CASE("q_quad rejects bad indices")
{
    CHECK_THROWS_AS(q_quad(-1, 3), std::domain_error);
    CHECK_THROWS_AS(q_quad(4, 3), std::domain_error);
    CHECK_THROWS_AS(q_quad(0, -1), std::domain_error);
}

TEST_CASE("b_quad examples")
{
    CHECK(b_quad(1, 3) == 4);  // smooth quadric surface 1+0+2+0+1
    CHECK(b_quad(2, 3) == 4);  // elliptic curve 1+2+1
    CHECK(b_quad(4, 4) == 16);
    CHECK(b_quad(1, 2) == 2);  // conic ~ P^1
    CHECK_THROWS_AS(b_quad(3, 2), std::domain_error);
}

TEST_CASE("c_ci examples")
{
    CHECK(c_ci(0, 7, DegreeSequence{}) == 8);
    CHECK(c_ci(2, 2, DegreeSequence({2, 2})) == 4);
    CHECK(c_ci(1, 3, DegreeSequence({4})) == 24);
}

TEST_CASE("c_ci and b_ci reject mismatched input")
{
    CHECK_THROWS_AS(c_ci(2, 3, DegreeSequence({2})), std::domain_error);
    CHECK_THROWS_AS(c_ci(0, 3, DegreeSequence({2})), std::domain_error);
    CHECK_THROWS_AS(b_ci(4, 3, DegreeSequence::all_twos(4)), std::domain_error);
    CHECK_THROWS_AS(DegreeSequence({2, 0}), std::domain_error);
}

TEST_CASE("b_ci examples and geometric oracles")
{
    CHECK(b_ci(1, 2, DegreeSequence({3})) == 4);       // plane cubic: elliptic curve
    CHECK(b_ci(1, 3, DegreeSequence({2})) == 4);       // quadric surface
    CHECK(b_ci(3, 3, DegreeSequence({2, 2, 2})) == 8); // 8 Bezout points
    CHECK(b_ci(1, 3, DegreeSequence({3})) == 9);       // cubic surface 1+7+1
    CHECK(b_ci(2, 4, DegreeSequence({2, 3})) == 24);   // (2,3) K3 in P^4
    CHECK(b_ci(1, 2, DegreeSequence({4})) == 8);       // plane quartic: genus 3, 1+6+1
    CHECK(b_ci(0, 4, DegreeSequence{}) == 5);          // P^4 itself
}

TEST_CASE("DP matches the naive recursion")
{
    for (int k = 0; k <= 12; ++k)
        for (int j = 0; j <= k; ++j)
        {
            std::vector<int> degrees;
            for (int t = 0; t < j; ++t)
                degrees.push_back(1 + (t * 7 + k) % 4);
            CHECK(c_ci(j, k, DegreeSequence(degrees)) == naive_c(j, k, degrees));
        }
}

TEST_CASE("all-two degrees collapse to the quadric recurrence")
{
    QTable const table(60);
    for (int k = 0; k <= 60; ++k)
        for (int j = 0; j <= k; ++j)
        {
            auto const twos = DegreeSequence::all_twos(j);
            REQUIRE(b_ci(j, k, twos) == b_quad(j, k));
            REQUIRE(table.b(j, k) == b_quad(j, k));
            REQUIRE(b_quad(j, k) >= 0);
        }
}

TEST_CASE("b_ci is nonnegative on mixed degrees")
{
    for (int k = 0; k <= 10; ++k)
        for (int j = 0; j <= k; ++j)
            for (int base = 1; base <= 4; ++base)
            {
                std::vector<int> degrees;
                for (int t = 0; t < j; ++t)
                    degrees.push_back(base + t % 2);
                CHECK(b_ci(j, k, DegreeSequence(degrees)) >= 0);
            }
}

TEST_CASE("closed forms for q(1,k) and q(2,k)")
{
    QTable const table(200);
    for (int k = 1; k <= 200; ++k)
    {
        int const sign = (k % 2 == 0) ? 1 : -1;
        // k + (1 - (-1)^k)/2
        REQUIRE(table.q(1, k) == k + (1 - sign) / 2);
        if (k >= 2)
            REQUIRE(table.q(2, k) == sign * k + k);
    }
}

TEST_CASE("case formula for b(1,k)")
{
    for (int k = 1; k <= 60; ++k)
        CHECK(b_quad(1, k) == (k % 2 == 0 ? k : k + 1));
}

TEST_CASE("binomial matches Pascal's triangle")
{
    for (int n = 0; n <= 40; ++n)
        for (int r = -1; r <= n + 1; ++r)
            REQUIRE(binomial(n, r) == naive_binomial(n, r));
    CHECK(binomial(80, 40) == naive_binomial(80, 40));
    CHECK(binomial(80, 40) > BigInt(std::numeric_limits<std::uint64_t>::max()));
}

TEST_CASE("bound_betti examples")
{
    CHECK(bound_betti({1, 1, 0}) == Rational(5, 2));
    CHECK(bound_betti({2, 4, 0}) == Rational(61, 2));
    CHECK(bound_betti({3, 6, 5}) == Rational(43, 2));
    CHECK(bound_betti({3, 3, 0}) == Rational(129, 2));
    CHECK(bound_betti({2, 2, 1}) == Rational(13, 2));
    CHECK(bound_betti_floor({2, 4, 0}) == 30);
}

TEST_CASE("bound_betti rejects queries outside the hypotheses")
{
    CHECK_THROWS_AS(bound_betti({3, 2, 0}), std::domain_error);
    CHECK_THROWS_AS(bound_betti({0, 2, 0}), std::domain_error);
    CHECK_THROWS_AS(bound_betti({1, 2, -1}), std::domain_error);
    CHECK_THROWS_AS(bound_betti({1, 2, 2}), std::domain_error);
}

TEST_CASE("bound_aggregate examples and gating")
{
    auto const a = bound_aggregate(2, 4);
    REQUIRE(a.simple);
    CHECK(*a.simple == 45);
    CHECK(a.exp_form);

    auto const b = bound_aggregate(1, 2);
    CHECK_FALSE(b.simple);
    CHECK_FALSE(b.exp_form);
    REQUIRE(b.total);
    CHECK(*b.total == 7);

    CHECK(*bound_aggregate(2, 5).simple == Rational(135, 2));
    CHECK_THROWS_AS(bound_aggregate(5, 4), std::domain_error);
    CHECK_THROWS_AS(simple_bound(3, 5), std::domain_error);
    CHECK_THROWS_AS(total_bound(0, 5), std::domain_error);
}

TEST_CASE("per-degree bound is monotone non-increasing in i")
{
    for (int k = 1; k <= 20; ++k)
        for (int s = 1; s <= k; ++s)
            for (int i = 1; i <= k - 1; ++i)
                CHECK(bound_betti({s, k, i}) <= bound_betti({s, k, i - 1}));
}

TEST_CASE("rational helpers")
{
    CHECK(parse_rational("61/2") == Rational(61, 2));
    CHECK(parse_rational("-3") == -3);
    CHECK(parse_rational(" 4/6 ") == Rational(2, 3));
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1e3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK(to_fraction_string(Rational(45)) == "45/1");
    CHECK(floor_of(Rational(-5, 2)) == -3);
    CHECK(ceil_of(Rational(-5, 2)) == -2);
    CHECK(floor_of(Rational(5, 2)) == 2);
}

TEST_CASE("q and b stay under the 2^(j-1) C(k,j-1) envelope")
{
    QTable const table(60);
    for (int k = 2; k <= 60; ++k)
        for (int j = 2; j <= k; ++j)
        {
            BigInt const envelope = pow2(j - 1) * binomial(k, j - 1);
            BigInt const q = table.q(j, k);
            REQUIRE(abs(q) <= envelope);
            if ((k - j) % 2 == 1)
                REQUIRE(2 * (k - j + 1) - q <= envelope);
            REQUIRE(table.b(j, k) <= envelope);
        }
}

TEST_CASE("per-degree bound stays below the simple and exponential forms")
{
    for (int k = 4; k <= 60; ++k)
        for (int s = 2; 2 * s <= k; ++s)
        {
            Rational const simple = simple_bound(s, k);
            for (int i = 0; i <= k - 1; ++i)
                REQUIRE(bound_betti({s, k, i}) <= simple);
            double const exp_form = exp_form_bound(s, k);
            REQUIRE(to_double(simple) <= exp_form * (1 + 1e-9));
        }
}
