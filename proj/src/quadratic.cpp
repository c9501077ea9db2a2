#include "qbetti/quadratic.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace qbetti::quad
{

SymmetricMatrix::SymmetricMatrix(int n)
    : n_(n),
      data_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Rational(0))
{
    if (n < 0)
        throw std::invalid_argument("negative matrix size");
}

SymmetricMatrix SymmetricMatrix::identity(int n)
{
    SymmetricMatrix m(n);
    for (int i = 0; i < n; ++i)
        m.set(i, i, 1);
    return m;
}

SymmetricMatrix SymmetricMatrix::from_rows(std::vector<std::vector<Rational>> const& rows)
{
    int const n = static_cast<int>(rows.size());
    SymmetricMatrix m(n);
    for (int i = 0; i < n; ++i)
    {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n)
            throw std::invalid_argument("quadratic part must be a square matrix");
        for (int j = 0; j < n; ++j)
        {
            auto const& v = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (j < i && v != m(i, j))
                throw std::invalid_argument("quadratic part must be symmetric");
            m.set(i, j, v);
        }
    }
    return m;
}

void SymmetricMatrix::set(int i, int j, Rational value)
{
    if (i < 0 || j < 0 || i >= n_ || j >= n_)
        throw std::out_of_range("symmetric matrix index");
    data_[index(j, i)] = value;
    data_[index(i, j)] = std::move(value);
}

bool SymmetricMatrix::is_zero() const
{
    for (auto const& v : data_)
        if (v != 0)
            return false;
    return true;
}

QuadraticPoly::QuadraticPoly(int k)
    : quad_(k),
      lin_(static_cast<std::size_t>(k), Rational(0)),
      constant_(0)
{
}

QuadraticPoly::QuadraticPoly(SymmetricMatrix quad, std::vector<Rational> lin, Rational constant)
    : quad_(std::move(quad)),
      lin_(std::move(lin)),
      constant_(std::move(constant))
{
    if (static_cast<int>(lin_.size()) != quad_.size())
        throw std::invalid_argument("linear part length must equal variable count");
}

void QuadraticPoly::set_lin(int i, Rational value)
{
    lin_.at(static_cast<std::size_t>(i)) = std::move(value);
}

Rational QuadraticPoly::evaluate(std::span<Rational const> x) const
{
    int const k = variables();
    if (static_cast<int>(x.size()) != k)
        throw std::invalid_argument("point dimension does not match polynomial");
    Rational value = constant_;
    for (int i = 0; i < k; ++i)
    {
        auto const& xi = x[static_cast<std::size_t>(i)];
        value += lin_[static_cast<std::size_t>(i)] * xi;
        Rational row = 0;
        for (int j = 0; j < k; ++j)
            row += quad_(i, j) * x[static_cast<std::size_t>(j)];
        value += xi * row;
    }
    return value;
}

int QuadraticPoly::degree() const
{
    if (!quad_.is_zero())
        return 2;
    for (auto const& v : lin_)
        if (v != 0)
            return 1;
    return constant_ != 0 ? 0 : -1;
}

bool QuadraticPoly::is_homogeneous() const
{
    bool const has_lin = std::any_of(lin_.begin(), lin_.end(), [](Rational const& v) { return v != 0; });
    return constant_ == 0 && !(has_lin && !quad_.is_zero());
}

QuadraticPoly QuadraticPoly::operator-() const
{
    return scaled(-1);
}

QuadraticPoly QuadraticPoly::operator+(QuadraticPoly const& other) const
{
    int const k = variables();
    if (other.variables() != k)
        throw std::invalid_argument("adding polynomials in different variable counts");
    QuadraticPoly out(k);
    for (int i = 0; i < k; ++i)
    {
        for (int j = i; j < k; ++j)
            out.quad_.set(i, j, quad_(i, j) + other.quad_(i, j));
        out.lin_[static_cast<std::size_t>(i)] = lin_[static_cast<std::size_t>(i)] + other.lin_[static_cast<std::size_t>(i)];
    }
    out.constant_ = constant_ + other.constant_;
    return out;
}

QuadraticPoly QuadraticPoly::scaled(Rational const& factor) const
{
    int const k = variables();
    QuadraticPoly out(k);
    for (int i = 0; i < k; ++i)
    {
        for (int j = i; j < k; ++j)
            out.quad_.set(i, j, quad_(i, j) * factor);
        out.lin_[static_cast<std::size_t>(i)] = lin_[static_cast<std::size_t>(i)] * factor;
    }
    out.constant_ = constant_ * factor;
    return out;
}

std::string QuadraticPoly::to_string() const
{
    std::ostringstream os;
    bool first = true;
    auto term = [&](Rational const& c, std::string const& mono) {
        if (c == 0)
            return;
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        Rational const a = c < 0 ? Rational(-c) : c;
        if (a != 1 || mono.empty())
            os << a;
        os << mono;
        first = false;
    };
    int const k = variables();
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j)
        {
            Rational const c = (i == j) ? quad_(i, j) : Rational(2 * quad_(i, j));
            term(c, i == j ? "X" + std::to_string(i + 1) + "^2"
                           : "X" + std::to_string(i + 1) + "X" + std::to_string(j + 1));
        }
    for (int i = 0; i < k; ++i)
        term(lin_[static_cast<std::size_t>(i)], "X" + std::to_string(i + 1));
    term(constant_, "");
    if (first)
        os << "0";
    return os.str();
}

QuadraticForm::QuadraticForm(int n)
    : gram_(n)
{
}

QuadraticForm::QuadraticForm(SymmetricMatrix gram)
    : gram_(std::move(gram))
{
}

Rational QuadraticForm::evaluate(std::span<Rational const> x) const
{
    return as_poly().evaluate(x);
}

QuadraticPoly QuadraticForm::as_poly() const
{
    return QuadraticPoly(gram_, std::vector<Rational>(static_cast<std::size_t>(variables()), Rational(0)), 0);
}

QuadraticForm homogenize(QuadraticPoly const& p)
{
    int const k = p.variables();
    SymmetricMatrix m(k + 1);
    for (int i = 0; i < k; ++i)
    {
        for (int j = i; j < k; ++j)
            m.set(i, j, p.quad()(i, j));
        // b_i X_i X_{k+1} splits evenly across the two off-diagonal slots.
        m.set(i, k, p.lin()[static_cast<std::size_t>(i)] / 2);
    }
    m.set(k, k, p.constant());
    return QuadraticForm(std::move(m));
}

QuadraticPoly dehomogenize(QuadraticForm const& f)
{
    int const n = f.variables();
    if (n < 1)
        throw std::invalid_argument("cannot dehomogenize a form in zero variables");
    int const k = n - 1;
    QuadraticPoly p(k);
    for (int i = 0; i < k; ++i)
    {
        for (int j = i; j < k; ++j)
            p.quad().set(i, j, f.gram()(i, j));
        p.set_lin(i, 2 * f.gram()(i, k));
    }
    p.set_constant(f.gram()(k, k));
    return p;
}

QuadraticPoly make_p_eps(Rational const& eps, int k)
{
    if (eps <= 0)
        throw std::domain_error("eps must be positive");
    if (k < 0)
        throw std::domain_error("negative dimension");
    Rational const radius = Rational(2) / eps;
    QuadraticPoly p(k + 1);
    for (int i = 0; i <= k; ++i)
        p.quad().set(i, i, -1);
    p.set_constant(radius * radius);
    return p;
}

QuadraticForm random_pd_form(int n, std::uint64_t seed)
{
    if (n < 1)
        throw std::domain_error("random_pd_form needs n >= 1");
    std::mt19937_64 rng(seed);
    std::vector<BigInt> m(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    // Modular reduction keeps the stream platform-independent, unlike
    // std::uniform_int_distribution.
    for (auto& v : m)
        v = static_cast<int>(rng() % 3) - 1;
    SymmetricMatrix gram(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
        {
            BigInt dot = 0;
            for (int r = 0; r < n; ++r)
                dot += m[static_cast<std::size_t>(r * n + i)] * m[static_cast<std::size_t>(r * n + j)];
            if (i == j)
                dot += 1;
            gram.set(i, j, Rational(dot));
        }
    return QuadraticForm(std::move(gram));
}

QuadraticForm deform(QuadraticForm const& q, QuadraticForm const& h, Rational const& t)
{
    int const n = q.variables();
    if (h.variables() != n)
        throw std::invalid_argument("deform: forms have different variable counts");
    if (t < 0 || t > 1)
        throw std::domain_error("deform: t must lie in [0,1]");
    SymmetricMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            m.set(i, j, (1 - t) * q.gram()(i, j) + t * h.gram()(i, j));
    return QuadraticForm(std::move(m));
}

namespace
{

// Gaussian elimination without pivoting; pivots[p] is the ratio of the
// (p+1)-th to p-th leading principal minor. Stops at the first zero pivot.
std::vector<Rational> leading_pivots(SymmetricMatrix const& m)
{
    int const n = m.size();
    std::vector<Rational> a(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[static_cast<std::size_t>(i * n + j)] = m(i, j);
    std::vector<Rational> pivots;
    for (int p = 0; p < n; ++p)
    {
        Rational const piv = a[static_cast<std::size_t>(p * n + p)];
        pivots.push_back(piv);
        if (piv == 0)
            break;
        for (int r = p + 1; r < n; ++r)
        {
            Rational const f = a[static_cast<std::size_t>(r * n + p)] / piv;
            if (f == 0)
                continue;
            for (int c = p; c < n; ++c)
                a[static_cast<std::size_t>(r * n + c)] -= f * a[static_cast<std::size_t>(p * n + c)];
        }
    }
    return pivots;
}

} // namespace

bool is_positive_definite(QuadraticForm const& f)
{
    if (f.variables() == 0)
        return false;
    // Leading minor p = product of the first p pivots, so all minors are
    // positive iff every pivot is.
    auto const pivots = leading_pivots(f.gram());
    if (static_cast<int>(pivots.size()) != f.variables())
        return false;
    return std::all_of(pivots.begin(), pivots.end(), [](Rational const& v) { return v > 0; });
}

Rational determinant(SymmetricMatrix const& m)
{
    int const n = m.size();
    std::vector<Rational> a(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[static_cast<std::size_t>(i * n + j)] = m(i, j);
    Rational det = 1;
    for (int p = 0; p < n; ++p)
    {
        int pivot = p;
        while (pivot < n && a[static_cast<std::size_t>(pivot * n + p)] == 0)
            ++pivot;
        if (pivot == n)
            return 0;
        if (pivot != p)
        {
            for (int c = 0; c < n; ++c)
                std::swap(a[static_cast<std::size_t>(p * n + c)], a[static_cast<std::size_t>(pivot * n + c)]);
            det = -det;
        }
        Rational const piv = a[static_cast<std::size_t>(p * n + p)];
        det *= piv;
        for (int r = p + 1; r < n; ++r)
        {
            Rational const f = a[static_cast<std::size_t>(r * n + p)] / piv;
            if (f == 0)
                continue;
            for (int c = p; c < n; ++c)
                a[static_cast<std::size_t>(r * n + c)] -= f * a[static_cast<std::size_t>(p * n + c)];
        }
    }
    return det;
}

bool is_nonsingular_quadric(QuadraticForm const& f)
{
    return f.variables() > 0 && determinant(f.gram()) != 0;
}

void DeformationParams::validate() const
{
    if (!(delta > 0 && delta < eps))
        throw std::domain_error("deformation parameters need 0 < delta < eps");
    if (t < 0 || t > 1)
        throw std::domain_error("deformation time t must lie in [0,1]");
}

} // namespace qbetti::quad
