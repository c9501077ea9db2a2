#include "qbetti/homology.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace qbetti::homology
{

BettiVector::BettiVector(std::initializer_list<std::size_t> values)
    : values_(values)
{
}

BettiVector::BettiVector(std::vector<std::size_t> values)
    : values_(std::move(values))
{
}

std::size_t BettiVector::total() const
{
    return std::accumulate(values_.begin(), values_.end(), std::size_t{0});
}

std::int64_t BettiVector::euler_characteristic() const
{
    std::int64_t chi = 0;
    for (std::size_t i = 0; i < values_.size(); ++i)
        chi += (i % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(values_[i]);
    return chi;
}

std::size_t BettiVector::reduced(std::size_t i) const
{
    if (i == 0)
        return (*this)[0] > 0 ? (*this)[0] - 1 : 0;
    return (*this)[i];
}

BettiVector BettiVector::operator+(BettiVector const& other) const
{
    std::vector<std::size_t> out(std::max(size(), other.size()));
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = (*this)[i] + other[i];
    return BettiVector(std::move(out));
}

BettiVector BettiVector::scaled(std::size_t factor) const
{
    auto out = values_;
    for (auto& v : out)
        v *= factor;
    return BettiVector(std::move(out));
}

bool BettiVector::operator==(BettiVector const& other) const
{
    for (std::size_t i = 0; i < std::max(size(), other.size()); ++i)
        if ((*this)[i] != other[i])
            return false;
    return true;
}

std::string BettiVector::to_string() const
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < values_.size(); ++i)
        os << (i ? "," : "") << values_[i];
    os << ")";
    return os.str();
}

ChainComplex::ChainComplex(CubicalComplex const& complex)
{
    int const top = complex.top_dimension();
    for (int d = 0; d <= top; ++d)
        cell_counts_.push_back(complex.count(d));
    for (int d = 1; d <= top; ++d)
    {
        auto const cells = complex.cells(d);
        auto const faces = complex.cells(d - 1);
        std::vector<SparseGf2Matrix::Column> cols(cells.size());
        for (std::size_t c = 0; c < cells.size(); ++c)
        {
            for (auto const& f : cells[c].facets())
            {
                auto it = std::lower_bound(faces.begin(), faces.end(), f);
                if (it == faces.end() || *it != f)
                    throw std::invalid_argument("complex is not face-closed: missing " + f.to_string());
                cols[c].push_back(static_cast<std::uint32_t>(it - faces.begin()));
            }
        }
        boundaries_.emplace_back(faces.size(), std::move(cols));
    }
}

std::size_t ChainComplex::cell_count(int d) const
{
    if (d < 0 || d >= static_cast<int>(cell_counts_.size()))
        return 0;
    return cell_counts_[static_cast<std::size_t>(d)];
}

SparseGf2Matrix const& ChainComplex::boundary(int d) const
{
    if (d < 1 || d > top_dimension())
        throw std::out_of_range("boundary index out of range");
    return boundaries_[static_cast<std::size_t>(d) - 1];
}

bool ChainComplex::boundary_squares_to_zero() const
{
    for (int d = 1; d < top_dimension(); ++d)
        if (!multiply(boundary(d), boundary(d + 1)).is_zero())
            return false;
    return true;
}

BettiVector betti(CubicalComplex const& complex)
{
    auto const n = static_cast<std::size_t>(complex.ambient_dimension());
    std::vector<std::size_t> out(n + 1, 0);
    int const top = complex.top_dimension();
    if (top < 0)
        return BettiVector(std::move(out));

    ChainComplex const chain(complex);
    // rank[d] = rank of d_d; rank[0] = rank[top+1] = 0.
    std::vector<std::size_t> rank(static_cast<std::size_t>(top) + 2, 0);

    // Top-down with clearing: a column of d_{d+1} whose reduced lowest one
    // is row r makes column r of d_d reduce to zero, so it is skipped.
    std::vector<bool> cleared;
    for (int d = top; d >= 1; --d)
    {
        auto columns = chain.boundary(d).columns();
        auto const low = reduce_columns(columns, chain.cell_count(d - 1), cleared.empty() ? nullptr : &cleared);
        std::vector<bool> next(chain.cell_count(d - 1), false);
        std::size_t r = 0;
        for (auto v : low)
        {
            if (v >= 0)
            {
                ++r;
                next[static_cast<std::size_t>(v)] = true;
            }
        }
        rank[static_cast<std::size_t>(d)] = r;
        cleared = std::move(next);
    }

    for (int d = 0; d <= top; ++d)
    {
        auto const u = static_cast<std::size_t>(d);
        out[u] = chain.cell_count(d) - rank[u] - rank[u + 1];
    }
    return BettiVector(std::move(out));
}

BettiVector betti_dense(ChainComplex const& chain)
{
    int const top = chain.top_dimension();
    std::vector<std::size_t> rank(static_cast<std::size_t>(std::max(top, 0)) + 2, 0);
    for (int d = 1; d <= top; ++d)
        rank[static_cast<std::size_t>(d)] = gf2_rank(chain.boundary(d).to_dense());
    std::vector<std::size_t> out;
    for (int d = 0; d <= top; ++d)
    {
        auto const u = static_cast<std::size_t>(d);
        out.push_back(chain.cell_count(d) - rank[u] - rank[u + 1]);
    }
    return BettiVector(std::move(out));
}

PieceFamily::PieceFamily(int count)
    : count_(count)
{
    if (count < 1 || count > 63)
        throw std::invalid_argument("piece count must be in [1, 63]");
}

std::uint64_t PieceFamily::mask_of(std::vector<int> const& subset) const
{
    if (subset.empty())
        throw std::invalid_argument("piece subset must be nonempty");
    std::uint64_t mask = 0;
    for (int idx : subset)
    {
        if (idx < 1 || idx > count_)
            throw std::invalid_argument("piece index out of range: " + std::to_string(idx));
        std::uint64_t const bit = std::uint64_t{1} << (idx - 1);
        if (mask & bit)
            throw std::invalid_argument("repeated piece index " + std::to_string(idx));
        mask |= bit;
    }
    return mask;
}

void PieceFamily::set(std::vector<int> subset, BettiVector betti)
{
    entries_[mask_of(subset)] = std::move(betti);
}

BettiVector const* PieceFamily::find(std::vector<int> subset) const
{
    auto it = entries_.find(mask_of(subset));
    return it == entries_.end() ? nullptr : &it->second;
}

PieceFamily PieceFamily::from_complexes(std::span<CubicalComplex const> pieces)
{
    PieceFamily family(static_cast<int>(pieces.size()));
    std::uint64_t const limit = std::uint64_t{1} << pieces.size();
    for (std::uint64_t mask = 1; mask < limit; ++mask)
    {
        std::vector<int> subset;
        CubicalComplex meet;
        bool first = true;
        for (std::size_t p = 0; p < pieces.size(); ++p)
        {
            if (!(mask >> p & 1))
                continue;
            subset.push_back(static_cast<int>(p) + 1);
            meet = first ? pieces[p] : meet.intersection(pieces[p]);
            first = false;
        }
        family.set(std::move(subset), betti(meet));
    }
    return family;
}

MayerVietorisResult mayer_vietoris_audit(BettiVector const& union_betti, PieceFamily const& pieces, int i)
{
    if (i < 0)
        throw std::invalid_argument("homology degree must be >= 0");
    int const ell = pieces.count();
    std::size_t bound = 0;
    // Enumerate subsets J of {1..ell} with 1 <= |J| <= i+1.
    std::uint64_t const limit = std::uint64_t{1} << ell;
    for (std::uint64_t mask = 1; mask < limit; ++mask)
    {
        int const size = std::popcount(mask);
        if (size > i + 1)
            continue;
        std::vector<int> subset;
        for (int p = 0; p < ell; ++p)
            if (mask >> p & 1)
                subset.push_back(p + 1);
        auto const* entry = pieces.find(subset);
        if (!entry)
        {
            std::ostringstream os;
            os << "Mayer-Vietoris audit needs Betti numbers of intersection {";
            for (std::size_t t = 0; t < subset.size(); ++t)
                os << (t ? "," : "") << subset[t];
            os << "}";
            throw MissingPieceError(os.str());
        }
        bound += (*entry)[static_cast<std::size_t>(i - size + 1)];
    }

    MayerVietorisResult result;
    result.degree = i;
    result.union_betti = union_betti[static_cast<std::size_t>(i)];
    result.bound = bound;
    result.verdict = result.union_betti <= bound ? Verdict::Pass : Verdict::Violation;
    return result;
}

} // namespace qbetti::homology
