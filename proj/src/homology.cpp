#include "zk/homology.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "zk/error.hpp"
#include "zk/smith.hpp"

namespace zk {

// ------------------------------------------------------------------------
// HomologyGroup
// ------------------------------------------------------------------------

std::string HomologyGroup::to_string() const
{
    if (is_zero())
        return "0";
    std::string out;
    if (rank == 1)
        out = "Z";
    else if (rank > 1)
        out = "Z^" + std::to_string(rank);
    for (const Integer& d : torsion)
    {
        if (!out.empty())
            out += " + ";
        out += "Z/" + d.str();
    }
    return out;
}

HomologyGroup direct_sum(const HomologyGroup& a, const HomologyGroup& b)
{
    HomologyGroup out;
    out.rank = a.rank + b.rank;
    const Index n = static_cast<Index>(a.torsion.size() + b.torsion.size());
    if (n == 0)
        return out;
    IntMatrix diag = IntMatrix::Zero(n, n);
    Index i = 0;
    for (const Integer& d : a.torsion)
        diag(i, i) = d, ++i;
    for (const Integer& d : b.torsion)
        diag(i, i) = d, ++i;
    for (const Integer& d : invariant_factors(diag))
        if (d != Integer(1))
            out.torsion.push_back(d);
    return out;
}

// ------------------------------------------------------------------------
// GradedChainComplex
// ------------------------------------------------------------------------

GradedChainComplex::GradedChainComplex(int min_degree, std::vector<Index> dims)
    : min_degree_(min_degree), dims_(std::move(dims))
{
    boundaries_.reserve(dims_.size());
    for (std::size_t k = 0; k < dims_.size(); ++k)
        boundaries_.push_back(IntMatrix::Zero(k == 0 ? 0 : dims_[k - 1], dims_[k]));
}

Index GradedChainComplex::dim(int degree) const
{
    if (degree < min_degree_ || degree > max_degree())
        return 0;
    return dims_[degree - min_degree_];
}

IntMatrix GradedChainComplex::boundary(int degree) const
{
    if (degree < min_degree_ || degree > max_degree())
        return IntMatrix::Zero(dim(degree - 1), dim(degree));
    return boundaries_[degree - min_degree_];
}

IntMatrix& GradedChainComplex::boundary_ref(int degree)
{
    if (degree <= min_degree_ || degree > max_degree())
        throw Error(ErrorKind::InternalInvariant, "no boundary matrix stored in degree " + std::to_string(degree));
    return boundaries_[degree - min_degree_];
}

bool GradedChainComplex::is_complex() const
{
    for (int d = min_degree_ + 2; d <= max_degree(); ++d)
    {
        const IntMatrix& outer = boundaries_[d - 1 - min_degree_];
        const IntMatrix& inner = boundaries_[d - min_degree_];
        if (outer.size() == 0 || inner.size() == 0)
            continue;
        if (!all_zero(product(outer, inner)))
            return false;
    }
    return true;
}

Integer GradedChainComplex::euler_characteristic() const
{
    Integer chi = 0;
    for (int d = min_degree_; d <= max_degree(); ++d)
        chi += (d % 2 == 0 ? Integer(1) : Integer(-1)) * Integer(static_cast<long long>(dim(d)));
    return chi;
}

GradedHomology homology_of(const GradedChainComplex& c)
{
    if (!c.is_complex())
        throw Error(ErrorKind::NotAComplex, "boundary of a boundary is nonzero");

    std::map<int, std::vector<Integer>> factors;
    for (int d = c.min_degree(); d <= c.max_degree() + 1; ++d)
        factors[d] = invariant_factors(c.boundary(d));

    GradedHomology out;
    for (int d = c.min_degree(); d <= c.max_degree(); ++d)
    {
        HomologyGroup g;
        const auto& incoming = factors[d + 1];
        g.rank = c.dim(d) - static_cast<Index>(factors[d].size()) - static_cast<Index>(incoming.size());
        for (const Integer& e : incoming)
            if (e != Integer(1))
                g.torsion.push_back(e);
        if (!g.is_zero())
            out[d] = std::move(g);
    }
    return out;
}

Integer euler_characteristic(const GradedHomology& h)
{
    Integer chi = 0;
    for (const auto& [d, g] : h)
        chi += (d % 2 == 0 ? Integer(1) : Integer(-1)) * Integer(static_cast<long long>(g.rank));
    return chi;
}

// ------------------------------------------------------------------------
// HomologyBasis
// ------------------------------------------------------------------------

bool ClassCoordinates::is_zero() const
{
    auto zero = [](const Integer& x) { return x.is_zero(); };
    return std::all_of(free.begin(), free.end(), zero) && std::all_of(torsion.begin(), torsion.end(), zero);
}

bool ClassCoordinates::is_primitive() const
{
    Integer g = 0;
    for (const Integer& x : free)
        g = gcd(g, x);
    return g == Integer(1);
}

HomologyBasis::HomologyBasis(const GradedChainComplex& c, int degree) : degree_(degree)
{
    outgoing_ = c.boundary(degree);
    const Index n = c.dim(degree);

    auto outgoing_snf = smith_normal_form(outgoing_);
    const Index r = outgoing_snf.rank();
    const Index k = n - r;
    IntMatrix kernel = outgoing_snf.V.rightCols(k);
    kernel_coords_ = outgoing_snf.V_inv.bottomRows(k);

    IntMatrix relations = product(kernel_coords_, c.boundary(degree + 1));
    auto quotient_snf = smith_normal_form(relations);
    quotient_change_ = quotient_snf.U;
    factors_ = quotient_snf.diagonal;
    const Index s = quotient_snf.rank();

    IntMatrix generators = product(kernel, quotient_snf.U_inv);
    group_.rank = k - s;
    for (Index i = 0; i < s; ++i)
        if (factors_[i] != Integer(1))
        {
            group_.torsion.push_back(factors_[i]);
            torsion_generators_.push_back(generators.col(i));
        }
    for (Index i = s; i < k; ++i)
        free_generators_.push_back(generators.col(i));
}

ClassCoordinates HomologyBasis::coordinates(const IntVector& z) const
{
    if (z.size() != outgoing_.cols())
        throw Error(ErrorKind::NotACycle, "chain has the wrong length for degree " + std::to_string(degree_));
    if (outgoing_.rows() > 0 && !all_zero(product(outgoing_, z)))
        throw Error(ErrorKind::NotACycle, "chain in degree " + std::to_string(degree_) + " has nonzero boundary");

    IntVector y = product(quotient_change_, product(kernel_coords_, z));
    ClassCoordinates out;
    const Index s = static_cast<Index>(factors_.size());
    for (Index i = 0; i < s; ++i)
        if (factors_[i] != Integer(1))
            out.torsion.push_back(mod_floor(y(i), factors_[i]));
    for (Index i = s; i < y.size(); ++i)
        out.free.push_back(y(i));
    return out;
}

ClassCoordinates class_of(const IntVector& z, const GradedChainComplex& c, const HomologyBasis& b)
{
    if (z.size() != c.dim(b.degree()))
        throw Error(ErrorKind::NotACycle, "chain does not live in degree " + std::to_string(b.degree()));
    return b.coordinates(z);
}

// ------------------------------------------------------------------------
// Simplicial chains
// ------------------------------------------------------------------------

IntVector SimplicialChainComplex::to_vector(const SimplicialChain& z, int degree) const
{
    auto it = basis.find(degree);
    const Index n = chains.dim(degree);
    IntVector v = IntVector::Zero(n);
    for (const auto& [face, coeff] : z)
    {
        if (face.size() != degree + 1 || it == basis.end())
            throw Error(ErrorKind::NotAFace, face.to_string() + " is not a basis simplex in degree " + std::to_string(degree));
        auto pos = std::lower_bound(it->second.begin(), it->second.end(), face, lex_less);
        if (pos == it->second.end() || *pos != face)
            throw Error(ErrorKind::NotAFace, face.to_string() + " is not a face of the complex");
        v(pos - it->second.begin()) += coeff;
    }
    return v;
}

SimplicialChain SimplicialChainComplex::from_vector(const IntVector& v, int degree) const
{
    SimplicialChain z;
    const auto& faces = basis.at(degree);
    for (Index i = 0; i < v.size(); ++i)
        if (!v(i).is_zero())
            z[faces[i]] = v(i);
    return z;
}

SimplicialChainComplex simplicial_chain_complex(const SimplicialComplex& k)
{
    SimplicialChainComplex out;
    const int top = k.dimension();
    std::vector<Index> dims;
    std::vector<std::unordered_map<std::uint64_t, Index>> index(top + 2);
    for (int d = -1; d <= top; ++d)
    {
        auto faces = k.faces_of_size(d + 1);
        for (std::size_t i = 0; i < faces.size(); ++i)
            index[d + 1][faces[i].bits()] = static_cast<Index>(i);
        dims.push_back(static_cast<Index>(faces.size()));
        out.basis[d] = std::move(faces);
    }
    out.chains = GradedChainComplex(-1, dims);
    for (int d = 0; d <= top; ++d)
    {
        IntMatrix& b = out.chains.boundary_ref(d);
        const auto& faces = out.basis[d];
        for (std::size_t col = 0; col < faces.size(); ++col)
        {
            int position = 0;
            for (int v : faces[col])
            {
                VertexSet facet = faces[col];
                facet.erase(v);
                b(index[d].at(facet.bits()), static_cast<Index>(col)) = position % 2 == 0 ? 1 : -1;
                ++position;
            }
        }
    }
    return out;
}

SimplicialChain simplicial_boundary(const SimplicialChain& z)
{
    SimplicialChain out;
    for (const auto& [face, coeff] : z)
    {
        int position = 0;
        for (int v : face)
        {
            VertexSet facet = face;
            facet.erase(v);
            Integer& slot = out[facet];
            if (position % 2 == 0)
                slot += coeff;
            else
                slot -= coeff;
            ++position;
        }
    }
    std::erase_if(out, [](const auto& entry) { return entry.second.is_zero(); });
    return out;
}

GradedHomology reduced_simplicial_homology(const SimplicialComplex& k)
{
    return homology_of(simplicial_chain_complex(k).chains);
}

std::string to_string(const GradedHomology& h)
{
    if (h.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, g] : h)
    {
        if (!first)
            os << ", ";
        os << "H_" << d << " = " << g.to_string();
        first = false;
    }
    return os.str();
}

}   // namespace zk
