#include "zk/momentangle.hpp"

#include <algorithm>
#include <cctype>

#include "zk/error.hpp"

namespace zk {

// ------------------------------------------------------------------------
// Monomials and chains
// ------------------------------------------------------------------------

std::string KoszulMonomial::word() const
{
    if (support().empty())
        return "1";
    std::string out;
    for (int v : support())
        out += (odd.contains(v) ? "S" : "D") + std::to_string(v);
    return out;
}

KoszulChain::KoszulChain(const KoszulMonomial& m, Integer coeff)
{
    add(m, coeff);
}

Integer KoszulChain::coefficient(const KoszulMonomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
}

std::optional<int> KoszulChain::degree() const
{
    std::optional<int> d;
    for (const auto& [m, c] : terms_)
    {
        if (d && *d != m.degree())
            return std::nullopt;
        d = m.degree();
    }
    return d;
}

VertexSet KoszulChain::support() const
{
    VertexSet s;
    for (const auto& [m, c] : terms_)
        s = s | m.support();
    return s;
}

void KoszulChain::add(const KoszulMonomial& m, const Integer& coeff)
{
    if (!m.odd.disjoint_from(m.even))
        throw Error(ErrorKind::OverlappingSupport, "monomial uses vertex set " + (m.odd & m.even).to_string() + " as both S and D");
    if (coeff.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (!inserted)
    {
        it->second += coeff;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

KoszulChain& KoszulChain::operator+=(const KoszulChain& other)
{
    for (const auto& [m, c] : other.terms_)
        add(m, c);
    return *this;
}

KoszulChain& KoszulChain::operator-=(const KoszulChain& other)
{
    for (const auto& [m, c] : other.terms_)
        add(m, -c);
    return *this;
}

KoszulChain& KoszulChain::operator*=(const Integer& scalar)
{
    if (scalar.is_zero())
    {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_)
        c *= scalar;
    return *this;
}

std::string KoszulChain::to_string() const
{
    if (terms_.empty())
        return "0";
    std::vector<std::pair<std::string, Integer>> sorted;
    for (const auto& [m, c] : terms_)
        sorted.emplace_back(m.word(), c);
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

    std::string out;
    for (std::size_t i = 0; i < sorted.size(); ++i)
    {
        const auto& [word, c] = sorted[i];
        const bool negative = c.sign() < 0;
        if (i == 0)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        Integer magnitude = abs(c);
        if (magnitude != Integer(1))
            out += magnitude.str() + "*";
        out += word;
    }
    return out;
}

KoszulChain koszul_boundary(const KoszulChain& c)
{
    KoszulChain out;
    for (const auto& [m, coeff] : c.terms())
        for (int i : m.even)
        {
            KoszulMonomial image = m;
            image.even.erase(i);
            image.odd.insert(i);
            out.add(image, m.odd.count_below(i) % 2 == 0 ? coeff : -coeff);
        }
    return out;
}

bool lies_in(const KoszulChain& c, const SimplicialComplex& k)
{
    for (const auto& [m, coeff] : c.terms())
        if (m.support().max_vertex() > k.vertex_count() || !k.contains(m.even))
            return false;
    return true;
}

namespace {

int product_sign(VertexSet left_odd, VertexSet right_odd)
{
    int inversions = 0;
    for (int x : left_odd)
        inversions += right_odd.count_below(x);
    return inversions % 2 == 0 ? 1 : -1;
}

}   // namespace

KoszulChain multiply(const KoszulChain& a, const KoszulChain& b)
{
    if (!a.support().disjoint_from(b.support()))
        throw Error(ErrorKind::OverlappingSupport, "factors share vertices " + (a.support() & b.support()).to_string());
    KoszulChain out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
        {
            KoszulMonomial m{ma.odd | mb.odd, ma.even | mb.even};
            Integer c = ca * cb;
            out.add(m, product_sign(ma.odd, mb.odd) > 0 ? c : -c);
        }
    return out;
}

int shuffle_sign(VertexSet l, VertexSet j)
{
    if (!l.is_subset_of(j))
        throw Error(ErrorKind::LNotInJ, l.to_string() + " is not contained in " + j.to_string());
    return product_sign(l, j - l);
}

KoszulChain hochster_chain(const SimplicialComplex& k, VertexSet j, const SimplicialChain& z)
{
    KoszulChain out;
    for (const auto& [face, coeff] : z)
    {
        if (!face.is_subset_of(j) || !k.contains(face))
            throw Error(ErrorKind::NotAFace, face.to_string() + " is not a face of the full subcomplex on " + j.to_string());
        out.add({j - face, face}, shuffle_sign(face, j) > 0 ? coeff : -coeff);
    }
    return out;
}

// ------------------------------------------------------------------------
// Chain text
// ------------------------------------------------------------------------

namespace {

class ChainParser
{
    public:
        explicit ChainParser(std::string_view text) : text_(text) {}

        KoszulChain parse()
        {
            KoszulChain c = sum();
            skip_space();
            if (pos_ != text_.size())
                throw ParseError(pos_, "unexpected '" + std::string(1, text_[pos_]) + "'");
            return c;
        }

    private:
        std::string_view text_;
        std::size_t pos_ = 0;

        void skip_space()
        {
            while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
        }

        char peek()
        {
            skip_space();
            return pos_ < text_.size() ? text_[pos_] : '\0';
        }

        KoszulChain sum()
        {
            KoszulChain total;
            bool negate = false;
            if (peek() == '+' || peek() == '-')
                negate = text_[pos_++] == '-';
            for (;;)
            {
                KoszulChain term = product();
                if (negate)
                    total -= term;
                else
                    total += term;
                char c = peek();
                if (c != '+' && c != '-')
                    return total;
                negate = c == '-';
                ++pos_;
            }
        }

        KoszulChain product()
        {
            KoszulChain result(KoszulMonomial{});
            bool any = false;
            for (;;)
            {
                char c = peek();
                if (c == '*' && any)
                {
                    ++pos_;
                    c = peek();
                }
                if (std::isdigit(static_cast<unsigned char>(c)))
                    result *= Integer(number());
                else if (c == 'S' || c == 'D')
                {
                    std::size_t at = pos_;
                    ++pos_;
                    if (!std::isdigit(static_cast<unsigned char>(peek_raw())))
                        throw ParseError(pos_, "expected a vertex index after '" + std::string(1, c) + "'");
                    long long v = number();
                    if (v < 1 || v > kMaxVertices)
                        throw ParseError(at, "vertex index out of range");
                    KoszulMonomial letter;
                    (c == 'S' ? letter.odd : letter.even).insert(static_cast<int>(v));
                    result = multiply(result, KoszulChain(letter));
                }
                else if (c == '(')
                {
                    ++pos_;
                    KoszulChain inner = sum();
                    if (peek() != ')')
                        throw ParseError(pos_, "expected ')'");
                    ++pos_;
                    result = multiply(result, inner);
                }
                else
                {
                    if (!any)
                        throw ParseError(pos_, c == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, c) + "'");
                    return result;
                }
                any = true;
            }
        }

        char peek_raw() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

        long long number()
        {
            std::size_t start = pos_;
            long long v = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            {
                if (v > 1'000'000'000'000LL)
                    throw ParseError(start, "number too large");
                v = v * 10 + (text_[pos_++] - '0');
            }
            return v;
        }
};

}   // namespace

KoszulChain parse_chain(std::string_view text)
{
    return ChainParser(text).parse();
}

// ------------------------------------------------------------------------
// Koszul complexes
// ------------------------------------------------------------------------

namespace {

KoszulComplex assemble(std::map<int, std::vector<KoszulMonomial>> basis)
{
    KoszulComplex out;
    if (basis.empty())
        basis[0] = {};
    const int lo = basis.begin()->first;
    const int hi = basis.rbegin()->first;
    std::vector<Index> dims;
    std::vector<std::map<KoszulMonomial, Index>> index(hi - lo + 1);
    for (int d = lo; d <= hi; ++d)
    {
        auto& monomials = basis[d];
        std::sort(monomials.begin(), monomials.end());
        for (std::size_t i = 0; i < monomials.size(); ++i)
            index[d - lo][monomials[i]] = static_cast<Index>(i);
        dims.push_back(static_cast<Index>(monomials.size()));
    }
    out.chains = GradedChainComplex(lo, dims);
    for (int d = lo + 1; d <= hi; ++d)
    {
        IntMatrix& b = out.chains.boundary_ref(d);
        const auto& monomials = basis[d];
        for (std::size_t col = 0; col < monomials.size(); ++col)
        {
            KoszulChain image = koszul_boundary(KoszulChain(monomials[col]));
            for (const auto& [m, c] : image.terms())
                b(index[d - 1 - lo].at(m), static_cast<Index>(col)) = c;
        }
    }
    out.basis = std::move(basis);
    return out;
}

}   // namespace

IntVector KoszulComplex::to_vector(const KoszulChain& c, int degree) const
{
    IntVector v = IntVector::Zero(chains.dim(degree));
    auto it = basis.find(degree);
    for (const auto& [m, coeff] : c.terms())
    {
        if (it == basis.end() || m.degree() != degree)
            throw Error(ErrorKind::NotAFace, m.word() + " is not a basis cell in degree " + std::to_string(degree));
        auto pos = std::lower_bound(it->second.begin(), it->second.end(), m);
        if (pos == it->second.end() || *pos != m)
            throw Error(ErrorKind::NotAFace, m.word() + " is not a cell of Z_K");
        v(pos - it->second.begin()) = coeff;
    }
    return v;
}

KoszulChain KoszulComplex::from_vector(const IntVector& v, int degree) const
{
    KoszulChain c;
    const auto& monomials = basis.at(degree);
    for (Index i = 0; i < v.size(); ++i)
        c.add(monomials[i], v(i));
    return c;
}

KoszulComplex koszul_complex(const SimplicialComplex& k)
{
    std::map<int, std::vector<KoszulMonomial>> basis;
    const VertexSet all = VertexSet::range(1, k.vertex_count());
    for (VertexSet face : k.faces())
        for (VertexSet odd : subsets_of(all - face))
        {
            KoszulMonomial m{odd, face};
            basis[m.degree()].push_back(m);
        }
    return assemble(std::move(basis));
}

KoszulComplex koszul_block(const SimplicialComplex& k, VertexSet support)
{
    if (support.max_vertex() > k.vertex_count())
        throw Error(ErrorKind::InvalidVertex, "support " + support.to_string() + " exceeds the vertex set");
    std::map<int, std::vector<KoszulMonomial>> basis;
    for (VertexSet face : subsets_of(support))
        if (k.contains(face))
        {
            KoszulMonomial m{support - face, face};
            basis[m.degree()].push_back(m);
        }
    return assemble(std::move(basis));
}

GradedHomology zk_homology(const SimplicialComplex& k)
{
    return homology_of(koszul_complex(k).chains);
}

GradedHomology zk_homology_by_blocks(const SimplicialComplex& k)
{
    GradedHomology total;
    for (VertexSet t : subsets_of(VertexSet::range(1, k.vertex_count())))
        for (const auto& [d, g] : homology_of(koszul_block(k, t).chains))
            total[d] = direct_sum(total[d], g);
    return total;
}

GradedHomology reduced_part(const GradedHomology& h)
{
    GradedHomology out = h;
    out.erase(0);
    return out;
}

// ------------------------------------------------------------------------
// BlockHomology
// ------------------------------------------------------------------------

BlockHomology::BlockHomology(const SimplicialComplex& k, VertexSet support)
    : support_(support), complex_(koszul_block(k, support))
{
    for (int d = complex_.chains.min_degree(); d <= complex_.chains.max_degree(); ++d)
        bases_.emplace(d, HomologyBasis(complex_.chains, d));
}

GradedHomology BlockHomology::homology() const
{
    GradedHomology h;
    for (const auto& [d, b] : bases_)
        if (!b.group().is_zero())
            h[d] = b.group();
    return h;
}

const HomologyBasis& BlockHomology::basis(int degree) const
{
    auto it = bases_.find(degree);
    if (it == bases_.end())
        throw Error(ErrorKind::NotACycle, "block " + support_.to_string() + " has no cells in degree " + std::to_string(degree));
    return it->second;
}

ClassCoordinates BlockHomology::class_of(const KoszulChain& c) const
{
    if (c.is_zero())
        return {};
    auto degree = c.degree();
    if (!degree)
        throw Error(ErrorKind::NotACycle, "chain is not homogeneous");
    if (c.support() != support_)
        throw Error(ErrorKind::NotAFace, "chain support " + c.support().to_string() + " differs from block " + support_.to_string());
    for (const auto& [m, coeff] : c.terms())
        if (m.support() != support_)
            throw Error(ErrorKind::NotAFace, m.word() + " lies outside block " + support_.to_string());
    const HomologyBasis& b = basis(*degree);
    return zk::class_of(complex_.to_vector(c, *degree), complex_.chains, b);
}

// ------------------------------------------------------------------------
// Hochster decomposition
// ------------------------------------------------------------------------

HochsterDecomposition hochster_decomposition(const SimplicialComplex& k)
{
    HochsterDecomposition out;
    for (VertexSet j : subsets_of(VertexSet::range(1, k.vertex_count())))
    {
        SimplicialChainComplex cx = simplicial_chain_complex(full_subcomplex(k, j));
        HochsterSummand summand;
        summand.j = j;
        for (int q = cx.chains.min_degree(); q <= cx.chains.max_degree(); ++q)
        {
            HomologyBasis b(cx.chains, q);
            if (b.group().is_zero())
                continue;
            summand.groups[q] = b.group();
            auto& reps = summand.representatives[q];
            for (const auto& g : b.free_generators())
                reps.push_back(cx.from_vector(g, q));
            for (const auto& g : b.torsion_generators())
                reps.push_back(cx.from_vector(g, q));
            HomologyGroup& slot = out.totals[summand.shifted(q)];
            slot = direct_sum(slot, b.group());
        }
        if (!summand.groups.empty())
            out.summands.push_back(std::move(summand));
    }
    return out;
}

HochsterCheck verify_hochster(const SimplicialComplex& k)
{
    HochsterCheck report;
    auto fail = [&report](std::string why) {
        report.pass = false;
        report.discrepancy = std::move(why);
        return report;
    };

    const GradedHomology koszul = zk_homology(k);
    const HochsterDecomposition hochster = hochster_decomposition(k);
    if (koszul != hochster.totals)
    {
        std::string why = "Koszul route gives " + to_string(koszul) + " but Hochster totals are " + to_string(hochster.totals);
        return fail(why);
    }

    for (const HochsterSummand& s : hochster.summands)
    {
        BlockHomology block(k, s.j);
        for (const auto& [q, reps] : s.representatives)
            for (const SimplicialChain& z : reps)
            {
                KoszulChain image = hochster_chain(k, s.j, z);
                if (!koszul_boundary(image).is_zero())
                    return fail("image of a cycle of K_" + s.j.to_string() + " in degree " + std::to_string(q) + " is not a Koszul cycle");
                if (block.class_of(image).is_zero())
                    return fail("image of a generator of K_" + s.j.to_string() + " in degree " + std::to_string(q) + " has zero class");
            }
    }
    return report;
}

}   // namespace zk
