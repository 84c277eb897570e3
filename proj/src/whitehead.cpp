#include "zk/whitehead.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>

#include "zk/error.hpp"
#include "zk/smith.hpp"

namespace zk {

// ------------------------------------------------------------------------
// WhiteheadExpr
// ------------------------------------------------------------------------

WhiteheadExpr WhiteheadExpr::leaf(int vertex)
{
    if (vertex < 1 || vertex > kMaxVertices)
        throw Error(ErrorKind::InvalidVertex, "leaf " + std::to_string(vertex) + " is outside 1.." + std::to_string(kMaxVertices));
    WhiteheadExpr w;
    w.vertex_ = vertex;
    w.leaves_ = VertexSet{vertex};
    return w;
}

WhiteheadExpr WhiteheadExpr::bracket(std::vector<WhiteheadExpr> children)
{
    if (children.size() < 2)
        throw Error(ErrorKind::ArityError, "a bracket needs at least two arguments");
    WhiteheadExpr w;
    for (const WhiteheadExpr& c : children)
    {
        if (!w.leaves_.disjoint_from(c.leaves_))
            throw Error(ErrorKind::DuplicateVertex, "vertex " + std::to_string((w.leaves_ & c.leaves_).min_vertex()) + " appears twice");
        w.leaves_ = w.leaves_ | c.leaves_;
    }
    w.children_ = std::move(children);
    return w;
}

VertexSet WhiteheadExpr::leaf_children() const
{
    VertexSet s;
    for (const WhiteheadExpr& c : children_)
        if (c.is_leaf())
            s.insert(c.vertex());
    return s;
}

int WhiteheadExpr::bracket_count() const
{
    if (is_leaf())
        return 0;
    int n = 1;
    for (const WhiteheadExpr& c : children_)
        n += c.bracket_count();
    return n;
}

int WhiteheadExpr::depth() const
{
    int d = 0;
    for (const WhiteheadExpr& c : children_)
        d = std::max(d, c.depth());
    return is_leaf() ? 0 : d + 1;
}

bool WhiteheadExpr::is_nested() const
{
    if (is_leaf())
        return true;
    for (std::size_t i = 0; i + 1 < children_.size(); ++i)
        if (!children_[i].is_leaf())
            return false;
    return children_.back().is_nested();
}

std::vector<VertexSet> WhiteheadExpr::levels() const
{
    if (is_leaf() || !is_nested())
        throw Error(ErrorKind::NotNestedForm, to_string() + " is not a nested product");
    std::vector<VertexSet> out;
    for (const WhiteheadExpr* w = this; w != nullptr;)
    {
        out.push_back(w->leaf_children());
        w = w->children_.back().is_leaf() ? nullptr : &w->children_.back();
    }
    return out;
}

WhiteheadExpr WhiteheadExpr::canonical() const
{
    if (is_leaf())
        return *this;
    std::vector<WhiteheadExpr> sorted;
    for (const WhiteheadExpr& c : children_)
        sorted.push_back(c.canonical());
    std::sort(sorted.begin(), sorted.end(), [](const WhiteheadExpr& a, const WhiteheadExpr& b) {
        if (a.is_leaf() != b.is_leaf())
            return a.is_leaf();
        return a.leaves_.min_vertex() < b.leaves_.min_vertex();
    });
    return bracket(std::move(sorted));
}

std::string WhiteheadExpr::to_string() const
{
    if (is_leaf())
        return std::to_string(vertex_);
    std::string out = "[";
    for (std::size_t i = 0; i < children_.size(); ++i)
        out += (i ? "," : "") + children_[i].to_string();
    return out + "]";
}

// ------------------------------------------------------------------------
// Parsing
// ------------------------------------------------------------------------

namespace {

class ExprParser
{
    public:
        explicit ExprParser(std::string_view text) : text_(text) {}

        WhiteheadExpr parse()
        {
            if (peek() != '[')
                throw ParseError(pos_, "expected '['");
            WhiteheadExpr w = bracket();
            if (peek() != '\0')
                throw ParseError(pos_, "trailing input");
            return w;
        }

    private:
        std::string_view text_;
        std::size_t pos_ = 0;
        VertexSet seen_;

        char peek()
        {
            while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            return pos_ < text_.size() ? text_[pos_] : '\0';
        }

        WhiteheadExpr bracket()
        {
            ++pos_;   // '['
            std::vector<WhiteheadExpr> items;
            items.push_back(item());
            while (peek() == ',')
            {
                ++pos_;
                items.push_back(item());
            }
            if (peek() != ']')
                throw ParseError(pos_, pos_ < text_.size() ? "expected ',' or ']'" : "unexpected end of input");
            ++pos_;
            return WhiteheadExpr::bracket(std::move(items));
        }

        WhiteheadExpr item()
        {
            char c = peek();
            if (c == '[')
                return bracket();
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw ParseError(pos_, c == '\0' ? "unexpected end of input" : "expected a vertex or '['");
            std::size_t start = pos_;
            long v = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            {
                v = v * 10 + (text_[pos_++] - '0');
                if (v > kMaxVertices)
                    throw Error(ErrorKind::InvalidVertex, "vertex at position " + std::to_string(start) + " exceeds " + std::to_string(kMaxVertices));
            }
            if (v == 0)
                throw Error(ErrorKind::InvalidVertex, "vertex 0 at position " + std::to_string(start) + "; vertices are 1-based");
            if (seen_.contains(static_cast<int>(v)))
                throw Error(ErrorKind::DuplicateVertex, "vertex " + std::to_string(v) + " repeated at position " + std::to_string(start));
            seen_.insert(static_cast<int>(v));
            return WhiteheadExpr::leaf(static_cast<int>(v));
        }
};

}   // namespace

WhiteheadExpr parse_expr(std::string_view text)
{
    return ExprParser(text).parse();
}

WhiteheadExpr nested_product(const std::vector<VertexSet>& levels)
{
    if (levels.empty())
        throw Error(ErrorKind::ArityError, "a nested product needs at least one level");
    std::optional<WhiteheadExpr> inner;
    for (auto it = levels.rbegin(); it != levels.rend(); ++it)
    {
        std::vector<WhiteheadExpr> children;
        for (int v : *it)
            children.push_back(WhiteheadExpr::leaf(v));
        if (inner)
            children.push_back(*inner);
        inner = WhiteheadExpr::bracket(std::move(children));
    }
    return *inner;
}

int dimension(const WhiteheadExpr& w)
{
    return 2 * w.leaves().size() - w.bracket_count();
}

KoszulChain hurewicz_chain(const WhiteheadExpr& w)
{
    KoszulChain out(KoszulMonomial{});
    for (VertexSet level : w.levels())
    {
        KoszulChain factor;
        for (int v : level)
            factor.add({VertexSet{v}, level - VertexSet{v}}, 1);
        out = multiply(out, factor);
    }
    return out;
}

// ------------------------------------------------------------------------
// Supports
// ------------------------------------------------------------------------

namespace {

void check_leaves(const WhiteheadExpr& w, int m)
{
    if (w.leaves().max_vertex() > m)
        throw Error(ErrorKind::InvalidVertex, w.to_string() + " uses a vertex outside 1.." + std::to_string(m));
}

SimplicialComplex disk_support(const WhiteheadExpr& w, int m)
{
    return w.is_leaf() ? simplex(w.leaves(), m) : sphere_support(w, m);
}

SimplicialComplex join_all(const std::vector<WhiteheadExpr>& children, std::size_t skip, int m)
{
    SimplicialComplex out(m);
    for (std::size_t j = 0; j < children.size(); ++j)
        if (j != skip)
            out = labeled_join(out, disk_support(children[j], m));
    return out;
}

// Drop-one supports, one per child.
std::vector<SimplicialComplex> face_supports(const WhiteheadExpr& w, int m)
{
    std::vector<SimplicialComplex> out;
    for (std::size_t k = 0; k < w.children().size(); ++k)
        out.push_back(join_all(w.children(), k, m));
    return out;
}

bool extrapolated(const WhiteheadExpr& w)
{
    return w.bracket_count() > 2;
}

std::string face_count_text(const SimplicialComplex& c)
{
    return std::to_string(c.face_count()) + " faces present";
}

}   // namespace

SimplicialComplex sphere_support(const WhiteheadExpr& w, int m)
{
    check_leaves(w, m);
    SimplicialComplex out(m);
    if (w.is_leaf())
        return out;
    for (const SimplicialComplex& s : face_supports(w, m))
        out = complex_union(out, s);
    return out;
}

SimplicialComplex triviality_support(const WhiteheadExpr& w, int m)
{
    check_leaves(w, m);
    if (w.is_leaf())
        return simplex(w.leaves(), m);
    return join_all(w.children(), w.children().size(), m);
}

MinimalComplex minimal_complex(const WhiteheadExpr& w)
{
    if (w.is_leaf() || !w.is_nested())
        throw Error(ErrorKind::NotNestedForm, w.to_string() + " is not a nested product");
    const int m = w.leaves().max_vertex();
    return {sphere_support(w, m), VertexMap::identity(w.leaves())};
}

// ------------------------------------------------------------------------
// Evidence
// ------------------------------------------------------------------------

const char* to_string(Verdict v)
{
    switch (v)
    {
        case Verdict::Defined: return "DEFINED";
        case Verdict::Undefined: return "UNDEFINED";
        case Verdict::Trivial: return "TRIVIAL";
        case Verdict::Nontrivial: return "NONTRIVIAL";
        case Verdict::RealizedEvidence: return "REALIZED-EVIDENCE";
        case Verdict::NotRealized: return "NOT-REALIZED";
        case Verdict::Matched: return "MATCHED";
        case Verdict::Unmatched: return "UNMATCHED";
    }
    return "UNKNOWN";
}

bool EvidenceReport::positive() const
{
    return verdict == Verdict::Defined || verdict == Verdict::Trivial || verdict == Verdict::RealizedEvidence ||
           verdict == Verdict::Matched;
}

EvidenceReport is_trivial(const WhiteheadExpr& w, const SimplicialComplex& k)
{
    SimplicialComplex support = triviality_support(w, k.vertex_count());
    InclusionResult inc = contains_labeled(k, support);
    EvidenceReport r;
    r.verdict = inc.included ? Verdict::Trivial : Verdict::Nontrivial;
    r.extrapolated = extrapolated(w);
    r.missing_face = inc.missing_face;
    r.certificates.push_back({"triviality support of " + w.to_string() + " lies in K",
                              inc.included ? face_count_text(support) : "missing face " + inc.missing_face->to_string()});
    return r;
}

namespace {

struct RouteResult
{
    bool ok = true;
    std::string claim;
    std::optional<VertexSet> missing;
};

RouteResult defined_by_triviality(const WhiteheadExpr& w, const SimplicialComplex& k)
{
    for (const WhiteheadExpr& c : w.children())
        if (!c.is_leaf())
        {
            RouteResult inner = defined_by_triviality(c, k);
            if (!inner.ok)
                return inner;
        }
    const int m = k.vertex_count();
    const auto& children = w.children();
    for (std::size_t j = 0; j < children.size(); ++j)
    {
        InclusionResult inc = contains_labeled(k, join_all(children, j, m));
        if (!inc.included)
        {
            std::string dropped = children[j].to_string();
            return {false, "drop-one support of " + w.to_string() + " without " + dropped + " lies in K", inc.missing_face};
        }
    }
    return {};
}

}   // namespace

EvidenceReport is_defined(const WhiteheadExpr& w, const SimplicialComplex& k)
{
    if (w.is_leaf())
        throw Error(ErrorKind::ArityError, "a single vertex is not a product");
    check_leaves(w, k.vertex_count());

    RouteResult by_triviality = defined_by_triviality(w, k);
    EvidenceReport r;
    r.extrapolated = extrapolated(w);
    r.verdict = by_triviality.ok ? Verdict::Defined : Verdict::Undefined;
    if (by_triviality.ok)
        r.certificates.push_back({"bracket arguments defined and drop-one supports of " + w.to_string() + " lie in K", "all present"});
    else
    {
        r.missing_face = by_triviality.missing;
        r.certificates.push_back({by_triviality.claim, "missing face " + by_triviality.missing->to_string()});
    }

    if (w.is_nested())
    {
        MinimalComplex minimal = minimal_complex(w);
        InclusionResult inc = contains_labeled(k, minimal.complex);
        if (inc.included != by_triviality.ok)
            throw Error(ErrorKind::InternalInvariant, "definedness routes disagree for " + w.to_string());
        r.certificates.push_back({"minimal complex of " + w.to_string() + " embeds with its labels",
                                  inc.included ? face_count_text(minimal.complex) : "missing face " + inc.missing_face->to_string()});
    }
    return r;
}

namespace {

std::string coordinates_text(const ClassCoordinates& c)
{
    std::string out = "(";
    for (std::size_t i = 0; i < c.free.size(); ++i)
        out += (i ? "," : "") + c.free[i].str();
    out += ")";
    if (!c.torsion.empty())
    {
        out += " torsion (";
        for (std::size_t i = 0; i < c.torsion.size(); ++i)
            out += (i ? "," : "") + c.torsion[i].str();
        out += ")";
    }
    return out;
}

std::string yes_no(bool b)
{
    return b ? "yes" : "no";
}

}   // namespace

EvidenceReport realize_evidence(const WhiteheadExpr& w, const SimplicialComplex& k)
{
    if (w.is_leaf() || !w.is_nested())
        throw Error(ErrorKind::NotNestedForm, w.to_string() + " is not a nested product");
    EvidenceReport r = is_defined(w, k);
    const bool defined = r.verdict == Verdict::Defined;
    r.certificates.insert(r.certificates.begin(), {"defined", yes_no(defined)});

    const KoszulChain chain = hurewicz_chain(w);
    const int degree = dimension(w);
    const bool inside = lies_in(chain, k);
    const bool cycle = inside && koszul_boundary(chain).is_zero();
    r.certificates.push_back({"Hurewicz chain is a cycle of R_*(K) in degree " + std::to_string(degree), yes_no(cycle)});

    bool nonzero = false, primitive = false;
    if (cycle)
    {
        BlockHomology block(k, w.leaves());
        ClassCoordinates coords = block.class_of(chain);
        nonzero = !coords.is_zero();
        primitive = coords.is_primitive();
        r.certificates.push_back({"class in H_" + std::to_string(degree) + " block " + w.leaves().to_string() + " = " +
                                      block.basis(degree).group().to_string(),
                                  coordinates_text(coords)});
        r.certificates.push_back({"class is nonzero and primitive", yes_no(nonzero && primitive)});
    }

    MinimalComplex minimal = minimal_complex(w);
    InclusionResult inc = contains_labeled(k, minimal.complex);
    r.certificates.push_back({"minimal complex embeds", inc.included ? "yes" : "missing face " + inc.missing_face->to_string()});
    if (inc.included)
    {
        SimplicialComplex full = full_subcomplex(k, w.leaves());
        const bool is_full = full.faces() == minimal.complex.faces();
        r.certificates.push_back({"minimal complex is the full subcomplex on " + w.leaves().to_string(), yes_no(is_full)});
    }

    r.verdict = defined && cycle && nonzero && primitive && inc.included ? Verdict::RealizedEvidence : Verdict::NotRealized;
    return r;
}

// ------------------------------------------------------------------------
// Enumeration
// ------------------------------------------------------------------------

bool EnumeratedProduct::inner_nontrivial() const
{
    return std::all_of(inner.begin(), inner.end(), [](const auto& e) { return e.second.verdict == Verdict::Nontrivial; });
}

namespace {

// Unordered partitions of s into blocks of size >= 2, blocks ordered by
// least element.
void block_partitions(VertexSet s, std::vector<VertexSet>& current, std::vector<std::vector<VertexSet>>& out)
{
    if (s.empty())
    {
        out.push_back(current);
        return;
    }
    const int first = s.min_vertex();
    const VertexSet rest = s - VertexSet{first};
    for (VertexSet others : subsets_of(rest))
    {
        if (others.empty())
            continue;
        current.push_back(others | VertexSet{first});
        block_partitions(rest - others, current, out);
        current.pop_back();
    }
}

// Ways to write total as an ordered sum of positive parts, part i at most
// caps[i].
void compositions(int total, const std::vector<int>& caps, std::vector<int>& current, std::vector<std::vector<int>>& out)
{
    const std::size_t i = current.size();
    if (i == caps.size())
    {
        if (total == 0)
            out.push_back(current);
        return;
    }
    for (int n = 1; n <= std::min(total, caps[i]); ++n)
    {
        current.push_back(n);
        compositions(total - n, caps, current, out);
        current.pop_back();
    }
}

void collect_inner(const WhiteheadExpr& w, const SimplicialComplex& k, std::vector<std::pair<WhiteheadExpr, EvidenceReport>>& out)
{
    for (const WhiteheadExpr& c : w.children())
        if (!c.is_leaf())
        {
            out.emplace_back(c, is_trivial(c, k));
            collect_inner(c, k, out);
        }
}

}   // namespace

std::vector<WhiteheadExpr> trees_on(VertexSet leaves, int brackets)
{
    std::vector<WhiteheadExpr> out;
    if (brackets < 1 || leaves.size() < brackets + 1)
        return out;
    for (VertexSet direct : subsets_of(leaves))
    {
        const VertexSet rest = leaves - direct;
        std::vector<WhiteheadExpr> leaf_nodes;
        for (int v : direct)
            leaf_nodes.push_back(WhiteheadExpr::leaf(v));

        if (brackets == 1)
        {
            if (rest.empty() && direct.size() >= 2)
                out.push_back(WhiteheadExpr::bracket(leaf_nodes));
            continue;
        }
        if (rest.empty())
            continue;

        std::vector<std::vector<VertexSet>> partitions;
        std::vector<VertexSet> scratch;
        block_partitions(rest, scratch, partitions);
        for (const auto& blocks : partitions)
        {
            const int t = static_cast<int>(blocks.size());
            if (t > brackets - 1 || direct.size() + t < 2)
                continue;
            std::vector<int> caps;
            for (VertexSet b : blocks)
                caps.push_back(b.size() - 1);
            std::vector<std::vector<int>> splits;
            std::vector<int> split;
            compositions(brackets - 1, caps, split, splits);
            for (const auto& counts : splits)
            {
                std::vector<std::vector<WhiteheadExpr>> options;
                for (int i = 0; i < t; ++i)
                    options.push_back(trees_on(blocks[i], counts[i]));
                std::vector<WhiteheadExpr> chosen;
                std::function<void(int)> pick = [&](int i) {
                    if (i == t)
                    {
                        std::vector<WhiteheadExpr> children = leaf_nodes;
                        children.insert(children.end(), chosen.begin(), chosen.end());
                        out.push_back(WhiteheadExpr::bracket(std::move(children)));
                        return;
                    }
                    for (const WhiteheadExpr& sub : options[i])
                    {
                        chosen.push_back(sub);
                        pick(i + 1);
                        chosen.pop_back();
                    }
                };
                pick(0);
            }
        }
    }
    return out;
}

std::vector<EnumeratedProduct> enumerate_products(const SimplicialComplex& k, int target_dim, int max_brackets)
{
    std::vector<EnumeratedProduct> out;
    const VertexSet vertices = k.vertices();
    for (int b = 1; b <= max_brackets; ++b)
    {
        if ((target_dim + b) % 2 != 0)
            continue;
        const int leaf_count = (target_dim + b) / 2;
        if (leaf_count < b + 1 || leaf_count > vertices.size())
            continue;
        for (VertexSet s : subsets_of(vertices))
        {
            if (s.size() != leaf_count)
                continue;
            for (WhiteheadExpr& w : trees_on(s, b))
            {
                EnumeratedProduct p{w, is_defined(w, k), {}};
                collect_inner(w, k, p.inner);
                out.push_back(std::move(p));
            }
        }
    }
    return out;
}

// ------------------------------------------------------------------------
// Basis matching
// ------------------------------------------------------------------------

std::vector<WhiteheadExpr> WDeltaReport::products() const
{
    std::vector<WhiteheadExpr> out;
    for (const WDeltaBlock& b : blocks)
        if (b.matched)
            out.insert(out.end(), b.basis.begin(), b.basis.end());
    return out;
}

namespace {

// Ordered set partitions of s into `count` levels; the last level has at
// least two members.
void level_sequences(VertexSet s, int count, std::vector<VertexSet>& current, std::vector<std::vector<VertexSet>>& out)
{
    if (count == 1)
    {
        if (s.size() >= 2)
        {
            current.push_back(s);
            out.push_back(current);
            current.pop_back();
        }
        return;
    }
    for (VertexSet level : subsets_of(s))
    {
        if (level.empty() || s.size() - level.size() < count)
            continue;
        current.push_back(level);
        level_sequences(s - level, count - 1, current, out);
        current.pop_back();
    }
}

// Larger innermost level first, then innermost set, then the outer levels
// from the outside in, all lexicographic.
bool preferred(const std::vector<VertexSet>& a, const std::vector<VertexSet>& b)
{
    if (a.back().size() != b.back().size())
        return a.back().size() > b.back().size();
    if (a.back() != b.back())
        return lex_less(a.back(), b.back());
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        if (a[i] != b[i])
            return lex_less(a[i], b[i]);
    return false;
}

IntMatrix columns(const std::vector<IntVector>& cols, Index rows)
{
    IntMatrix m = IntMatrix::Zero(rows, static_cast<Index>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
        m.col(static_cast<Index>(j)) = cols[j];
    return m;
}

Certificate block_certificate(const WDeltaBlock& b)
{
    std::string claim = "H_" + std::to_string(b.degree) + " block " + b.support.to_string() + " = " + b.group.to_string();
    std::string witness;
    if (b.matched)
    {
        for (std::size_t i = 0; i < b.basis.size(); ++i)
            witness += (i ? ", " : "") + b.basis[i].to_string();
    }
    else
    {
        witness = "unmatched: " + std::to_string(b.candidates.size()) + " candidates, span rank " +
                  std::to_string(b.span_rank) + " of " + std::to_string(b.group.rank);
        if (!b.group.torsion.empty())
            witness += ", torsion not spanned";
    }
    return {claim, witness};
}

}   // namespace

Integer basis_index(const SimplicialComplex& k, const std::vector<WhiteheadExpr>& products)
{
    std::map<std::pair<VertexSet, int>, std::vector<KoszulChain>> grouped;
    for (const WhiteheadExpr& w : products)
    {
        KoszulChain chain = hurewicz_chain(w);
        if (!lies_in(chain, k) || !koszul_boundary(chain).is_zero())
            return 0;
        grouped[{w.leaves(), dimension(w)}].push_back(std::move(chain));
    }

    Integer index = 1;
    std::size_t used = 0;
    for (VertexSet t : subsets_of(VertexSet::range(1, k.vertex_count())))
    {
        if (t.empty() || reduced_simplicial_homology(full_subcomplex(k, t)).empty())
            continue;
        BlockHomology block(k, t);
        for (const auto& [degree, group] : block.homology())
        {
            auto it = grouped.find({t, degree});
            if (it == grouped.end() || static_cast<Index>(it->second.size()) != group.rank)
                return 0;
            std::vector<IntVector> cols;
            for (const KoszulChain& c : it->second)
            {
                ClassCoordinates coords = block.class_of(c);
                IntVector v(group.rank);
                for (Index i = 0; i < group.rank; ++i)
                    v(i) = coords.free[static_cast<std::size_t>(i)];
                cols.push_back(v);
            }
            auto factors = invariant_factors(columns(cols, group.rank));
            if (static_cast<Index>(factors.size()) != group.rank)
                return 0;
            for (const Integer& d : factors)
                index *= d;
            used += it->second.size();
        }
    }
    return used == products.size() ? index : Integer(0);
}

WDeltaReport wdelta_evidence(const SimplicialComplex& k, int max_brackets)
{
    WDeltaReport out;
    for (VertexSet t : subsets_of(VertexSet::range(1, k.vertex_count())))
    {
        if (t.empty() || reduced_simplicial_homology(full_subcomplex(k, t)).empty())
            continue;
        BlockHomology block(k, t);
        for (const auto& [degree, group] : block.homology())
        {
            WDeltaBlock entry;
            entry.support = t;
            entry.degree = degree;
            entry.group = group;

            const int levels = 2 * t.size() - degree;
            std::vector<std::vector<VertexSet>> sequences;
            if (levels >= 1 && levels <= max_brackets && levels <= t.size() - 1)
            {
                std::vector<VertexSet> scratch;
                level_sequences(t, levels, scratch, sequences);
                std::sort(sequences.begin(), sequences.end(), preferred);
            }

            std::vector<IntVector> classes;
            for (const auto& seq : sequences)
            {
                WhiteheadExpr w = nested_product(seq);
                if (is_defined(w, k).verdict != Verdict::Defined)
                    continue;
                std::vector<std::pair<WhiteheadExpr, EvidenceReport>> inner;
                collect_inner(w, k, inner);
                if (!std::all_of(inner.begin(), inner.end(), [](const auto& e) { return e.second.verdict == Verdict::Nontrivial; }))
                    continue;
                ClassCoordinates c = block.class_of(hurewicz_chain(w));
                IntVector v(static_cast<Index>(c.free.size()));
                for (std::size_t i = 0; i < c.free.size(); ++i)
                    v(static_cast<Index>(i)) = c.free[i];
                entry.candidates.push_back(w);
                classes.push_back(v);
            }

            const Index rank = group.rank;
            std::vector<IntVector> chosen;
            for (std::size_t i = 0; i < classes.size() && static_cast<Index>(chosen.size()) < rank; ++i)
            {
                chosen.push_back(classes[i]);
                if (smith_normal_form(columns(chosen, rank), false).rank() == static_cast<Index>(chosen.size()))
                    entry.basis.push_back(entry.candidates[i]);
                else
                    chosen.pop_back();
            }

            auto factors = invariant_factors(columns(classes, rank));
            entry.span_rank = static_cast<Index>(factors.size());
            const bool unimodular = std::all_of(factors.begin(), factors.end(), [](const Integer& d) { return d == Integer(1); });
            entry.matched = group.torsion.empty() && entry.span_rank == rank && unimodular;

            out.blocks.push_back(std::move(entry));
        }
    }

    std::stable_sort(out.blocks.begin(), out.blocks.end(), [](const WDeltaBlock& a, const WDeltaBlock& b) { return a.degree < b.degree; });
    for (const WDeltaBlock& b : out.blocks)
    {
        out.report.certificates.push_back(block_certificate(b));
        if (!b.matched && (out.unmatched_degrees.empty() || out.unmatched_degrees.back() != b.degree))
            out.unmatched_degrees.push_back(b.degree);
    }
    out.report.verdict = out.unmatched_degrees.empty() ? Verdict::Matched : Verdict::Unmatched;
    return out;
}

}   // namespace zk
