/**
 * Iterated higher Whitehead products as bracket trees over distinct vertex
 * leaves, and their combinatorial shadows in a simplicial complex K.
 *
 * Three complexes attached to a bracket w drive everything here:
 *
 *   disk support    Fd(leaf v) = Δ{v},  Fd(bracket b) = S(b)
 *   sphere support  S(w) = ∪_k  *_{j≠k} Fd(c_j)   (c_1..c_r the children)
 *   triviality      F(w) = *_j Fd(c_j)
 *
 * S(w) ⊆ K is definedness, F(w) ⊆ K is triviality.  For a nested product
 * S(w) is the minimal realizing complex, S([A]) = ∂Δ(A) and
 * S([A, w']) = (∂Δ(A) * S(w')) ∪ Δ(A).
 */
#ifndef ZK_WHITEHEAD_HPP
#define ZK_WHITEHEAD_HPP

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zk/complex.hpp"
#include "zk/homology.hpp"
#include "zk/momentangle.hpp"

namespace zk {

class WhiteheadExpr
{
    public:
        static WhiteheadExpr leaf(int vertex);
        /// Throws ArityError for fewer than two children, DuplicateVertex if
        /// a leaf repeats.
        static WhiteheadExpr bracket(std::vector<WhiteheadExpr> children);

        bool is_leaf() const { return vertex_ != 0; }
        int vertex() const { return vertex_; }
        const std::vector<WhiteheadExpr>& children() const { return children_; }

        /// All leaves of the tree.
        VertexSet leaves() const { return leaves_; }
        /// Leaves that are direct children of this bracket.
        VertexSet leaf_children() const;
        int bracket_count() const;
        /// Longest chain of nested brackets, 1 for a leaf-only bracket.
        int depth() const;

        /// Every bracket has at most one bracket child, placed last.
        bool is_nested() const;
        /// Leaf sets of the levels of a nested product, outermost first.
        /// Throws NotNestedForm.
        std::vector<VertexSet> levels() const;

        /// Children reordered: leaves ascending, then brackets by least leaf.
        WhiteheadExpr canonical() const;

        /// "[1,2,[3,4,5]]"
        std::string to_string() const;

        friend bool operator==(const WhiteheadExpr&, const WhiteheadExpr&) = default;

    private:
        WhiteheadExpr() = default;

        int vertex_ = 0;
        VertexSet leaves_;
        std::vector<WhiteheadExpr> children_;
};

/// expr := '[' item (',' item)+ ']' ;  item := integer | expr
WhiteheadExpr parse_expr(std::string_view text);

/// The nested product with the given level leaf sets, outermost first; the
/// innermost level needs two leaves, the others at least one.
WhiteheadExpr nested_product(const std::vector<VertexSet>& levels);

/// 2·(leaf count) − (bracket count).
int dimension(const WhiteheadExpr& w);

/// Product over the levels of Σ_j (S at the j-th leaf, D at the others).
/// Throws NotNestedForm.
KoszulChain hurewicz_chain(const WhiteheadExpr& w);

SimplicialComplex sphere_support(const WhiteheadExpr& w, int m);
SimplicialComplex triviality_support(const WhiteheadExpr& w, int m);

struct MinimalComplex
{
    SimplicialComplex complex;   // on m = largest leaf
    VertexMap labels;            // identity on the leaves
};

/// Throws NotNestedForm.
MinimalComplex minimal_complex(const WhiteheadExpr& w);

// ------------------------------------------------------------------------
// Evidence
// ------------------------------------------------------------------------

enum class Verdict
{
    Defined,
    Undefined,
    Trivial,
    Nontrivial,
    RealizedEvidence,
    NotRealized,
    Matched,
    Unmatched
};

const char* to_string(Verdict v);

struct Certificate
{
    std::string claim;
    std::string witness;
};

struct EvidenceReport
{
    Verdict verdict = Verdict::Undefined;
    std::vector<Certificate> certificates;
    /// Set when the verdict relies on the join-support criterion beyond a
    /// single level of nesting.
    bool extrapolated = false;
    std::optional<VertexSet> missing_face;

    /// True for Defined, Trivial, RealizedEvidence and Matched.
    bool positive() const;
};

/// TRIVIAL iff F(w) ⊆ K.
EvidenceReport is_trivial(const WhiteheadExpr& w, const SimplicialComplex& k);

/**
 * DEFINED iff every bracket child is defined and every drop-one support
 * lies in K.  For nested w the labeled embedding of minimal_complex(w) is
 * checked as well, and a disagreement throws InternalInvariant.
 */
EvidenceReport is_defined(const WhiteheadExpr& w, const SimplicialComplex& k);

/**
 * Homology-level evidence that K realizes w: defined, Hurewicz chain a cycle
 * of R_*(K), its class nonzero and primitive, minimal complex embedded.
 */
EvidenceReport realize_evidence(const WhiteheadExpr& w, const SimplicialComplex& k);

struct EnumeratedProduct
{
    WhiteheadExpr expr;
    EvidenceReport defined;
    /// Triviality of every bracket below the root, in tree order.
    std::vector<std::pair<WhiteheadExpr, EvidenceReport>> inner;

    bool inner_nontrivial() const;
    /// Defined with every inner bracket nontrivial.
    bool candidate() const { return defined.verdict == Verdict::Defined && inner_nontrivial(); }
};

/// Every canonical tree on the non-ghost vertices of K with at most
/// max_brackets brackets and the given dimension.
std::vector<EnumeratedProduct> enumerate_products(const SimplicialComplex& k, int target_dim, int max_brackets);

/// Every canonical tree with exactly the given leaves and bracket count.
std::vector<WhiteheadExpr> trees_on(VertexSet leaves, int brackets);

/**
 * |det| of the change of basis from a homology basis of the reduced
 * H_*(Z_K) to the Hurewicz classes of the given nested products, block by
 * block.  1 iff the products form a basis; 0 when the count per block is
 * wrong, the classes are dependent, or a chain is not a cycle of R_*(K).
 */
Integer basis_index(const SimplicialComplex& k, const std::vector<WhiteheadExpr>& products);

/// One support block T of H_*(Z_K) in one degree.
struct WDeltaBlock
{
    VertexSet support;
    int degree = 0;
    HomologyGroup group;
    std::vector<WhiteheadExpr> candidates;   // preference order
    std::vector<WhiteheadExpr> basis;        // chosen products
    Index span_rank = 0;
    bool matched = false;
};

struct WDeltaReport
{
    EvidenceReport report;
    std::vector<WDeltaBlock> blocks;   // ascending degree, then support
    std::vector<int> unmatched_degrees;

    /// Chosen products over all matched blocks.
    std::vector<WhiteheadExpr> products() const;
};

/**
 * Try to span every nonzero H_d(Z_K) block by Hurewicz classes of defined
 * nested products with nontrivial inner brackets and at most max_brackets
 * levels.  MATCHED iff every block is spanned over Z.
 */
WDeltaReport wdelta_evidence(const SimplicialComplex& k, int max_brackets);

}   // namespace zk

#endif
