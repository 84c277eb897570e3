/**
 * Cellular chains of the moment-angle complex Z_K.
 *
 * The cell χ(J, I) of Z_K ⊂ (D²)^m (S-cells over J, D-cells over I, I ∈ K)
 * is the Koszul monomial u_J v_I.  Letters are ordered by ascending vertex;
 * the odd letters u (S-cells) anticommute, the even letters v (D-cells) are
 * central, and ∂ = Σ u_i ∂/∂v_i:
 *
 *     ∂(u_J v_I) = Σ_{i ∈ I} (-1)^{#{j ∈ J : j < i}} u_{J+i} v_{I-i}.
 *
 * The differential preserves the support J ∪ I, so R_*(K) splits into one
 * block per subset T ⊆ [m]; koszul_block builds a single block.
 */
#ifndef ZK_MOMENTANGLE_HPP
#define ZK_MOMENTANGLE_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zk/complex.hpp"
#include "zk/homology.hpp"

namespace zk {

struct KoszulMonomial
{
    VertexSet odd;    // S-cells / u letters
    VertexSet even;   // D-cells / v letters

    int degree() const { return odd.size() + 2 * even.size(); }
    VertexSet support() const { return odd | even; }

    /// Cell word with letters sorted by vertex, e.g. "D1S2D3"; "1" for the
    /// empty monomial.
    std::string word() const;

    friend bool operator==(const KoszulMonomial&, const KoszulMonomial&) = default;
    friend auto operator<=>(const KoszulMonomial&, const KoszulMonomial&) = default;
};

/// Finite integer combination of Koszul monomials; zero coefficients are
/// never stored.
class KoszulChain
{
    public:
        using Terms = std::map<KoszulMonomial, Integer>;

        KoszulChain() = default;
        KoszulChain(const KoszulMonomial& m, Integer coeff = 1);

        const Terms& terms() const { return terms_; }
        bool is_zero() const { return terms_.empty(); }
        Integer coefficient(const KoszulMonomial& m) const;

        /// Common degree of all terms; nullopt for the zero chain or a mixed one.
        std::optional<int> degree() const;
        /// Union of the supports of all terms.
        VertexSet support() const;

        void add(const KoszulMonomial& m, const Integer& coeff);
        KoszulChain& operator+=(const KoszulChain& other);
        KoszulChain& operator-=(const KoszulChain& other);
        KoszulChain& operator*=(const Integer& scalar);

        friend KoszulChain operator+(KoszulChain a, const KoszulChain& b) { return a += b; }
        friend KoszulChain operator-(KoszulChain a, const KoszulChain& b) { return a -= b; }
        friend KoszulChain operator-(KoszulChain a) { return a *= Integer(-1); }
        friend KoszulChain operator*(const Integer& s, KoszulChain a) { return a *= s; }

        friend bool operator==(const KoszulChain&, const KoszulChain&) = default;

        /// Terms sorted by word, e.g. "D1S2 + S1D2", "-S1S2", "2*D1 - S1";
        /// "0" for the zero chain.
        std::string to_string() const;

    private:
        Terms terms_;
};

/**
 * Parse a chain written in S/D letters, e.g.
 * "S5S4(D1D2S3 + D1S2D3 + S1D2D3)" or "(D1S2+S1D2)(D3D4S5 + D3S4D5 + S3D4D5)".
 * Juxtaposition is the (sign-aware) product, so "S2S1" == -"S1S2".
 * Throws ParseError, or OverlappingSupport for a product reusing a vertex.
 */
KoszulChain parse_chain(std::string_view text);

/// ∂ applied symbolically.
KoszulChain koszul_boundary(const KoszulChain& c);

/// Every term's D-part is a face of K (so the chain lies in R_*(K)).
bool lies_in(const KoszulChain& c, const SimplicialComplex& k);

/// Product of chains with disjoint supports; odd letters anticommute.
/// Throws OverlappingSupport.
KoszulChain multiply(const KoszulChain& a, const KoszulChain& b);

/// Sign of the shuffle taking (L ascending, J∖L ascending) to J ascending.
/// Throws LNotInJ unless L ⊆ J.
int shuffle_sign(VertexSet l, VertexSet j);

/// The chain-level map C_{p-1}(K_J) -> R_{p+|J|}(K), L ↦ ε(L,J) u_{J∖L} v_L.
/// Throws NotAFace if a simplex of z is not a face of K_J.
KoszulChain hochster_chain(const SimplicialComplex& k, VertexSet j, const SimplicialChain& z);

/// R_*(K), or one support block of it, with its monomial bases.
struct KoszulComplex
{
    GradedChainComplex chains;
    std::map<int, std::vector<KoszulMonomial>> basis;

    /// Coefficient vector of a chain homogeneous of the given degree.
    /// Throws NotAFace if a term is not a basis monomial.
    IntVector to_vector(const KoszulChain& c, int degree) const;
    KoszulChain from_vector(const IntVector& v, int degree) const;
};

KoszulComplex koszul_complex(const SimplicialComplex& k);

/// The summand of R_*(K) spanned by monomials with support exactly T.
KoszulComplex koszul_block(const SimplicialComplex& k, VertexSet support);

/// H_*(Z_K) from the full Koszul complex, degree 0 (the basepoint class)
/// included.
GradedHomology zk_homology(const SimplicialComplex& k);

/// The same groups, summed over the support blocks of R_*(K).
GradedHomology zk_homology_by_blocks(const SimplicialComplex& k);

/// Drop degree 0.
GradedHomology reduced_part(const GradedHomology& h);

/**
 * Homology bases of one support block, for reading off classes of chains
 * supported on T.
 */
class BlockHomology
{
    public:
        BlockHomology(const SimplicialComplex& k, VertexSet support);

        VertexSet support() const { return support_; }
        const KoszulComplex& complex() const { return complex_; }
        GradedHomology homology() const;
        /// Throws if the block has no basis in that degree.
        const HomologyBasis& basis(int degree) const;

        /// Class of a cycle supported on T.  Throws NotAFace if a term is
        /// outside R_*(K), NotACycle if ∂c != 0.
        ClassCoordinates class_of(const KoszulChain& c) const;

    private:
        VertexSet support_;
        KoszulComplex complex_;
        std::map<int, HomologyBasis> bases_;
};

struct HochsterSummand
{
    VertexSet j;
    GradedHomology groups;   // reduced homology of K_J, simplicial degrees
    std::map<int, std::vector<SimplicialChain>> representatives;   // free, then torsion

    /// Degree in H_*(Z_K) receiving simplicial degree q.
    int shifted(int q) const { return q + 1 + j.size(); }
};

struct HochsterDecomposition
{
    std::vector<HochsterSummand> summands;   // nonzero only, ascending J
    GradedHomology totals;                   // degree 0 included
};

HochsterDecomposition hochster_decomposition(const SimplicialComplex& k);

struct HochsterCheck
{
    bool pass = true;
    std::string discrepancy;   // first failure, empty on success
};

/// Cross-check zk_homology against the Hochster totals, and every Hochster
/// image of a representative cycle against the Koszul cycle condition and
/// a nonzero class.
HochsterCheck verify_hochster(const SimplicialComplex& k);

}   // namespace zk

#endif
