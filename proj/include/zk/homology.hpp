/**
 * Exact integer homology of finite free chain complexes.
 */
#ifndef ZK_HOMOLOGY_HPP
#define ZK_HOMOLOGY_HPP

#include <map>
#include <string>
#include <vector>

#include "zk/complex.hpp"
#include "zk/matrix.hpp"

namespace zk {

/// Z^rank ⊕ Z/d_1 ⊕ ... ⊕ Z/d_k with d_1 | d_2 | ... and every d_i >= 2.
struct HomologyGroup
{
    Index rank = 0;
    std::vector<Integer> torsion;

    bool is_zero() const { return rank == 0 && torsion.empty(); }
    /// "Z^3 + Z/2", "0"
    std::string to_string() const;

    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Direct sum, with the torsion brought back to invariant-factor form.
HomologyGroup direct_sum(const HomologyGroup& a, const HomologyGroup& b);

/// Nonzero homology groups keyed by degree.
using GradedHomology = std::map<int, HomologyGroup>;

/**
 * A finite chain complex of free abelian groups.  Degree d has a basis of
 * size dim(d); boundary(d) is the dim(d-1) x dim(d) matrix of ∂_d.
 */
class GradedChainComplex
{
    public:
        GradedChainComplex() = default;
        /// Degrees min_degree, min_degree+1, ... with the given basis sizes;
        /// all boundaries start at zero.
        GradedChainComplex(int min_degree, std::vector<Index> dims);

        int min_degree() const { return min_degree_; }
        int max_degree() const { return min_degree_ + static_cast<int>(dims_.size()) - 1; }
        Index dim(int degree) const;

        /// ∂_d : C_d -> C_{d-1}.  Out-of-range degrees give empty matrices
        /// of the right shape.
        IntMatrix boundary(int degree) const;
        IntMatrix& boundary_ref(int degree);

        /// ∂_{d-1} ∘ ∂_d == 0 for every d.
        bool is_complex() const;
        /// Σ (-1)^d dim(d).
        Integer euler_characteristic() const;

    private:
        int min_degree_ = 0;
        std::vector<Index> dims_;
        std::vector<IntMatrix> boundaries_;   // boundaries_[k] is ∂ of degree min_degree_ + k
};

/// H_d = ker ∂_d / im ∂_{d+1} for every degree.  Throws NotAComplex if
/// ∂∘∂ != 0.
GradedHomology homology_of(const GradedChainComplex& c);

/// Σ (-1)^d rank H_d.
Integer euler_characteristic(const GradedHomology& h);

/**
 * Coordinates of a homology class: one integer per free generator and one
 * residue in [0, d_i) per torsion generator.
 */
struct ClassCoordinates
{
    std::vector<Integer> free;
    std::vector<Integer> torsion;

    bool is_zero() const;
    /// Free part nonzero with gcd of its coordinates equal to 1.
    bool is_primitive() const;
};

/**
 * Cycle representatives for a basis of H_d, plus what is needed to read off
 * the class of an arbitrary cycle.
 */
class HomologyBasis
{
    public:
        HomologyBasis() = default;
        HomologyBasis(const GradedChainComplex& c, int degree);

        int degree() const { return degree_; }
        const HomologyGroup& group() const { return group_; }
        /// Cycles whose classes form a basis of the free part (modulo torsion).
        const std::vector<IntVector>& free_generators() const { return free_generators_; }
        /// Cycles generating the torsion summands, in the order of group().torsion.
        const std::vector<IntVector>& torsion_generators() const { return torsion_generators_; }

        /// Coordinates of the class of a cycle z of this degree.  Throws
        /// NotACycle if ∂z != 0.
        ClassCoordinates coordinates(const IntVector& z) const;

    private:
        int degree_ = 0;
        HomologyGroup group_;
        IntMatrix outgoing_;          // ∂_degree, for the cycle test
        IntMatrix kernel_coords_;     // rows of V^{-1} selecting kernel coordinates
        IntMatrix quotient_change_;   // P with P·M·Q = diag(e)
        std::vector<Integer> factors_;   // e_1 | e_2 | ... (nonzero)
        std::vector<IntVector> free_generators_;
        std::vector<IntVector> torsion_generators_;
};

/// Coordinates of [z] in the basis B; z must be a cycle of C in B.degree().
ClassCoordinates class_of(const IntVector& z, const GradedChainComplex& c, const HomologyBasis& b);

// ------------------------------------------------------------------------
// Simplicial chains
// ------------------------------------------------------------------------

/// Integer combination of oriented simplices (ascending vertex order).
using SimplicialChain = std::map<VertexSet, Integer>;

/**
 * Augmented simplicial chain complex of K: degree p has the faces with p+1
 * vertices, degree -1 is spanned by ∅.  ∂[v_0 < ... < v_p] =
 * Σ_k (-1)^k [v_0 ... v̂_k ... v_p].
 */
struct SimplicialChainComplex
{
    GradedChainComplex chains;
    std::map<int, std::vector<VertexSet>> basis;   // per degree, lexicographic

    IntVector to_vector(const SimplicialChain& z, int degree) const;
    SimplicialChain from_vector(const IntVector& v, int degree) const;
};

SimplicialChainComplex simplicial_chain_complex(const SimplicialComplex& k);

/// Boundary of a simplicial chain computed symbolically.
SimplicialChain simplicial_boundary(const SimplicialChain& z);

/// Reduced homology, so {∅} has rank 1 in degree -1.
GradedHomology reduced_simplicial_homology(const SimplicialComplex& k);

std::string to_string(const GradedHomology& h);

}   // namespace zk

#endif
