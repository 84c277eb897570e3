/**
 * Finite simplicial complexes on the vertex set {1, ..., m}.
 *
 * Faces are stored explicitly as 64-bit vertex masks (vertex v <-> bit v-1),
 * which caps m at 63.  Vertex indices are 1-based everywhere in the public
 * interface.
 */
#ifndef ZK_COMPLEX_HPP
#define ZK_COMPLEX_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace zk {

inline constexpr int kMaxVertices = 63;

/**
 * A subset of {1, ..., 63}.  Iteration and members() are ascending.
 */
class VertexSet
{
    public:
        constexpr VertexSet() = default;
        VertexSet(std::initializer_list<int> vertices);
        explicit VertexSet(const std::vector<int>& vertices);

        static constexpr VertexSet from_bits(std::uint64_t bits)
        {
            VertexSet s;
            s.bits_ = bits;
            return s;
        }

        /// {first, first+1, ..., last}; empty if last < first.
        static VertexSet range(int first, int last);

        constexpr std::uint64_t bits() const { return bits_; }
        constexpr bool empty() const { return bits_ == 0; }
        constexpr int size() const { return std::popcount(bits_); }
        constexpr bool contains(int v) const
        {
            return v >= 1 && v <= kMaxVertices && ((bits_ >> (v - 1)) & 1U);
        }
        constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
        constexpr bool disjoint_from(VertexSet other) const { return (bits_ & other.bits_) == 0; }

        /// Largest member, or 0 when empty.
        constexpr int max_vertex() const { return 64 - std::countl_zero(bits_); }
        /// Smallest member, or 0 when empty.
        constexpr int min_vertex() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }

        VertexSet& insert(int v);
        VertexSet& erase(int v);

        std::vector<int> members() const;

        /// Number of members strictly smaller than v.
        constexpr int count_below(int v) const
        {
            return v <= 1 ? 0 : std::popcount(bits_ & ((std::uint64_t{1} << (v - 1)) - 1));
        }

        /// Shift every member up by k.
        VertexSet shifted(int k) const;

        friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return from_bits(a.bits_ | b.bits_); }
        friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return from_bits(a.bits_ & b.bits_); }
        friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return from_bits(a.bits_ & ~b.bits_); }

        friend constexpr bool operator==(VertexSet a, VertexSet b) = default;
        /// Order by bit pattern; used for map keys, not for printing.
        friend constexpr auto operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

        /// "{1,3,4}"
        std::string to_string() const;

        class iterator
        {
            public:
                using value_type = int;
                using difference_type = std::ptrdiff_t;

                constexpr iterator() = default;
                constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
                constexpr int operator*() const { return std::countr_zero(rest_) + 1; }
                constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
                constexpr iterator operator++(int) { iterator t = *this; ++*this; return t; }
                constexpr bool operator==(const iterator&) const = default;

            private:
                std::uint64_t rest_ = 0;
        };

        constexpr iterator begin() const { return iterator(bits_); }
        constexpr iterator end() const { return iterator(0); }

    private:
        std::uint64_t bits_ = 0;
};

/// Lexicographic comparison of the ascending member lists, the order used
/// when writing faces.
bool lex_less(VertexSet a, VertexSet b);

/// All subsets of s, in increasing bit order (so every subset precedes its
/// supersets).
std::vector<VertexSet> subsets_of(VertexSet s);

/**
 * Injective partial map between vertex labels.  image(v) == 0 means v is
 * not in the domain.
 */
class VertexMap
{
    public:
        VertexMap() = default;

        static VertexMap identity(VertexSet domain);
        /// Throws InvalidVertex if two sources share a target or a label is
        /// outside 1..63.
        static VertexMap from_pairs(const std::vector<std::pair<int, int>>& pairs);

        void set(int source, int target);
        int image(int source) const;
        VertexSet domain() const;
        VertexSet codomain() const;

        /// Image of a vertex set; throws InvalidVertex if some member is not
        /// in the domain.
        VertexSet apply(VertexSet s) const;

    private:
        std::vector<int> targets_;   // indexed by source vertex
};

class SimplicialComplex
{
    public:
        /// The complex {∅} on m vertices, all of them ghosts.
        explicit SimplicialComplex(int m = 0);

        /// Build from an explicit face list, which must already be closed
        /// under subsets and contain ∅.
        static SimplicialComplex from_faces(int m, std::vector<VertexSet> faces);

        int vertex_count() const { return m_; }
        const std::vector<VertexSet>& faces() const { return faces_; }
        std::size_t face_count() const { return faces_.size(); }

        bool contains(VertexSet face) const;
        /// Vertices v with {v} a face (ghost vertices excluded).
        VertexSet vertices() const;
        /// Maximum face dimension, -1 for {∅}.
        int dimension() const;
        std::vector<VertexSet> maximal_faces() const;
        /// Faces of a given size, lexicographic order.
        std::vector<VertexSet> faces_of_size(int size) const;

        friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

    private:
        SimplicialComplex(int m, std::vector<VertexSet> sorted_faces, bool);

        int m_ = 0;
        std::vector<VertexSet> faces_;   // sorted by bit pattern
};

/// Downward closure of the listed faces plus ∅.
SimplicialComplex from_maximal_faces(int m, const std::vector<VertexSet>& maximal);

SimplicialComplex simplex(VertexSet s, int m);
SimplicialComplex boundary_simplex(VertexSet s, int m);

/// K_J: faces of K contained in J.  Vertex labels are preserved (the result
/// lives on the same [m]); the map back to K is the identity on J.
SimplicialComplex full_subcomplex(const SimplicialComplex& k, VertexSet j);

/// Join with K2 relabeled above K1 (vertex v of K2 becomes m1 + v).
SimplicialComplex join(const SimplicialComplex& k1, const SimplicialComplex& k2);

/// Join of two complexes on the same [m] whose vertex supports are disjoint;
/// labels are kept.
SimplicialComplex labeled_join(const SimplicialComplex& k1, const SimplicialComplex& k2);

/// Union of two complexes on the same [m].
SimplicialComplex complex_union(const SimplicialComplex& k1, const SimplicialComplex& k2);

/**
 * K1 ∪_I K2.  phi maps a face I of K1 (its domain) onto a face of K2.  K1
 * keeps labels 1..m1; vertices of K2 outside phi's image are numbered
 * m1+1, m1+2, ... in ascending order; identified vertices take K1's label.
 */
SimplicialComplex glue(const SimplicialComplex& k1, const SimplicialComplex& k2, const VertexMap& phi);

/**
 * J_n(K) = (∂Δ^n * K) ∪ Δ^n.  The new simplex takes labels 1..n+1 and K's
 * vertices are shifted up by n+1.
 */
SimplicialComplex j_operation(int n, const SimplicialComplex& k);

SimplicialComplex skeleton(const SimplicialComplex& k, int d);

/// Remove one face (which must be maximal) from K.
SimplicialComplex remove_maximal_face(const SimplicialComplex& k, VertexSet face);

/// Move K onto m' vertices through phi (which must be defined on every
/// vertex appearing in a face).
SimplicialComplex relabel(const SimplicialComplex& k, const VertexMap& phi, int target_m);

struct InclusionResult
{
    bool included = true;
    /// A face of L whose image is missing from K, minimal among such faces;
    /// given in K's labels.
    std::optional<VertexSet> missing_face;
};

/// Is phi(σ) ∈ K for every σ ∈ L?
InclusionResult contains_labeled(const SimplicialComplex& k, const SimplicialComplex& l, const VertexMap& phi);

/// contains_labeled with the identity map on L's vertex labels.
InclusionResult contains_labeled(const SimplicialComplex& k, const SimplicialComplex& l);

}   // namespace zk

#endif
