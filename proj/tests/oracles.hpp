// Independent reference computations for the tests.  Nothing here calls
// into the library's matrix or homology code: determinants are Bareiss on
// plain cpp_int tables, complexes are enumerated subset by subset.
#ifndef ZK_TEST_ORACLES_HPP
#define ZK_TEST_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "zk/complex.hpp"
#include "zk/matrix.hpp"

namespace oracle {

using Big = boost::multiprecision::cpp_int;
using Table = std::vector<std::vector<Big>>;

inline Table table_of(const zk::IntMatrix& m)
{
    Table t(m.rows(), std::vector<Big>(m.cols()));
    for (zk::Index i = 0; i < m.rows(); ++i)
        for (zk::Index j = 0; j < m.cols(); ++j)
            t[i][j] = Big(m(i, j).str());
    return t;
}

// Fraction-free elimination; returns the rank and, for square input, the
// determinant through det.
inline std::size_t bareiss(Table a, Big* det = nullptr)
{
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    Big prev = 1;
    int sign = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c)
    {
        std::size_t p = rank;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        if (p != rank)
        {
            std::swap(a[p], a[rank]);
            sign = -sign;
        }
        for (std::size_t i = rank + 1; i < rows; ++i)
        {
            for (std::size_t j = c + 1; j < cols; ++j)
                a[i][j] = (a[i][j] * a[rank][c] - a[i][c] * a[rank][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[rank][c];
        ++rank;
    }
    if (det)
        *det = (rows == cols && rank == rows) ? Big(sign) * prev : Big(0);
    return rank;
}

inline Big determinant(const Table& a)
{
    if (a.empty())
        return 1;
    Big d;
    bareiss(a, &d);
    return d;
}

inline std::size_t rank(const Table& a)
{
    return a.empty() ? 0 : bareiss(a);
}

// k-subsets of {0..n-1}
inline std::vector<std::vector<std::size_t>> choose(std::size_t n, std::size_t k)
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> pick(n, false);
    std::fill(pick.end() - static_cast<long>(k), pick.end(), true);
    do
    {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i)
            if (pick[i])
                s.push_back(i);
        out.push_back(s);
    } while (std::next_permutation(pick.begin(), pick.end()));
    return out;
}

inline Big minor_gcd(const Table& a, std::size_t k)
{
    const std::size_t rows = a.size(), cols = a[0].size();
    Big g = 0;
    for (const auto& r : choose(rows, k))
        for (const auto& c : choose(cols, k))
        {
            Table sub(k, std::vector<Big>(k));
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    sub[i][j] = a[r[i]][c[j]];
            g = boost::multiprecision::gcd(g, determinant(sub));
            if (g == 1)
                return g;
        }
    return abs(g);
}

// Invariant factors from determinantal divisors d_k = gcd of k×k minors.
inline std::vector<Big> invariant_factors(const Table& a)
{
    std::vector<Big> out;
    if (a.empty() || a[0].empty())
        return out;
    Big previous = 1;
    const std::size_t top = std::min(a.size(), a[0].size());
    for (std::size_t k = 1; k <= top; ++k)
    {
        Big d = minor_gcd(a, k);
        if (d == 0)
            break;
        out.push_back(d / previous);
        previous = d;
    }
    return out;
}

// Faces of the downward closure, found by testing every subset of [m].
inline std::set<std::uint64_t> closure(int m, const std::vector<zk::VertexSet>& maximal)
{
    std::set<std::uint64_t> faces;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s)
        for (zk::VertexSet f : maximal)
            if ((s & ~f.bits()) == 0)
            {
                faces.insert(s);
                break;
            }
    faces.insert(0);
    return faces;
}

inline std::set<std::uint64_t> face_bits(const zk::SimplicialComplex& k)
{
    std::set<std::uint64_t> out;
    for (zk::VertexSet f : k.faces())
        out.insert(f.bits());
    return out;
}

// Random maximal faces on [m]; every vertex appears as at least a point
// unless allow_ghosts.
inline zk::SimplicialComplex random_complex(std::mt19937_64& rng, int m, bool allow_ghosts = false)
{
    std::uniform_int_distribution<int> count(1, 2 * m);
    std::uniform_int_distribution<std::uint64_t> bits(1, (std::uint64_t{1} << m) - 1);
    std::vector<zk::VertexSet> maximal;
    const int n = count(rng);
    for (int i = 0; i < n; ++i)
    {
        std::uint64_t s = bits(rng);
        while (std::popcount(s) > 4)
            s &= s - 1;
        maximal.push_back(zk::VertexSet::from_bits(s));
    }
    if (!allow_ghosts)
        for (int v = 1; v <= m; ++v)
            maximal.push_back({v});
    return zk::from_maximal_faces(m, maximal);
}

inline zk::IntMatrix random_matrix(std::mt19937_64& rng, int max_size, int bound)
{
    std::uniform_int_distribution<int> size(0, max_size);
    std::uniform_int_distribution<int> entry(-bound, bound);
    std::uniform_int_distribution<int> sparsity(0, 3);
    const int r = size(rng), c = size(rng);
    zk::IntMatrix a(r, c);
    const int zeros = sparsity(rng);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            a(i, j) = sparsity(rng) < zeros ? 0 : entry(rng);
    return a;
}

// Level leaf sets of a random nested product on a shuffled [n], outermost
// first; the innermost level has at least two leaves.
inline std::vector<zk::VertexSet> random_levels(std::mt19937_64& rng, int max_leaves, int max_levels)
{
    std::uniform_int_distribution<int> level_count(1, max_levels);
    const int levels = level_count(rng);
    std::uniform_int_distribution<int> leaf_count(levels + 1, std::max(levels + 1, max_leaves));
    const int n = leaf_count(rng);
    std::vector<int> labels(n);
    for (int i = 0; i < n; ++i)
        labels[i] = i + 1;
    std::shuffle(labels.begin(), labels.end(), rng);

    std::vector<int> sizes(levels, 1);
    sizes.back() = 2;
    for (int extra = n - levels - 1; extra > 0; --extra)
        ++sizes[std::uniform_int_distribution<int>(0, levels - 1)(rng)];
    std::vector<zk::VertexSet> out;
    int next = 0;
    for (int size : sizes)
    {
        zk::VertexSet s;
        for (int i = 0; i < size; ++i)
            s.insert(labels[next++]);
        out.push_back(s);
    }
    return out;
}

}   // namespace oracle

#endif
