#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "zk/error.hpp"
#include "zk/fixtures.hpp"
#include "zk/homology.hpp"

using namespace zk;

namespace {

GradedHomology free_in(int degree, Index rank)
{
    return {{degree, HomologyGroup{rank, {}}}};
}

// Betti numbers from ranks of the boundary matrices alone.
std::map<int, Index> betti_oracle(const GradedChainComplex& c)
{
    std::map<int, Index> out;
    for (int d = c.min_degree(); d <= c.max_degree(); ++d)
    {
        const auto in = oracle::rank(oracle::table_of(c.boundary(d)));
        const auto next = oracle::rank(oracle::table_of(c.boundary(d + 1)));
        const Index b = c.dim(d) - static_cast<Index>(in) - static_cast<Index>(next);
        if (b)
            out[d] = b;
    }
    return out;
}

}   // namespace

TEST_CASE("group formatting and sums")
{
    CHECK(HomologyGroup{}.to_string() == "0");
    CHECK(HomologyGroup{3, {2}}.to_string() == "Z^3 + Z/2");
    CHECK(direct_sum(HomologyGroup{1, {2}}, HomologyGroup{0, {3}}) == HomologyGroup{1, {6}});
    CHECK(direct_sum(HomologyGroup{0, {2}}, HomologyGroup{2, {2}}) == HomologyGroup{2, {2, 2}});
}

TEST_CASE("reduced homology of small complexes")
{
    CHECK(reduced_simplicial_homology(SimplicialComplex(3)) == free_in(-1, 1));
    CHECK(reduced_simplicial_homology(simplex({1, 2, 3}, 3)).empty());
    CHECK(reduced_simplicial_homology(from_maximal_faces(2, {{1}, {2}})) == free_in(0, 1));
    for (int m = 2; m <= 6; ++m)
        CHECK(reduced_simplicial_homology(boundary_simplex(VertexSet::range(1, m), m)) == free_in(m - 2, 1));
    // A 2-sphere with one extra edge through it.
    CHECK(reduced_simplicial_homology(fixtures::j1_sphere()) == GradedHomology{{1, {1, {}}}, {2, {1, {}}}});
}

TEST_CASE("RP2 has 2-torsion in degree 1")
{
    SimplicialComplex rp2 = fixtures::rp2_6();
    CHECK(rp2.faces_of_size(3).size() == 10);
    CHECK(rp2.faces_of_size(2).size() == 15);
    GradedHomology h = reduced_simplicial_homology(rp2);
    CHECK(h == GradedHomology{{1, HomologyGroup{0, {2}}}});

    // Torsion of H_1 = invariant factors of ∂_2 other than 1, from minors.
    SimplicialChainComplex c = simplicial_chain_complex(rp2);
    auto factors = oracle::invariant_factors(oracle::table_of(c.chains.boundary(2)));
    REQUIRE(factors.size() == 10);
    CHECK(factors.back() == 2);
    CHECK(std::count(factors.begin(), factors.end(), oracle::Big(1)) == 9);
}

TEST_CASE("chain complex checks")
{
    GradedChainComplex c(0, {1, 1});
    c.boundary_ref(1)(0, 0) = 2;
    CHECK(homology_of(c) == GradedHomology{{0, HomologyGroup{0, {2}}}});

    GradedChainComplex bad(0, {1, 1, 1});
    bad.boundary_ref(1)(0, 0) = 1;
    bad.boundary_ref(2)(0, 0) = 1;
    CHECK_FALSE(bad.is_complex());
    CHECK_THROWS_AS(homology_of(bad), Error);
    CHECK(c.boundary(5).rows() == 0);
}

TEST_CASE("random complexes: ranks, Euler characteristic and ∂∂ = 0")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial)
    {
        SimplicialComplex k = oracle::random_complex(rng, 2 + trial % 6, trial % 2);
        SimplicialChainComplex c = simplicial_chain_complex(k);
        REQUIRE(c.chains.is_complex());
        GradedHomology h = homology_of(c.chains);
        CHECK(h == reduced_simplicial_homology(k));

        std::map<int, Index> ranks;
        for (const auto& [d, g] : h)
            if (g.rank)
                ranks[d] = g.rank;
        CHECK(ranks == betti_oracle(c.chains));
        CHECK(euler_characteristic(h) == c.chains.euler_characteristic());

        for (const auto& [d, faces] : c.basis)
            for (VertexSet f : faces)
            {
                SimplicialChain z{{f, 1}};
                SimplicialChain bz = simplicial_boundary(z);
                CHECK(simplicial_boundary(bz).empty());
                CHECK(c.to_vector(bz, d - 1) == product(c.chains.boundary(d), c.to_vector(z, d)));
            }
    }
}

TEST_CASE("class coordinates")
{
    SimplicialComplex k = from_maximal_faces(4, {{1, 2}, {2, 3}, {1, 3}, {3, 4}});
    SimplicialChainComplex c = simplicial_chain_complex(k);
    HomologyBasis b(c.chains, 1);
    REQUIRE(b.group() == HomologyGroup{1, {}});

    SimplicialChain loop{{{1, 2}, 1}, {{2, 3}, 1}, {{1, 3}, -1}};
    IntVector z = c.to_vector(loop, 1);
    ClassCoordinates x = b.coordinates(z);
    REQUIRE(x.free.size() == 1);
    CHECK(abs(x.free[0]) == Integer(1));
    CHECK(x.is_primitive());

    ClassCoordinates twice = b.coordinates(IntVector(z * Integer(2)));
    CHECK(twice.free[0] == x.free[0] * Integer(2));
    CHECK_FALSE(twice.is_primitive());

    IntVector not_cycle = c.to_vector(SimplicialChain{{{3, 4}, 1}}, 1);
    CHECK_THROWS_AS(b.coordinates(not_cycle), Error);

    for (const IntVector& g : b.free_generators())
        CHECK(b.coordinates(g).free == std::vector<Integer>{1});

    SimplicialComplex rp2 = fixtures::rp2_6();
    SimplicialChainComplex r = simplicial_chain_complex(rp2);
    HomologyBasis t(r.chains, 1);
    REQUIRE(t.torsion_generators().size() == 1);
    ClassCoordinates tc = t.coordinates(t.torsion_generators()[0]);
    CHECK(tc.free.empty());
    CHECK(tc.torsion == std::vector<Integer>{1});
    CHECK(t.coordinates(IntVector(t.torsion_generators()[0] * Integer(2))).is_zero());
}
