#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "zk/error.hpp"
#include "zk/fixtures.hpp"
#include "zk/momentangle.hpp"

using namespace zk;

namespace {

KoszulChain c(const char* text) { return parse_chain(text); }

KoszulMonomial mono(VertexSet odd, VertexSet even) { return {odd, even}; }

// Ranks of H_*(Z_K) from Bareiss ranks of the simplicial boundaries of
// every full subcomplex, shifted by |J| + 1.
std::map<int, Index> hochster_ranks(const SimplicialComplex& k)
{
    std::map<int, Index> out{{0, 1}};
    const int m = k.vertex_count();
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << m); ++bits)
    {
        VertexSet j = VertexSet::from_bits(bits);
        SimplicialChainComplex cc = simplicial_chain_complex(full_subcomplex(k, j));
        for (int q = cc.chains.min_degree(); q <= cc.chains.max_degree(); ++q)
        {
            const auto in = oracle::rank(oracle::table_of(cc.chains.boundary(q)));
            const auto next = oracle::rank(oracle::table_of(cc.chains.boundary(q + 1)));
            const Index b = cc.chains.dim(q) - static_cast<Index>(in + next);
            if (b)
                out[q + 1 + j.size()] += b;
        }
    }
    return out;
}

std::map<int, Index> ranks_of(const GradedHomology& h)
{
    std::map<int, Index> out;
    for (const auto& [d, g] : h)
        if (g.rank)
            out[d] = g.rank;
    return out;
}

}   // namespace

TEST_CASE("chain arithmetic and printing")
{
    KoszulChain x = c("2D1 - S1");
    CHECK(x.to_string() == "2*D1 - S1");
    CHECK_FALSE(x.degree());
    CHECK(c("D1S2 + S1D2").degree() == 3);
    CHECK((x - x).is_zero());
    CHECK(KoszulChain().to_string() == "0");
    CHECK(c("S2S1") == -c("S1S2"));
    CHECK(c("S1S2").to_string() == "S1S2");
    CHECK(c("D2D1") == c("D1D2"));
    CHECK(c("S1D2").coefficient(mono({1}, {2})) == Integer(1));
}

TEST_CASE("chain parser errors")
{
    CHECK_THROWS_AS(c("S1 +"), ParseError);
    CHECK_THROWS_AS(c("X1"), ParseError);
    CHECK_THROWS_AS(c("(S1"), ParseError);
    CHECK_THROWS_AS(c("S"), ParseError);
    try
    {
        c("S1 + Q2");
        FAIL("no error");
    }
    catch (const ParseError& e)
    {
        CHECK(e.position() == 5);
    }
    CHECK_THROWS_MATCHES(c("S1D1"), Error,
                         Catch::Matchers::Predicate<const Error&>([](const Error& e) { return e.kind() == ErrorKind::OverlappingSupport; }));
}

TEST_CASE("Koszul differential")
{
    CHECK(koszul_boundary(c("D1D2")) == c("S1D2 + D1S2"));
    CHECK(koszul_boundary(c("S1D2")) == -c("S1S2"));
    CHECK(koszul_boundary(c("D1")) == c("S1"));
    CHECK(koszul_boundary(c("S1S2S3")).is_zero());
    CHECK(koszul_boundary(koszul_boundary(c("D1D2D3D4"))).is_zero());

    // Leibniz rule with the Koszul sign.
    std::vector<KoszulChain> left{c("D1"), c("S1"), c("D1S2"), c("S1S2"), c("D1D2 - S1S2D7")};
    std::vector<KoszulChain> right{c("D5"), c("S4D5"), c("D3D4"), c("S3S4S5")};
    for (const auto& a : left)
        for (const auto& b : right)
        {
            const int sign = *a.degree() % 2 ? -1 : 1;
            KoszulChain expected = multiply(koszul_boundary(a), b) + Integer(sign) * multiply(a, koszul_boundary(b));
            CHECK(koszul_boundary(multiply(a, b)) == expected);
        }
}

TEST_CASE("products of chains")
{
    CHECK(multiply(c("S1"), c("S2")) == c("S1S2"));
    CHECK(multiply(c("S2"), c("S1")) == -c("S1S2"));
    CHECK(multiply(c("D1"), c("S2")) == multiply(c("S2"), c("D1")));
    CHECK_THROWS_AS(multiply(c("S1"), c("D1")), Error);

    KoszulChain p = c("(D1S2+S1D2)(D3D4S5 + D3S4D5 + S3D4D5)");
    CHECK(p.terms().size() == 6);
    CHECK(p.degree() == 8);
    CHECK(p == multiply(c("D1S2+S1D2"), c("D3D4S5 + D3S4D5 + S3D4D5")));
    for (const auto& [m, x] : p.terms())
        CHECK(abs(x) == Integer(1));
    CHECK(koszul_boundary(p).is_zero());
}

TEST_CASE("shuffle signs")
{
    CHECK(shuffle_sign({1}, {1, 2}) == 1);
    CHECK(shuffle_sign({2}, {1, 2}) == -1);
    CHECK(shuffle_sign({}, {1, 2, 3}) == 1);
    CHECK(shuffle_sign({1, 2, 3}, {1, 2, 3}) == 1);
    CHECK(shuffle_sign({3}, {1, 2, 3}) == 1);
    CHECK(shuffle_sign({2, 3}, {1, 2, 3}) == 1);
    CHECK(shuffle_sign({1, 3}, {1, 2, 3}) == -1);
    CHECK_THROWS_AS(shuffle_sign({4}, {1, 2}), Error);

    // Against an explicit inversion count.
    for (std::uint64_t jb = 0; jb < 64; ++jb)
        for (std::uint64_t lb = jb;; lb = (lb - 1) & jb)
        {
            VertexSet j = VertexSet::from_bits(jb), l = VertexSet::from_bits(lb);
            std::vector<int> word = l.members();
            for (int v : (j - l).members())
                word.push_back(v);
            int inversions = 0;
            for (std::size_t a = 0; a < word.size(); ++a)
                for (std::size_t b = a + 1; b < word.size(); ++b)
                    inversions += word[a] > word[b];
            CHECK(shuffle_sign(l, j) == (inversions % 2 ? -1 : 1));
            if (lb == 0)
                break;
        }
}

TEST_CASE("Hochster chains")
{
    SimplicialComplex two_points = from_maximal_faces(2, {{1}, {2}});
    SimplicialChain z{{{2}, 1}, {{1}, -1}};
    KoszulChain h = hochster_chain(two_points, {1, 2}, z);
    CHECK(h == -c("S1D2") - c("D1S2"));
    CHECK(koszul_boundary(h).is_zero());
    CHECK(lies_in(h, two_points));

    SimplicialChain empty{{VertexSet{}, 1}};
    CHECK(hochster_chain(two_points, {}, empty) == KoszulChain(KoszulMonomial{}));
    CHECK(hochster_chain(boundary_simplex({1, 2}, 2), {1}, SimplicialChain{{VertexSet{}, 1}}) == c("S1"));
    CHECK_THROWS_AS(hochster_chain(two_points, {1, 2}, SimplicialChain{{{1, 2}, 1}}), Error);
}

TEST_CASE("homology of Z_K")
{
    SimplicialComplex two_points = from_maximal_faces(2, {{1}, {2}});
    CHECK(zk_homology(two_points) == GradedHomology{{0, {1, {}}}, {3, {1, {}}}});
    CHECK(reduced_part(zk_homology(simplex({1, 2, 3}, 3))).empty());

    for (int m = 2; m <= 5; ++m)
        CHECK(reduced_part(zk_homology(boundary_simplex(VertexSet::range(1, m), m))) ==
              GradedHomology{{2 * m - 1, {1, {}}}});

    // The boundary of a square is the product of two 3-spheres.
    SimplicialComplex square = from_maximal_faces(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    CHECK(reduced_part(zk_homology(square)) == GradedHomology{{3, {2, {}}}, {6, {1, {}}}});

    SimplicialComplex k = fixtures::j1_sphere();
    CHECK(reduced_part(zk_homology(k)) == GradedHomology{{5, {4, {}}}, {6, {3, {}}}, {7, {1, {}}}, {8, {1, {}}}});
}

TEST_CASE("three routes to H_*(Z_K) agree")
{
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 25; ++trial)
    {
        SimplicialComplex k = oracle::random_complex(rng, 2 + trial % 4, trial % 3 == 0);
        GradedHomology full = zk_homology(k);
        CHECK(full == zk_homology_by_blocks(k));
        CHECK(full == hochster_decomposition(k).totals);
        CHECK(ranks_of(full) == hochster_ranks(k));
        CHECK(verify_hochster(k).pass);
        KoszulComplex r = koszul_complex(k);
        CHECK(r.chains.is_complex());
    }
    SimplicialComplex rp2 = fixtures::rp2_6();
    GradedHomology h = zk_homology(rp2);
    CHECK(h == hochster_decomposition(rp2).totals);
    CHECK(h.at(8).torsion == std::vector<Integer>{2});
}

TEST_CASE("Koszul complex bases")
{
    SimplicialComplex k = fixtures::j1_sphere();
    KoszulComplex r = koszul_complex(k);
    for (const auto& [d, basis] : r.basis)
        for (const KoszulMonomial& m : basis)
        {
            CHECK(m.degree() == d);
            CHECK(k.contains(m.even));
            KoszulChain one(m);
            CHECK(r.from_vector(r.to_vector(one, d), d) == one);
            if (d > r.chains.min_degree())
                CHECK(r.to_vector(koszul_boundary(one), d - 1) == product(r.chains.boundary(d), r.to_vector(one, d)));
        }
    CHECK_THROWS_AS(r.to_vector(c("D1D2D3"), 6), Error);

    KoszulComplex block = koszul_block(k, {1, 2, 3});
    for (const auto& [d, basis] : block.basis)
        for (const KoszulMonomial& m : basis)
            CHECK(m.support() == VertexSet{1, 2, 3});

    BlockHomology b(k, {3, 4, 5});
    CHECK(b.homology() == GradedHomology{{5, {1, {}}}});
    ClassCoordinates x = b.class_of(c("D3D4S5 + D3S4D5 + S3D4D5"));
    CHECK(x.is_primitive());
    CHECK_THROWS_AS(b.class_of(c("D3D4D5")), Error);
}
