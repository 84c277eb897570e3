#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "zk/smith.hpp"

using namespace zk;

namespace {

IntMatrix of(std::initializer_list<std::initializer_list<int>> rows)
{
    const Index r = static_cast<Index>(rows.size());
    const Index c = r ? static_cast<Index>(rows.begin()->size()) : 0;
    IntMatrix m(r, c);
    Index i = 0;
    for (const auto& row : rows)
    {
        Index j = 0;
        for (int x : row)
            m(i, j++) = x;
        ++i;
    }
    return m;
}

bool is_identity(const IntMatrix& m)
{
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j)
            if (m(i, j) != Integer(i == j ? 1 : 0))
                return false;
    return m.rows() == m.cols();
}

oracle::Big big(const Integer& x) { return oracle::Big(x.str()); }

void check_decomposition(const IntMatrix& a)
{
    SmithDecomposition<Integer> s = smith_normal_form(a);
    CHECK(product(product(s.U, a), s.V) == s.D);
    CHECK(is_identity(product(s.U, s.U_inv)));
    CHECK(is_identity(product(s.V, s.V_inv)));
    CHECK(abs(oracle::determinant(oracle::table_of(s.U))) == 1);
    CHECK(abs(oracle::determinant(oracle::table_of(s.V))) == 1);

    for (Index i = 0; i < s.D.rows(); ++i)
        for (Index j = 0; j < s.D.cols(); ++j)
            if (i != j || i >= s.rank())
                CHECK(s.D(i, j).is_zero());
    for (Index i = 0; i < s.rank(); ++i)
    {
        CHECK(s.D(i, i) == s.diagonal[i]);
        CHECK(s.diagonal[i].sign() > 0);
        if (i > 0)
            CHECK((s.diagonal[i] % s.diagonal[i - 1]).is_zero());
    }

    auto table = oracle::table_of(a);
    CHECK(static_cast<std::size_t>(s.rank()) == oracle::rank(table));
    std::vector<oracle::Big> expected = oracle::invariant_factors(table);
    std::vector<oracle::Big> got;
    for (const Integer& d : s.diagonal)
        got.push_back(big(d));
    CHECK(got == expected);
}

}   // namespace

TEST_CASE("small Smith forms")
{
    CHECK(invariant_factors(of({{2, 4}, {6, 8}})) == std::vector<Integer>{2, 4});
    CHECK(invariant_factors(of({{2, 0}, {0, 3}})) == std::vector<Integer>{1, 6});
    CHECK(invariant_factors(of({{0, 0}, {0, 0}})).empty());
    CHECK(invariant_factors(of({{-5}})) == std::vector<Integer>{5});
    CHECK(invariant_factors(of({{4, 6, 10}})) == std::vector<Integer>{2});
    CHECK(invariant_factors(IntMatrix(0, 3)).empty());
    check_decomposition(of({{2, 4}, {6, 8}}));
    check_decomposition(of({{0, 0, 1}, {0, 0, 0}}));
    check_decomposition(IntMatrix(3, 0));
}

TEST_CASE("built-in scalars work as well")
{
    Matrix<long long> a(2, 2);
    a << 2, 4, 6, 8;
    auto s = smith_normal_form(a);
    CHECK(s.diagonal == std::vector<long long>{2, 4});
    CHECK(s.U * a * s.V == s.D);
}

TEST_CASE("random matrices agree with determinantal divisors")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial)
    {
        IntMatrix a = oracle::random_matrix(rng, 5, 9);
        check_decomposition(a);
    }
}

TEST_CASE("entries far beyond 64 bits")
{
    IntMatrix a(2, 2);
    Integer huge("123456789012345678901234567890");
    a << huge, huge * Integer(3), huge * Integer(2), huge * Integer(7);
    check_decomposition(a);
    CHECK(invariant_factors(a) == std::vector<Integer>{huge, huge});
}
