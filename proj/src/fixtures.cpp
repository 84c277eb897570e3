#include "zk/fixtures.hpp"

namespace zk::fixtures {

SimplicialComplex j1_sphere()
{
    return from_maximal_faces(5, {{1, 3, 4}, {1, 3, 5}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}, {2, 4, 5}, {1, 2}});
}

SimplicialComplex j1_sphere_with_triangle()
{
    return complex_union(j1_sphere(), simplex({1, 2, 3}, 5));
}

SimplicialComplex two_triangle_join()
{
    std::vector<VertexSet> maximal{{1, 2, 3}, {4, 5, 6}};
    for (int a = 1; a <= 3; ++a)
        for (int b = a + 1; b <= 3; ++b)
            for (int c = 4; c <= 6; ++c)
                for (int d = c + 1; d <= 6; ++d)
                    maximal.push_back({a, b, c, d});
    return from_maximal_faces(6, maximal);
}

SimplicialComplex rp2_6()
{
    return from_maximal_faces(6, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                                  {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}});
}

const std::vector<GeneratorRow>& j1_sphere_generators()
{
    static const std::vector<GeneratorRow> rows{
        {5, "D3D4S5 + D3S4D5 + S3D4D5", "[3,4,5]"},
        {5, "D1D2S3 + D1S2D3 + S1D2D3", "[1,2,3]"},
        {5, "D1D2S4 + D1S2D4 + S1D2D4", "[1,2,4]"},
        {5, "D1D2S5 + D1S2D5 + S1D2D5", "[1,2,5]"},
        {6, "S4(D1D2S3 + D1S2D3 + S1D2D3)", "[4,[1,2,3]]"},
        {6, "S5(D1D2S3 + D1S2D3 + S1D2D3)", "[5,[1,2,3]]"},
        {6, "S5(D1D2S4 + D1S2D4 + S1D2D4)", "[5,[1,2,4]]"},
        {7, "S5S4(D1D2S3 + D1S2D3 + S1D2D3)", "[4,[5,[1,2,3]]]"},
        {8, "(D1S2+S1D2)(D3D4S5 + D3S4D5 + S3D4D5)", "[1,2,[3,4,5]]"},
    };
    return rows;
}

const std::vector<GeneratorRow>& j1_sphere_with_triangle_generators()
{
    static const std::vector<GeneratorRow> rows{
        {5, "D3D4S5 + D3S4D5 + S3D4D5", "[3,4,5]"},
        {5, "D1D2S4 + D1S2D4 + S1D2D4", "[1,2,4]"},
        {5, "D1D2S5 + D1S2D5 + S1D2D5", "[1,2,5]"},
        {6, "S5(D1D2S4 + D1S2D4 + S1D2D4)", "[5,[1,2,4]]"},
        {8, "(D1S2+S1D2)(D3D4S5 + D3S4D5 + S3D4D5)", "[1,2,[3,4,5]]"},
    };
    return rows;
}

}   // namespace zk::fixtures
