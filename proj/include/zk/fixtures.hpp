/**
 * Built-in complexes and their known generator tables.
 */
#ifndef ZK_FIXTURES_HPP
#define ZK_FIXTURES_HPP

#include <string>
#include <vector>

#include "zk/complex.hpp"

namespace zk::fixtures {

/// J_1(∂Δ(3,4,5)) on 5 vertices: the 2-sphere on {1,...,5} with the
/// diameter {1,2}.
SimplicialComplex j1_sphere();

/// j1_sphere() ∪ Δ(1,2,3).
SimplicialComplex j1_sphere_with_triangle();

/// (∂Δ(1,2,3) * ∂Δ(4,5,6)) ∪ Δ(1,2,3) ∪ Δ(4,5,6).
SimplicialComplex two_triangle_join();

/// The 6-vertex minimal triangulation of RP².
SimplicialComplex rp2_6();

struct GeneratorRow
{
    int degree;
    std::string chain;     // as printed in the table, letters S<i>, D<i>
    std::string product;   // bracket expression
};

/// H_*(Z_K) generators for j1_sphere(), nine rows.
const std::vector<GeneratorRow>& j1_sphere_generators();

/// H_*(Z_L) generators for j1_sphere_with_triangle(), five rows.
const std::vector<GeneratorRow>& j1_sphere_with_triangle_generators();

}   // namespace zk::fixtures

#endif
