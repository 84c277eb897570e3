/**
 * End-to-end checks on the built-in complexes, shared by `verify-paper`.
 * Each check takes its complex as an argument so a perturbed fixture can be
 * fed through the same code.
 */
#ifndef ZK_REFERENCE_HPP
#define ZK_REFERENCE_HPP

#include <map>
#include <string>
#include <vector>

#include "zk/complex.hpp"
#include "zk/fixtures.hpp"
#include "zk/homology.hpp"

namespace zk::reference {

struct CheckResult
{
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Reduced groups are free of the given ranks and vanish elsewhere.
bool free_ranks_are(const GradedHomology& reduced, const std::map<int, Index>& ranks, std::string& detail);

/// Each row's product is defined in K, its Hurewicz chain is a cycle equal
/// to ± the row's chain, and together the products form a basis.
bool generator_rows_hold(const SimplicialComplex& k, const std::vector<fixtures::GeneratorRow>& rows, std::string& detail);

CheckResult check_j1_sphere_homology(const SimplicialComplex& k);
CheckResult check_j1_sphere_generators(const SimplicialComplex& k);
CheckResult check_j1_sphere_hochster(const SimplicialComplex& k);
CheckResult check_j1_sphere_with_triangle(const SimplicialComplex& l);
CheckResult check_two_triangle_homology(const SimplicialComplex& k);
CheckResult check_two_triangle_combinatorics(const SimplicialComplex& k);
CheckResult check_unrealizable(const SimplicialComplex& k);
CheckResult check_sphere_series();
CheckResult check_minimal_complex();
CheckResult check_wdelta_tables();

/// Every check on the built-in fixtures, in a fixed order.
std::vector<CheckResult> run_reference_checks();

}   // namespace zk::reference

#endif
