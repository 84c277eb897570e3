/**
 * JSON documents: complex files and machine-readable reports.
 *
 * Complex file:  {"m": 5, "maximal_faces": [[1,2],[1,3,4], ...]}
 */
#ifndef ZK_IO_HPP
#define ZK_IO_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "zk/complex.hpp"
#include "zk/homology.hpp"
#include "zk/momentangle.hpp"
#include "zk/whitehead.hpp"

namespace zk {

using Json = nlohmann::ordered_json;

/// Throws InvalidDocument for malformed JSON or missing/mistyped fields,
/// InvalidVertex for out-of-range vertices.
SimplicialComplex parse_complex_document(std::string_view text);
SimplicialComplex read_complex_file(const std::string& path);

/// Maximal faces sorted lexicographically.
Json complex_document(const SimplicialComplex& k);

Json to_json(VertexSet s);
Json to_json(const Integer& x);
/// [{"degree": d, "rank": r, "torsion": [...]}, ...]
Json to_json(const GradedHomology& h);
Json to_json(const KoszulChain& c);
Json to_json(const EvidenceReport& r);

}   // namespace zk

#endif
