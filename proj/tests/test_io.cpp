#include <catch2/catch_amalgamated.hpp>

#include "zk/error.hpp"
#include "zk/fixtures.hpp"
#include "zk/io.hpp"

using namespace zk;

namespace {

ErrorKind kind_of(const char* text)
{
    try
    {
        parse_complex_document(text);
    }
    catch (const Error& e)
    {
        return e.kind();
    }
    return ErrorKind::InternalInvariant;
}

}   // namespace

TEST_CASE("complex documents round-trip")
{
    for (const SimplicialComplex& k : {fixtures::j1_sphere(), fixtures::two_triangle_join(), fixtures::rp2_6(), SimplicialComplex(4)})
        CHECK(parse_complex_document(complex_document(k).dump()) == k);

    SimplicialComplex k = parse_complex_document(R"({"m": 3, "maximal_faces": [[1,2],[2,3],[1,3]]})");
    CHECK(k == boundary_simplex({1, 2, 3}, 3));
    CHECK(complex_document(k).dump() == R"({"m":3,"maximal_faces":[[1,2],[1,3],[2,3]]})");
}

TEST_CASE("malformed documents")
{
    CHECK(kind_of("{") == ErrorKind::InvalidDocument);
    CHECK(kind_of("[]") == ErrorKind::InvalidDocument);
    CHECK(kind_of(R"({"m": 3})") == ErrorKind::InvalidDocument);
    CHECK(kind_of(R"({"m": "3", "maximal_faces": []})") == ErrorKind::InvalidDocument);
    CHECK(kind_of(R"({"m": 3, "maximal_faces": [1, 2]})") == ErrorKind::InvalidDocument);
    CHECK(kind_of(R"({"m": 3, "maximal_faces": [[1, "2"]]})") == ErrorKind::InvalidDocument);
    CHECK(kind_of(R"({"m": 64, "maximal_faces": []})") == ErrorKind::InvalidDocument);
    CHECK(kind_of(R"({"m": 3, "maximal_faces": [[1, 4]]})") == ErrorKind::InvalidVertex);
    CHECK(kind_of(R"({"m": 3, "maximal_faces": [[0]]})") == ErrorKind::InvalidVertex);
    CHECK_THROWS_AS(read_complex_file("/nonexistent/complex.json"), Error);
}

TEST_CASE("report serialization")
{
    GradedHomology h{{1, HomologyGroup{0, {2}}}, {3, HomologyGroup{2, {}}}};
    CHECK(to_json(h).dump() == R"([{"degree":1,"rank":0,"torsion":[2]},{"degree":3,"rank":2,"torsion":[]}])");

    CHECK(to_json(Integer(-7)).dump() == "-7");
    CHECK(to_json(Integer("123456789012345678901234567890")).dump() == R"("123456789012345678901234567890")");
    CHECK(to_json(VertexSet{2, 5}).dump() == "[2,5]");

    Json chain = to_json(parse_chain("S1D2 - 2S2D1"));
    CHECK(chain["degree"] == 3);
    CHECK(chain["terms"].size() == 2);
    CHECK(chain["terms"][0]["word"] == "D1S2");
    CHECK(chain["terms"][0]["coefficient"] == -2);
    CHECK(to_json(KoszulChain())["degree"].is_null());

    Json report = to_json(is_defined(parse_expr("[1,[2,3,4,5,6]]"), fixtures::two_triangle_join()));
    CHECK(report["verdict"] == "UNDEFINED");
    CHECK(report["missing_face"].is_array());
    CHECK(report["extrapolated"] == false);
}
