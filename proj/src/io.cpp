#include "zk/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "zk/error.hpp"

namespace zk {

SimplicialComplex parse_complex_document(std::string_view text)
{
    Json doc;
    try
    {
        doc = Json::parse(text);
    }
    catch (const Json::parse_error& e)
    {
        throw Error(ErrorKind::InvalidDocument, e.what());
    }
    if (!doc.is_object() || !doc.contains("m") || !doc.contains("maximal_faces"))
        throw Error(ErrorKind::InvalidDocument, "expected an object with fields \"m\" and \"maximal_faces\"");
    const Json& m = doc["m"];
    if (!m.is_number_integer() || m.get<long long>() < 0 || m.get<long long>() > kMaxVertices)
        throw Error(ErrorKind::InvalidDocument, "\"m\" must be an integer in 0.." + std::to_string(kMaxVertices));
    const Json& faces = doc["maximal_faces"];
    if (!faces.is_array())
        throw Error(ErrorKind::InvalidDocument, "\"maximal_faces\" must be an array");

    const int count = m.get<int>();
    std::vector<VertexSet> maximal;
    for (const Json& face : faces)
    {
        if (!face.is_array())
            throw Error(ErrorKind::InvalidDocument, "each face must be an array of vertices");
        VertexSet s;
        for (const Json& v : face)
        {
            if (!v.is_number_integer())
                throw Error(ErrorKind::InvalidDocument, "vertices must be integers");
            long long x = v.get<long long>();
            if (x < 1 || x > count)
                throw Error(ErrorKind::InvalidVertex, "vertex " + std::to_string(x) + " is outside 1.." + std::to_string(count));
            s.insert(static_cast<int>(x));
        }
        maximal.push_back(s);
    }
    return from_maximal_faces(count, maximal);
}

SimplicialComplex read_complex_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::InvalidDocument, "cannot read " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return parse_complex_document(text.str());
}

Json complex_document(const SimplicialComplex& k)
{
    std::vector<VertexSet> maximal = k.maximal_faces();
    std::sort(maximal.begin(), maximal.end(), lex_less);
    Json faces = Json::array();
    for (VertexSet f : maximal)
        faces.push_back(f.members());
    return Json{{"m", k.vertex_count()}, {"maximal_faces", faces}};
}

Json to_json(VertexSet s)
{
    return s.members();
}

Json to_json(const Integer& x)
{
    if (x.fits_int64())
        return x.to_int64();
    return x.str();
}

Json to_json(const GradedHomology& h)
{
    Json out = Json::array();
    for (const auto& [d, g] : h)
    {
        Json torsion = Json::array();
        for (const Integer& t : g.torsion)
            torsion.push_back(to_json(t));
        out.push_back(Json{{"degree", d}, {"rank", g.rank}, {"torsion", torsion}});
    }
    return out;
}

Json to_json(const KoszulChain& c)
{
    std::vector<std::pair<std::string, Integer>> terms;
    for (const auto& [m, coeff] : c.terms())
        terms.emplace_back(m.word(), coeff);
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    Json list = Json::array();
    for (const auto& [word, coeff] : terms)
        list.push_back(Json{{"word", word}, {"coefficient", to_json(coeff)}});
    Json out{{"text", c.to_string()}};
    auto degree = c.degree();
    out["degree"] = degree ? Json(*degree) : Json(nullptr);
    out["terms"] = list;
    return out;
}

Json to_json(const EvidenceReport& r)
{
    Json certificates = Json::array();
    for (const Certificate& c : r.certificates)
        certificates.push_back(Json{{"claim", c.claim}, {"witness", c.witness}});
    Json out{{"verdict", to_string(r.verdict)}, {"extrapolated", r.extrapolated}};
    out["missing_face"] = r.missing_face ? to_json(*r.missing_face) : Json(nullptr);
    out["certificates"] = certificates;
    return out;
}

}   // namespace zk
