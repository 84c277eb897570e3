#include "zk/complex.hpp"

#include <algorithm>
#include <unordered_set>

#include "zk/error.hpp"

namespace zk {

namespace {

void check_label(int v)
{
    if (v < 1 || v > kMaxVertices)
        throw Error(ErrorKind::InvalidVertex, "vertex label " + std::to_string(v) + " outside 1.." + std::to_string(kMaxVertices));
}

void check_in_range(VertexSet s, int m)
{
    if (s.max_vertex() > m)
        throw Error(ErrorKind::InvalidVertex, "face " + s.to_string() + " has a vertex above m = " + std::to_string(m));
}

void check_vertex_count(int m)
{
    if (m < 0 || m > kMaxVertices)
        throw Error(ErrorKind::InvalidVertex, "vertex count " + std::to_string(m) + " outside 0.." + std::to_string(kMaxVertices));
}

std::vector<VertexSet> sorted_unique(std::vector<VertexSet> faces)
{
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    return faces;
}

}   // namespace

// ------------------------------------------------------------------------
// VertexSet
// ------------------------------------------------------------------------

VertexSet::VertexSet(std::initializer_list<int> vertices)
{
    for (int v : vertices)
        insert(v);
}

VertexSet::VertexSet(const std::vector<int>& vertices)
{
    for (int v : vertices)
        insert(v);
}

VertexSet VertexSet::range(int first, int last)
{
    VertexSet s;
    for (int v = first; v <= last; ++v)
        s.insert(v);
    return s;
}

VertexSet& VertexSet::insert(int v)
{
    check_label(v);
    bits_ |= std::uint64_t{1} << (v - 1);
    return *this;
}

VertexSet& VertexSet::erase(int v)
{
    if (v >= 1 && v <= kMaxVertices)
        bits_ &= ~(std::uint64_t{1} << (v - 1));
    return *this;
}

std::vector<int> VertexSet::members() const
{
    return std::vector<int>(begin(), end());
}

VertexSet VertexSet::shifted(int k) const
{
    if (empty())
        return *this;
    check_label(max_vertex() + k);
    check_label(min_vertex() + k);
    return from_bits(k >= 0 ? bits_ << k : bits_ >> -k);
}

std::string VertexSet::to_string() const
{
    std::string out = "{";
    bool first = true;
    for (int v : *this)
    {
        if (!first)
            out += ",";
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

bool lex_less(VertexSet a, VertexSet b)
{
    auto ia = a.begin();
    auto ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib)
        if (*ia != *ib)
            return *ia < *ib;
    return ia == a.end() && ib != b.end();
}

std::vector<VertexSet> subsets_of(VertexSet s)
{
    std::vector<VertexSet> out;
    out.reserve(std::size_t{1} << s.size());
    const std::uint64_t mask = s.bits();
    std::uint64_t sub = 0;
    do
    {
        out.push_back(VertexSet::from_bits(sub));
        sub = (sub - mask) & mask;
    } while (sub != 0);
    return out;
}

// ------------------------------------------------------------------------
// VertexMap
// ------------------------------------------------------------------------

VertexMap VertexMap::identity(VertexSet domain)
{
    VertexMap phi;
    for (int v : domain)
        phi.set(v, v);
    return phi;
}

VertexMap VertexMap::from_pairs(const std::vector<std::pair<int, int>>& pairs)
{
    VertexMap phi;
    for (auto [s, t] : pairs)
        phi.set(s, t);
    return phi;
}

void VertexMap::set(int source, int target)
{
    check_label(source);
    check_label(target);
    for (std::size_t v = 1; v < targets_.size(); ++v)
        if (targets_[v] == target && static_cast<int>(v) != source)
            throw Error(ErrorKind::InvalidVertex, "vertex map is not injective at target " + std::to_string(target));
    if (targets_.size() <= static_cast<std::size_t>(source))
        targets_.resize(source + 1, 0);
    targets_[source] = target;
}

int VertexMap::image(int source) const
{
    if (source < 1 || static_cast<std::size_t>(source) >= targets_.size())
        return 0;
    return targets_[source];
}

VertexSet VertexMap::domain() const
{
    VertexSet s;
    for (std::size_t v = 1; v < targets_.size(); ++v)
        if (targets_[v] != 0)
            s.insert(static_cast<int>(v));
    return s;
}

VertexSet VertexMap::codomain() const
{
    VertexSet s;
    for (std::size_t v = 1; v < targets_.size(); ++v)
        if (targets_[v] != 0)
            s.insert(targets_[v]);
    return s;
}

VertexSet VertexMap::apply(VertexSet s) const
{
    VertexSet out;
    for (int v : s)
    {
        int t = image(v);
        if (t == 0)
            throw Error(ErrorKind::InvalidVertex, "vertex " + std::to_string(v) + " is not in the domain of the vertex map");
        out.insert(t);
    }
    return out;
}

// ------------------------------------------------------------------------
// SimplicialComplex
// ------------------------------------------------------------------------

SimplicialComplex::SimplicialComplex(int m) : m_(m), faces_{VertexSet{}}
{
    check_vertex_count(m);
}

SimplicialComplex::SimplicialComplex(int m, std::vector<VertexSet> sorted_faces, bool)
    : m_(m), faces_(std::move(sorted_faces))
{
}

SimplicialComplex SimplicialComplex::from_faces(int m, std::vector<VertexSet> faces)
{
    check_vertex_count(m);
    faces = sorted_unique(std::move(faces));
    if (faces.empty() || !faces.front().empty())
        throw Error(ErrorKind::NotDownwardClosed, "the empty face is missing");
    for (VertexSet f : faces)
    {
        check_in_range(f, m);
        for (int v : f)
        {
            VertexSet g = f;
            g.erase(v);
            if (!std::binary_search(faces.begin(), faces.end(), g))
                throw Error(ErrorKind::NotDownwardClosed, "face " + f.to_string() + " is listed but " + g.to_string() + " is not");
        }
    }
    return SimplicialComplex(m, std::move(faces), true);
}

bool SimplicialComplex::contains(VertexSet face) const
{
    return std::binary_search(faces_.begin(), faces_.end(), face);
}

VertexSet SimplicialComplex::vertices() const
{
    VertexSet s;
    for (VertexSet f : faces_)
        if (f.size() == 1)
            s = s | f;
    return s;
}

int SimplicialComplex::dimension() const
{
    int d = -1;
    for (VertexSet f : faces_)
        d = std::max(d, f.size() - 1);
    return d;
}

std::vector<VertexSet> SimplicialComplex::maximal_faces() const
{
    std::vector<VertexSet> out;
    const VertexSet all = VertexSet::range(1, m_);
    for (VertexSet f : faces_)
    {
        bool maximal = true;
        for (int v : all - f)
        {
            VertexSet g = f;
            if (contains(g.insert(v)))
            {
                maximal = false;
                break;
            }
        }
        if (maximal)
            out.push_back(f);
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

std::vector<VertexSet> SimplicialComplex::faces_of_size(int size) const
{
    std::vector<VertexSet> out;
    for (VertexSet f : faces_)
        if (f.size() == size)
            out.push_back(f);
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

// ------------------------------------------------------------------------
// Constructions
// ------------------------------------------------------------------------

SimplicialComplex from_maximal_faces(int m, const std::vector<VertexSet>& maximal)
{
    check_vertex_count(m);
    std::unordered_set<std::uint64_t> seen{0};
    for (VertexSet f : maximal)
    {
        check_in_range(f, m);
        for (VertexSet g : subsets_of(f))
            seen.insert(g.bits());
    }
    std::vector<VertexSet> faces;
    faces.reserve(seen.size());
    for (std::uint64_t b : seen)
        faces.push_back(VertexSet::from_bits(b));
    return SimplicialComplex::from_faces(m, std::move(faces));
}

SimplicialComplex simplex(VertexSet s, int m)
{
    check_in_range(s, m);
    return SimplicialComplex::from_faces(m, subsets_of(s));
}

SimplicialComplex boundary_simplex(VertexSet s, int m)
{
    check_in_range(s, m);
    if (s.empty())
        throw Error(ErrorKind::InvalidVertex, "the boundary of the empty simplex is undefined");
    std::vector<VertexSet> faces = subsets_of(s);
    faces.pop_back();   // s itself is the last subset
    return SimplicialComplex::from_faces(m, std::move(faces));
}

SimplicialComplex full_subcomplex(const SimplicialComplex& k, VertexSet j)
{
    check_in_range(j, k.vertex_count());
    std::vector<VertexSet> faces;
    for (VertexSet f : k.faces())
        if (f.is_subset_of(j))
            faces.push_back(f);
    return SimplicialComplex::from_faces(k.vertex_count(), std::move(faces));
}

SimplicialComplex join(const SimplicialComplex& k1, const SimplicialComplex& k2)
{
    const int m1 = k1.vertex_count();
    const int m = m1 + k2.vertex_count();
    check_vertex_count(m);
    std::vector<VertexSet> faces;
    faces.reserve(k1.face_count() * k2.face_count());
    for (VertexSet a : k1.faces())
        for (VertexSet b : k2.faces())
            faces.push_back(a | b.shifted(m1));
    return SimplicialComplex::from_faces(m, std::move(faces));
}

SimplicialComplex labeled_join(const SimplicialComplex& k1, const SimplicialComplex& k2)
{
    if (k1.vertex_count() != k2.vertex_count())
        throw Error(ErrorKind::InvalidVertex, "labeled join needs complexes on the same vertex set");
    VertexSet support1, support2;
    for (VertexSet f : k1.faces())
        support1 = support1 | f;
    for (VertexSet f : k2.faces())
        support2 = support2 | f;
    if (!support1.disjoint_from(support2))
        throw Error(ErrorKind::OverlappingSupport, "labeled join of complexes sharing vertices " + (support1 & support2).to_string());
    std::vector<VertexSet> faces;
    faces.reserve(k1.face_count() * k2.face_count());
    for (VertexSet a : k1.faces())
        for (VertexSet b : k2.faces())
            faces.push_back(a | b);
    return SimplicialComplex::from_faces(k1.vertex_count(), std::move(faces));
}

SimplicialComplex complex_union(const SimplicialComplex& k1, const SimplicialComplex& k2)
{
    if (k1.vertex_count() != k2.vertex_count())
        throw Error(ErrorKind::InvalidVertex, "union needs complexes on the same vertex set");
    std::vector<VertexSet> faces = k1.faces();
    faces.insert(faces.end(), k2.faces().begin(), k2.faces().end());
    return SimplicialComplex::from_faces(k1.vertex_count(), std::move(faces));
}

SimplicialComplex glue(const SimplicialComplex& k1, const SimplicialComplex& k2, const VertexMap& phi)
{
    const VertexSet shared1 = phi.domain();
    const VertexSet shared2 = phi.codomain();
    if (!k1.contains(shared1))
        throw Error(ErrorKind::NotAFace, shared1.to_string() + " is not a face of the first complex");
    if (!k2.contains(shared2))
        throw Error(ErrorKind::NotAFace, shared2.to_string() + " is not a face of the second complex");

    const int m1 = k1.vertex_count();
    const int m2 = k2.vertex_count();
    const int m = m1 + m2 - shared1.size();
    check_vertex_count(m);

    VertexMap into;   // K2 label -> result label
    int next = m1;
    for (int v = 1; v <= m2; ++v)
    {
        int label = 0;
        for (int u : shared1)
            if (phi.image(u) == v)
                label = u;
        into.set(v, label != 0 ? label : ++next);
    }

    std::vector<VertexSet> faces = k1.faces();
    for (VertexSet f : k2.faces())
        faces.push_back(into.apply(f));
    return SimplicialComplex::from_faces(m, std::move(faces));
}

SimplicialComplex j_operation(int n, const SimplicialComplex& k)
{
    if (n < 0)
        throw Error(ErrorKind::InvalidVertex, "J_n needs n >= 0");
    const VertexSet fresh = VertexSet::range(1, n + 1);
    const int m = n + 1 + k.vertex_count();
    check_vertex_count(m);

    std::vector<VertexSet> faces = subsets_of(fresh);
    std::vector<VertexSet> boundary = faces;
    boundary.pop_back();
    for (VertexSet a : boundary)
        for (VertexSet b : k.faces())
            faces.push_back(a | b.shifted(n + 1));
    return SimplicialComplex::from_faces(m, std::move(faces));
}

SimplicialComplex skeleton(const SimplicialComplex& k, int d)
{
    std::vector<VertexSet> faces;
    for (VertexSet f : k.faces())
        if (f.size() <= d + 1)
            faces.push_back(f);
    return SimplicialComplex::from_faces(k.vertex_count(), std::move(faces));
}

SimplicialComplex remove_maximal_face(const SimplicialComplex& k, VertexSet face)
{
    const auto maximal = k.maximal_faces();
    if (std::find(maximal.begin(), maximal.end(), face) == maximal.end())
        throw Error(ErrorKind::NotAFace, face.to_string() + " is not a maximal face");
    std::vector<VertexSet> faces;
    for (VertexSet f : k.faces())
        if (f != face)
            faces.push_back(f);
    return SimplicialComplex::from_faces(k.vertex_count(), std::move(faces));
}

SimplicialComplex relabel(const SimplicialComplex& k, const VertexMap& phi, int target_m)
{
    std::vector<VertexSet> faces;
    faces.reserve(k.face_count());
    for (VertexSet f : k.faces())
        faces.push_back(phi.apply(f));
    return SimplicialComplex::from_faces(target_m, std::move(faces));
}

InclusionResult contains_labeled(const SimplicialComplex& k, const SimplicialComplex& l, const VertexMap& phi)
{
    std::vector<VertexSet> order = l.faces();
    std::stable_sort(order.begin(), order.end(), [](VertexSet a, VertexSet b) {
        return a.size() != b.size() ? a.size() < b.size() : lex_less(a, b);
    });
    for (VertexSet f : order)
    {
        VertexSet image = phi.apply(f);
        if (!k.contains(image))
            return {false, image};
    }
    return {};
}

InclusionResult contains_labeled(const SimplicialComplex& k, const SimplicialComplex& l)
{
    VertexSet support;
    for (VertexSet f : l.faces())
        support = support | f;
    return contains_labeled(k, l, VertexMap::identity(support));
}

}   // namespace zk
