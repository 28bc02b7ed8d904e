#include "domtri/wnt.hpp"

#include "domtri/io.hpp"

namespace domtri {

void lemma_violation(const std::string& what, const PlaneGraph& g) {
    throw Error(ErrorCode::LemmaViolation, what, to_json(g));
}

bool in_triangle(const PlaneGraph& g, Vertex v, const VertexSet& avoid) {
    auto rot = g.rotation(v);
    std::vector<Vertex> nb;
    nb.reserve(rot.size());
    for (Vertex w : rot)
        if (!contains(avoid, w)) nb.push_back(w);
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
            if (g.adjacent(nb[i], nb[j])) return true;
    return false;
}

WntCheck is_wnt(const PlaneGraph& g) {
    const auto& faces = g.faces();
    for (std::size_t f = 0; f < faces.size(); ++f) {
        if (faces[f].bounded && faces[f].length() != 3)
            return {false, WntWitness{WntFailure::NonTriangularBoundedFace, static_cast<int>(f), {}}};
    }
    for (Vertex v : g.vertices())
        if (!in_triangle(g, v)) return {false, WntWitness{WntFailure::TriangleFreeVertex, -1, v}};
    return {};
}

bool is_triangulation(const PlaneGraph& g) {
    if (g.order() < 3 || g.component_count() != 1) return false;
    return std::all_of(g.faces().begin(), g.faces().end(), [](const Face& f) { return f.length() == 3; });
}

bool is_near_triangulation(const PlaneGraph& g) {
    if (g.order() < 3 || g.component_count() != 1) return false;
    for (const Face& f : g.faces())
        if (f.bounded && f.length() != 3) return false;
    return blocks(g).blocks.size() == 1;
}

std::vector<BlockInfo> classify_blocks(const PlaneGraph& g) {
    if (!is_wnt(g)) throw Error(ErrorCode::NotWnt, "classify_blocks needs a weak near-triangulation");
    std::vector<BlockInfo> out;
    for (const Block& b : blocks(g).blocks) {
        BlockInfo info;
        info.vertices = b.vertices;
        if (b.order() == 2) {
            info.kind = BlockKind::K2;
            info.outerplanar = true;
        } else {
            PlaneGraph sub = induced_subgraph(g, b.vertices);
            if (!is_near_triangulation(sub))
                lemma_violation("block is neither K2 nor a near-triangulation", g);
            info.kind = BlockKind::NearTriangulation;
            info.outerplanar = external_vertices(sub).size() == b.order();
        }
        out.push_back(std::move(info));
    }
    return out;
}

BadSet bad_vertices(const PlaneGraph& g, Vertex u) {
    if (!g.contains(u)) throw Error(ErrorCode::VertexNotPresent, "vertex " + std::to_string(u));
    PlaneGraph h = delete_vertices(g, {u});
    BadSet out;
    out.center = u;
    for (Vertex v : h.vertices())
        if (!in_triangle(h, v)) out.bad.push_back(v);
    for (const Face& f : h.faces())
        if (f.bounded && f.length() != 3) out.nontriangular_face = true;
    out.problematic = out.nontriangular_face || !out.bad.empty();
    return out;
}

PlaneGraph remove_center_with_bad(const PlaneGraph& g, Vertex u) {
    if (!is_wnt(g)) throw Error(ErrorCode::NotWnt, "remove_center_with_bad needs a weak near-triangulation");
    BadSet bs = bad_vertices(g, u);
    if (!bs.problematic)
        throw Error(ErrorCode::PreconditionViolated, std::to_string(u) + " is not problematic");
    if (!g.is_external(u) && bs.bad.empty())
        throw Error(ErrorCode::PreconditionViolated, "internal " + std::to_string(u) + " has no bad vertices");
    for (Vertex t : bs.bad)
        if (!g.adjacent(u, t) || !g.is_external(t))
            lemma_violation("bad vertex " + std::to_string(t) + " is not an external neighbor of " + std::to_string(u), g);
    PlaneGraph r = delete_vertices(g, set_union({u}, bs.bad));
    if (!is_wnt(r)) lemma_violation("removing " + std::to_string(u) + " with its bad vertices broke the WNT property", g);
    return r;
}

bool gluing_check(const PlaneGraph& g, const VertexSet& X, const VertexSet& D) {
    if (!is_subset(D, X) || !is_subset(X, g.vertices()))
        throw Error(ErrorCode::PreconditionViolated, "need D ⊆ X ⊆ V(G)");
    if (!is_wnt(delete_vertices(g, X))) throw Error(ErrorCode::PreconditionViolated, "G - X is not a WNT");
    bool centered = std::any_of(D.begin(), D.end(), [&](Vertex y) { return is_subset(D, g.closed_neighborhood(y)); });
    if (!centered) throw Error(ErrorCode::PreconditionViolated, "D is not inside a closed neighborhood N[y], y ∈ D");
    bool has_external = std::any_of(D.begin(), D.end(), [&](Vertex v) { return g.is_external(v); });
    if (!has_external) throw Error(ErrorCode::PreconditionViolated, "D has no external vertex");

    for (Vertex v : set_minus(X, D))
        if (!in_triangle(g, v, D)) return false;
    if (!is_wnt(delete_vertices(g, D))) lemma_violation("gluing condition held but G - D is not a WNT", g);
    return true;
}

bool interior_bad_adjacency_check(const PlaneGraph& g, const VertexSet& X,
                                  const std::array<Vertex, 3>& triangle, Vertex y,
                                  const VertexSet& T) {
    auto [u, v, w] = triangle;
    if (!g.adjacent(u, v) || !g.adjacent(v, w) || !g.adjacent(u, w))
        throw Error(ErrorCode::PreconditionViolated, "not a triangle");
    if (!contains(X, u) || contains(X, v) || contains(X, w))
        throw Error(ErrorCode::PreconditionViolated, "need u ∈ X and v, w ∉ X");
    VertexSet inside = interior_vertices(g, {u, v, w});
    if (!set_intersection(X, inside).empty()) throw Error(ErrorCode::PreconditionViolated, "X meets the interior");
    if (!contains(inside, y)) throw Error(ErrorCode::PreconditionViolated, "y is not inside the triangle");
    return std::all_of(T.begin(), T.end(), [&](Vertex t) { return g.adjacent(t, u); });
}

}  // namespace domtri
