#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "domtri/plane_graph.hpp"

namespace domtri {

enum class WntFailure { NonTriangularBoundedFace, TriangleFreeVertex };

struct WntWitness {
    WntFailure kind = WntFailure::TriangleFreeVertex;
    int face = -1;    // index into faces() for NonTriangularBoundedFace
    Vertex vertex{};  // for TriangleFreeVertex
};

struct WntCheck {
    bool ok = true;
    std::optional<WntWitness> witness;

    explicit operator bool() const { return ok; }
};

/// Weak near-triangulation test: all bounded faces are triangles and every
/// vertex lies in a triangle (pairwise adjacent triple). The empty graph
/// passes.
WntCheck is_wnt(const PlaneGraph& g);

/// Whether `v` has two adjacent neighbors, ignoring vertices in `avoid`.
bool in_triangle(const PlaneGraph& g, Vertex v, const VertexSet& avoid = {});

/// Connected, at least three vertices, every face (unbounded included) a
/// triangle.
bool is_triangulation(const PlaneGraph& g);
/// 2-connected, at least three vertices, every bounded face a triangle.
bool is_near_triangulation(const PlaneGraph& g);

enum class BlockKind { K2, NearTriangulation };

struct BlockInfo {
    VertexSet vertices;
    BlockKind kind = BlockKind::K2;
    bool outerplanar = true;

    std::size_t order() const { return vertices.size(); }
};

/// Classifies every block of a WNT. A block that is neither K2 nor a
/// near-triangulation raises LemmaViolation.
std::vector<BlockInfo> classify_blocks(const PlaneGraph& g);

/// u-bad vertices: the vertices of G-u lying in no triangle of G-u.
struct BadSet {
    Vertex center{};
    VertexSet bad;
    bool problematic = false;          // G-u is not a WNT
    bool nontriangular_face = false;   // some bounded face of G-u is not a triangle
};

BadSet bad_vertices(const PlaneGraph& g, Vertex u);

/// G - ({u} ∪ T) for a problematic vertex u of a WNT, where T is the set of
/// u-bad vertices. An internal u additionally needs T nonempty. The result is
/// checked to be a WNT.
PlaneGraph remove_center_with_bad(const PlaneGraph& g, Vertex u);

/// For D ⊆ X with G-X a WNT, D ⊆ N[y] for some y in D, and D containing an
/// external vertex: whether every vertex of X∖D lies in a triangle of G-D.
/// A true answer is cross-checked by testing G-D directly.
bool gluing_check(const PlaneGraph& g, const VertexSet& X, const VertexSet& D);

/// With triangle (u,v,w), Y its interior, X∩Y = ∅, u ∈ X, v,w ∉ X, y ∈ Y
/// and T the y-bad vertices of G-X: whether every member of T is adjacent
/// to u in G.
bool interior_bad_adjacency_check(const PlaneGraph& g, const VertexSet& X,
                                  const std::array<Vertex, 3>& triangle, Vertex y,
                                  const VertexSet& T);

/// Throws LemmaViolation carrying the serialized graph.
[[noreturn]] void lemma_violation(const std::string& what, const PlaneGraph& g);

}  // namespace domtri
