#pragma once

#include <map>
#include <span>
#include <vector>

#include "domtri/types.hpp"

namespace domtri {

/// A face of a plane graph: the cyclic sequence of darts that have the face
/// on their left.
struct Face {
    std::vector<Dart> darts;
    bool bounded = true;

    std::size_t length() const { return darts.size(); }
    /// Boundary vertices in traversal order (repeats possible on non-simple
    /// boundaries).
    std::vector<Vertex> walk() const;
    VertexSet vertex_set() const;
};

/// Counterclockwise neighbor lists keyed by vertex id.
using RotationMap = std::map<Vertex, std::vector<Vertex>>;

/// Combinatorial plane graph: a rotation system plus, per connected
/// component, the designation of the unbounded face.
///
/// Values are immutable once built. The successor of dart (u,v) within its
/// face is (v,w) where w immediately precedes u in the rotation at v, so
/// every face lies to the left of its darts.
///
/// An isolated vertex forms a component with a single face and no darts; it
/// is treated as lying on the unbounded face.
class PlaneGraph {
public:
    PlaneGraph() = default;

    /// Validates the rotation system and traces faces. `outer_darts` must
    /// name, for every component with at least one edge, a dart whose left
    /// face is unbounded. Several darts for one component are accepted when
    /// they lie on the same face.
    static PlaneGraph build(const RotationMap& rotation, const std::vector<Dart>& outer_darts);

    const VertexSet& vertices() const { return ids_; }
    std::size_t order() const { return ids_.size(); }
    std::size_t size() const { return dart_count() / 2; }
    bool empty() const { return ids_.empty(); }
    bool contains(Vertex v) const;

    std::span<const Vertex> rotation(Vertex v) const;
    std::size_t degree(Vertex v) const { return rotation(v).size(); }
    bool adjacent(Vertex u, Vertex v) const;
    /// Sorted neighbor ids.
    VertexSet neighbors(Vertex v) const;
    /// Sorted closed neighborhood N[v].
    VertexSet closed_neighborhood(Vertex v) const;
    /// Edges as (min, max) pairs in ascending order.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    const std::vector<Face>& faces() const { return faces_; }
    /// Index into faces() of the face on the left of `d`.
    int face_left_of(Dart d) const;
    /// Neighbor following `w` counterclockwise around `v`.
    Vertex rotation_next(Vertex v, Vertex w) const;
    /// Neighbor preceding `w` counterclockwise around `v`.
    Vertex rotation_prev(Vertex v, Vertex w) const;

    std::size_t component_count() const { return component_count_; }
    /// Component index of `v`; components are numbered by smallest vertex.
    int component_of(Vertex v) const;

    bool is_external(Vertex v) const;
    bool is_external_edge(Vertex u, Vertex v) const;
    /// Third vertices w such that the bounded face to the left of (u,v) or
    /// (v,u) is the triangle uvw.
    std::vector<Vertex> facial_apexes(Vertex u, Vertex v) const;
    /// True iff {a,b,c} bounds a bounded face of length 3.
    bool is_facial_triangle(Vertex a, Vertex b, Vertex c) const;

    /// Canonical outer designation: the smallest dart of each unbounded face.
    std::vector<Dart> outer_darts() const;

    /// Same ids, same cyclic rotations and same unbounded faces.
    friend bool operator==(const PlaneGraph& a, const PlaneGraph& b);

private:
    friend PlaneGraph delete_vertices(const PlaneGraph& g, const VertexSet& removed);

    // Validates simplicity and symmetry, links twins, traces faces and
    // components. All faces start out bounded.
    static PlaneGraph assemble(VertexSet ids, std::vector<std::vector<Vertex>> rotations);
    void check_euler() const;
    void check_single_unbounded_face() const;

    int index_of(Vertex v) const;  // -1 when absent
    std::size_t dart_count() const { return heads_.size(); }
    int dart_index(Vertex u, Vertex v) const;  // -1 when not an edge

    VertexSet ids_;
    std::vector<std::vector<Vertex>> rot_;
    std::vector<std::size_t> offset_;  // first dart of each vertex index
    std::vector<int> heads_;           // head vertex index per dart
    std::vector<int> twin_;            // reverse dart per dart
    std::vector<int> face_of_;         // face per dart
    std::vector<Face> faces_;
    std::vector<int> comp_;            // component per vertex index
    std::vector<int> isolated_face_;   // face index per vertex index for isolated vertices, else -1
    std::size_t component_count_ = 0;
};

/// G - S with the inherited embedding. Faces incident to a deleted vertex
/// merge; a resulting face is unbounded iff it absorbed part of an old
/// unbounded face.
PlaneGraph delete_vertices(const PlaneGraph& g, const VertexSet& removed);

/// The subgraph induced by `keep` (deletes the complement).
PlaneGraph induced_subgraph(const PlaneGraph& g, const VertexSet& keep);

struct Block {
    VertexSet vertices;
    std::vector<std::pair<Vertex, Vertex>> edges;

    std::size_t order() const { return vertices.size(); }
    bool is_k2() const { return vertices.size() == 2; }
};

struct BlockDecomposition {
    std::vector<Block> blocks;  // sorted by smallest vertex, then by size
    VertexSet cutvertices;
    /// Block-cut tree: for each block, the cutvertices it contains.
    std::vector<VertexSet> block_cutvertices;
    /// Block indices containing each cutvertex (parallel to `cutvertices`).
    std::vector<std::vector<int>> cutvertex_blocks;
};

BlockDecomposition blocks(const PlaneGraph& g);

/// Vertices incident to an unbounded face (isolated vertices included).
VertexSet external_vertices(const PlaneGraph& g);

/// Whether every vertex of the block lies on the unbounded face of the block
/// under the inherited embedding. Throws NotABlock if `block` is not the
/// vertex set of a block of `g`.
bool is_outerplanar_block(const PlaneGraph& g, const VertexSet& block);

/// Vertices of g strictly inside the closed walk `cycle` (a cycle of g given
/// in order). The side containing the unbounded face is the outside.
VertexSet interior_vertices(const PlaneGraph& g, const std::vector<Vertex>& cycle);

}  // namespace domtri
