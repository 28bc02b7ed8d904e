#pragma once

#include <array>

#include "domtri/plane_graph.hpp"

namespace domtri {

/// Three vertex classes. In a valid result they partition V and each one
/// dominates the graph; they need not be independent sets.
struct ThreeColoring {
    std::array<VertexSet, 3> classes;

    /// Class index of v, or -1.
    int class_of(Vertex v) const;
};

/// Partition plus domination of every class.
bool is_dominating_coloring(const PlaneGraph& g, const ThreeColoring& c);

/// Dominating 3-coloring of a near-triangulation. The smallest outer dart
/// is precolored (0, 1); then the disc is split along a chord of the outer
/// cycle, or, without chords, a boundary vertex is peeled off and colored
/// last. Neighbors along the outer cycle always get different colors, which
/// is what makes the peeled vertex see all three colors. Blocks of at most 12
/// vertices fall back to exhaustive search if the construction ever fails
/// verification. Throws NotNearTriangulation, ColoringFailed.
ThreeColoring nt_dominating_coloring(const PlaneGraph& g);

/// Bridges dropped, each remaining block colored on its own, blocks glued
/// along the block-cut forest (breadth first from the smallest block of each
/// component) with a transposition of classes so the shared cutvertex keeps
/// its class. Throws NotWnt, ColoringFailed.
ThreeColoring wnt_dominating_coloring(const PlaneGraph& g);

/// Smallest class of wnt_dominating_coloring (lowest index on ties); at most
/// floor(n/3) vertices. Throws PreconditionViolated on the empty graph.
VertexSet smallest_class_dominating_set(const PlaneGraph& g);

}  // namespace domtri
