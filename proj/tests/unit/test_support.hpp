#pragma once

#include <doctest.h>

#include <map>

#include "domtri/plane_graph.hpp"

namespace domtri::testing {

// Dart partition and Euler per component, recomputed from the face list.
inline void check_face_invariants(const PlaneGraph& g) {
    std::map<std::pair<Vertex, Vertex>, int> seen;
    std::map<int, int> faces_per_comp, darts_per_comp, unbounded_per_comp;
    for (const Face& f : g.faces()) {
        if (f.darts.empty()) continue;
        int c = g.component_of(f.darts.front().tail);
        ++faces_per_comp[c];
        if (!f.bounded) ++unbounded_per_comp[c];
        for (const Dart& d : f.darts) {
            ++seen[{d.tail, d.head}];
            ++darts_per_comp[c];
        }
    }
    CHECK(seen.size() == 2 * g.size());
    for (const auto& [d, k] : seen) CHECK(k == 1);
    std::map<int, int> verts;
    for (Vertex v : g.vertices()) ++verts[g.component_of(v)];
    for (const auto& [c, nv] : verts) {
        if (!darts_per_comp.count(c)) continue;
        CHECK(nv - darts_per_comp[c] / 2 + faces_per_comp[c] == 2);
        CHECK(unbounded_per_comp[c] == 1);
    }
}

}  // namespace domtri::testing
