#pragma once

// Hand-rolled graph generators shared by the unit tests and the acceptance
// binary.

#include <set>
#include <string>
#include <vector>

#include "domtri/generators.hpp"
#include "domtri/io.hpp"
#include "domtri/wnt.hpp"

namespace domtri::corpus {

inline PlaneGraph triangle() { return PlaneGraph::build({{0, {1, 2}}, {1, {2, 0}}, {2, {0, 1}}}, {{0, 2}}); }

inline PlaneGraph path3() { return PlaneGraph::build({{0, {1}}, {1, {0, 2}}, {2, {1}}}, {{0, 1}}); }

// Two triangles sharing vertex 0.
inline PlaneGraph bowtie() {
    return PlaneGraph::build({{0, {1, 2, 3, 4}}, {1, {2, 0}}, {2, {0, 1}}, {3, {4, 0}}, {4, {0, 3}}}, {{0, 2}, {0, 4}});
}

// Seed s picks the family: even stacked, odd flip walk.
inline PlaneGraph triangulation(std::size_t n, std::uint64_t seed) {
    GenSpec spec;
    spec.family = seed % 2 ? Family::FlipWalk : Family::Stacked;
    spec.n = n;
    spec.seed = seed;
    return generate(spec);
}

// WNTs obtained from triangulations on at most max_n vertices by deleting
// random subsets of closed neighborhoods, plus the fixtures and small
// families. Duplicates (by canonical JSON) are dropped.
inline std::vector<PlaneGraph> small_wnts(std::size_t max_n, std::size_t per_n, std::uint64_t seed) {
    std::vector<PlaneGraph> out;
    std::set<std::string> seen;
    auto keep = [&](const PlaneGraph& g) {
        if (is_wnt(g) && seen.insert(to_json(g)).second) out.push_back(g);
    };
    for (const auto& name : fixture_names()) keep(fixture(name));
    for (std::size_t k = 3; k <= 8 && k < max_n; ++k) keep(wheel(k));
    for (std::size_t k = 1; 2 * k + 1 <= max_n; ++k) keep(fan_strip(k));
    keep(bowtie());

    SplitMix64 rng(seed);
    for (std::size_t n = 4; n <= max_n + 4; ++n) {
        for (std::size_t i = 0; i < per_n; ++i) {
            PlaneGraph g = triangulation(n, rng.next());
            if (n <= max_n) keep(g);
            // A few rounds of deletions inside one closed neighborhood.
            for (int round = 0; round < 3 && !g.empty(); ++round) {
                const VertexSet& vs = g.vertices();
                Vertex x = vs[rng.below(vs.size())];
                VertexSet nx = g.closed_neighborhood(x), d;
                for (Vertex v : nx)
                    if (rng.below(3) == 0) d.push_back(v);
                if (d.empty()) d.push_back(x);
                PlaneGraph h;
                try {
                    h = delete_vertices(g, d);
                } catch (const Error&) {
                    break;  // nested component
                }
                if (!is_wnt(h)) break;
                g = h;
                if (g.order() <= max_n) keep(g);
            }
        }
    }
    return out;
}

}  // namespace domtri::corpus
