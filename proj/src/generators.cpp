#include "domtri/generators.hpp"

#include <array>
#include <cmath>
#include <map>

namespace domtri {

std::uint64_t SplitMix64::next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Family parse_family(std::string_view name) {
    if (name == "stacked") return Family::Stacked;
    if (name == "flipwalk") return Family::FlipWalk;
    if (name == "wheel") return Family::Wheel;
    if (name == "fan_strip") return Family::FanStrip;
    if (name == "fixture") return Family::Fixture;
    throw Error(ErrorCode::FormatError, "unknown family " + std::string(name));
}

std::string_view to_string(Family f) {
    switch (f) {
        case Family::Stacked: return "stacked";
        case Family::FlipWalk: return "flipwalk";
        case Family::Wheel: return "wheel";
        case Family::FanStrip: return "fan_strip";
        case Family::Fixture: return "fixture";
    }
    return "?";
}

namespace {

struct FixtureData {
    const char* name;
    RotationMap rotation;
    Dart outer;
};

// Rotations transcribed from straight-line drawings (neighbors sorted by
// angle); the icosahedron from its convex-polytope coordinates seen from
// outside. Figure fixtures use u=0, x1=1, x2=2 and then the remaining labels.
//   fig2a: y=3, w1=4, w2=5       fig2b: x=3, w1=4, w2=5
//   fig2c: w1=3, w2=4            fig2d: y=3, w1=4, w2=5, x=6
//   stack5: a=0 b=1 c=2 d=3 e=4  pinwheel8: hub=0, rim 1..4, ears 5,6,7
const std::vector<FixtureData>& fixture_table() {
    static const std::vector<FixtureData> table = {
        {"k4", {{0, {1, 3, 2}}, {1, {0, 2, 3}}, {2, {0, 3, 1}}, {3, {0, 1, 2}}}, {1, 0}},
        {"octahedron",
         {{0, {1, 5, 4, 2}}, {1, {0, 2, 3, 5}}, {2, {0, 4, 3, 1}}, {3, {1, 2, 4, 5}}, {4, {0, 5, 3, 2}},
          {5, {0, 1, 3, 4}}},
         {1, 0}},
        {"octastack7",
         {{0, {1, 5, 4, 2}}, {1, {0, 2, 3, 5}}, {2, {0, 4, 3, 1}}, {3, {1, 2, 4, 6, 5}}, {4, {0, 5, 6, 3, 2}},
          {5, {0, 1, 3, 6, 4}}, {6, {3, 4, 5}}},
         {1, 0}},
        {"icosahedron",
         {{0, {1, 7, 5, 6, 2}}, {1, {0, 2, 8, 3, 7}}, {2, {0, 6, 4, 8, 1}}, {3, {1, 8, 9, 11, 7}},
          {4, {2, 6, 10, 9, 8}}, {5, {0, 7, 11, 10, 6}}, {6, {0, 5, 10, 4, 2}}, {7, {0, 1, 3, 11, 5}},
          {8, {1, 2, 4, 9, 3}}, {9, {3, 8, 4, 10, 11}}, {10, {4, 6, 5, 11, 9}}, {11, {3, 9, 10, 5, 7}}},
         {1, 0}},
        {"stack5", {{0, {1, 4, 3, 2}}, {1, {0, 2, 3, 4}}, {2, {0, 3, 1}}, {3, {0, 4, 1, 2}}, {4, {0, 1, 3}}},
         {1, 0}},
        {"pinwheel8",
         {{0, {1, 2, 3, 4}}, {1, {0, 4, 5, 2}}, {2, {0, 1, 5, 6, 3}}, {3, {0, 2, 6, 7, 4}}, {4, {0, 3, 7, 1}},
          {5, {1, 2}}, {6, {2, 3}}, {7, {3, 4}}},
         {5, 1}},
        {"fig2a", {{0, {1, 4, 5, 2}}, {1, {0, 2, 4}}, {2, {0, 5, 1}}, {3, {4, 5}}, {4, {0, 1, 3, 5}}, {5, {0, 4, 3, 2}}},
         {1, 2}},
        {"fig2b",
         {{0, {1, 4, 3, 5, 2}}, {1, {0, 2, 4}}, {2, {0, 5, 1}}, {3, {0, 4, 5}}, {4, {0, 1, 5, 3}}, {5, {0, 3, 4, 2}}},
         {1, 2}},
        {"fig2c", {{0, {1, 3, 4, 2}}, {1, {0, 2, 3}}, {2, {0, 4, 1}}, {3, {0, 1, 4}}, {4, {0, 3, 2}}}, {1, 2}},
        {"fig2d",
         {{0, {1, 4, 6, 5, 2}}, {1, {0, 2, 4}}, {2, {0, 5, 1}}, {3, {4, 5}}, {4, {0, 1, 3, 5, 6}},
          {5, {0, 6, 4, 3, 2}}, {6, {0, 4, 5}}},
         {1, 2}},
    };
    return table;
}

// Straight-line embedding: neighbors sorted counterclockwise by angle.
PlaneGraph embed(const std::vector<std::array<double, 2>>& pts,
                 const std::vector<std::pair<Vertex, Vertex>>& edges, Dart outer) {
    RotationMap rot;
    for (std::size_t v = 0; v < pts.size(); ++v) rot[static_cast<Vertex>(v)];
    for (auto [a, b] : edges) {
        rot[a].push_back(b);
        rot[b].push_back(a);
    }
    for (auto& [v, r] : rot) {
        auto angle = [&, v = v](Vertex w) {
            return std::atan2(pts[w][1] - pts[v][1], pts[w][0] - pts[v][0]);
        };
        std::sort(r.begin(), r.end(), [&](Vertex a, Vertex b) { return angle(a) < angle(b); });
    }
    return PlaneGraph::build(rot, {outer});
}

void insert_after(std::vector<Vertex>& r, Vertex after, Vertex v) {
    auto it = std::find(r.begin(), r.end(), after);
    r.insert(it + 1, v);
}

void erase_value(std::vector<Vertex>& r, Vertex v) { r.erase(std::find(r.begin(), r.end(), v)); }

Vertex pred(const std::vector<Vertex>& r, Vertex w) {
    auto it = std::find(r.begin(), r.end(), w);
    return it == r.begin() ? r.back() : *(it - 1);
}

}  // namespace

const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& f : fixture_table()) out.emplace_back(f.name);
        return out;
    }();
    return names;
}

PlaneGraph fixture(std::string_view name) {
    for (const auto& f : fixture_table())
        if (name == f.name) return PlaneGraph::build(f.rotation, {f.outer});
    throw Error(ErrorCode::UnknownFixture, std::string(name));
}

PlaneGraph stacked(std::size_t n, std::uint64_t seed) {
    if (n < 3) throw Error(ErrorCode::PreconditionViolated, "stacked needs n >= 3");
    RotationMap rot{{0, {1, 2}}, {1, {2, 0}}, {2, {0, 1}}};
    // Bounded faces as (a,b,c) with the face on the left of a->b->c.
    std::vector<std::array<Vertex, 3>> faces{{0, 1, 2}};
    SplitMix64 rng(seed);
    for (Vertex w = 3; w < static_cast<Vertex>(n); ++w) {
        std::size_t pick = rng.below(faces.size());
        auto [a, b, c] = faces[pick];
        insert_after(rot[a], b, w);
        insert_after(rot[b], c, w);
        insert_after(rot[c], a, w);
        rot[w] = {a, b, c};
        faces[pick] = {a, b, w};
        faces.push_back({b, c, w});
        faces.push_back({c, a, w});
    }
    return PlaneGraph::build(rot, {{0, 2}});
}

PlaneGraph flip_walk(const PlaneGraph& g, std::size_t steps, std::uint64_t seed) {
    RotationMap rot;
    for (Vertex v : g.vertices()) {
        auto r = g.rotation(v);
        rot[v] = std::vector<Vertex>(r.begin(), r.end());
    }
    auto edges = g.edges();
    auto outer = g.outer_darts();
    // In a triangulation the only edges joining two outer vertices are the
    // outer edges, and those never change.
    VertexSet rim = external_vertices(g);
    SplitMix64 rng(seed);
    for (std::size_t s = 0; s < steps && !edges.empty(); ++s) {
        std::size_t pick = rng.below(edges.size());
        auto [a, b] = edges[pick];
        if (contains(rim, a) && contains(rim, b)) continue;
        Vertex c = pred(rot[b], a);  // face a->b->c
        Vertex d = pred(rot[a], b);  // face b->a->d
        if (c == d || std::find(rot[c].begin(), rot[c].end(), d) != rot[c].end()) continue;
        erase_value(rot[a], b);
        erase_value(rot[b], a);
        insert_after(rot[c], a, d);
        insert_after(rot[d], b, c);
        edges[pick] = {std::min(c, d), std::max(c, d)};
    }
    return PlaneGraph::build(rot, outer);
}

PlaneGraph wheel(std::size_t rim) {
    if (rim < 3) throw Error(ErrorCode::PreconditionViolated, "wheel needs rim >= 3");
    std::vector<std::array<double, 2>> pts{{0.0, 0.0}};
    std::vector<std::pair<Vertex, Vertex>> edges;
    const double pi = std::acos(-1.0);
    for (std::size_t i = 1; i <= rim; ++i) {
        double t = 2 * pi * static_cast<double>(i - 1) / static_cast<double>(rim);
        pts.push_back({std::cos(t), std::sin(t)});
        edges.emplace_back(0, static_cast<Vertex>(i));
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i % rim + 1));
    }
    return embed(pts, edges, {2, 1});
}

PlaneGraph fan_strip(std::size_t k) {
    if (k < 1) throw Error(ErrorCode::PreconditionViolated, "fan_strip needs k >= 1");
    std::vector<std::array<double, 2>> pts;
    std::vector<std::pair<Vertex, Vertex>> edges;
    const Vertex last = static_cast<Vertex>(2 * k);
    for (Vertex i = 0; i <= last; ++i) {
        pts.push_back({static_cast<double>(i), static_cast<double>(i % 2)});
        if (i + 1 <= last) edges.emplace_back(i, i + 1);
        if (i + 2 <= last) edges.emplace_back(i, i + 2);
    }
    return embed(pts, edges, {2, 0});
}

PlaneGraph generate(const GenSpec& spec) {
    switch (spec.family) {
        case Family::Stacked: return stacked(spec.n, spec.seed);
        case Family::FlipWalk: {
            std::size_t steps = spec.steps ? spec.steps : 5 * spec.n;
            return flip_walk(stacked(spec.n, spec.seed), steps, spec.seed ^ 0x5DEECE66DULL);
        }
        case Family::Wheel: return wheel(spec.n);
        case Family::FanStrip: return fan_strip(spec.n);
        case Family::Fixture: return fixture(spec.fixture);
    }
    throw Error(ErrorCode::FormatError, "unknown family");
}

}  // namespace domtri
