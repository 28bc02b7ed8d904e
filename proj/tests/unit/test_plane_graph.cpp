#include <doctest.h>

#include <map>
#include <set>

#include "domtri/generators.hpp"
#include "domtri/io.hpp"
#include "domtri/wnt.hpp"
#include "test_support.hpp"

using namespace domtri;

namespace {

PlaneGraph triangle() { return PlaneGraph::build({{0, {1, 2}}, {1, {2, 0}}, {2, {0, 1}}}, {{0, 2}}); }

PlaneGraph bowtie() {
    // Triangles 0,1,2 and 0,3,4 meeting at 0.
    return PlaneGraph::build({{0, {1, 2, 3, 4}}, {1, {2, 0}}, {2, {0, 1}}, {3, {4, 0}}, {4, {0, 3}}},
                             {{0, 2}, {0, 4}});
}

std::size_t bounded_count(const PlaneGraph& g) {
    return std::count_if(g.faces().begin(), g.faces().end(), [](const Face& f) { return f.bounded; });
}

std::multiset<std::size_t> unbounded_lengths(const PlaneGraph& g) {
    std::multiset<std::size_t> out;
    for (const Face& f : g.faces())
        if (!f.bounded) out.insert(f.length());
    return out;
}

}  // namespace

TEST_CASE("build traces faces") {
    PlaneGraph k4 = fixture("k4");
    CHECK(k4.faces().size() == 4);
    for (const Face& f : k4.faces()) CHECK(f.length() == 3);

    PlaneGraph oct = fixture("octahedron");
    CHECK(oct.faces().size() == 8);
    CHECK(oct.size() == 12);

    PlaneGraph t = triangle();
    CHECK(t.faces().size() == 2);
    CHECK(bounded_count(t) == 1);
}

TEST_CASE("build rejects malformed rotations") {
    auto code_of = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.code();
        }
        FAIL("no error");
        return ErrorCode::FormatError;
    };
    CHECK(code_of([] { PlaneGraph::build({{0, {1, 2}}, {1, {2}}, {2, {0, 1}}}, {{0, 2}}); }) ==
          ErrorCode::AsymmetricRotation);
    CHECK(code_of([] { PlaneGraph::build({{0, {1, 1}}, {1, {0, 0}}}, {{0, 1}}); }) == ErrorCode::MultiEdgeOrLoop);
    CHECK(code_of([] { PlaneGraph::build({{0, {0}}}, {}); }) == ErrorCode::MultiEdgeOrLoop);
    CHECK(code_of([] { PlaneGraph::build({{0, {1, 2}}, {1, {2, 0}}, {2, {0, 1}}}, {}); }) ==
          ErrorCode::OuterDartMissing);
    // K4 with a rotation that is not planar.
    CHECK(code_of([] {
              PlaneGraph::build({{0, {1, 2, 3}}, {1, {0, 2, 3}}, {2, {0, 1, 3}}, {3, {0, 1, 2}}}, {{1, 0}});
          }) == ErrorCode::EulerViolation);
}

TEST_CASE("fig2a faces and external vertices") {
    PlaneGraph g = fixture("fig2a");
    CHECK(g.order() == 6);
    CHECK(g.size() == 10);
    CHECK(bounded_count(g) == 5);
    for (const Face& f : g.faces())
        if (f.bounded) CHECK(f.length() == 3);
    CHECK(unbounded_lengths(g) == std::multiset<std::size_t>{5});
    for (auto tri : {std::array{0, 1, 2}, {0, 2, 5}, {0, 5, 4}, {0, 4, 1}, {4, 5, 3}})
        CHECK(g.is_facial_triangle(tri[0], tri[1], tri[2]));
    CHECK(external_vertices(g) == VertexSet{1, 2, 3, 4, 5});
}

TEST_CASE("wheel faces") {
    PlaneGraph w = wheel(4);
    CHECK(bounded_count(w) == 4);
    CHECK(unbounded_lengths(w) == std::multiset<std::size_t>{4});
    CHECK(external_vertices(w) == VertexSet{1, 2, 3, 4});
}

TEST_CASE("delete_vertices") {
    PlaneGraph oct = fixture("octahedron");
    PlaneGraph h = delete_vertices(oct, {0});
    CHECK(h.order() == 5);
    CHECK(h.size() == 8);
    CHECK(bounded_count(h) == 4);
    CHECK(unbounded_lengths(h) == std::multiset<std::size_t>{4});
    CHECK(external_vertices(h) == VertexSet{1, 2, 4, 5});

    // An inner vertex leaves a bounded hole behind.
    PlaneGraph h3 = delete_vertices(oct, {3});
    CHECK(bounded_count(h3) == 4);
    CHECK_FALSE(is_wnt(h3));
    CHECK(unbounded_lengths(h3) == std::multiset<std::size_t>{3});

    CHECK(delete_vertices(oct, {}) == oct);

    PlaneGraph r = delete_vertices(fixture("fig2a"), {0, 1, 2});
    CHECK(r.vertices() == VertexSet{3, 4, 5});
    CHECK(bounded_count(r) == 1);
    CHECK(r.is_facial_triangle(3, 4, 5));

    CHECK_THROWS_AS(delete_vertices(oct, {9}), Error);
}

TEST_CASE("delete_vertices composes") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        PlaneGraph g = flip_walk(stacked(12, seed), 60, seed + 1);
        SplitMix64 rng(seed);
        VertexSet a{static_cast<Vertex>(rng.below(12))};
        VertexSet b = make_set({static_cast<Vertex>(rng.below(12)), static_cast<Vertex>(rng.below(12))});
        b = set_minus(b, a);
        PlaneGraph once = delete_vertices(g, set_union(a, b));
        PlaneGraph twice = delete_vertices(delete_vertices(g, a), b);
        CHECK(once == twice);
        testing::check_face_invariants(once);
    }
}

TEST_CASE("blocks") {
    auto k4 = blocks(fixture("k4"));
    CHECK(k4.blocks.size() == 1);
    CHECK(k4.blocks[0].order() == 4);
    CHECK(k4.cutvertices.empty());

    auto bt = blocks(bowtie());
    CHECK(bt.blocks.size() == 2);
    CHECK(bt.cutvertices == VertexSet{0});

    auto k2 = blocks(PlaneGraph::build({{0, {1}}, {1, {0}}}, {{0, 1}}));
    CHECK(k2.blocks.size() == 1);
    CHECK(k2.blocks[0].is_k2());
}

TEST_CASE("outerplanar blocks") {
    PlaneGraph k2 = PlaneGraph::build({{0, {1}}, {1, {0}}}, {{0, 1}});
    CHECK(is_outerplanar_block(k2, {0, 1}));
    CHECK_FALSE(is_outerplanar_block(fixture("fig2a"), {0, 1, 2, 3, 4, 5}));
    CHECK(is_outerplanar_block(fan_strip(3), {0, 1, 2, 3, 4, 5, 6}));
    CHECK_THROWS_AS(is_outerplanar_block(bowtie(), {0, 1, 3}), Error);
}

TEST_CASE("interior of a triangle") {
    PlaneGraph g = fixture("stack5");
    CHECK(interior_vertices(g, {0, 1, 2}) == VertexSet{3, 4});
    CHECK(interior_vertices(g, {0, 1, 3}) == VertexSet{4});
    CHECK(interior_vertices(g, {1, 2, 3}).empty());
}

TEST_CASE("json round trip") {
    for (const auto& name : fixture_names()) {
        PlaneGraph g = fixture(name);
        std::string text = to_json(g);
        PlaneGraph back = from_json(text);
        CHECK(back == g);
        CHECK(to_json(back) == text);
    }
    CHECK(to_json(PlaneGraph{}) == R"({"outer_darts":[],"rotation":{},"vertices":[]})");
    CHECK_THROWS_AS(from_json("[1,2]"), Error);
    CHECK_THROWS_AS(from_json(R"({"vertices":[0],"rotation":{"x":[]},"outer_darts":[]})"), Error);
}

TEST_CASE("dot export") {
    std::string dot = export_dot(triangle());
    CHECK(dot == "graph G {\n  0;\n  1;\n  2;\n  0 -- 1;\n  0 -- 2;\n  1 -- 2;\n}\n");
    CHECK(export_dot(PlaneGraph{}) == "graph G {\n}\n");
    PlaneGraph f = fixture("fig2a");
    std::string marked = export_dot(f, {{}, {}, external_vertices(f)});
    CHECK(std::count(marked.begin(), marked.end(), '[') == 5);
}
