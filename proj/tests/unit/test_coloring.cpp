#include <doctest.h>

#include "../support/corpus.hpp"
#include "domtri/coloring.hpp"
#include "domtri/oracle.hpp"

using namespace domtri;
using namespace domtri::corpus;

namespace {

void check_classes_dominate(const PlaneGraph& g, const ThreeColoring& c) {
    CHECK(is_dominating_coloring(g, c));
    VertexSet all;
    for (const auto& cls : c.classes) {
        CHECK(set_intersection(all, cls).empty());
        all = set_union(all, cls);
        if (!g.empty()) CHECK(verify_dominating_set(g, cls));
    }
    CHECK(all == g.vertices());
}

}  // namespace

TEST_CASE("triangle gets three singletons") {
    auto c = nt_dominating_coloring(triangle());
    for (const auto& cls : c.classes) CHECK(cls.size() == 1);
    check_classes_dominate(triangle(), c);
}

TEST_CASE("k4 and the 4-wheel") {
    check_classes_dominate(fixture("k4"), nt_dominating_coloring(fixture("k4")));
    check_classes_dominate(wheel(4), nt_dominating_coloring(wheel(4)));
    for (std::size_t k = 3; k <= 12; ++k) check_classes_dominate(wheel(k), nt_dominating_coloring(wheel(k)));
}

TEST_CASE("bowtie glues at the cutvertex") {
    auto c = wnt_dominating_coloring(bowtie());
    check_classes_dominate(bowtie(), c);
    // Each triangle sees all three classes.
    for (VertexSet tri : {VertexSet{0, 1, 2}, VertexSet{0, 3, 4}}) {
        std::set<int> seen;
        for (Vertex v : tri) seen.insert(c.class_of(v));
        CHECK(seen.size() == 3);
    }
}

TEST_CASE("empty and degenerate inputs") {
    auto c = wnt_dominating_coloring(PlaneGraph{});
    for (const auto& cls : c.classes) CHECK(cls.empty());
    CHECK_THROWS_AS(smallest_class_dominating_set(PlaneGraph{}), Error);
    CHECK_THROWS_AS(wnt_dominating_coloring(path3()), Error);
    CHECK_THROWS_AS(nt_dominating_coloring(bowtie()), Error);
}

TEST_CASE("smallest class") {
    CHECK(smallest_class_dominating_set(triangle()).size() == 1);
    CHECK(smallest_class_dominating_set(fixture("octahedron")).size() <= 2);
    CHECK(smallest_class_dominating_set(fixture("fig2a")).size() <= 2);
}

TEST_CASE("fixtures and strips") {
    for (const auto& name : fixture_names()) {
        CAPTURE(name);
        PlaneGraph g = fixture(name);
        check_classes_dominate(g, wnt_dominating_coloring(g));
    }
    for (std::size_t k = 1; k <= 30; ++k) check_classes_dominate(fan_strip(k), nt_dominating_coloring(fan_strip(k)));
}

TEST_CASE("random triangulations and WNTs") {
    for (std::uint64_t s = 0; s < 60; ++s) {
        std::size_t n = 4 + s * 3;
        PlaneGraph g = triangulation(n, s);
        CAPTURE(n);
        auto c = nt_dominating_coloring(g);
        check_classes_dominate(g, c);
        CHECK(smallest_class_dominating_set(g).size() <= n / 3);
    }
    for (const auto& g : small_wnts(14, 5, 3)) {
        CAPTURE(to_json(g));
        auto c = wnt_dominating_coloring(g);
        check_classes_dominate(g, c);
        if (!g.empty()) CHECK(smallest_class_dominating_set(g).size() <= g.order() / 3);
        // Cutvertices keep one class across blocks: the union is a partition,
        // which check_classes_dominate already confirmed.
    }
}
