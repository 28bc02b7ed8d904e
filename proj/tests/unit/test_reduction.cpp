#include <doctest.h>

#include <set>

#include "domtri/generators.hpp"
#include "domtri/io.hpp"
#include "domtri/oracle.hpp"
#include "domtri/reduction.hpp"
#include "domtri/wnt.hpp"

using namespace domtri;

TEST_CASE("qualifying block") {
    CHECK_FALSE(qualifying_block(fixture("octahedron")));
    CHECK(qualifying_block(fixture("icosahedron")) == std::optional<std::size_t>{0});
    CHECK_FALSE(qualifying_block(fixture("fig2a")));
}

TEST_CASE("fig2d reduction") {
    PlaneGraph g = fixture("fig2d");
    auto step = find_reduction_strict(g);
    REQUIRE(step);
    CHECK(step->case_tag == CaseTag::TwoBadAdjacentOnlyU);
    CHECK(step->center == 4);
    CHECK(step->removed == VertexSet{1, 3, 4, 6});
    PlaneGraph r = apply_reduction(g, *step);
    CHECK(r.vertices() == VertexSet{0, 2, 5});
}

TEST_CASE("wheel reduction") {
    PlaneGraph g = wheel(4);
    auto step = find_reduction_strict(g);
    REQUIRE(step);
    CHECK(step->case_tag == CaseTag::ThreePlusBad);
    CHECK(step->removed == VertexSet{0, 1, 2, 3, 4});
    CHECK(apply_reduction(g, *step).empty());
    CHECK_THROWS_AS(apply_reduction(fixture("k4"), *step), Error);
}

TEST_CASE("regression fixtures reduce") {
    for (const char* name : {"icosahedron", "octastack7", "pinwheel8", "stack5"}) {
        CAPTURE(name);
        PlaneGraph g = fixture(name);
        auto step = find_reduction_strict(g);
        REQUIRE(step);
        CHECK(is_valid_reduction(g, step->center, step->removed));
        CHECK(exhaustive_reduction_search(g));
    }
}

TEST_CASE("select_center examples") {
    PlaneGraph ico = fixture("icosahedron");
    auto qb = qualifying_block(ico);
    REQUIRE(qb);
    RegionFan f = select_center(ico, blocks(ico).blocks[*qb]);
    CHECK_FALSE(ico.is_external(f.center));
    CHECK(f.spokes.size() >= 2);
    for (Vertex s : f.spokes) CHECK(ico.is_external(s));
    int occupied = 0;
    for (const auto& r : f.regions) occupied += !r.empty();
    CHECK(occupied <= 1);

    // stack5: a=0 b=1 c=2 d=3 e=4
    PlaneGraph s5 = fixture("stack5");
    RegionFan g = select_center(s5, blocks(s5).blocks[*qualifying_block(s5)]);
    CHECK((g.center == 3 || g.center == 4));

    PlaneGraph pin = fixture("pinwheel8");
    RegionFan p = select_center(pin, blocks(pin).blocks[*qualifying_block(pin)]);
    CHECK(p.center == 0);
    CHECK(make_set(p.spokes) == VertexSet{1, 2, 3, 4});
}

TEST_CASE("step json") {
    PlaneGraph g = fixture("fig2d");
    auto step = find_reduction_strict(g);
    REQUIRE(step);
    std::string j = to_json(*step);
    CHECK(j.find("\"case_tag\":\"TwoBad.AdjacentOnlyU\"") != std::string::npos);
    CHECK(j.find("\"removed\":[1,3,4,6]") != std::string::npos);
}

TEST_CASE("steps are sound and reduce to an irreducible residual") {
    for (std::size_t n = 7; n <= 40; ++n)
        for (std::uint64_t s = 0; s < 4; ++s) {
            GenSpec spec{s % 2 ? Family::FlipWalk : Family::Stacked, n, s * 17 + n};
            PlaneGraph g = generate(spec);
            while (auto step = find_reduction_strict(g)) {
                CAPTURE(to_json(g));
                CHECK(step->case_tag != CaseTag::FallbackSearch);
                CHECK(contains(step->removed, step->center));
                CHECK(step->removed.size() >= 4);
                CHECK(is_subset(step->removed, g.closed_neighborhood(step->center)));
                PlaneGraph h = apply_reduction(g, *step);
                CHECK(is_wnt_reference(h));
                g = h;
            }
            CHECK_FALSE(qualifying_block(g));
        }
}

TEST_CASE("every case tag occurs on a growing corpus") {
    std::set<CaseTag> seen;
    const auto& all = all_case_tags();
    const std::size_t wanted = all.size() - 1;  // all but FallbackSearch
    std::size_t graphs = 0;
    for (std::uint64_t s = 0; s < 200 && seen.size() < wanted; ++s)
        for (std::size_t n = 7; n <= 60 && seen.size() < wanted; ++n) {
            PlaneGraph g = generate({s % 2 ? Family::FlipWalk : Family::Stacked, n, s * 1000 + n});
            ++graphs;
            while (auto step = find_reduction_strict(g)) {
                seen.insert(step->case_tag);
                g = apply_reduction(g, *step);
            }
        }
    MESSAGE("graphs needed: " << graphs);
    for (CaseTag t : all) {
        if (t == CaseTag::FallbackSearch) continue;
        CAPTURE(to_string(t));
        CHECK(seen.count(t) == 1);
    }
    CHECK(seen.count(CaseTag::FallbackSearch) == 0);
}
