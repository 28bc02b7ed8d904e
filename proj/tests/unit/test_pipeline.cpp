#include <doctest.h>

#include "../support/corpus.hpp"
#include "domtri/oracle.hpp"
#include "domtri/pipeline.hpp"

using namespace domtri;
using namespace domtri::corpus;

TEST_CASE("bound") {
    CHECK(bound(53) == 17);
    CHECK(bound(7) == 2);
    CHECK(bound(1000) == 320);
    CHECK(bound(0) == 0);
}

TEST_CASE("six_block_dominator") {
    // fig2a: the only internal vertex is u = 0, and N[0] holds it.
    CHECK(six_block_dominator(fixture("fig2a")) == 0);
    // fig2b: internal {u, x} = {0, 3}, both in N[0].
    CHECK(six_block_dominator(fixture("fig2b")) == 0);
    PlaneGraph oct = fixture("octahedron");
    Vertex d = six_block_dominator(oct);
    VertexSet internal = set_minus(oct.vertices(), external_vertices(oct));
    CHECK(contains(internal, d));
    CHECK(is_subset(internal, oct.closed_neighborhood(d)));
    CHECK_THROWS_AS(six_block_dominator(fixture("k4")), Error);
}

TEST_CASE("six_block_pair") {
    PlaneGraph oct = fixture("octahedron");
    VertexSet p = six_block_pair(oct);
    CHECK(p.size() == 2);
    CHECK(verify_dominating_set(oct, p));
    CHECK(six_block_pair(fixture("fig2a")) == VertexSet{0, 3});
    VertexSet b = six_block_pair(fixture("fig2b"));
    CHECK(contains(b, 0));
    CHECK(verify_dominating_set(fixture("fig2b"), b));
}

TEST_CASE("dominate examples") {
    auto r7 = dominate(fixture("octastack7"));
    CHECK(r7.dominating_set.size() <= 2);
    CHECK(r7.bound_ok);
    CHECK(r7.steps.size() >= 1);
    CHECK(r7.q <= 3);

    auto r12 = dominate(fixture("icosahedron"));
    CHECK(r12.dominating_set.size() <= 3);
    CHECK(verify_dominating_set(fixture("icosahedron"), r12.dominating_set));

    auto k4 = dominate(fixture("k4"));
    CHECK(k4.strategy == Strategy::ExactSmallInput);
    CHECK(k4.dominating_set.size() == 1);

    auto oct = dominate(fixture("octahedron"));
    CHECK(oct.strategy == Strategy::ExactSmallInput);
    CHECK(oct.dominating_set.size() == 2);

    try {
        dominate(fixture("fig2a"));
        FAIL("expected NotTriangulation");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotTriangulation);
    }
}

TEST_CASE("crossover arithmetic") {
    for (long n = 1; n <= 600; ++n)
        for (long q = 0; q <= n; ++q) {
            double s1 = (n - q) / 4.0 + q / 3.0, s2 = (n - q) + q / 5.0;
            CHECK(std::min(s1, s2) <= 17.0 * n / 53 + 1e-9);
        }
}

TEST_CASE("random triangulations stay within the bound") {
    for (std::size_t n = 7; n <= 45; ++n)
        for (std::uint64_t s = 0; s < 6; ++s) {
            PlaneGraph g = triangulation(n, s * 131 + n);
            CAPTURE(to_json(g));
            DominationResult r = dominate(g);
            CHECK(verify_dominating_set(g, r.dominating_set));
            CHECK(r.dominating_set.size() <= bound(n));
            CHECK(r.q == r.residual.order());
            CHECK(4 * r.steps.size() <= n - r.q);
            for (const auto& b : classify_blocks(r.residual)) CHECK((b.outerplanar || b.order() == 6));
        }
}

TEST_CASE("result json") {
    auto r = dominate(fixture("octastack7"));
    std::string j = to_json(r, 7);
    CHECK(j.find("\"bound\":2") != std::string::npos);
    CHECK(j.find("\"strategy\"") != std::string::npos);
}
