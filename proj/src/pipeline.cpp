#include "domtri/pipeline.hpp"

#include <json.hpp>

#include "domtri/coloring.hpp"
#include "domtri/io.hpp"
#include "domtri/oracle.hpp"
#include "domtri/wnt.hpp"

namespace domtri {

std::string_view to_string(Strategy s) {
    switch (s) {
        case Strategy::ReduceThenColor: return "ReduceThenColor";
        case Strategy::ReduceThenBlockCover: return "ReduceThenBlockCover";
        case Strategy::SmallResidual: return "SmallResidual";
        case Strategy::ExactSmallInput: return "ExactSmallInput";
    }
    return "?";
}

std::size_t bound(std::size_t n) { return 17 * n / 53; }

namespace {

void require_six_block(const PlaneGraph& b) {
    if (b.order() != 6 || !is_near_triangulation(b))
        throw Error(ErrorCode::PreconditionViolated, "expected a near-triangulation on 6 vertices");
}

[[noreturn]] void bound_violation(const std::string& what, const PlaneGraph& g) {
    throw Error(ErrorCode::BoundViolation, what, to_json(g));
}

}  // namespace

Vertex six_block_dominator(const PlaneGraph& block) {
    require_six_block(block);
    VertexSet internal = set_minus(block.vertices(), external_vertices(block));
    for (Vertex x : block.vertices())
        if (is_subset(internal, block.closed_neighborhood(x))) return x;
    throw Error(ErrorCode::NoDominatorFound, "no vertex sees every internal vertex", to_json(block));
}

VertexSet six_block_pair(const PlaneGraph& block) {
    require_six_block(block);
    const VertexSet& v = block.vertices();
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (verify_dominating_set(block, {v[i], v[j]})) return {v[i], v[j]};
    throw Error(ErrorCode::NoDominatorFound, "no dominating pair", to_json(block));
}

DominationResult dominate(const PlaneGraph& g) {
    if (!is_triangulation(g)) throw Error(ErrorCode::NotTriangulation, "dominate needs a plane triangulation");
    const std::size_t n = g.order();
    DominationResult r;
    if (n <= 6) {
        r.dominating_set = minimum_dominating_set(g);
        r.strategy = Strategy::ExactSmallInput;
        r.q = n;
        r.residual = g;
        r.bound_ok = true;
        return r;
    }

    PlaneGraph cur = g;
    VertexSet centers, removed;
    while (auto step = find_reduction(cur)) {
        cur = apply_reduction(cur, *step);
        centers.push_back(step->center);
        removed = set_union(removed, step->removed);
        r.steps.push_back(std::move(*step));
    }
    centers = make_set(centers);
    r.residual = cur;
    r.q = cur.order();
    const std::size_t q = r.q, k = r.steps.size();
    const VertexSet outer = external_vertices(g);
    r.external_removed = !set_intersection(outer, removed).empty();

    if (4 * k > n - q) bound_violation("a reduction removed fewer than four vertices", g);

    auto residual_blocks = classify_blocks(cur);
    for (const auto& b : residual_blocks)
        if (!b.outerplanar && b.order() != 6)
            lemma_violation("irreducible residual has a non-outerplanar block of order " +
                                std::to_string(b.order()), g);
    const VertexSet residual_outer = external_vertices(cur);
    if (r.external_removed) {
        for (Vertex v : residual_outer) {
            auto nb = g.neighbors(v);
            if (set_intersection(nb, removed).empty())
                lemma_violation("external residual vertex " + std::to_string(v) + " has no removed neighbor", g);
        }
    }

    struct Candidate {
        VertexSet set;
        Strategy strategy;
    };
    std::vector<Candidate> candidates;

    VertexSet s1 = centers;
    if (!cur.empty()) s1 = set_union(s1, smallest_class_dominating_set(cur));
    if (s1.size() > (n - q) / 4 + q / 3) bound_violation("color strategy exceeds (n-q)/4 + q/3", g);
    candidates.push_back({s1, q <= 3 ? Strategy::SmallResidual : Strategy::ReduceThenColor});

    if (r.external_removed) {
        VertexSet s2 = removed;
        for (const auto& b : residual_blocks) {
            if (b.outerplanar) {
                VertexSet inner = set_minus(b.vertices, residual_outer);
                if (!inner.empty())
                    lemma_violation("outerplanar residual block holds an internal vertex", g);
                continue;
            }
            s2 = set_union(s2, {six_block_dominator(induced_subgraph(cur, b.vertices))});
        }
        if (s2.size() > (n - q) + q / 5) bound_violation("block cover exceeds (n-q) + q/5", g);
        candidates.push_back({s2, Strategy::ReduceThenBlockCover});
    }

    if (residual_blocks.size() == 1 && q == 6 && is_subset(outer, cur.vertices()))
        candidates.push_back({set_union(centers, six_block_pair(cur)), Strategy::SmallResidual});

    const Candidate* best = &candidates.front();
    for (const auto& c : candidates)
        if (c.set.size() < best->set.size()) best = &c;
    r.dominating_set = best->set;
    r.strategy = best->strategy;

    if (!verify_dominating_set(g, r.dominating_set))
        bound_violation(std::string(to_string(r.strategy)) + " set does not dominate", g);
    r.bound_ok = r.dominating_set.size() <= bound(n);
    if (!r.bound_ok)
        bound_violation(std::to_string(r.dominating_set.size()) + " vertices exceed floor(17n/53) = " +
                            std::to_string(bound(n)), g);
    return r;
}

std::string to_json(const DominationResult& r, std::size_t n) {
    nlohmann::ordered_json doc;
    doc["set"] = r.dominating_set;
    doc["size"] = r.dominating_set.size();
    doc["bound"] = bound(n);
    doc["strategy"] = std::string(to_string(r.strategy));
    doc["steps"] = nlohmann::ordered_json::array();
    for (const auto& s : r.steps) doc["steps"].push_back(nlohmann::ordered_json::parse(to_json(s)));
    doc["q"] = r.q;
    return doc.dump();
}

}  // namespace domtri
