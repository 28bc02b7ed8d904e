#include "domtri/coloring.hpp"

#include <deque>
#include <functional>
#include <map>
#include <optional>

#include "domtri/io.hpp"
#include "domtri/wnt.hpp"

namespace domtri {

int ThreeColoring::class_of(Vertex v) const {
    for (int i = 0; i < 3; ++i)
        if (contains(classes[i], v)) return i;
    return -1;
}

bool is_dominating_coloring(const PlaneGraph& g, const ThreeColoring& c) {
    std::size_t total = 0;
    for (const auto& cls : c.classes) total += cls.size();
    if (total != g.order()) return false;
    for (Vertex v : g.vertices()) {
        std::array<bool, 3> seen{};
        for (Vertex w : g.closed_neighborhood(v)) {
            int k = c.class_of(w);
            if (k < 0) return false;
            seen[k] = true;
        }
        if (!(seen[0] && seen[1] && seen[2])) return false;
    }
    return true;
}

namespace {

using ColorMap = std::map<Vertex, int>;

ThreeColoring to_classes(const ColorMap& color) {
    ThreeColoring out;
    for (auto [v, k] : color) out.classes[k].push_back(v);
    return out;
}

std::vector<Vertex> outer_cycle(const PlaneGraph& g) {
    for (const Face& f : g.faces())
        if (!f.bounded) return f.walk();
    throw Error(ErrorCode::NotNearTriangulation, "no unbounded face");
}

// Colors the disc g given that x and y, consecutive on its outer cycle, are
// already colored differently.
class DiscColorer {
public:
    ColorMap color;

    void run(const PlaneGraph& g, Vertex x, Vertex y) {
        if (g.order() == 3) {
            for (Vertex z : g.vertices())
                if (z != x && z != y) color[z] = 3 - color.at(x) - color.at(y);
            return;
        }
        std::vector<Vertex> cycle = outer_cycle(g);
        const std::size_t k = cycle.size();
        std::map<Vertex, std::size_t> pos;
        for (std::size_t i = 0; i < k; ++i) pos[cycle[i]] = i;

        for (std::size_t i = 0; i < k; ++i) {
            Vertex a = cycle[i];
            for (Vertex b : g.rotation(a)) {
                auto it = pos.find(b);
                if (it == pos.end() || b == cycle[(i + 1) % k] || b == cycle[(i + k - 1) % k]) continue;
                split(g, cycle, i, it->second, x, y);
                return;
            }
        }
        peel(g, cycle, x, y);
    }

private:
    void split(const PlaneGraph& g, const std::vector<Vertex>& cycle, std::size_t i, std::size_t j, Vertex x,
               Vertex y) {
        const std::size_t k = cycle.size();
        Vertex a = cycle[i], b = cycle[j];
        // One side: the arc strictly between a and b going forward from a,
        // plus everything reachable from it without passing a or b.
        VertexSet side{a, b};
        std::deque<Vertex> queue{cycle[(i + 1) % k]};
        std::vector<Vertex> seen{cycle[(i + 1) % k]};
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            side.push_back(v);
            for (Vertex w : g.rotation(v)) {
                if (w == a || w == b || std::find(seen.begin(), seen.end(), w) != seen.end()) continue;
                seen.push_back(w);
                queue.push_back(w);
            }
        }
        side = make_set(side);
        VertexSet other = set_union(set_minus(g.vertices(), side), {std::min(a, b), std::max(a, b)});
        if (!(contains(side, x) && contains(side, y))) std::swap(side, other);
        run(induced_subgraph(g, side), x, y);
        run(induced_subgraph(g, other), a, b);
    }

    void peel(const PlaneGraph& g, const std::vector<Vertex>& cycle, Vertex x, Vertex y) {
        const std::size_t k = cycle.size();
        std::size_t at = k;
        for (std::size_t i = 0; i < k; ++i)
            if (cycle[i] != x && cycle[i] != y && (at == k || cycle[i] < cycle[at])) at = i;
        Vertex v = cycle[at];
        Vertex u = cycle[(at + k - 1) % k], w = cycle[(at + 1) % k];
        run(delete_vertices(g, {v}), x, y);

        int cu = color.at(u), cw = color.at(w);
        if (cu != cw) {
            color[v] = 3 - cu - cw;
            return;
        }
        std::array<bool, 3> seen{};
        for (Vertex n : g.rotation(v)) seen[color.at(n)] = true;
        int pick = -1;
        for (int c = 0; c < 3 && pick < 0; ++c) {
            if (c == cu) continue;
            int rest = 3 - cu - c;
            if (seen[rest]) pick = c;
        }
        // The rotation at v alternates properly from u to w, so some color
        // other than cu is always present.
        color[v] = pick < 0 ? (cu + 1) % 3 : pick;
    }
};

std::optional<ThreeColoring> exhaustive_coloring(const PlaneGraph& g) {
    const VertexSet& ids = g.vertices();
    const std::size_t n = ids.size();
    std::vector<int> col(n, -1);
    auto idx = [&](Vertex v) { return std::lower_bound(ids.begin(), ids.end(), v) - ids.begin(); };
    std::vector<VertexSet> closed;
    for (Vertex v : ids) closed.push_back(g.closed_neighborhood(v));

    // A vertex is checked once its whole closed neighborhood is colored.
    auto ok_upto = [&](std::size_t last) {
        for (std::size_t i = 0; i < n; ++i) {
            bool complete = true;
            std::array<bool, 3> seen{};
            for (Vertex w : closed[i]) {
                auto j = static_cast<std::size_t>(idx(w));
                if (j > last) complete = false;
                else seen[col[j]] = true;
            }
            if (complete && !(seen[0] && seen[1] && seen[2])) return false;
        }
        return true;
    };
    std::function<bool(std::size_t)> go = [&](std::size_t i) {
        if (i == n) return true;
        for (int c = 0; c < 3; ++c) {
            col[i] = c;
            if (ok_upto(i) && go(i + 1)) return true;
        }
        col[i] = -1;
        return false;
    };
    if (!go(0)) return std::nullopt;
    ColorMap m;
    for (std::size_t i = 0; i < n; ++i) m[ids[i]] = col[i];
    return to_classes(m);
}

[[noreturn]] void coloring_failed(const std::string& what, const PlaneGraph& g) {
    throw Error(ErrorCode::ColoringFailed, what, to_json(g));
}

}  // namespace

ThreeColoring nt_dominating_coloring(const PlaneGraph& g) {
    if (!is_near_triangulation(g)) throw Error(ErrorCode::NotNearTriangulation, "coloring needs a near-triangulation");
    Dart d = g.outer_darts().front();
    DiscColorer dc;
    dc.color[d.tail] = 0;
    dc.color[d.head] = 1;
    dc.run(g, d.tail, d.head);
    ThreeColoring out = to_classes(dc.color);
    if (is_dominating_coloring(g, out)) return out;
    if (g.order() <= 12) {
        if (auto alt = exhaustive_coloring(g); alt && is_dominating_coloring(g, *alt)) return *alt;
    }
    coloring_failed("a class of the near-triangulation coloring does not dominate", g);
}

ThreeColoring wnt_dominating_coloring(const PlaneGraph& g) {
    if (!is_wnt(g)) throw Error(ErrorCode::NotWnt, "coloring needs a weak near-triangulation");
    auto bd = blocks(g);
    std::map<Vertex, std::vector<std::size_t>> at_vertex;
    for (std::size_t b = 0; b < bd.blocks.size(); ++b)
        if (bd.blocks[b].order() >= 3)
            for (Vertex v : bd.blocks[b].vertices) at_vertex[v].push_back(b);

    ColorMap color;
    std::vector<bool> done(bd.blocks.size(), false);
    for (std::size_t root = 0; root < bd.blocks.size(); ++root) {
        if (done[root] || bd.blocks[root].order() < 3) continue;
        std::deque<std::size_t> queue{root};
        done[root] = true;
        while (!queue.empty()) {
            std::size_t b = queue.front();
            queue.pop_front();
            const VertexSet& verts = bd.blocks[b].vertices;
            ThreeColoring local = nt_dominating_coloring(induced_subgraph(g, verts));

            std::array<int, 3> perm{0, 1, 2};
            int anchored = 0;
            for (Vertex v : verts) {
                auto it = color.find(v);
                if (it == color.end()) continue;
                if (++anchored > 1) coloring_failed("block reached through two colored cutvertices", g);
                int mine = local.class_of(v), want = it->second;
                std::swap(perm[mine], perm[want]);
            }
            for (int k = 0; k < 3; ++k)
                for (Vertex v : local.classes[k]) color.emplace(v, perm[k]);

            for (Vertex v : verts)
                for (std::size_t nb : at_vertex[v])
                    if (!done[nb]) {
                        done[nb] = true;
                        queue.push_back(nb);
                    }
        }
    }
    if (color.size() != g.order()) coloring_failed("some vertex lies in no triangular block", g);
    ThreeColoring out = to_classes(color);
    if (!is_dominating_coloring(g, out)) coloring_failed("a glued class does not dominate", g);
    return out;
}

VertexSet smallest_class_dominating_set(const PlaneGraph& g) {
    if (g.empty()) throw Error(ErrorCode::PreconditionViolated, "empty graph");
    ThreeColoring c = wnt_dominating_coloring(g);
    std::size_t best = 0;
    for (std::size_t k = 1; k < 3; ++k)
        if (c.classes[k].size() < c.classes[best].size()) best = k;
    return c.classes[best];
}

}  // namespace domtri
