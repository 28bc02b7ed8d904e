#include "domtri/plane_graph.hpp"

#include <numeric>
#include <queue>
#include <set>
#include <string>

namespace domtri {

namespace {

struct UnionFind {
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
    std::vector<int> parent;
};

std::string dart_str(Dart d) {
    return "(" + std::to_string(d.tail) + "," + std::to_string(d.head) + ")";
}

}  // namespace

std::vector<Vertex> Face::walk() const {
    std::vector<Vertex> out;
    out.reserve(darts.size());
    for (const Dart& d : darts) out.push_back(d.tail);
    return out;
}

VertexSet Face::vertex_set() const { return make_set(walk()); }

int PlaneGraph::index_of(Vertex v) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v) return -1;
    return static_cast<int>(it - ids_.begin());
}

bool PlaneGraph::contains(Vertex v) const { return index_of(v) >= 0; }

std::span<const Vertex> PlaneGraph::rotation(Vertex v) const {
    int i = index_of(v);
    if (i < 0) throw Error(ErrorCode::VertexNotPresent, "vertex " + std::to_string(v));
    return rot_[i];
}

int PlaneGraph::dart_index(Vertex u, Vertex v) const {
    int i = index_of(u);
    if (i < 0) return -1;
    const auto& r = rot_[i];
    auto it = std::find(r.begin(), r.end(), v);
    if (it == r.end()) return -1;
    return static_cast<int>(offset_[i] + (it - r.begin()));
}

bool PlaneGraph::adjacent(Vertex u, Vertex v) const { return dart_index(u, v) >= 0; }

VertexSet PlaneGraph::neighbors(Vertex v) const {
    auto r = rotation(v);
    return make_set(std::vector<Vertex>(r.begin(), r.end()));
}

VertexSet PlaneGraph::closed_neighborhood(Vertex v) const {
    auto r = rotation(v);
    std::vector<Vertex> out(r.begin(), r.end());
    out.push_back(v);
    return make_set(std::move(out));
}

std::vector<std::pair<Vertex, Vertex>> PlaneGraph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(size());
    for (std::size_t i = 0; i < ids_.size(); ++i)
        for (Vertex w : rot_[i])
            if (ids_[i] < w) out.emplace_back(ids_[i], w);
    std::sort(out.begin(), out.end());
    return out;
}

int PlaneGraph::face_left_of(Dart d) const {
    int k = dart_index(d.tail, d.head);
    if (k < 0) throw Error(ErrorCode::VertexNotPresent, "no dart " + dart_str(d));
    return face_of_[k];
}

Vertex PlaneGraph::rotation_next(Vertex v, Vertex w) const {
    auto r = rotation(v);
    auto it = std::find(r.begin(), r.end(), w);
    if (it == r.end()) throw Error(ErrorCode::VertexNotPresent, "no dart " + dart_str({v, w}));
    ++it;
    return it == r.end() ? r.front() : *it;
}

Vertex PlaneGraph::rotation_prev(Vertex v, Vertex w) const {
    auto r = rotation(v);
    auto it = std::find(r.begin(), r.end(), w);
    if (it == r.end()) throw Error(ErrorCode::VertexNotPresent, "no dart " + dart_str({v, w}));
    return it == r.begin() ? r.back() : *(it - 1);
}

int PlaneGraph::component_of(Vertex v) const {
    int i = index_of(v);
    if (i < 0) throw Error(ErrorCode::VertexNotPresent, "vertex " + std::to_string(v));
    return comp_[i];
}

bool PlaneGraph::is_external(Vertex v) const {
    int i = index_of(v);
    if (i < 0) throw Error(ErrorCode::VertexNotPresent, "vertex " + std::to_string(v));
    if (rot_[i].empty()) return true;
    for (std::size_t k = offset_[i]; k < offset_[i] + rot_[i].size(); ++k)
        if (!faces_[face_of_[k]].bounded) return true;
    return false;
}

bool PlaneGraph::is_external_edge(Vertex u, Vertex v) const {
    int k = dart_index(u, v);
    if (k < 0) throw Error(ErrorCode::VertexNotPresent, "no edge " + dart_str({u, v}));
    return !faces_[face_of_[k]].bounded || !faces_[face_of_[twin_[k]]].bounded;
}

std::vector<Vertex> PlaneGraph::facial_apexes(Vertex u, Vertex v) const {
    std::vector<Vertex> out;
    int k = dart_index(u, v);
    if (k < 0) return out;
    for (int d : {k, twin_[k]}) {
        const Face& f = faces_[face_of_[d]];
        if (!f.bounded || f.length() != 3) continue;
        for (const Dart& e : f.darts)
            if (e.tail != u && e.tail != v) out.push_back(e.tail);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool PlaneGraph::is_facial_triangle(Vertex a, Vertex b, Vertex c) const {
    for (Vertex w : facial_apexes(a, b))
        if (w == c) return true;
    return false;
}

std::vector<Dart> PlaneGraph::outer_darts() const {
    std::vector<Dart> out;
    for (const Face& f : faces_) {
        if (f.bounded || f.darts.empty()) continue;
        out.push_back(*std::min_element(f.darts.begin(), f.darts.end()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool operator==(const PlaneGraph& a, const PlaneGraph& b) {
    if (a.ids_ != b.ids_) return false;
    for (std::size_t i = 0; i < a.ids_.size(); ++i) {
        const auto& ra = a.rot_[i];
        const auto& rb = b.rot_[i];
        if (ra.size() != rb.size()) return false;
        if (ra.empty()) continue;
        auto it = std::find(rb.begin(), rb.end(), ra.front());
        if (it == rb.end()) return false;
        std::size_t shift = it - rb.begin();
        for (std::size_t k = 0; k < ra.size(); ++k)
            if (ra[k] != rb[(k + shift) % rb.size()]) return false;
    }
    return a.outer_darts() == b.outer_darts();
}

PlaneGraph PlaneGraph::assemble(VertexSet ids, std::vector<std::vector<Vertex>> rotations) {
    PlaneGraph g;
    g.ids_ = std::move(ids);
    g.rot_ = std::move(rotations);
    const std::size_t n = g.ids_.size();

    g.offset_.assign(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& r = g.rot_[i];
        std::vector<Vertex> sorted(r.begin(), r.end());
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw Error(ErrorCode::MultiEdgeOrLoop,
                        "repeated neighbor in rotation of " + std::to_string(g.ids_[i]));
        if (std::binary_search(sorted.begin(), sorted.end(), g.ids_[i]))
            throw Error(ErrorCode::MultiEdgeOrLoop, "loop at " + std::to_string(g.ids_[i]));
        g.offset_[i + 1] = g.offset_[i] + r.size();
    }

    const std::size_t darts = g.offset_[n];
    g.heads_.assign(darts, -1);
    g.twin_.assign(darts, -1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t p = 0; p < g.rot_[i].size(); ++p) {
            Vertex w = g.rot_[i][p];
            int j = g.index_of(w);
            if (j < 0)
                throw Error(ErrorCode::AsymmetricRotation,
                            std::to_string(g.ids_[i]) + " lists undeclared vertex " + std::to_string(w));
            g.heads_[g.offset_[i] + p] = j;
            const auto& rj = g.rot_[j];
            auto it = std::find(rj.begin(), rj.end(), g.ids_[i]);
            if (it == rj.end())
                throw Error(ErrorCode::AsymmetricRotation,
                            std::to_string(g.ids_[i]) + " lists " + std::to_string(w) + " but not conversely");
            g.twin_[g.offset_[i] + p] = static_cast<int>(g.offset_[j] + (it - rj.begin()));
        }
    }

    // Components.
    UnionFind uf(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = g.offset_[i]; k < g.offset_[i + 1]; ++k) uf.unite(static_cast<int>(i), g.heads_[k]);
    g.comp_.assign(n, -1);
    std::vector<int> label(n, -1);
    int next = 0;
    for (std::size_t i = 0; i < n; ++i) {
        int r = uf.find(static_cast<int>(i));
        if (label[r] < 0) label[r] = next++;
        g.comp_[i] = label[r];
    }
    g.component_count_ = static_cast<std::size_t>(next);

    // Faces.
    g.face_of_.assign(darts, -1);
    for (std::size_t start = 0; start < darts; ++start) {
        if (g.face_of_[start] >= 0) continue;
        Face f;
        int fid = static_cast<int>(g.faces_.size());
        std::size_t d = start;
        do {
            g.face_of_[d] = fid;
            int tail = g.heads_[g.twin_[d]];
            f.darts.push_back({g.ids_[tail], g.ids_[g.heads_[d]]});
            int v = g.heads_[d];
            std::size_t p = static_cast<std::size_t>(g.twin_[d]) - g.offset_[v];
            std::size_t deg = g.rot_[v].size();
            d = g.offset_[v] + (p + deg - 1) % deg;
        } while (d != start);
        g.faces_.push_back(std::move(f));
    }
    g.isolated_face_.assign(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        if (!g.rot_[i].empty()) continue;
        g.isolated_face_[i] = static_cast<int>(g.faces_.size());
        g.faces_.push_back(Face{{}, false});
    }
    return g;
}

void PlaneGraph::check_euler() const {
    std::vector<long> v(component_count_, 0), e(component_count_, 0), f(component_count_, 0);
    for (std::size_t i = 0; i < ids_.size(); ++i) {
        v[comp_[i]] += 1;
        e[comp_[i]] += static_cast<long>(rot_[i].size());
        if (isolated_face_[i] >= 0) f[comp_[i]] += 1;
    }
    for (const Face& face : faces_) {
        if (face.darts.empty()) continue;
        f[comp_[index_of(face.darts.front().tail)]] += 1;
    }
    for (std::size_t c = 0; c < component_count_; ++c) {
        if (v[c] - e[c] / 2 + f[c] != 2)
            throw Error(ErrorCode::EulerViolation,
                        "component " + std::to_string(c) + ": V-E+F = " + std::to_string(v[c] - e[c] / 2 + f[c]));
    }
}

void PlaneGraph::check_single_unbounded_face() const {
    std::vector<int> count(component_count_, 0);
    for (std::size_t i = 0; i < ids_.size(); ++i)
        if (isolated_face_[i] >= 0 && !faces_[isolated_face_[i]].bounded) count[comp_[i]] += 1;
    for (const Face& f : faces_) {
        if (f.bounded || f.darts.empty()) continue;
        count[comp_[index_of(f.darts.front().tail)]] += 1;
    }
    for (std::size_t c = 0; c < component_count_; ++c) {
        if (count[c] == 0)
            throw Error(ErrorCode::EmbeddingAmbiguity,
                        "component " + std::to_string(c) + " has no unbounded face");
        if (count[c] > 1)
            throw Error(ErrorCode::EmbeddingAmbiguity,
                        "component " + std::to_string(c) + " has " + std::to_string(count[c]) + " unbounded faces");
    }
}

PlaneGraph PlaneGraph::build(const RotationMap& rotation, const std::vector<Dart>& outer_darts) {
    VertexSet ids;
    std::vector<std::vector<Vertex>> rots;
    for (const auto& [v, r] : rotation) {
        ids.push_back(v);
        rots.push_back(r);
    }
    PlaneGraph g = assemble(std::move(ids), std::move(rots));

    std::vector<int> designated(g.component_count_, -1);
    for (const Dart& d : outer_darts) {
        int k = g.dart_index(d.tail, d.head);
        if (k < 0) throw Error(ErrorCode::OuterDartMissing, "outer dart " + dart_str(d) + " is not an edge");
        int c = g.comp_[g.index_of(d.tail)];
        int f = g.face_of_[k];
        if (designated[c] >= 0 && designated[c] != f)
            throw Error(ErrorCode::EmbeddingAmbiguity,
                        "outer darts of component " + std::to_string(c) + " lie on different faces");
        designated[c] = f;
        g.faces_[f].bounded = false;
    }
    for (std::size_t i = 0; i < g.ids_.size(); ++i) {
        int c = g.comp_[i];
        if (designated[c] < 0 && !g.rot_[i].empty())
            throw Error(ErrorCode::OuterDartMissing, "component containing " + std::to_string(g.ids_[i]));
    }
    g.check_euler();
    return g;
}

PlaneGraph delete_vertices(const PlaneGraph& g, const VertexSet& to_remove) {
    const VertexSet removed = make_set(to_remove);
    for (Vertex v : removed)
        if (!g.contains(v)) throw Error(ErrorCode::VertexNotPresent, "cannot delete " + std::to_string(v));
    if (removed.empty()) return g;

    const std::size_t nf = g.faces_.size();
    UnionFind uf(nf);
    std::vector<char> in_phi(nf, 0);
    for (std::size_t f = 0; f < nf; ++f)
        if (!g.faces_[f].bounded) in_phi[f] = 1;
    for (Vertex v : removed) {
        int i = g.index_of(v);
        int first = g.isolated_face_[i];
        for (std::size_t k = g.offset_[i]; k < g.offset_[i + 1]; ++k) {
            int f = g.face_of_[k];
            in_phi[f] = 1;
            if (first < 0) first = f;
            uf.unite(f, first);
        }
    }
    std::vector<char> class_unbounded(nf, 0);
    for (std::size_t f = 0; f < nf; ++f)
        if (!g.faces_[f].bounded) class_unbounded[uf.find(static_cast<int>(f))] = 1;

    VertexSet ids;
    std::vector<std::vector<Vertex>> rots;
    ids.reserve(g.ids_.size());
    for (std::size_t i = 0; i < g.ids_.size(); ++i) {
        if (contains(removed, g.ids_[i])) continue;
        ids.push_back(g.ids_[i]);
        std::vector<Vertex> r;
        r.reserve(g.rot_[i].size());
        for (Vertex w : g.rot_[i])
            if (!contains(removed, w)) r.push_back(w);
        rots.push_back(std::move(r));
    }
    PlaneGraph h = PlaneGraph::assemble(std::move(ids), std::move(rots));

    auto old_face_unbounded = [&](int f) {
        return in_phi[f] ? class_unbounded[uf.find(f)] != 0 : !g.faces_[f].bounded;
    };
    for (Face& f : h.faces_) {
        if (f.darts.empty()) continue;
        bool unbounded = false;
        for (const Dart& d : f.darts) {
            if (old_face_unbounded(g.face_left_of(d))) {
                unbounded = true;
                break;
            }
        }
        f.bounded = !unbounded;
    }
    for (std::size_t i = 0; i < h.ids_.size(); ++i) {
        if (h.isolated_face_[i] < 0) continue;
        int oi = g.index_of(h.ids_[i]);
        bool unbounded = g.rot_[oi].empty();
        for (std::size_t k = g.offset_[oi]; k < g.offset_[oi + 1]; ++k)
            unbounded = unbounded || old_face_unbounded(g.face_of_[k]);
        h.faces_[h.isolated_face_[i]].bounded = !unbounded;
    }
    h.check_single_unbounded_face();
    h.check_euler();
    return h;
}

PlaneGraph induced_subgraph(const PlaneGraph& g, const VertexSet& keep) {
    return delete_vertices(g, set_minus(g.vertices(), keep));
}

BlockDecomposition blocks(const PlaneGraph& g) {
    const VertexSet& ids = g.vertices();
    const std::size_t n = ids.size();
    auto idx = [&](Vertex v) { return static_cast<int>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin()); };

    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<Block> found;
    int timer = 0;

    struct Frame {
        int v;
        int parent;
        std::size_t next;
    };

    for (std::size_t s = 0; s < n; ++s) {
        if (disc[s] >= 0) continue;
        if (g.degree(ids[s]) == 0) {
            found.push_back(Block{{ids[s]}, {}});
            disc[s] = timer++;
            continue;
        }
        std::vector<Frame> stack{{static_cast<int>(s), -1, 0}};
        disc[s] = low[s] = timer++;
        while (!stack.empty()) {
            Frame& fr = stack.back();
            auto rot = g.rotation(ids[fr.v]);
            if (fr.next < rot.size()) {
                int w = idx(rot[fr.next++]);
                if (disc[w] < 0) {
                    edge_stack.emplace_back(fr.v, w);
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, fr.v, 0});
                } else if (w != fr.parent && disc[w] < disc[fr.v]) {
                    edge_stack.emplace_back(fr.v, w);
                    low[fr.v] = std::min(low[fr.v], disc[w]);
                }
                continue;
            }
            Frame done = fr;
            stack.pop_back();
            if (stack.empty()) break;
            int v = stack.back().v;
            low[v] = std::min(low[v], low[done.v]);
            if (low[done.v] >= disc[v]) {
                Block b;
                std::vector<Vertex> verts;
                while (true) {
                    auto [a, c] = edge_stack.back();
                    edge_stack.pop_back();
                    b.edges.emplace_back(std::min(ids[a], ids[c]), std::max(ids[a], ids[c]));
                    verts.push_back(ids[a]);
                    verts.push_back(ids[c]);
                    if (a == v && c == done.v) break;
                }
                std::sort(b.edges.begin(), b.edges.end());
                b.vertices = make_set(std::move(verts));
                found.push_back(std::move(b));
            }
        }
    }

    std::sort(found.begin(), found.end(), [](const Block& a, const Block& b) { return a.vertices < b.vertices; });

    BlockDecomposition out;
    out.blocks = std::move(found);
    std::map<Vertex, std::vector<int>> membership;
    for (std::size_t b = 0; b < out.blocks.size(); ++b)
        for (Vertex v : out.blocks[b].vertices) membership[v].push_back(static_cast<int>(b));
    out.block_cutvertices.assign(out.blocks.size(), {});
    for (auto& [v, bs] : membership) {
        if (bs.size() < 2) continue;
        out.cutvertices.push_back(v);
        out.cutvertex_blocks.push_back(bs);
        for (int b : bs) out.block_cutvertices[b].push_back(v);
    }
    return out;
}

VertexSet external_vertices(const PlaneGraph& g) {
    VertexSet out;
    for (Vertex v : g.vertices())
        if (g.is_external(v)) out.push_back(v);
    return out;
}

bool is_outerplanar_block(const PlaneGraph& g, const VertexSet& block) {
    BlockDecomposition dec = blocks(g);
    bool found = std::any_of(dec.blocks.begin(), dec.blocks.end(),
                             [&](const Block& b) { return b.vertices == block; });
    if (!found) throw Error(ErrorCode::NotABlock, "vertex set is not a block");
    PlaneGraph sub = induced_subgraph(g, block);
    return external_vertices(sub).size() == block.size();
}

VertexSet interior_vertices(const PlaneGraph& g, const std::vector<Vertex>& cycle) {
    std::set<std::pair<Vertex, Vertex>> cycle_edges;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        Vertex a = cycle[i], b = cycle[(i + 1) % cycle.size()];
        if (!g.adjacent(a, b))
            throw Error(ErrorCode::PreconditionViolated,
                        "cycle edge " + std::to_string(a) + "-" + std::to_string(b) + " missing");
        cycle_edges.emplace(std::min(a, b), std::max(a, b));
    }
    const auto& faces = g.faces();
    std::vector<char> outside(faces.size(), 0);
    std::queue<int> q;
    for (std::size_t f = 0; f < faces.size(); ++f)
        if (!faces[f].bounded) {
            outside[f] = 1;
            q.push(static_cast<int>(f));
        }
    while (!q.empty()) {
        int f = q.front();
        q.pop();
        for (const Dart& d : faces[f].darts) {
            if (cycle_edges.count({std::min(d.tail, d.head), std::max(d.tail, d.head)})) continue;
            int h = g.face_left_of(d.reversed());
            if (!outside[h]) {
                outside[h] = 1;
                q.push(h);
            }
        }
    }
    VertexSet on_cycle = make_set(cycle);
    VertexSet out;
    for (Vertex v : g.vertices()) {
        if (contains(on_cycle, v) || g.degree(v) == 0) continue;
        bool inside = true;
        for (Vertex w : g.rotation(v))
            if (outside[g.face_left_of({v, w})]) inside = false;
        if (inside) out.push_back(v);
    }
    return out;
}

}  // namespace domtri
