#include "domtri/reduction.hpp"

#include <iostream>
#include <set>

#include <json.hpp>

#include "domtri/oracle.hpp"
#include "domtri/wnt.hpp"

namespace domtri {

std::string_view to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::ThreePlusBad: return "ThreePlusBad";
        case CaseTag::TwoBadCommonNeighbor: return "TwoBad.CommonNeighbor";
        case CaseTag::TwoBadAdjacentOnlyU: return "TwoBad.AdjacentOnlyU";
        case CaseTag::TwoBadNonAdjacentOnlyU: return "TwoBad.NonAdjacentOnlyU";
        case CaseTag::OneBad: return "OneBad";
        case CaseTag::ZeroBadU1NotProblematicCaseA: return "ZeroBad.U1NotProblematic.CaseA";
        case CaseTag::ZeroBadU1NotProblematicCaseB: return "ZeroBad.U1NotProblematic.CaseB";
        case CaseTag::ZeroBadU1ProblematicCase1: return "ZeroBad.U1Problematic.Case1";
        case CaseTag::ZeroBadU1ProblematicCase2: return "ZeroBad.U1Problematic.Case2";
        case CaseTag::FallbackSearch: return "FallbackSearch";
    }
    return "?";
}

const std::vector<CaseTag>& all_case_tags() {
    static const std::vector<CaseTag> tags = {
        CaseTag::ThreePlusBad,
        CaseTag::TwoBadCommonNeighbor,
        CaseTag::TwoBadAdjacentOnlyU,
        CaseTag::TwoBadNonAdjacentOnlyU,
        CaseTag::OneBad,
        CaseTag::ZeroBadU1NotProblematicCaseA,
        CaseTag::ZeroBadU1NotProblematicCaseB,
        CaseTag::ZeroBadU1ProblematicCase1,
        CaseTag::ZeroBadU1ProblematicCase2,
        CaseTag::FallbackSearch,
    };
    return tags;
}

std::uint64_t fingerprint(const PlaneGraph& g) {
    // FNV-1a over ids, rotations and outer darts.
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::int64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= static_cast<std::uint64_t>(x >> (8 * i)) & 0xff;
            h *= 1099511628211ULL;
        }
    };
    for (Vertex v : g.vertices()) {
        mix(v);
        auto r = g.rotation(v);
        mix(static_cast<std::int64_t>(r.size()));
        for (Vertex w : r) mix(w);
    }
    for (const Dart& d : g.outer_darts()) {
        mix(d.tail);
        mix(d.head);
    }
    return h;
}

std::string to_json(const ReductionStep& step) {
    using ordered_json = nlohmann::ordered_json;
    std::map<std::string, ordered_json> merged;
    for (const auto& [k, v] : step.trace.roles) merged[k] = v;
    for (const auto& [k, s] : step.trace.sets) merged[k] = s;
    ordered_json trace = ordered_json::object();
    for (auto& [k, v] : merged) trace[k] = std::move(v);
    ordered_json doc;
    doc["center"] = step.center;
    doc["removed"] = step.removed;
    doc["case_tag"] = std::string(to_string(step.case_tag));
    doc["trace"] = std::move(trace);
    return doc.dump();
}

bool is_valid_reduction(const PlaneGraph& g, Vertex center, const VertexSet& removed) {
    if (removed.size() < 4 || !contains(removed, center) || !g.contains(center)) return false;
    if (!is_subset(removed, g.closed_neighborhood(center))) return false;
    try {
        return static_cast<bool>(is_wnt(delete_vertices(g, removed)));
    } catch (const Error& e) {
        // A component left inside a bounded face: that face is no triangle.
        if (e.code() == ErrorCode::EmbeddingAmbiguity) return false;
        throw;
    }
}

std::optional<std::size_t> qualifying_block(const PlaneGraph& g) {
    if (!is_wnt(g)) throw Error(ErrorCode::NotWnt, "qualifying_block needs a weak near-triangulation");
    auto bd = blocks(g);
    for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
        const Block& b = bd.blocks[i];
        if (b.order() < 3 || b.order() == 6) continue;
        if (!is_outerplanar_block(g, b.vertices)) return i;
    }
    return std::nullopt;
}

RegionFan select_center(const PlaneGraph& g, const Block& block) {
    const VertexSet& bv = block.vertices;
    VertexSet internal;
    for (Vertex v : bv)
        if (!g.is_external(v)) internal.push_back(v);

    // Bounded triangles with all corners in the block.
    auto inner_face = [&](int f) {
        const Face& face = g.faces()[f];
        if (!face.bounded || face.length() != 3) return false;
        for (const Dart& d : face.darts)
            if (!contains(bv, d.tail)) return false;
        return true;
    };

    for (Vertex u : internal) {
        std::vector<Vertex> spokes;
        for (Vertex w : g.rotation(u))
            if (g.is_external(w)) spokes.push_back(w);
        if (spokes.size() < 2) continue;
        std::rotate(spokes.begin(), std::min_element(spokes.begin(), spokes.end()), spokes.end());
        VertexSet spoke_set = make_set(spokes);

        RegionFan fan{u, spokes, {}};
        std::size_t occupied = 0;
        for (Vertex s : spokes) {
            std::set<int> seen{g.face_left_of({u, s})};
            std::vector<int> stack(seen.begin(), seen.end());
            VertexSet region;
            while (!stack.empty()) {
                int f = stack.back();
                stack.pop_back();
                for (const Dart& d : g.faces()[f].darts) {
                    if (d.tail != u && contains(internal, d.tail)) region.push_back(d.tail);
                    bool spoke_edge = (d.tail == u && contains(spoke_set, d.head)) ||
                                      (d.head == u && contains(spoke_set, d.tail));
                    if (spoke_edge) continue;
                    int next = g.face_left_of(d.reversed());
                    if (!inner_face(next) || seen.count(next)) continue;
                    seen.insert(next);
                    stack.push_back(next);
                }
            }
            region = make_set(region);
            if (!region.empty()) ++occupied;
            fan.regions.push_back(std::move(region));
        }
        if (occupied <= 1) return fan;
    }
    throw Error(ErrorCode::NoCenterFound, "no internal vertex satisfies the region condition");
}

namespace {

// Transcription of the case analysis. Every exit proposes (x, D) and is
// accepted only if it verifies; the first verified candidate wins.
class Engine {
public:
    Engine(const PlaneGraph& g, const Block& block, const RegionFan& fan)
        : g_(g), block_(block.vertices), u_(fan.center), spokes_(fan.spokes) {}

    std::optional<ReductionStep> run() {
        BadSet bs = bad_vertices(g_, u_);
        const VertexSet& T = bs.bad;
        trace_.roles["u"] = u_;
        trace_.sets["T"] = T;
        bool ok = false;
        if (T.size() >= 3) {
            tag_ = CaseTag::ThreePlusBad;
            ok = attempt(u_, set_union({u_}, T));
        } else if (T.size() == 2) {
            ok = two_bad(T[0], T[1]);
        } else if (T.size() == 1) {
            tag_ = CaseTag::OneBad;
            ok = one_bad(T[0]);
        } else {
            ok = zero_bad();
        }
        if (!ok) return std::nullopt;
        return found_;
    }

private:
    const PlaneGraph& g_;
    VertexSet block_;
    Vertex u_;
    std::vector<Vertex> spokes_;

    CaseTag tag_ = CaseTag::FallbackSearch;
    Trace trace_;
    std::optional<ReductionStep> found_;
    std::set<std::pair<Vertex, VertexSet>> tried_;
    std::map<VertexSet, PlaneGraph> minus_cache_;

    bool attempt(Vertex x, VertexSet d) {
        d = make_set(std::move(d));
        if (!tried_.insert({x, d}).second) return false;
        if (!is_valid_reduction(g_, x, d)) return false;
        ReductionStep step;
        step.center = x;
        step.removed = std::move(d);
        step.case_tag = tag_;
        step.trace = trace_;
        step.source = fingerprint(g_);
        found_ = std::move(step);
        return true;
    }

    const PlaneGraph& minus(const VertexSet& unsorted) {
        VertexSet X = make_set(unsorted);
        auto it = minus_cache_.find(X);
        if (it == minus_cache_.end()) it = minus_cache_.emplace(X, delete_vertices(g_, X)).first;
        return it->second;
    }

    // Bad vertices of v in G - X.
    VertexSet bad(const VertexSet& X, Vertex v) {
        if (std::find(X.begin(), X.end(), v) != X.end()) return {};
        return bad_vertices(minus(X), v).bad;
    }

    bool adj(Vertex a, Vertex b) const { return g_.adjacent(a, b); }

    VertexSet apexes(Vertex a, Vertex b) const {
        if (!adj(a, b)) return {};
        return make_set(g_.facial_apexes(a, b));
    }

    VertexSet nbrs(Vertex v) const { return g_.neighbors(v); }

    std::size_t deg_block(Vertex v) const { return set_intersection(nbrs(v), block_).size(); }

    // Interior of a cycle given by consecutive vertices; empty when the
    // vertices do not form a cycle of G.
    VertexSet interior(const std::vector<Vertex>& cycle) const {
        for (std::size_t i = 0; i < cycle.size(); ++i)
            if (!adj(cycle[i], cycle[(i + 1) % cycle.size()])) return {};
        return interior_vertices(g_, cycle);
    }

    // Interior vertices of triangle (a,b,c) that are problematic in G - X
    // have all their bad vertices adjacent to a.
    void check_interior_bad(const VertexSet& X, const std::array<Vertex, 3>& tri, Vertex y, const VertexSet& Ty) {
        if (Ty.empty() || !is_wnt(minus(X))) return;
        try {
            if (!interior_bad_adjacency_check(g_, X, tri, y, Ty))
                lemma_violation("bad vertex of an interior vertex is not adjacent to the triangle corner", g_);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::PreconditionViolated) throw;
        }
    }

    // ---- exactly two bad vertices ----

    bool two_bad(Vertex x1, Vertex x2) {
        trace_.roles["x1"] = x1;
        trace_.roles["x2"] = x2;
        VertexSet X0 = make_set({u_, x1, x2});
        VertexSet common = set_minus(set_intersection(nbrs(x1), nbrs(x2)), {u_});
        if (!common.empty()) {
            tag_ = CaseTag::TwoBadCommonNeighbor;
            for (Vertex t : common) {
                trace_.roles["t"] = t;
                if (attempt(t, set_union(X0, {t}))) return true;
                VertexSet Tt = bad(X0, t);
                trace_.sets["Tt"] = Tt;
                if (attempt(t, set_union(set_union(X0, {t}), Tt))) return true;
            }
            return false;
        }
        if (adj(x1, x2)) {
            tag_ = CaseTag::TwoBadAdjacentOnlyU;
            return two_bad_adjacent(x1, x2, X0);
        }
        tag_ = CaseTag::TwoBadNonAdjacentOnlyU;
        return two_bad_nonadjacent(x1, x2, X0);
    }

    bool two_bad_adjacent(Vertex x1, Vertex x2, const VertexSet& X0) {
        VertexSet w1s = set_minus(apexes(u_, x1), {x2});
        VertexSet w2s = set_minus(apexes(u_, x2), {x1});
        for (Vertex w1 : w1s) {
            for (Vertex w2 : w2s) {
                trace_.roles["w1"] = w1;
                trace_.roles["w2"] = w2;
                if (attempt(u_, set_union(X0, {w1}))) return true;
                if (attempt(u_, set_union(X0, {w2}))) return true;
                VertexSet T1 = bad(X0, w1), T2 = bad(X0, w2);
                if (contains(T1, w2) && contains(T2, w1)) {
                    // Each of w1, w2 is bad for the other: the figure cases.
                    if (mutual_bad(w1, x1, w2, T1, X0)) return true;
                    if (mutual_bad(w2, x2, w1, T2, X0)) return true;
                }
                if (adjacent_orientation(w1, x1, w2, x2, X0)) return true;
                if (adjacent_orientation(w2, x2, w1, x1, X0)) return true;
            }
        }
        return false;
    }

    bool mutual_bad(Vertex a, Vertex xa, Vertex b, const VertexSet& Ta, const VertexSet& X0) {
        trace_.sets["Tw1"] = Ta;
        for (Vertex x : Ta)
            if (x != b && adj(x, u_)) trace_.roles["x"] = x;
        if (attempt(a, set_minus(set_union({a, xa}, Ta), {b}))) return true;
        return attempt(u_, set_union(set_union(X0, {a}), Ta));
    }

    bool adjacent_orientation(Vertex a, Vertex xa, Vertex b, Vertex xb, const VertexSet& X0) {
        trace_.roles["w1"] = a;
        trace_.roles["x1"] = xa;
        trace_.roles["w2"] = b;
        trace_.roles["x2"] = xb;
        VertexSet Ta = bad(X0, a);
        trace_.sets["Tw1"] = Ta;
        if (Ta.size() >= 2 && attempt(a, set_union({xa, a}, Ta))) return true;
        if (Ta.size() == 1) {
            Vertex z = Ta[0];
            trace_.roles["z"] = z;
            VertexSet X1 = set_union(X0, {a, z});
            for (Vertex t : set_minus(apexes(a, z), set_union(X1, {b}))) {
                trace_.roles["t"] = t;
                if (attempt(a, {xa, a, z, t})) return true;
                VertexSet Tt = bad(X1, t);
                trace_.sets["Tt"] = Tt;
                if (attempt(t, set_union(make_set({a, z, t}), Tt))) return true;
            }
            if (attempt(u_, X1)) return true;
        }
        VertexSet inside = set_intersection(interior({u_, a, b}), nbrs(u_));
        for (Vertex y : inside) {
            trace_.roles["y"] = y;
            if (attempt(u_, set_union(X0, {y}))) return true;
            VertexSet Ty = bad(X0, y);
            trace_.sets["Ty"] = Ty;
            check_interior_bad(X0, {u_, a, b}, y, Ty);
            if (attempt(u_, set_union(set_union(X0, {y}), Ty))) return true;
        }
        return false;
    }

    bool two_bad_nonadjacent(Vertex x1, Vertex x2, const VertexSet& X0) {
        const PlaneGraph& h = minus(X0);
        for (auto [xa, xb] : {std::pair{x1, x2}, std::pair{x2, x1}}) {
            VertexSet Aa = apexes(u_, xa), Ab = apexes(u_, xb);
            if (Aa.size() != 2 || Ab.size() != 2) continue;
            for (int i = 0; i < 2; ++i) {
                Vertex w1 = Aa[i], z1 = Aa[1 - i];
                for (int j = 0; j < 2; ++j) {
                    Vertex z2 = Ab[j], w2 = Ab[1 - j];
                    // w1 and z2 must be separated once u, x1, x2 are gone.
                    if (h.component_of(w1) == h.component_of(z2)) continue;
                    trace_.roles["x1"] = xa;
                    trace_.roles["x2"] = xb;
                    trace_.roles["w1"] = w1;
                    trace_.roles["z1"] = z1;
                    trace_.roles["w2"] = w2;
                    trace_.roles["z2"] = z2;
                    if (attempt(u_, set_union(X0, {w1}))) return true;
                    VertexSet T = bad(X0, w1);
                    trace_.sets["Tw1"] = T;
                    if (T.size() >= 2 && attempt(w1, set_union({std::min(w1, xa), std::max(w1, xa)}, T)))
                        return true;
                    if (T.size() == 1) {
                        Vertex z = T[0];
                        trace_.roles["z"] = z;
                        VertexSet X1 = set_union(X0, {std::min(w1, z), std::max(w1, z)});
                        for (Vertex t : set_minus(apexes(w1, z), X1)) {
                            trace_.roles["t"] = t;
                            if (attempt(w1, {xa, w1, z, t})) return true;
                            VertexSet Tt = bad(X1, t);
                            trace_.sets["Tt"] = Tt;
                            if (attempt(t, set_union(make_set({t, z, w1}), Tt))) return true;
                        }
                    }
                }
            }
        }
        return false;
    }

    // ---- exactly one bad vertex ----

    bool one_bad(Vertex x1) {
        trace_.roles["x1"] = x1;
        VertexSet X0 = make_set({u_, x1});
        VertexSet A = apexes(u_, x1);
        for (Vertex v : A)
            if (deg_block(v) < 3) lemma_violation("neighbor of the bad vertex has block degree below 3", g_);
        for (std::size_t i = 0; i < A.size(); ++i) {
            Vertex w1 = A[i];
            for (std::size_t j = 0; j < A.size(); ++j) {
                if (i == j) continue;
                if (one_bad_labelled(x1, w1, A[j], X0)) return true;
            }
        }
        return false;
    }

    bool one_bad_labelled(Vertex x1, Vertex w1, Vertex z1, const VertexSet& X0) {
        trace_.roles["w1"] = w1;
        trace_.roles["z1"] = z1;
        VertexSet Tw = bad(X0, w1);
        if (attempt(w1, set_union(set_union(X0, {w1}), Tw))) return true;
        if (attempt(u_, set_union(X0, {std::min(w1, z1), std::max(w1, z1)}))) return true;

        VertexSet X1 = set_union(X0, {w1});
        VertexSet Tz = bad(X1, z1);
        trace_.sets["Tz1"] = Tz;
        VertexSet X2 = set_union(X1, {z1});
        if (adj(z1, w1) && attempt(z1, set_union(X2, Tz))) return true;
        VertexSet base = set_union(make_set({u_, x1, z1}), Tz);
        if (deg_block(w1) == 3 && attempt(z1, base)) return true;

        VertexSet far;
        for (Vertex t : Tz)
            if (!adj(t, w1)) far.push_back(t);
        if (!far.empty() && attempt(z1, set_union(make_set({u_, x1, z1}), far))) return true;

        bool all_near_u = std::all_of(Tz.begin(), Tz.end(), [&](Vertex t) { return adj(t, u_); });
        if (all_near_u && attempt(u_, set_union(X2, Tz))) return true;

        for (Vertex y : Tz) {
            if (adj(y, u_)) continue;
            trace_.roles["y"] = y;
            VertexSet zs = set_intersection(apexes(y, w1), apexes(y, z1));
            for (Vertex z : zs) {
                trace_.roles["z"] = z;
                for (Vertex y1 : set_minus(apexes(w1, z), {y})) {
                    trace_.roles["y1"] = y1;
                    if (attempt(z1, set_minus(base, make_set({z, y1})))) return true;
                }
                VertexSet inside = set_intersection(interior({u_, z, z1}), nbrs(u_));
                for (Vertex xp : inside) {
                    trace_.roles["x"] = xp;
                    if (attempt(u_, set_union(X1, {xp}))) return true;
                    VertexSet Tx = bad(X1, xp);
                    check_interior_bad(X1, {u_, z, z1}, xp, Tx);
                    if (attempt(u_, set_union(set_union(X1, {xp}), Tx))) return true;
                }
                if (Tz.size() > 2 && attempt(z1, set_minus(base, make_set({z, y})))) return true;
                if (attempt(z1, {u_, x1, z1, z})) return true;
                if (attempt(u_, {u_, x1, w1, z})) return true;
            }
        }
        return false;
    }

    // ---- no bad vertices ----

    bool zero_bad() {
        VertexSet ordered = make_set(spokes_);
        const PlaneGraph& gu = minus({u_});
        std::map<Vertex, BadSet> status;
        for (Vertex s : ordered) status[s] = bad_vertices(gu, s);

        auto set_tag = [&](Vertex s) {
            tag_ = status[s].problematic ? CaseTag::ZeroBadU1ProblematicCase1
                                         : CaseTag::ZeroBadU1NotProblematicCaseA;
        };
        for (Vertex s : ordered) {
            if (deg_block(s) != 3 || outside_triangle(s)) continue;
            set_tag(s);
            trace_.roles["u1"] = s;
            if (degree_three_spoke(s)) return true;
        }
        for (Vertex s : ordered) {
            set_tag(s);
            trace_.roles = {{"u", u_}, {"u1", s}};
            trace_.sets = {{"T", {}}};
            if (status[s].problematic) {
                trace_.sets["Tu1"] = status[s].bad;
                if (u1_problematic(s, status[s].bad)) return true;
            } else if (u1_not_problematic(s)) {
                return true;
            }
        }
        return false;
    }

    // s lies in a triangle s a b with a, b outside the block.
    bool outside_triangle(Vertex s) const {
        VertexSet out = set_minus(nbrs(s), block_);
        for (std::size_t i = 0; i < out.size(); ++i)
            for (std::size_t j = i + 1; j < out.size(); ++j)
                if (adj(out[i], out[j])) return true;
        return false;
    }

    bool degree_three_spoke(Vertex s) {
        VertexSet zs = set_minus(set_intersection(nbrs(s), block_), {u_});
        if (zs.size() != 2) return false;
        VertexSet X = make_set({u_, s});
        for (auto [z1, z2] : {std::pair{zs[0], zs[1]}, std::pair{zs[1], zs[0]}}) {
            trace_.roles["z1"] = z1;
            trace_.roles["z2"] = z2;
            if (attempt(z1, set_union(set_union(X, {z1}), bad(X, z1)))) return true;
            VertexSet four = make_set({u_, s, z1, z2});
            if (attempt(u_, four)) return true;
            if (attempt(z2, set_union(four, bad(set_union(X, {z1}), z2)))) return true;
            if (attempt(z1, set_union(make_set({u_, z1}), bad({u_}, z1)))) return true;
        }
        return false;
    }

    bool u1_not_problematic(Vertex u1) {
        VertexSet X1 = make_set({u_, u1});
        VertexSet A = apexes(u_, u1);
        for (std::size_t i = 0; i < A.size(); ++i) {
            Vertex x = A[i];
            if (!g_.is_external(x)) continue;
            Vertex y = A.size() == 2 ? A[1 - i] : x;
            Vertex u2 = (y != x && g_.is_external_edge(u1, y)) ? y : x;
            tag_ = CaseTag::ZeroBadU1NotProblematicCaseA;
            trace_.roles["u2"] = u2;
            if (attempt(u2, set_union(set_union(X1, {u2}), bad(X1, u2)))) return true;
            VertexSet X2 = set_union(X1, {u2});
            for (Vertex t : set_minus(apexes(u_, u2), {u1})) {
                tag_ = CaseTag::ZeroBadU1NotProblematicCaseA;
                trace_.roles["t"] = t;
                if (attempt(u_, set_union(X2, {t}))) return true;
                VertexSet Tt = bad(X2, t);
                trace_.sets["Tt"] = Tt;
                if (adj(t, u1) && attempt(t, set_union(set_union(X2, {t}), Tt))) return true;
                if (attempt(t, set_union(make_set({u_, u2, t}), Tt))) return true;
                VertexSet X = set_union(set_union(X2, {t}), Tt);
                for (Vertex t0 : Tt) {
                    if (!adj(t0, u1)) continue;
                    trace_.roles["t0"] = t0;
                    if (!adj(t0, u_)) {
                        tag_ = CaseTag::ZeroBadU1NotProblematicCaseA;
                        if (case_a(u1, u2, t, t0, Tt, X2, X)) return true;
                    } else {
                        tag_ = CaseTag::ZeroBadU1NotProblematicCaseB;
                        if (case_b(u1, u2, t, t0, X2, X)) return true;
                    }
                }
            }
        }
        return false;
    }

    bool case_a(Vertex u1, Vertex u2, Vertex t, Vertex t0, const VertexSet& Tt, const VertexSet& X2,
                const VertexSet& X) {
        VertexSet Z = set_intersection(interior({t0, u1, u_, t}), nbrs(t0));
        VertexSet base = set_union(make_set({u_, u2, t}), Tt);
        for (Vertex z : Z) {
            trace_.roles["z"] = z;
            VertexSet zps = set_minus(set_intersection(nbrs(u1), nbrs(z)), make_set({u_, t, t0, u2}));
            for (Vertex zp : zps)
                if (attempt(t, set_minus(base, make_set({z, zp})))) return true;
            VertexSet inside = set_intersection(interior({u_, t, z}), nbrs(u_));
            for (Vertex yp : inside) {
                trace_.roles["y"] = yp;
                if (attempt(u_, set_union(X2, {yp}))) return true;
                VertexSet Ty = bad(X2, yp);
                check_interior_bad(X2, {u_, t, z}, yp, Ty);
                if (attempt(u_, set_union(set_union(X2, {yp}), Ty))) return true;
            }
            if (Tt.size() >= 3 && attempt(t, set_minus(X, make_set({u1, z, t0})))) return true;
            if (attempt(u_, set_minus(X, make_set({u1, t0})))) return true;
            if (attempt(t, set_minus(X, make_set({u1, u2})))) return true;
            if (attempt(u_, set_minus(X, make_set({u2, t0})))) return true;
            if (attempt(u1, {u_, u1, z, t0})) return true;
            if (attempt(u_, set_minus(X, make_set({t, t0})))) return true;
        }
        return false;
    }

    bool case_b(Vertex u1, Vertex u2, Vertex t, Vertex t0, const VertexSet& X2, const VertexSet& X) {
        if (attempt(u_, set_union(X2, make_set({t, t0})))) return true;
        if (attempt(t, set_minus(X, make_set({u1, t0})))) return true;
        if (attempt(t, set_minus(X, make_set({u1, u2})))) return true;
        return attempt(t, set_minus(X, {u1}));
    }

    bool u1_problematic(Vertex u1, const VertexSet& Tu1) {
        tag_ = CaseTag::ZeroBadU1ProblematicCase1;
        if (Tu1.size() >= 2) return attempt(u1, set_union(make_set({u_, u1}), Tu1));
        if (Tu1.size() != 1) return false;
        Vertex xx = Tu1[0];
        trace_.roles["x"] = xx;
        VertexSet X3 = make_set({u_, u1, xx});
        for (Vertex t : set_minus(apexes(u1, xx), {u_})) {
            tag_ = CaseTag::ZeroBadU1ProblematicCase1;
            trace_.roles["t"] = t;
            if (adj(u_, t) && attempt(t, set_union(set_union(X3, {t}), bad(X3, t)))) return true;
            if (attempt(u1, set_union(X3, {t}))) return true;
            VertexSet Tt = bad(X3, t);
            trace_.sets["Tt"] = Tt;
            VertexSet t0s = set_intersection(Tt, nbrs(u_));
            if (!t0s.empty()) {
                for (Vertex t0 : t0s) {
                    trace_.roles["t0"] = t0;
                    if (case_1(u1, xx, t, t0, Tt)) return true;
                }
            } else {
                tag_ = CaseTag::ZeroBadU1ProblematicCase2;
                if (attempt(t, set_union(make_set({u1, xx, t}), Tt))) return true;
                if (g_.degree(u_) == 3) {
                    for (Vertex w : set_minus(nbrs(u_), make_set({u1, xx}))) {
                        trace_.roles["w"] = w;
                        if (attempt(w, set_union(set_union(X3, {w}), bad(X3, w)))) return true;
                    }
                }
            }
        }
        return false;
    }

    bool case_1(Vertex u1, Vertex xx, Vertex t, Vertex t0, const VertexSet& Tt) {
        VertexSet inside = interior({u_, u1, t, t0});
        VertexSet near_u = set_intersection(inside, nbrs(u_));
        VertexSet base = set_union(make_set({u1, xx, t}), Tt);
        for (std::size_t i = 0; i < near_u.size(); ++i)
            for (std::size_t j = i + 1; j < near_u.size(); ++j)
                if (adj(near_u[i], near_u[j]) && attempt(t, set_minus(base, {near_u[i], near_u[j]}))) return true;
        for (Vertex w : set_minus(apexes(u_, u1), {t})) {
            trace_.roles["w"] = w;
            if (attempt(t, set_minus(set_union(make_set({xx, t}), Tt), {w}))) return true;
        }
        for (Vertex y : set_minus(Tt, {t0})) {
            trace_.roles["y"] = y;
            if (attempt(u1, {u_, u1, xx, t, t0, y})) return true;
            if (attempt(t, {xx, t, t0, y})) return true;
        }
        VertexSet five = make_set({u_, u1, xx, t, t0});
        if (attempt(u1, five)) return true;
        for (Vertex z : near_u) {
            if (!adj(z, u1) || !adj(z, t) || !adj(z, t0)) continue;
            trace_.roles["z"] = z;
            if (attempt(t, {t, xx, z, u1})) return true;
            if (attempt(z, set_union(make_set({z, u_, t0}), bad(five, z)))) return true;
        }
        return false;
    }
};

std::optional<ReductionStep> reduce(const PlaneGraph& g, bool strict) {
    auto qb = qualifying_block(g);
    if (!qb) return std::nullopt;
    Block block = blocks(g).blocks[*qb];

    std::string why;
    try {
        RegionFan fan = select_center(g, block);
        Engine engine(g, block, fan);
        if (auto step = engine.run()) return step;
        why = "case analysis produced no valid reduction at center " + std::to_string(fan.center);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NoCenterFound && e.code() != ErrorCode::LemmaViolation &&
            e.code() != ErrorCode::EmbeddingAmbiguity)
            throw;
        if (strict) throw;
        why = e.what();
    }
    if (strict) lemma_violation(why, g);

    std::cerr << "domtri: " << why << "; falling back to exhaustive search\n";
    auto step = capped_reduction_search(g, 16);
    if (!step) lemma_violation(why + "; exhaustive search found nothing either", g);
    return step;
}

}  // namespace

std::optional<ReductionStep> find_reduction(const PlaneGraph& g) { return reduce(g, false); }

std::optional<ReductionStep> find_reduction_strict(const PlaneGraph& g) { return reduce(g, true); }

PlaneGraph apply_reduction(const PlaneGraph& g, const ReductionStep& step) {
    if (step.source != fingerprint(g) || !is_subset(step.removed, g.vertices()))
        throw Error(ErrorCode::StaleStep, "step was computed on a different graph");
    PlaneGraph r = delete_vertices(g, step.removed);
    if (!is_wnt(r)) lemma_violation("applying a verified reduction did not leave a WNT", g);
    return r;
}

}  // namespace domtri
