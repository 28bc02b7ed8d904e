#include "domtri/oracle.hpp"

#include <bit>
#include <chrono>
#include <functional>
#include <map>

#include "domtri/wnt.hpp"

namespace domtri {

bool verify_dominating_set(const PlaneGraph& g, const VertexSet& s) {
    for (Vertex v : s)
        if (!g.contains(v)) return false;
    for (Vertex v : g.vertices()) {
        if (contains(s, v)) continue;
        auto rot = g.rotation(v);
        if (std::none_of(rot.begin(), rot.end(), [&](Vertex w) { return contains(s, w); })) return false;
    }
    return true;
}

namespace {

using Clock = std::chrono::steady_clock;

class Deadline {
public:
    explicit Deadline(double seconds)
        : end_(Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds))) {}

    void check() {
        if ((++ticks_ & 1023) == 0 && Clock::now() > end_)
            throw Error(ErrorCode::BudgetExceeded, "oracle time limit reached");
    }

private:
    Clock::time_point end_;
    std::uint64_t ticks_ = 0;
};

class DominationSolver {
public:
    DominationSolver(const PlaneGraph& g, const OracleBudget& budget) : ids_(g.vertices()), deadline_(budget.time_limit) {
        n_ = ids_.size();
        full_ = n_ == 64 ? ~0ULL : ((1ULL << n_) - 1);
        for (std::size_t i = 0; i < n_; ++i) {
            std::uint64_t m = 1ULL << i;
            for (Vertex w : g.rotation(ids_[i])) m |= 1ULL << index(w);
            closed_.push_back(m);
            max_cover_ = std::max(max_cover_, std::popcount(m));
        }
    }

    VertexSet solve() {
        if (n_ == 0) return {};
        best_ = greedy();
        std::vector<int> chosen;
        search(0, chosen);
        VertexSet out;
        for (int i : best_) out.push_back(ids_[i]);
        return make_set(out);
    }

private:
    VertexSet ids_;
    std::size_t n_ = 0;
    std::uint64_t full_ = 0;
    std::vector<std::uint64_t> closed_;
    int max_cover_ = 1;
    std::vector<int> best_;
    Deadline deadline_;

    int index(Vertex v) const {
        return static_cast<int>(std::lower_bound(ids_.begin(), ids_.end(), v) - ids_.begin());
    }

    std::vector<int> greedy() const {
        std::vector<int> out;
        std::uint64_t dom = 0;
        while (dom != full_) {
            int pick = 0, gain = -1;
            for (std::size_t i = 0; i < n_; ++i) {
                int c = std::popcount(closed_[i] & ~dom);
                if (c > gain) gain = c, pick = static_cast<int>(i);
            }
            out.push_back(pick);
            dom |= closed_[pick];
        }
        return out;
    }

    void search(std::uint64_t dom, std::vector<int>& chosen) {
        deadline_.check();
        if (dom == full_) {
            if (chosen.size() < best_.size()) best_ = chosen;
            return;
        }
        std::uint64_t open = full_ & ~dom;
        std::size_t lower = (std::popcount(open) + max_cover_ - 1) / max_cover_;
        if (chosen.size() + lower >= best_.size()) return;

        // The open vertex with the fewest possible dominators.
        int v = -1, fewest = 65;
        for (std::uint64_t m = open; m; m &= m - 1) {
            int i = std::countr_zero(m);
            int c = std::popcount(closed_[i]);
            if (c < fewest) fewest = c, v = i;
        }
        std::vector<int> options;
        for (std::uint64_t m = closed_[v]; m; m &= m - 1) options.push_back(std::countr_zero(m));
        std::sort(options.begin(), options.end(), [&](int a, int b) {
            return std::popcount(closed_[a] & open) > std::popcount(closed_[b] & open);
        });
        for (int w : options) {
            chosen.push_back(w);
            search(dom | closed_[w], chosen);
            chosen.pop_back();
        }
    }
};

// Enumerates x ascending, then D ∋ x inside N[x] by size and lexicographically.
std::optional<ReductionStep> enumerate_reductions(const PlaneGraph& g, std::size_t cap, bool skip_oversized,
                                                  const std::function<bool(const PlaneGraph&)>& wnt,
                                                  Deadline* deadline) {
    for (Vertex x : g.vertices()) {
        VertexSet nx = g.closed_neighborhood(x);
        if (nx.size() > cap) {
            if (skip_oversized) continue;
            throw Error(ErrorCode::BudgetExceeded, "|N[" + std::to_string(x) + "]| exceeds the neighborhood budget");
        }
        VertexSet others = set_minus(nx, {x});
        const std::size_t m = others.size();
        for (std::size_t k = 3; k <= m; ++k) {
            std::vector<std::size_t> pick(k);
            for (std::size_t i = 0; i < k; ++i) pick[i] = i;
            while (true) {
                if (deadline) deadline->check();
                VertexSet d{x};
                for (std::size_t i : pick) d.push_back(others[i]);
                d = make_set(d);
                bool ok = false;
                try {
                    ok = wnt(delete_vertices(g, d));
                } catch (const Error& e) {
                    if (e.code() != ErrorCode::EmbeddingAmbiguity) throw;
                }
                if (ok) {
                    ReductionStep step;
                    step.center = x;
                    step.removed = d;
                    step.case_tag = CaseTag::FallbackSearch;
                    step.source = fingerprint(g);
                    return step;
                }
                // Next k-combination of 0..m-1.
                std::size_t i = k;
                while (i > 0 && pick[i - 1] == m - k + i - 1) --i;
                if (i == 0) break;
                ++pick[i - 1];
                for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

VertexSet minimum_dominating_set(const PlaneGraph& g, const OracleBudget& budget) {
    if (g.order() > budget.max_vertices || g.order() > 64)
        throw Error(ErrorCode::BudgetExceeded, std::to_string(g.order()) + " vertices exceed the oracle budget");
    return DominationSolver(g, budget).solve();
}

std::size_t exact_domination_number(const PlaneGraph& g, const OracleBudget& budget) {
    return minimum_dominating_set(g, budget).size();
}

std::optional<ReductionStep> exhaustive_reduction_search(const PlaneGraph& g, const OracleBudget& budget) {
    if (!is_wnt_reference(g)) throw Error(ErrorCode::NotWnt, "reduction search needs a weak near-triangulation");
    Deadline deadline(budget.time_limit);
    return enumerate_reductions(g, budget.max_neighborhood, false, is_wnt_reference, &deadline);
}

std::optional<ReductionStep> capped_reduction_search(const PlaneGraph& g, std::size_t max_neighborhood) {
    return enumerate_reductions(
        g, max_neighborhood, true, [](const PlaneGraph& h) { return static_cast<bool>(is_wnt(h)); }, nullptr);
}

bool is_wnt_reference(const PlaneGraph& g) {
    const VertexSet& ids = g.vertices();
    const std::size_t n = ids.size();
    auto idx = [&](Vertex v) { return std::lower_bound(ids.begin(), ids.end(), v) - ids.begin(); };

    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (Vertex w : g.rotation(ids[i])) adj[i][idx(w)] = 1;

    // Fresh face trace: after dart (a,b) comes (b,c) with c just before a
    // in the counterclockwise rotation at b.
    std::map<std::pair<Vertex, Vertex>, int> face;
    std::vector<std::size_t> length;
    for (Vertex a : ids) {
        for (Vertex b : g.rotation(a)) {
            if (face.count({a, b})) continue;
            int id = static_cast<int>(length.size());
            length.push_back(0);
            Vertex p = a, q = b;
            while (!face.count({p, q})) {
                face[{p, q}] = id;
                ++length[id];
                auto rot = g.rotation(q);
                auto it = std::find(rot.begin(), rot.end(), p);
                Vertex r = it == rot.begin() ? rot.back() : *(it - 1);
                p = q;
                q = r;
            }
        }
    }
    std::vector<char> unbounded(length.size(), 0);
    for (const Dart& d : g.outer_darts()) unbounded[face.at({d.tail, d.head})] = 1;
    for (std::size_t f = 0; f < length.size(); ++f)
        if (!unbounded[f] && length[f] != 3) return false;

    for (std::size_t v = 0; v < n; ++v) {
        bool found = false;
        for (std::size_t a = 0; a < n && !found; ++a)
            for (std::size_t b = a + 1; b < n && !found; ++b)
                found = adj[v][a] && adj[v][b] && adj[a][b];
        if (!found) return false;
    }
    return true;
}

}  // namespace domtri
