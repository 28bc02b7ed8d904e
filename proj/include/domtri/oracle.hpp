#pragma once

#include <cstddef>
#include <optional>

#include "domtri/plane_graph.hpp"
#include "domtri/reduction.hpp"

namespace domtri {

struct OracleBudget {
    std::size_t max_vertices = 25;
    std::size_t max_neighborhood = 16;
    double time_limit = 60.0;  // seconds
};

/// Every vertex outside s has a neighbor in s. Ids not in g make the answer
/// false.
bool verify_dominating_set(const PlaneGraph& g, const VertexSet& s);

/// A minimum dominating set by branch and bound: branch on an undominated
/// vertex with the fewest candidate dominators, prune with a counting bound,
/// start from a greedy cover. Throws BudgetExceeded.
VertexSet minimum_dominating_set(const PlaneGraph& g, const OracleBudget& budget = {});
std::size_t exact_domination_number(const PlaneGraph& g, const OracleBudget& budget = {});

/// The first (x, D) with x ∈ D ⊆ N[x], |D| >= 4 and g - D a WNT, with x
/// ascending and D ordered by size then lexicographically. WNT-ness is
/// decided by is_wnt_reference. Throws NotWnt, and BudgetExceeded when some
/// |N[x]| exceeds the budget. The step is tagged FallbackSearch.
std::optional<ReductionStep> exhaustive_reduction_search(const PlaneGraph& g, const OracleBudget& budget = {});

/// Same enumeration, skipping centers with |N[x]| > max_neighborhood and
/// using the fast WNT test.
std::optional<ReductionStep> capped_reduction_search(const PlaneGraph& g, std::size_t max_neighborhood);

/// WNT test written independently of is_wnt: its own face trace from the
/// rotations and a scan over all vertex triples.
bool is_wnt_reference(const PlaneGraph& g);

}  // namespace domtri
