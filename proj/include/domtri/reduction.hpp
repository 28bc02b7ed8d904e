#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "domtri/plane_graph.hpp"

namespace domtri {

enum class CaseTag {
    ThreePlusBad,
    TwoBadCommonNeighbor,
    TwoBadAdjacentOnlyU,
    TwoBadNonAdjacentOnlyU,
    OneBad,
    ZeroBadU1NotProblematicCaseA,
    ZeroBadU1NotProblematicCaseB,
    ZeroBadU1ProblematicCase1,
    ZeroBadU1ProblematicCase2,
    FallbackSearch,
};

/// Dotted names, e.g. "TwoBad.AdjacentOnlyU".
std::string_view to_string(CaseTag tag);
const std::vector<CaseTag>& all_case_tags();

/// Named vertices and vertex sets bound while constructing a step
/// (u, T, w1, z1, t, t0, ...).
struct Trace {
    std::map<std::string, Vertex> roles;
    std::map<std::string, VertexSet> sets;
};

/// One reduction: G - removed is a WNT, removed ⊆ N[center], |removed| >= 4.
struct ReductionStep {
    Vertex center{};
    VertexSet removed;
    CaseTag case_tag = CaseTag::FallbackSearch;
    Trace trace;
    /// Fingerprint of the graph the step was computed on.
    std::uint64_t source = 0;
};

std::uint64_t fingerprint(const PlaneGraph& g);

/// JSON record {"center","removed","case_tag","trace"}.
std::string to_json(const ReductionStep& step);

/// Neighbors of the center on the unbounded face, in rotation order, and
/// for each pair of consecutive spokes the internal block vertices lying in
/// the region between them.
struct RegionFan {
    Vertex center{};
    std::vector<Vertex> spokes;
    std::vector<VertexSet> regions;  // regions[k] lies between spokes[k] and spokes[k+1]
};

/// Index into blocks(g).blocks of the first block that is not outerplanar
/// and whose order differs from 6. Throws NotWnt.
std::optional<std::size_t> qualifying_block(const PlaneGraph& g);

/// The smallest internal vertex of `block` with at least two external
/// neighbors such that at most one region holds internal block vertices.
/// Throws NoCenterFound.
RegionFan select_center(const PlaneGraph& g, const Block& block);

/// A reduction of g when g has a qualifying block, following the case
/// analysis on the number of bad vertices of the center. If no constructed
/// candidate verifies, a diagnostic goes to stderr and an exhaustive search
/// is used (tag FallbackSearch); LemmaViolation when that also fails.
std::optional<ReductionStep> find_reduction(const PlaneGraph& g);

/// Same as find_reduction but without the exhaustive fallback: a failed
/// case analysis raises LemmaViolation.
std::optional<ReductionStep> find_reduction_strict(const PlaneGraph& g);

/// Whether step satisfies center ∈ removed ⊆ N[center], |removed| >= 4 and
/// g - removed is a WNT.
bool is_valid_reduction(const PlaneGraph& g, Vertex center, const VertexSet& removed);

/// g - step.removed. Throws StaleStep when the step was computed on another
/// graph.
PlaneGraph apply_reduction(const PlaneGraph& g, const ReductionStep& step);

}  // namespace domtri
