#pragma once

#include <string>

#include "domtri/plane_graph.hpp"

namespace domtri {

/// Canonical JSON graph text:
///   {"outer_darts":[[t,h],...],"rotation":{"id":[ids ccw],...},"vertices":[ids]}
/// Keys sorted, vertex keys in numeric order, each rotation starting at its
/// smallest neighbor, one outer dart per component (smallest dart of its
/// unbounded face).
std::string to_json(const PlaneGraph& g);

/// Parses the JSON graph format. Malformed documents raise FormatError;
/// embedding problems raise the usual build errors.
PlaneGraph from_json(const std::string& text);

PlaneGraph load_graph(const std::string& path);

struct DotAnnotations {
    VertexSet removed;
    VertexSet dominating;
    VertexSet external;
};

/// Deterministic undirected DOT text (nodes and edges in ascending order).
std::string export_dot(const PlaneGraph& g, const DotAnnotations& notes = {});

}  // namespace domtri
