#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "domtri/plane_graph.hpp"

namespace domtri {

/// splitmix64: state += 0x9E3779B97F4A7C15, then
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
/// below(n) is next() % n. Spelled out so corpora are reproducible from any
/// implementation of the recurrence.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    std::uint64_t below(std::uint64_t n) { return next() % n; }

private:
    std::uint64_t state_;
};

enum class Family { Stacked, FlipWalk, Wheel, FanStrip, Fixture };

struct GenSpec {
    Family family = Family::Stacked;
    std::size_t n = 3;          // vertices (stacked, flipwalk), rim size (wheel), k (fan_strip)
    std::uint64_t seed = 0;
    std::size_t steps = 0;      // flip attempts (flipwalk); 0 means 5n
    std::string fixture;        // name (fixture)
};

Family parse_family(std::string_view name);
std::string_view to_string(Family f);

/// Named graphs: k4, octahedron, icosahedron, fig2a, fig2b, fig2c, fig2d,
/// stack5, pinwheel8, octastack7.
PlaneGraph fixture(std::string_view name);
const std::vector<std::string>& fixture_names();

/// Random stacked (Apollonian) triangulation on n >= 3 vertices 0..n-1.
PlaneGraph stacked(std::size_t n, std::uint64_t seed);

/// `steps` random flip attempts on internal edges of a triangulation; flips
/// that would duplicate an edge are skipped.
PlaneGraph flip_walk(const PlaneGraph& g, std::size_t steps, std::uint64_t seed);

/// Hub 0 joined to the cycle 1..rim.
PlaneGraph wheel(std::size_t rim);

/// Triangulated strip on the path 0..2k: edges i(i+1) and i(i+2).
PlaneGraph fan_strip(std::size_t k);

PlaneGraph generate(const GenSpec& spec);

}  // namespace domtri
