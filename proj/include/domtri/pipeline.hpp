#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "domtri/plane_graph.hpp"
#include "domtri/reduction.hpp"

namespace domtri {

enum class Strategy { ReduceThenColor, ReduceThenBlockCover, SmallResidual, ExactSmallInput };

std::string_view to_string(Strategy s);

struct DominationResult {
    VertexSet dominating_set;
    Strategy strategy = Strategy::ExactSmallInput;
    std::vector<ReductionStep> steps;
    std::size_t q = 0;  // residual order
    /// |dominating_set| <= bound(n). Always true for n <= 6, where the bound
    /// is not claimed.
    bool bound_ok = false;
    PlaneGraph residual;
    /// Whether some external vertex of the input was removed by a reduction.
    bool external_removed = false;
};

/// floor(17n/53).
std::size_t bound(std::size_t n);

/// Smallest vertex of an order-6 near-triangulation whose closed
/// neighborhood holds every internal vertex. Throws PreconditionViolated,
/// NoDominatorFound.
Vertex six_block_dominator(const PlaneGraph& block);

/// First dominating pair in lexicographic order. Throws PreconditionViolated.
VertexSet six_block_pair(const PlaneGraph& block);

/// Reduces to an irreducible residual, then takes the smallest of
///   S1: the centers plus the smallest dominating color class of the residual,
///   S2: every removed vertex plus one dominator per non-outerplanar block of
///       order 6 (only when an external vertex was removed),
///   and, for a residual that is one order-6 block holding all outer vertices
///   of the input, the centers plus a dominating pair.
/// Inputs with n <= 6 are solved exactly. Every intermediate certificate is
/// asserted. Throws NotTriangulation, LemmaViolation, BoundViolation.
DominationResult dominate(const PlaneGraph& g);

/// {"set","size","bound","strategy","steps","q"}.
std::string to_json(const DominationResult& r, std::size_t n);

}  // namespace domtri
