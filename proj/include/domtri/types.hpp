#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace domtri {

/// Opaque vertex identifier. Ids are kept when vertices are deleted.
using Vertex = int;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

struct Dart {
    Vertex tail = 0;
    Vertex head = 0;

    Dart reversed() const { return {head, tail}; }
    friend auto operator<=>(const Dart&, const Dart&) = default;
};

enum class ErrorCode {
    // Input / domain errors.
    AsymmetricRotation,
    EulerViolation,
    OuterDartMissing,
    MultiEdgeOrLoop,
    VertexNotPresent,
    EmbeddingAmbiguity,
    NotABlock,
    NotWnt,
    NotNearTriangulation,
    NotTriangulation,
    PreconditionViolated,
    StaleStep,
    NoCenterFound,
    BudgetExceeded,
    UnknownFixture,
    FormatError,
    // Defects: a proved statement failed on a concrete input.
    LemmaViolation,
    ColoringFailed,
    BoundViolation,
    NoDominatorFound,
};

std::string_view to_string(ErrorCode code);

/// True for error classes that falsify either a proved claim or the
/// implementation of it.
bool is_defect(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what, std::string witness = {})
        : std::runtime_error(std::string(to_string(code)) + ": " + what),
          code_(code), witness_(std::move(witness)) {}

    ErrorCode code() const noexcept { return code_; }
    /// Serialized counterexample graph for defect errors, empty otherwise.
    const std::string& witness() const noexcept { return witness_; }

private:
    ErrorCode code_;
    std::string witness_;
};

// Small helpers on sorted vertex sets.

inline VertexSet make_set(std::vector<Vertex> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

inline VertexSet make_set(std::initializer_list<Vertex> v) {
    return make_set(std::vector<Vertex>(v));
}

inline bool contains(const VertexSet& s, Vertex v) {
    return std::binary_search(s.begin(), s.end(), v);
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline bool is_subset(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace domtri
