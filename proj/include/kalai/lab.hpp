#pragma once

#include <optional>

#include "kalai/polytope.hpp"

namespace kalai {

// Witness for a failed classification predicate: either a vertex whose
// mirror/projection leaves the polytope, or the axis involved.
struct Witness {
    std::string kind;  // "missing_negation" | "missing_reflection" | "projection_escapes" | "origin_on_boundary"
    Vec point;
    int axis = -1;  // 0-based, -1 when not applicable
};

struct ClassificationReport {
    bool centrally_symmetric = false;
    bool unconditional = false;
    bool locally_anti_blocking = false;
    bool proper = false;
    std::optional<Witness> witness;
};

// -P = P, tested as closure of the vertex set under negation.
bool is_centrally_symmetric(const Polytope& p, Witness* w = nullptr);

// Invariant under reflection in every coordinate hyperplane.
bool is_unconditional(const Polytope& p, Witness* w = nullptr);

// pi_J(P) = P n R^d_J for all J. Zeroing one coordinate of a point at a time
// composes to every pi_J and membership is preserved stepwise, and convexity
// extends the vertex check to all of P, so testing single-coordinate zeroings
// of vertices suffices.
bool is_locally_anti_blocking(const Polytope& p, Witness* w = nullptr);

// Origin strictly interior.
bool is_proper(const Polytope& p, Witness* w = nullptr);

ClassificationReport classify(const Polytope& p);

}  // namespace kalai
