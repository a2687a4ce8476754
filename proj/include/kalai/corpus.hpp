#pragma once

#include <cstdint>

#include "kalai/hanner.hpp"
#include "kalai/polytope.hpp"

namespace kalai {

// Named instances and the deterministic random generators behind the
// randomized test sweeps and the CLI `random` command.

Polytope cube(int d);            // [-1,1]^d
Polytope cross_polytope(int d);  // conv{+-e_i}

// The 3-polytope with vertices (+-1,+-1,0), (+-2,0,+-1): unconditional, 31
// faces, and its x3 = 0 section is a hexagon with 13 faces.
Polytope fig2();

// Path on four vertices 1-2-3-4.
GPGraph path4();

// Clique polytope of the 4-path: 4-dimensional, 20 vertices, 97 faces.
Polytope pi3_clique_polytope();

// splitmix64; fixed algorithm so corpora are bit-identical across platforms.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

// Hull of n_points random rational points closed under all coordinate
// reflections. Deterministic per seed; retries degenerate draws up to 10
// times.
Polytope random_unconditional(int d, std::uint64_t seed, int n_points);

// random_unconditional followed by d random halfspace scalings: proper
// locally anti-blocking, generally no longer unconditional.
Polytope random_lab(int d, std::uint64_t seed, int n_points);

// Random cotree on d leaves labeled in order.
Cotree random_cotree(int d, std::uint64_t seed);

enum class SegmentStyle {
    Unit,        // [-1, 1]
    Symmetric,   // [-a, a], random a: a Hanner polytope up to scaling
    Asymmetric,  // [-a, b], random a != b allowed: generalized Hanner
};

// Expression of a random cotree with leaves drawn per style.
HannerExpr random_hanner_expr(int d, std::uint64_t seed, SegmentStyle style);

}  // namespace kalai
