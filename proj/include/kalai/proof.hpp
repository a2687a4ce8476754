#pragma once

#include "kalai/face_lattice.hpp"
#include "kalai/parallel.hpp"

namespace kalai {

// One coordinate direction of the complemented-lattice counting argument:
// F is the face maximizing <e_i, .>, and every non-empty face is classified
// by whether its vertex set meets F's and (-F)'s.
struct PartitionReport {
    int coord = 0;  // 0-based
    int face = -1;  // lattice id of F
    long s_plus = 0, s_zero = 0, s_minus = 0;
    long bound = 0;  // 3^(d-1)
    long complements_found = 0;
    bool all_in_s_plus = false;
    bool sizes_cover = false;  // the three classes partition the s(P) faces
};

// Requires P unconditional; F is the argmax face of the i-th coordinate.
PartitionReport partition_faces(const Polytope& p, const FaceLattice& l, int coord);

// One complement G(lo, hi) of f per pair lo in (empty, f], hi in [f, P);
// the returned faces are pairwise distinct (meet/join recomputed) and, for
// centrally symmetric P, all meet F and avoid -F.
std::vector<int> build_complement_family(const Polytope& p, const FaceLattice& l, int f);

struct BoundReport {
    std::vector<PartitionReport> coords;
    long s = 0;      // exact face count
    long bound = 0;  // 3^d
    bool ok = false;
};

// Runs the partition and complement-family checks for every coordinate and
// cross-checks the implied bound against the exact lattice.
BoundReport verify_unconditional_bound(const Polytope& p, Exec exec = Exec::Parallel);

// id of the face maximizing <e_i, .>.
int argmax_face(const Polytope& p, const FaceLattice& l, int coord);

// id of -F; requires the vertex set to be closed under negation.
int negated_face(const Polytope& p, const FaceLattice& l, int f);

}  // namespace kalai
