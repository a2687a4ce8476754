#pragma once

#include <map>

#include "kalai/linalg.hpp"
#include "kalai/polytope.hpp"

namespace kalai {

struct Face {
    int id = -1;
    Bits verts;    // vertices of P contained in the face
    int dim = -1;  // -1 for the empty face
};

// All faces of a polytope, computed combinatorially from the facet-vertex
// incidence as the closure of facet vertex sets under intersection. Faces are
// ordered by (dimension, lexicographic vertex set); ids are positions in that
// order, so the empty face is id 0 and the polytope itself is the last id.
// Immutable after enumeration; queries are pure.
class FaceLattice {
  public:
    static FaceLattice enumerate(const Polytope& p);

    int size() const { return static_cast<int>(faces_.size()); }
    long s() const { return size() - 1; }  // non-empty faces, including P
    const std::vector<long>& f_vector() const { return fvec_; }
    bool euler_ok() const;

    const Face& face(int id) const { return faces_[id]; }
    int bottom() const { return 0; }
    int top() const { return size() - 1; }
    int dim() const { return d_; }
    int vertex_count() const { return nv_; }

    // id of the face with exactly this vertex set, -1 when no such face
    int id_of(const Bits& vertex_set) const;
    // smallest face containing the given vertex set
    int closure(Bits s) const;

    int meet(int f, int g) const;
    int join(int f, int g) const;

    // cover relations as (lower, upper) pairs
    const std::vector<std::pair<int, int>>& hasse() const { return hasse_; }

    // ids g with lo <= g <= hi in face order
    std::vector<int> interval(int lo, int hi) const;

    bool leq(int f, int g) const { return faces_[f].verts.is_subset_of(faces_[g].verts); }

  private:
    std::vector<Face> faces_;
    std::map<Bits, int> index_;
    std::vector<Bits> facet_sets_;
    std::vector<std::pair<int, int>> hasse_;
    std::vector<long> fvec_;
    int d_ = 0, nv_ = 0;
};

// Face of polar(P) dual to F: vertices w of the polar with <w, v> = 1 for all
// vertices v of F. Order-reversing involution; dim F + dim F* = d - 1.
int dual_face(const Polytope& p, const FaceLattice& l, const Polytope& polar_p,
              const FaceLattice& polar_l, int f);

// Complement of F inside [lo, hi]: the first face G in lattice order with
// meet(F, G) = lo and join(F, G) = hi. Existence is guaranteed (face lattices
// are relatively complemented); absence means the lattice is broken.
int complement_in_interval(const FaceLattice& l, int f, int lo, int hi);

// Normals of the facets containing F; they generate the normal cone N_P(F).
// Empty for F = P (the cone {0}).
Mat normal_cone_generators(const Polytope& p, const FaceLattice& l, int f);

// Vertex barycenter of a non-empty face, an exact relative-interior point.
Vec relint_point(const Polytope& p, const FaceLattice& l, int f);

// The face as a full-dimensional polytope in R^{dim F}, via the affine
// isomorphism that keeps a maximal independent coordinate subset. Requires
// dim F >= 1.
Polytope face_as_polytope(const Polytope& p, const FaceLattice& l, int f);

}  // namespace kalai
