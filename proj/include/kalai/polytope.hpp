#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <vector>

#include "kalai/vec.hpp"

namespace kalai {

using Bits = boost::dynamic_bitset<std::uint64_t>;

// One inequality <normal, x> <= offset. Canonical form: normal is a primitive
// integer vector (coprime entries), offset scaled along.
struct Facet {
    Vec normal;
    Rat offset;

    friend bool operator==(const Facet& a, const Facet& b) {
        return a.normal == b.normal && a.offset == b.offset;
    }
    friend bool operator<(const Facet& a, const Facet& b) {
        if (a.normal != b.normal) return a.normal < b.normal;
        return a.offset < b.offset;
    }
};

// Full-dimensional bounded convex polytope carrying both representations and
// the facet x vertex incidence matrix. Canonical: vertices sorted
// lexicographically, facets in canonical scaling sorted lexicographically, so
// equality is structural. Immutable after construction.
class Polytope {
  public:
    // Convex hull of a point set; requires the points to affinely span R^dim.
    static Polytope hull(int dim, std::vector<Vec> points);

    // Vertex enumeration of a bounded full-dimensional inequality system.
    static Polytope from_inequalities(int dim, std::vector<Facet> rows);

    int dim() const { return dim_; }
    const std::vector<Vec>& vertices() const { return verts_; }
    const std::vector<Facet>& facets() const { return facets_; }
    const std::vector<Bits>& incidence() const { return inc_; }
    int vertex_count() const { return static_cast<int>(verts_.size()); }
    int facet_count() const { return static_cast<int>(facets_.size()); }

    bool contains(const Vec& x) const;
    // Origin strictly inside, i.e. every facet offset is positive.
    bool origin_interior() const;
    Rat slack(int f, const Vec& x) const { return facets_[f].offset - dot(facets_[f].normal, x); }

    // Index of v in the canonical vertex order, -1 if absent.
    int vertex_index(const Vec& v) const;

    friend bool operator==(const Polytope& a, const Polytope& b) {
        return a.dim_ == b.dim_ && a.verts_ == b.verts_ && a.facets_ == b.facets_;
    }

  private:
    Polytope() = default;
    // Canonicalizes, rebuilds incidence and validates the full invariant set;
    // used when both representations are known without another conversion.
    static Polytope make(int dim, std::vector<Vec> verts, std::vector<Facet> facets);
    void finish();

    friend Polytope polar(const Polytope&);
    friend Polytope product(const Polytope&, const Polytope&);
    friend Polytope reflect(const Polytope&, int);

    int dim_ = 0;
    std::vector<Vec> verts_;
    std::vector<Facet> facets_;
    std::vector<Bits> inc_;
};

// Polar dual P° = {y : <x,y> <= 1 on P}; requires the origin interior.
// An involution: polar(polar(P)) == P.
Polytope polar(const Polytope& p);

Polytope product(const Polytope& p, const Polytope& q);

// conv(P x {0} u {0} x Q); dual to the product of the duals.
Polytope free_sum(const Polytope& p, const Polytope& q);

// P intersected with the coordinate subspace of J, embedded in R^{|J|}
// (coordinates of J in ascending order).
Polytope section(const Polytope& p, IndexSet j);

// Hull of the projected vertices, embedded in R^{|J|}.
Polytope projection(const Polytope& p, IndexSet j);

// Mirror image in the coordinate hyperplane x_i = 0.
Polytope reflect(const Polytope& p, int coord);

// Piecewise linear map scaling the positive side of coordinate i by
// alpha_plus and the negative side by alpha_minus. Only defined for locally
// anti-blocking polytopes; preserves their combinatorics.
Polytope halfspace_scale(const Polytope& p, int coord, const Rat& alpha_plus,
                         const Rat& alpha_minus);

// Halfspace-scales a proper locally anti-blocking polytope so every axis
// projection becomes [-1,1]. When scales is non-null, receives the original
// ranges (a_i, b_i) with pi_i(P) = [-a_i, b_i].
Polytope normalize(const Polytope& p, std::vector<std::pair<Rat, Rat>>* scales = nullptr);

// Exact d-volume by triangulation from an interior apex over facet
// triangulations (apex: origin when interior, else the vertex barycenter).
Rat volume(const Polytope& p);

// vol(P) * vol(P°); requires the origin interior.
Rat mahler(const Polytope& p);

Vec vertex_barycenter(const Polytope& p);

}  // namespace kalai
