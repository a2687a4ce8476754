#include "kalai/face_lattice.hpp"

#include <algorithm>
#include <deque>

#include "kalai/errors.hpp"
#include "kalai/linalg.hpp"

namespace kalai {

namespace {

// (dimension, lexicographic on sorted index lists): the set containing the
// first differing vertex sorts first.
bool face_order(const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    if (a.verts == b.verts) return false;
    Bits x = a.verts ^ b.verts;
    return a.verts[x.find_first()];
}

}  // namespace

FaceLattice FaceLattice::enumerate(const Polytope& p) {
    FaceLattice l;
    l.d_ = p.dim();
    l.nv_ = p.vertex_count();
    l.facet_sets_ = p.incidence();

    std::map<Bits, int> seen;
    std::deque<Bits> queue;
    Bits all(l.nv_);
    all.set();
    seen.emplace(all, 0);
    queue.push_back(all);
    while (!queue.empty()) {
        Bits cur = queue.front();
        queue.pop_front();
        for (const auto& fs : l.facet_sets_) {
            Bits next = cur & fs;
            if (next == cur) continue;
            if (seen.emplace(next, 0).second) queue.push_back(next);
        }
    }
    Bits empty(l.nv_);
    seen.emplace(empty, 0);

    for (const auto& [verts, _] : seen) {
        Face f;
        f.verts = verts;
        if (verts.none()) {
            f.dim = -1;
        } else {
            std::vector<Vec> pts;
            for (int v = 0; v < l.nv_; ++v)
                if (verts[v]) pts.push_back(p.vertices()[v]);
            f.dim = affine_rank(pts);
        }
        l.faces_.push_back(std::move(f));
    }
    std::sort(l.faces_.begin(), l.faces_.end(), face_order);
    for (int i = 0; i < l.size(); ++i) {
        l.faces_[i].id = i;
        l.index_.emplace(l.faces_[i].verts, i);
    }

    l.fvec_.assign(std::max(l.d_, 0), 0);
    for (const auto& f : l.faces_)
        if (f.dim >= 0 && f.dim < l.d_) ++l.fvec_[f.dim];
    if (!l.euler_ok()) throw InvariantViolation("face lattice violates the Euler relation");
    if (l.d_ >= 1 && l.fvec_[0] != l.nv_)
        throw InvariantViolation("atoms of the face lattice are not the vertices");

    // covers: subset pairs one dimension apart (face lattices are graded)
    std::vector<std::vector<int>> by_dim(l.d_ + 2);
    for (const auto& f : l.faces_) by_dim[f.dim + 1].push_back(f.id);
    for (int k = 0; k + 1 < static_cast<int>(by_dim.size()); ++k)
        for (int lo : by_dim[k])
            for (int hi : by_dim[k + 1])
                if (l.faces_[lo].verts.is_subset_of(l.faces_[hi].verts))
                    l.hasse_.emplace_back(lo, hi);
    return l;
}

bool FaceLattice::euler_ok() const {
    long alt = 0;
    for (size_t i = 0; i < fvec_.size(); ++i) alt += (i % 2 ? -1 : 1) * fvec_[i];
    return alt == 1 + (d_ % 2 ? 1 : -1);
}

int FaceLattice::id_of(const Bits& vertex_set) const {
    auto it = index_.find(vertex_set);
    return it == index_.end() ? -1 : it->second;
}

int FaceLattice::closure(Bits s) const {
    Bits acc(nv_);
    acc.set();
    for (const auto& fs : facet_sets_)
        if (s.is_subset_of(fs)) acc &= fs;
    int id = id_of(acc);
    if (id < 0) throw InvariantViolation("closure is not a face");
    return id;
}

int FaceLattice::meet(int f, int g) const {
    int id = id_of(faces_[f].verts & faces_[g].verts);
    if (id < 0) throw InvariantViolation("meet is not a face");
    return id;
}

int FaceLattice::join(int f, int g) const { return closure(faces_[f].verts | faces_[g].verts); }

std::vector<int> FaceLattice::interval(int lo, int hi) const {
    std::vector<int> out;
    for (int g = 0; g < size(); ++g)
        if (leq(lo, g) && leq(g, hi)) out.push_back(g);
    return out;
}

int dual_face(const Polytope& p, const FaceLattice& l, const Polytope& polar_p,
              const FaceLattice& polar_l, int f) {
    const Face& face = l.face(f);
    if (face.verts.none() || face.verts.all())
        throw ImproperFace("dual face needs a non-empty proper face");
    Bits w(polar_p.vertex_count());
    for (int i = 0; i < p.facet_count(); ++i) {
        if (!face.verts.is_subset_of(p.incidence()[i])) continue;
        Vec pv(p.dim());
        for (int c = 0; c < p.dim(); ++c)
            pv[c] = p.facets()[i].normal[c] / p.facets()[i].offset;
        int idx = polar_p.vertex_index(pv);
        if (idx < 0) throw InvariantViolation("facet of P is not a vertex of the polar");
        w.set(idx);
    }
    int id = polar_l.id_of(w);
    if (id < 0) throw InvariantViolation("dual vertex set is not a face of the polar");
    return id;
}

int complement_in_interval(const FaceLattice& l, int f, int lo, int hi) {
    if (!l.leq(lo, f) || !l.leq(f, hi))
        throw InvariantViolation("complement interval does not contain the face");
    for (int g : l.interval(lo, hi))
        if (l.meet(f, g) == lo && l.join(f, g) == hi) return g;
    throw InvariantViolation("no complement found in a face-lattice interval");
}

Mat normal_cone_generators(const Polytope& p, const FaceLattice& l, int f) {
    Mat gens;
    const Bits& fv = l.face(f).verts;
    if (fv.none()) throw ImproperFace("normal cone of the empty face");
    if (fv.all()) return gens;
    for (int i = 0; i < p.facet_count(); ++i)
        if (fv.is_subset_of(p.incidence()[i])) gens.push_back(p.facets()[i].normal);
    return gens;
}

Vec relint_point(const Polytope& p, const FaceLattice& l, int f) {
    const Bits& fv = l.face(f).verts;
    if (fv.none()) throw ImproperFace("relative interior of the empty face");
    Vec c(p.dim(), Rat(0));
    long n = 0;
    for (int v = 0; v < p.vertex_count(); ++v)
        if (fv[v]) {
            for (int i = 0; i < p.dim(); ++i) c[i] += p.vertices()[v][i];
            ++n;
        }
    for (auto& e : c) e /= n;
    return c;
}

Polytope face_as_polytope(const Polytope& p, const FaceLattice& l, int f) {
    const Face& face = l.face(f);
    if (face.dim < 1) throw ImproperFace("face_as_polytope needs dim >= 1");
    std::vector<Vec> pts;
    for (int v = 0; v < p.vertex_count(); ++v)
        if (face.verts[v]) pts.push_back(p.vertices()[v]);
    Mat diff;
    for (size_t i = 1; i < pts.size(); ++i) diff.push_back(pts[i] - pts[0]);
    std::vector<int> cols = pivot_columns(std::move(diff));
    std::vector<Vec> mapped;
    for (const auto& q : pts) {
        Vec x(cols.size());
        for (size_t k = 0; k < cols.size(); ++k) x[k] = q[cols[k]];
        mapped.push_back(std::move(x));
    }
    return Polytope::hull(static_cast<int>(cols.size()), std::move(mapped));
}

}  // namespace kalai
