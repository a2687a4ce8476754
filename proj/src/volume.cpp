#include "kalai/errors.hpp"
#include "kalai/face_lattice.hpp"
#include "kalai/linalg.hpp"
#include "kalai/polytope.hpp"

namespace kalai {

namespace {

using Simplex = std::vector<int>;  // vertex indices

// Pulling triangulation of a face: fan from its lexicographically smallest
// vertex over the triangulations of the subfaces avoiding it.
void triangulate(const FaceLattice& l, const std::vector<std::vector<int>>& children, int f,
                 std::vector<std::vector<Simplex>>& memo, std::vector<bool>& done) {
    if (done[f]) return;
    const Face& face = l.face(f);
    if (face.dim == 0) {
        memo[f] = {{static_cast<int>(face.verts.find_first())}};
        done[f] = true;
        return;
    }
    int m = static_cast<int>(face.verts.find_first());
    std::vector<Simplex> out;
    for (int g : children[f]) {
        if (l.face(g).verts[m]) continue;
        triangulate(l, children, g, memo, done);
        for (const auto& s : memo[g]) {
            Simplex t = s;
            t.push_back(m);
            out.push_back(std::move(t));
        }
    }
    memo[f] = std::move(out);
    done[f] = true;
}

}  // namespace

Rat volume(const Polytope& p) {
    const int d = p.dim();
    Vec apex = p.origin_interior() ? Vec(d, Rat(0)) : vertex_barycenter(p);
    FaceLattice l = FaceLattice::enumerate(p);

    std::vector<std::vector<int>> children(l.size());
    for (const auto& [lo, hi] : l.hasse())
        if (l.face(lo).dim >= 0) children[hi].push_back(lo);

    std::vector<std::vector<Simplex>> memo(l.size());
    std::vector<bool> done(l.size(), false);

    Rat dfact(1);
    for (int k = 2; k <= d; ++k) dfact *= k;

    Rat total(0);
    for (int f = 0; f < l.size(); ++f) {
        if (l.face(f).dim != d - 1) continue;
        triangulate(l, children, f, memo, done);
        for (const auto& s : memo[f]) {
            Mat rows;
            for (int v : s) rows.push_back(p.vertices()[v] - apex);
            total += rat_abs(det(std::move(rows)));
        }
    }
    return total / dfact;
}

Rat mahler(const Polytope& p) { return volume(p) * volume(polar(p)); }

}  // namespace kalai
