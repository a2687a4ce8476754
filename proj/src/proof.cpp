#include "kalai/proof.hpp"

#include <set>

#include "kalai/errors.hpp"
#include "kalai/lab.hpp"

namespace kalai {

int argmax_face(const Polytope& p, const FaceLattice& l, int coord) {
    Rat best = p.vertices()[0][coord];
    for (const auto& v : p.vertices()) best = std::max(best, v[coord]);
    Bits verts(p.vertex_count());
    for (int v = 0; v < p.vertex_count(); ++v)
        if (p.vertices()[v][coord] == best) verts.set(v);
    int id = l.id_of(verts);
    if (id < 0) throw InvariantViolation("argmax vertex set is not a face");
    return id;
}

int negated_face(const Polytope& p, const FaceLattice& l, int f) {
    Bits verts(p.vertex_count());
    for (int v = 0; v < p.vertex_count(); ++v) {
        if (!l.face(f).verts[v]) continue;
        Vec neg(p.dim());
        for (int i = 0; i < p.dim(); ++i) neg[i] = -p.vertices()[v][i];
        int idx = p.vertex_index(neg);
        if (idx < 0) throw InvariantViolation("vertex set is not closed under negation");
        verts.set(idx);
    }
    int id = l.id_of(verts);
    if (id < 0) throw InvariantViolation("negated face is not a face");
    return id;
}

PartitionReport partition_faces(const Polytope& p, const FaceLattice& l, int coord) {
    if (!is_unconditional(p)) throw NotUnconditional("face partition needs an unconditional polytope");
    PartitionReport r;
    r.coord = coord;
    r.face = argmax_face(p, l, coord);
    r.bound = 1;
    for (int i = 0; i + 1 < p.dim(); ++i) r.bound *= 3;

    const Bits& fv = l.face(r.face).verts;
    const Bits& nfv = l.face(negated_face(p, l, r.face)).verts;
    for (int g = 0; g < l.size(); ++g) {
        if (l.face(g).verts.none()) continue;
        bool hits = l.face(g).verts.intersects(fv);
        bool hits_neg = l.face(g).verts.intersects(nfv);
        if (hits && !hits_neg)
            ++r.s_plus;
        else if (hits_neg && !hits)
            ++r.s_minus;
        else
            ++r.s_zero;
    }
    r.sizes_cover = r.s_plus + r.s_zero + r.s_minus == l.s();

    auto family = build_complement_family(p, l, r.face);
    r.complements_found = static_cast<long>(family.size());
    r.all_in_s_plus = true;
    for (int g : family) {
        bool hits = l.face(g).verts.intersects(fv);
        bool hits_neg = l.face(g).verts.intersects(nfv);
        r.all_in_s_plus = r.all_in_s_plus && hits && !hits_neg;
    }
    return r;
}

std::vector<int> build_complement_family(const Polytope& p, const FaceLattice& l, int f) {
    if (l.face(f).verts.none() || l.face(f).verts.all())
        throw ImproperFace("complement family needs a non-empty proper face");
    std::vector<int> lows, highs;
    for (int g = 0; g < l.size(); ++g) {
        if (!l.face(g).verts.none() && l.leq(g, f)) lows.push_back(g);
        if (!l.face(g).verts.all() && l.leq(f, g)) highs.push_back(g);
    }
    std::set<int> distinct;
    std::vector<int> family;
    for (int lo : lows)
        for (int hi : highs) {
            int g = complement_in_interval(l, f, lo, hi);
            if (l.meet(f, g) != lo || l.join(f, g) != hi)
                throw InvariantViolation("complement does not realize its meet/join");
            if (!distinct.insert(g).second)
                throw InvariantViolation("complements per interval are not distinct");
            family.push_back(g);
        }
    if (is_centrally_symmetric(p)) {
        const Bits& fv = l.face(f).verts;
        const Bits& nfv = l.face(negated_face(p, l, f)).verts;
        for (int g : family)
            if (!l.face(g).verts.intersects(fv) || l.face(g).verts.intersects(nfv))
                throw InvariantViolation("complement family leaves S_plus");
    }
    return family;
}

BoundReport verify_unconditional_bound(const Polytope& p, Exec exec) {
    if (!is_unconditional(p))
        throw NotUnconditional("the counting argument needs an unconditional polytope");
    FaceLattice l = FaceLattice::enumerate(p);
    BoundReport out;
    out.coords.resize(p.dim());
    parallel_for(p.dim(), exec, [&](int i) { out.coords[i] = partition_faces(p, l, i); });
    out.s = l.s();
    out.bound = 1;
    for (int i = 0; i < p.dim(); ++i) out.bound *= 3;
    out.ok = out.s >= out.bound;
    for (const auto& r : out.coords)
        out.ok = out.ok && r.sizes_cover && r.all_in_s_plus && r.s_plus >= r.bound &&
                 r.s_zero >= r.bound && r.s_minus >= r.bound && r.complements_found >= r.bound;
    return out;
}

}  // namespace kalai
