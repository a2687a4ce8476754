#include "kalai/polytope.hpp"

#include <algorithm>

#include "kalai/dd.hpp"
#include "kalai/errors.hpp"
#include "kalai/lab.hpp"
#include "kalai/linalg.hpp"

namespace kalai {

namespace {

Facet canonical_facet(const Vec& normal, const Rat& offset) {
    Vec pn = primitive(normal);
    int i = 0;
    while (sgn(pn[i]) == 0) ++i;
    Rat f = pn[i] / normal[i];
    return Facet{std::move(pn), offset * f};
}

}  // namespace

void Polytope::finish() {
    std::sort(verts_.begin(), verts_.end());
    verts_.erase(std::unique(verts_.begin(), verts_.end()), verts_.end());
    std::sort(facets_.begin(), facets_.end());
    facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());

    const int nv = vertex_count();
    inc_.assign(facets_.size(), Bits(nv));
    for (size_t f = 0; f < facets_.size(); ++f) {
        for (int v = 0; v < nv; ++v) {
            Rat s = slack(static_cast<int>(f), verts_[v]);
            if (sgn(s) < 0)
                throw InvariantViolation("vertex violates facet inequality");
            if (sgn(s) == 0) inc_[f].set(v);
        }
    }
    if (affine_rank(verts_) != dim_)
        throw InvariantViolation("vertex set is not full-dimensional");
    for (size_t f = 0; f < facets_.size(); ++f) {
        std::vector<Vec> tight;
        for (int v = 0; v < nv; ++v)
            if (inc_[f][v]) tight.push_back(verts_[v]);
        if (affine_rank(tight) != dim_ - 1)
            throw InvariantViolation("facet is not facet-defining");
    }
    for (int v = 0; v < nv; ++v) {
        int on = 0;
        for (size_t f = 0; f < facets_.size(); ++f) on += inc_[f][v];
        if (on < dim_) throw InvariantViolation("vertex lies on too few facets");
    }
}

Polytope Polytope::make(int dim, std::vector<Vec> verts, std::vector<Facet> facets) {
    Polytope p;
    p.dim_ = dim;
    p.verts_ = std::move(verts);
    for (auto& f : facets) p.facets_.push_back(canonical_facet(f.normal, f.offset));
    p.finish();
    return p;
}

Polytope Polytope::hull(int dim, std::vector<Vec> points) {
    if (dim < 1) throw DegenerateInput("hull needs dimension >= 1");
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != dim) throw DegenerateInput("point of wrong dimension");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (affine_rank(points) != dim)
        throw DegenerateInput("points do not affinely span the space");

    // Facets of conv(points) are the extreme rays of the cone of valid
    // inequalities {(c0, c) : <c, p> <= c0 for all p}.
    Mat rows;
    for (const auto& p : points) {
        Vec r(dim + 1);
        r[0] = Rat(-1);
        for (int i = 0; i < dim; ++i) r[i + 1] = p[i];
        rows.push_back(std::move(r));
    }
    std::vector<Vec> rays = extreme_rays(std::move(rows));

    Polytope out;
    out.dim_ = dim;
    for (const auto& ray : rays) {
        Vec normal(ray.begin() + 1, ray.end());
        out.facets_.push_back(canonical_facet(normal, ray[0]));
    }
    for (const auto& p : points) {
        Mat tight;
        bool inside = true;
        for (const auto& f : out.facets_) {
            int s = sgn(f.offset - dot(f.normal, p));
            inside = inside && s >= 0;
            if (s == 0) tight.push_back(f.normal);
        }
        if (!inside) throw InvariantViolation("input point escapes its own hull");
        if (rank(std::move(tight)) == dim) out.verts_.push_back(p);
    }
    out.finish();
    return out;
}

Polytope Polytope::from_inequalities(int dim, std::vector<Facet> rows) {
    if (dim < 1) throw DegenerateInput("from_inequalities needs dimension >= 1");
    std::vector<Facet> canon;
    for (const auto& r : rows) {
        if (static_cast<int>(r.normal.size()) != dim)
            throw DegenerateInput("inequality of wrong dimension");
        bool zero = true;
        for (const auto& e : r.normal) zero = zero && sgn(e) == 0;
        if (zero) {
            if (sgn(r.offset) < 0) throw DegenerateInput("inequality system is infeasible");
            continue;
        }
        canon.push_back(canonical_facet(r.normal, r.offset));
    }
    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());

    // Homogenize: rays of {(t, x) : <n, x> <= t b, t >= 0}. Rays with t > 0
    // are vertices, a ray with t = 0 is a recession direction.
    Mat rows_h;
    for (const auto& f : canon) {
        Vec r(dim + 1);
        r[0] = -f.offset;
        for (int i = 0; i < dim; ++i) r[i + 1] = f.normal[i];
        rows_h.push_back(std::move(r));
    }
    {
        Vec r(dim + 1, Rat(0));
        r[0] = Rat(-1);
        rows_h.push_back(std::move(r));
    }
    std::vector<Vec> rays;
    try {
        rays = extreme_rays(std::move(rows_h));
    } catch (const DegenerateInput&) {
        throw Unbounded("inequality system admits a line");
    }

    Polytope out;
    out.dim_ = dim;
    for (const auto& ray : rays) {
        if (sgn(ray[0]) == 0) throw Unbounded("recession cone is nontrivial");
        Vec v(dim);
        for (int i = 0; i < dim; ++i) v[i] = ray[i + 1] / ray[0];
        out.verts_.push_back(std::move(v));
    }
    if (out.verts_.empty() || affine_rank(out.verts_) != dim)
        throw DegenerateInput("system is empty or not full-dimensional");

    for (const auto& f : canon) {
        std::vector<Vec> tight;
        for (const auto& v : out.verts_)
            if (sgn(f.offset - dot(f.normal, v)) == 0) tight.push_back(v);
        if (affine_rank(tight) == dim - 1) out.facets_.push_back(f);
    }
    out.finish();
    return out;
}

bool Polytope::contains(const Vec& x) const {
    for (int f = 0; f < facet_count(); ++f)
        if (sgn(slack(f, x)) < 0) return false;
    return true;
}

bool Polytope::origin_interior() const {
    for (const auto& f : facets_)
        if (sgn(f.offset) <= 0) return false;
    return true;
}

int Polytope::vertex_index(const Vec& v) const {
    auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
    if (it == verts_.end() || *it != v) return -1;
    return static_cast<int>(it - verts_.begin());
}

Polytope polar(const Polytope& p) {
    if (!p.origin_interior()) throw OriginNotInterior("polar requires 0 in the interior");
    std::vector<Vec> verts;
    for (const auto& f : p.facets()) {
        Vec v(p.dim());
        for (int i = 0; i < p.dim(); ++i) v[i] = f.normal[i] / f.offset;
        verts.push_back(std::move(v));
    }
    std::vector<Facet> facets;
    for (const auto& v : p.vertices()) facets.push_back(Facet{v, Rat(1)});
    return Polytope::make(p.dim(), std::move(verts), std::move(facets));
}

Polytope product(const Polytope& p, const Polytope& q) {
    const int d = p.dim() + q.dim();
    std::vector<Vec> verts;
    for (const auto& v : p.vertices())
        for (const auto& w : q.vertices()) {
            Vec x(v);
            x.insert(x.end(), w.begin(), w.end());
            verts.push_back(std::move(x));
        }
    std::vector<Facet> facets;
    for (const auto& f : p.facets()) {
        Vec n(f.normal);
        n.resize(d, Rat(0));
        facets.push_back(Facet{std::move(n), f.offset});
    }
    for (const auto& f : q.facets()) {
        Vec n(d, Rat(0));
        for (int i = 0; i < q.dim(); ++i) n[p.dim() + i] = f.normal[i];
        facets.push_back(Facet{std::move(n), f.offset});
    }
    return Polytope::make(d, std::move(verts), std::move(facets));
}

Polytope free_sum(const Polytope& p, const Polytope& q) {
    if (!p.origin_interior() || !q.origin_interior())
        throw OriginNotInterior("free sum requires 0 interior to both parts");
    return polar(product(polar(p), polar(q)));
}

Polytope section(const Polytope& p, IndexSet j) {
    const auto idx = j.indices();
    if (idx.empty()) throw DegenerateInput("section needs a nonempty index set");
    std::vector<Facet> rows;
    for (const auto& f : p.facets()) {
        Vec n(idx.size());
        for (size_t k = 0; k < idx.size(); ++k) n[k] = f.normal[idx[k]];
        rows.push_back(Facet{std::move(n), f.offset});
    }
    return Polytope::from_inequalities(static_cast<int>(idx.size()), std::move(rows));
}

Polytope projection(const Polytope& p, IndexSet j) {
    const auto idx = j.indices();
    if (idx.empty()) throw DegenerateInput("projection needs a nonempty index set");
    std::vector<Vec> pts;
    for (const auto& v : p.vertices()) {
        Vec x(idx.size());
        for (size_t k = 0; k < idx.size(); ++k) x[k] = v[idx[k]];
        pts.push_back(std::move(x));
    }
    return Polytope::hull(static_cast<int>(idx.size()), std::move(pts));
}

Polytope reflect(const Polytope& p, int coord) {
    std::vector<Vec> verts = p.vertices();
    for (auto& v : verts) v[coord] = -v[coord];
    std::vector<Facet> facets = p.facets();
    for (auto& f : facets) f.normal[coord] = -f.normal[coord];
    return Polytope::make(p.dim(), std::move(verts), std::move(facets));
}

Polytope halfspace_scale(const Polytope& p, int coord, const Rat& alpha_plus,
                         const Rat& alpha_minus) {
    if (sgn(alpha_plus) <= 0 || sgn(alpha_minus) <= 0)
        throw DegenerateInput("halfspace scaling factors must be positive");
    if (!is_locally_anti_blocking(p))
        throw NotLocallyAntiBlocking("halfspace scaling is only defined for LAB polytopes");

    auto map = [&](Vec v) {
        v[coord] *= sgn(v[coord]) > 0 ? alpha_plus : alpha_minus;
        return v;
    };
    std::vector<Vec> pts;
    for (const auto& v : p.vertices()) pts.push_back(map(v));
    // The image is the union of the two linear images of P cut along
    // {x_coord = 0}; vertices of the cut pieces on the hyperplane are fixed
    // by the map, so including the cut section makes the hull exact.
    if (p.dim() > 1) {
        IndexSet rest;
        for (int i = 0; i < p.dim(); ++i)
            if (i != coord) rest.add(i);
        Polytope cut = section(p, rest);
        const auto idx = rest.indices();
        for (const auto& w : cut.vertices()) {
            Vec v(p.dim(), Rat(0));
            for (size_t k = 0; k < idx.size(); ++k) v[idx[k]] = w[k];
            pts.push_back(std::move(v));
        }
    } else {
        pts.push_back(Vec(1, Rat(0)));
    }
    Polytope out = Polytope::hull(p.dim(), std::move(pts));
    if (out.vertex_count() != p.vertex_count())
        throw InvariantViolation("halfspace scaling changed the vertex count");
    if (!is_locally_anti_blocking(out))
        throw InvariantViolation("halfspace scaling left the LAB class");
    return out;
}

Polytope normalize(const Polytope& p, std::vector<std::pair<Rat, Rat>>* scales) {
    if (!p.origin_interior()) throw OriginNotInterior("normalize requires a proper polytope");
    if (!is_locally_anti_blocking(p))
        throw NotLocallyAntiBlocking("normalize is only defined for LAB polytopes");
    Polytope out = p;
    if (scales) scales->clear();
    for (int i = 0; i < p.dim(); ++i) {
        Rat lo(0), hi(0);
        for (const auto& v : out.vertices()) {
            lo = std::min(lo, v[i]);
            hi = std::max(hi, v[i]);
        }
        // pi_i(P) = [lo, hi] with lo < 0 < hi
        if (scales) scales->emplace_back(-lo, hi);
        out = halfspace_scale(out, i, Rat(1) / hi, Rat(-1) / lo);
    }
    return out;
}

Vec vertex_barycenter(const Polytope& p) {
    Vec c(p.dim(), Rat(0));
    for (const auto& v : p.vertices())
        for (int i = 0; i < p.dim(); ++i) c[i] += v[i];
    for (auto& e : c) e /= p.vertex_count();
    return c;
}

}  // namespace kalai
