#include "kalai/corpus.hpp"

#include "kalai/errors.hpp"
#include "kalai/lab.hpp"

namespace kalai {

Polytope cube(int d) {
    std::vector<Vec> pts;
    for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
        Vec v(d);
        for (int i = 0; i < d; ++i) v[i] = Rat(((mask >> i) & 1) ? -1 : 1);
        pts.push_back(std::move(v));
    }
    return Polytope::hull(d, std::move(pts));
}

Polytope cross_polytope(int d) {
    std::vector<Vec> pts;
    for (int i = 0; i < d; ++i)
        for (int s : {1, -1}) {
            Vec v(d, Rat(0));
            v[i] = Rat(s);
            pts.push_back(std::move(v));
        }
    return Polytope::hull(d, std::move(pts));
}

Polytope fig2() {
    std::vector<Vec> pts;
    for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
            pts.push_back(Vec{rat(s1), rat(s2), rat(0)});
            pts.push_back(Vec{rat(2 * s1), rat(0), rat(s2)});
        }
    return Polytope::hull(3, std::move(pts));
}

GPGraph path4() {
    GPGraph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    return g;
}

Polytope pi3_clique_polytope() { return clique_polytope(path4()); }

namespace {

Rat random_coord(Rng& rng) {
    // small denominators keep the double-description step fast
    long den = static_cast<long>(rng.below(16)) + 1;
    long num = static_cast<long>(rng.below(4 * den + 1));  // 0 .. 4 den
    return rat(num - 2 * den, den);                        // in [-2, 2]
}

}  // namespace

Polytope random_unconditional(int d, std::uint64_t seed, int n_points) {
    Rng rng(seed);
    for (int attempt = 0; attempt < 10; ++attempt) {
        std::vector<Vec> pts;
        for (int p = 0; p < n_points; ++p) {
            Vec base(d);
            for (int i = 0; i < d; ++i) base[i] = rat_abs(random_coord(rng));
            for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
                Vec v(base);
                for (int i = 0; i < d; ++i)
                    if ((mask >> i) & 1) v[i] = -v[i];
                pts.push_back(std::move(v));
            }
        }
        try {
            Polytope out = Polytope::hull(d, std::move(pts));
            if (!is_unconditional(out) || !out.origin_interior())
                throw InvariantViolation("reflection closure is not unconditional");
            return out;
        } catch (const DegenerateInput&) {
            continue;  // flat draw, try again
        }
    }
    throw DegenerateInput("random unconditional polytope: 10 degenerate draws");
}

Polytope random_lab(int d, std::uint64_t seed, int n_points) {
    Polytope p = random_unconditional(d, seed, n_points);
    Rng rng(seed ^ 0x5bf03635/* scaling stream */);
    for (int i = 0; i < d; ++i) {
        Rat ap = rat(static_cast<long>(rng.below(4)) + 1, static_cast<long>(rng.below(4)) + 1);
        Rat am = rat(static_cast<long>(rng.below(4)) + 1, static_cast<long>(rng.below(4)) + 1);
        p = halfspace_scale(p, i, ap, am);
    }
    if (!is_locally_anti_blocking(p) || !p.origin_interior())
        throw InvariantViolation("random LAB polytope failed its own classification");
    return p;
}

namespace {

Cotree random_cotree_rec(int lo, int n, bool join, Rng& rng) {
    if (n == 1) return Cotree{Cotree::Leaf, lo, {}};
    int parts = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
    parts = std::min(parts, n);
    // random composition of n into `parts` positive parts
    std::vector<int> sizes(parts, 1);
    for (int extra = n - parts; extra > 0; --extra) ++sizes[rng.below(parts)];
    Cotree t{join ? Cotree::Join : Cotree::Union, -1, {}};
    int at = lo;
    for (int s : sizes) {
        t.kids.push_back(random_cotree_rec(at, s, !join, rng));
        at += s;
    }
    return t;
}

}  // namespace

Cotree random_cotree(int d, std::uint64_t seed) {
    Rng rng(seed);
    Cotree t = random_cotree_rec(0, d, rng.below(2) == 0, rng);
    t.canonicalize();
    return t;
}

namespace {

Rat random_length(Rng& rng) {
    return rat(static_cast<long>(rng.below(6)) + 1, static_cast<long>(rng.below(2)) + 1);
}

HannerExpr random_segment(Rng& rng, SegmentStyle style) {
    switch (style) {
        case SegmentStyle::Unit:
            return HannerExpr::seg(rat(1), rat(1));
        case SegmentStyle::Symmetric: {
            Rat a = random_length(rng);
            return HannerExpr::seg(a, a);
        }
        case SegmentStyle::Asymmetric:
            return HannerExpr::seg(random_length(rng), random_length(rng));
    }
    return HannerExpr::seg(rat(1), rat(1));
}

HannerExpr expr_with_segments(const Cotree& t, Rng& rng, SegmentStyle style) {
    if (t.kind == Cotree::Leaf) return random_segment(rng, style);
    std::vector<HannerExpr> kids;
    for (const auto& k : t.kids) kids.push_back(expr_with_segments(k, rng, style));
    return t.kind == Cotree::Join ? HannerExpr::prod(std::move(kids))
                                  : HannerExpr::sum(std::move(kids));
}

}  // namespace

HannerExpr random_hanner_expr(int d, std::uint64_t seed, SegmentStyle style) {
    Rng rng(seed ^ 0xa511e9b3/* segment stream */);
    if (d == 1) return random_segment(rng, style);
    Cotree t = random_cotree(d, seed);
    return expr_with_segments(t, rng, style);
}

}  // namespace kalai
