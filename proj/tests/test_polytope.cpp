#include <doctest.h>

#include "kalai/corpus.hpp"
#include "kalai/errors.hpp"
#include "kalai/lab.hpp"
#include "kalai/polytope.hpp"
#include "kalai/lp.hpp"
#include "oracles.hpp"

using namespace kalai;

TEST_CASE("hull drops interior points of a segment") {
    Polytope p = Polytope::hull(1, {Vec{rat(-1)}, Vec{rat(0)}, Vec{rat(1)}});
    CHECK(p.vertices() == std::vector<Vec>{Vec{rat(-1)}, Vec{rat(1)}});
    CHECK(p.facet_count() == 2);
}

TEST_CASE("hull of the 8-point counterexample has 8 vertices and 8 facets") {
    Polytope p = fig2();
    CHECK(p.vertex_count() == 8);
    CHECK(p.facet_count() == 8);
}

TEST_CASE("hull agrees with the 2-D gift-wrapping oracle") {
    std::vector<Vec> pts = {Vec{rat(1), rat(0)}, Vec{rat(-1), rat(0)}, Vec{rat(0), rat(1)},
                            Vec{rat(0), rat(-1)}, Vec{rat(1), rat(1)}};
    std::vector<Vec> expect = oracles::giftwrap_hull_2d(pts);
    // frozen from the oracle: a pentagon
    CHECK(expect == std::vector<Vec>{Vec{rat(-1), rat(0)}, Vec{rat(0), rat(-1)},
                                     Vec{rat(0), rat(1)}, Vec{rat(1), rat(0)},
                                     Vec{rat(1), rat(1)}});
    CHECK(Polytope::hull(2, pts).vertices() == expect);

    Rng rng(101);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Vec> rnd;
        int n = 4 + static_cast<int>(rng.below(10));
        for (int i = 0; i < n; ++i)
            rnd.push_back(Vec{rat(static_cast<long>(rng.below(13)) - 6,
                                  static_cast<long>(rng.below(4)) + 1),
                              rat(static_cast<long>(rng.below(13)) - 6,
                                  static_cast<long>(rng.below(4)) + 1)});
        try {
            CHECK(Polytope::hull(2, rnd).vertices() == oracles::giftwrap_hull_2d(rnd));
        } catch (const DegenerateInput&) {
            CHECK(affine_rank(rnd) < 2);
        }
    }
}

TEST_CASE("hull rejects degenerate input") {
    CHECK_THROWS_AS(Polytope::hull(2, {Vec{rat(0), rat(0)}, Vec{rat(1), rat(1)}}),
                    DegenerateInput);
}

TEST_CASE("from_inequalities: square and octahedron") {
    std::vector<Facet> sq;
    for (int i = 0; i < 2; ++i)
        for (int s : {1, -1}) {
            Vec n(2, rat(0));
            n[i] = rat(s);
            sq.push_back(Facet{n, rat(1)});
        }
    Polytope square = Polytope::from_inequalities(2, sq);
    CHECK(square == cube(2));

    std::vector<Facet> oct;
    for (std::uint32_t mask = 0; mask < 8; ++mask) {
        Vec n(3);
        for (int i = 0; i < 3; ++i) n[i] = rat(((mask >> i) & 1) ? -1 : 1);
        oct.push_back(Facet{n, rat(1)});
    }
    CHECK(Polytope::from_inequalities(3, oct) == cross_polytope(3));
}

TEST_CASE("from_inequalities round-trips the clique polytope of the 4-path") {
    Polytope p = pi3_clique_polytope();
    // 20 generating points, but the singletons +-e_i are edge midpoints of
    // the +-e_i +- e_j points, so only the 12 pair points are vertices.
    CHECK(p.vertex_count() == 12);
    for (const auto& v : p.vertices()) {
        int support = 0;
        for (const auto& e : v) support += sgn(e) != 0;
        CHECK(support == 2);
    }
    Polytope back = Polytope::from_inequalities(4, p.facets());
    CHECK(back == p);
}

TEST_CASE("from_inequalities detects unbounded systems") {
    std::vector<Facet> half = {Facet{Vec{rat(1), rat(0)}, rat(1)},
                               Facet{Vec{rat(0), rat(1)}, rat(1)}};
    CHECK_THROWS_AS(Polytope::from_inequalities(2, half), Unbounded);
    // slab: one free direction
    std::vector<Facet> slab = {Facet{Vec{rat(1), rat(0)}, rat(1)},
                               Facet{Vec{rat(-1), rat(0)}, rat(1)}};
    CHECK_THROWS_AS(Polytope::from_inequalities(2, slab), Unbounded);
}

TEST_CASE("polar duality") {
    CHECK(polar(cube(3)) == cross_polytope(3));
    CHECK(polar(cross_polytope(3)) == cube(3));

    Polytope seg = Polytope::hull(1, {Vec{rat(-3)}, Vec{rat(2)}});
    Polytope pseg = polar(seg);
    CHECK(pseg.vertices() == std::vector<Vec>{Vec{rat(-1, 3)}, Vec{rat(1, 2)}});

    for (int d = 1; d <= 4; ++d) CHECK(polar(polar(cube(d))) == cube(d));
    CHECK(polar(polar(fig2())) == fig2());

    Polytope shifted = Polytope::hull(1, {Vec{rat(1)}, Vec{rat(2)}});
    CHECK_THROWS_AS(polar(shifted), OriginNotInterior);
}

TEST_CASE("product and free sum") {
    Polytope seg = cube(1);
    CHECK(product(seg, seg) == cube(2));
    Polytope prism = product(seg, cross_polytope(2));
    CHECK(prism.vertex_count() == 2 * 4);
    CHECK(free_sum(seg, seg) == cross_polytope(2));
    CHECK(free_sum(free_sum(seg, seg), seg) == cross_polytope(3));

    // polar(P x Q) = polar(P) + polar(Q), randomized small corpus
    Rng rng(5);
    for (int trial = 0; trial < 6; ++trial) {
        Polytope p = random_lab(1 + static_cast<int>(rng.below(2)), 1000 + trial, 2);
        Polytope q = random_lab(1 + static_cast<int>(rng.below(3)), 2000 + trial, 2);
        CHECK(polar(product(p, q)) == free_sum(polar(p), polar(q)));
    }
}

TEST_CASE("coordinate sections") {
    // x3 = 0 section of the counterexample: hexagon (+-1,+-1), (+-2,0)
    Polytope hex = section(fig2(), IndexSet::of({0, 1}));
    CHECK(hex.vertex_count() == 6);
    CHECK(hex.vertex_index(Vec{rat(2), rat(0)}) >= 0);
    CHECK(hex.vertex_index(Vec{rat(-1), rat(1)}) >= 0);

    CHECK(section(cube(4), IndexSet::of({1, 3})) == cube(2));
    CHECK(section(cross_polytope(3), IndexSet::of({0, 2})) == cross_polytope(2));
}

TEST_CASE("projections") {
    Polytope seg = projection(fig2(), IndexSet::of({0}));
    CHECK(seg.vertices() == std::vector<Vec>{Vec{rat(-2)}, Vec{rat(2)}});
    CHECK(projection(cube(5), IndexSet::of({0, 4})) == cube(2));

    // section = projection onto every J for locally anti-blocking polytopes
    Rng rng(17);
    for (int trial = 0; trial < 5; ++trial) {
        int d = 2 + static_cast<int>(rng.below(2));
        Polytope p = random_lab(d, 300 + trial, 2);
        for (std::uint64_t mask = 1; mask < (1ull << d); ++mask) {
            Polytope sec = section(p, IndexSet{mask});
            CHECK(sec == projection(p, IndexSet{mask}));
            CHECK(is_locally_anti_blocking(sec));
        }
    }
}

TEST_CASE("halfspace scaling") {
    Polytope scaled = halfspace_scale(cube(2), 0, rat(2), rat(1));
    CHECK(scaled.vertex_index(Vec{rat(2), rat(1)}) >= 0);
    CHECK(scaled.vertex_index(Vec{rat(-1), rat(1)}) >= 0);
    CHECK(halfspace_scale(fig2(), 2, rat(1), rat(1)) == fig2());
    CHECK_THROWS_AS(
        halfspace_scale(Polytope::hull(1, {Vec{rat(0)}, Vec{rat(1)}}), 0, rat(0), rat(1)),
        DegenerateInput);
}

TEST_CASE("normalize") {
    Polytope seg = Polytope::hull(1, {Vec{rat(-2)}, Vec{rat(3)}});
    CHECK(normalize(seg) == cube(1));
    CHECK(normalize(cube(3)) == cube(3));

    std::vector<std::pair<Rat, Rat>> scales;
    Polytope n = normalize(fig2(), &scales);
    CHECK(scales[0] == std::pair<Rat, Rat>(rat(2), rat(2)));
    CHECK(scales[1] == std::pair<Rat, Rat>(rat(1), rat(1)));
    // derived: only x1 shrinks by 1/2, so (+-1,+-1,0) -> (+-1/2,+-1,0)
    CHECK(n.vertex_index(Vec{rat(1, 2), rat(1), rat(0)}) >= 0);
    CHECK(n.vertex_index(Vec{rat(1), rat(0), rat(1)}) >= 0);
    for (int i = 0; i < 3; ++i) {
        Polytope pi = projection(n, IndexSet::of({i}));
        CHECK(pi == cube(1));
    }
}

TEST_CASE("volume and mahler") {
    Rat f(1);
    for (int d = 1; d <= 5; ++d) {
        Rat pow2(1);
        for (int i = 0; i < d; ++i) pow2 *= 2;
        CHECK(volume(cube(d)) == pow2);
        f *= d;
        CHECK(mahler(cube(d)) == pow2 * pow2 / f);  // 4^d / d!
    }
    CHECK(volume(product(fig2(), cube(2))) == volume(fig2()) * volume(cube(2)));
    // Hanner polytopes (symmetric segments) attain 4^d/d! exactly; an
    // asymmetric segment already exceeds it: M([-a,b]) = (a+b)^2/(ab) > 4
    for (int d = 2; d <= 4; ++d) {
        Rat expect(1);
        for (int i = 1; i <= d; ++i) expect = expect * 4 / i;
        Polytope h = hanner_from_expr(random_hanner_expr(d, 3000 + d, SegmentStyle::Symmetric));
        CHECK(mahler(h) == expect);
    }
    CHECK(mahler(Polytope::hull(1, {Vec{rat(-1)}, Vec{rat(2)}})) == rat(9, 2));
    // shifted simplex: apex falls back to the vertex barycenter
    Polytope tri = Polytope::hull(
        2, {Vec{rat(0), rat(0)}, Vec{rat(1), rat(0)}, Vec{rat(0), rat(1)}});
    CHECK(volume(tri) == rat(1, 2));
    CHECK_THROWS_AS(mahler(tri), OriginNotInterior);
}

TEST_CASE("double-description round trip over the corpus") {
    std::vector<Polytope> corpus = {cube(3), cross_polytope(3), fig2(), pi3_clique_polytope()};
    for (int t = 0; t < 4; ++t) corpus.push_back(random_lab(2 + t % 3, 40 + t, 2));
    for (const auto& p : corpus) {
        Polytope back = Polytope::from_inequalities(p.dim(), p.facets());
        CHECK(back == p);
    }
}

TEST_CASE("degenerate and empty sections are rejected") {
    Polytope above = Polytope::hull(2, {Vec{rat(0), rat(1)}, Vec{rat(-1), rat(2)},
                                        Vec{rat(1), rat(2)}});
    CHECK_THROWS_AS(section(above, IndexSet::of({0})), DegenerateInput);
    Polytope touching = Polytope::hull(2, {Vec{rat(0), rat(0)}, Vec{rat(-1), rat(2)},
                                           Vec{rat(1), rat(2)}});
    CHECK_THROWS_AS(section(touching, IndexSet::of({0})), DegenerateInput);
    CHECK_THROWS_AS(section(cube(2), IndexSet{}), DegenerateInput);
}

TEST_CASE("class preconditions are enforced") {
    Polytope not_lab = Polytope::hull(2, {Vec{rat(2), rat(1)}, Vec{rat(-1), rat(1)},
                                          Vec{rat(-2), rat(-1)}, Vec{rat(1), rat(-1)}});
    CHECK_THROWS_AS(halfspace_scale(not_lab, 0, rat(2), rat(1)), NotLocallyAntiBlocking);
    CHECK_THROWS_AS(normalize(not_lab), NotLocallyAntiBlocking);

    Polytope shifted = Polytope::hull(1, {Vec{rat(1)}, Vec{rat(2)}});
    CHECK_THROWS_AS(normalize(shifted), OriginNotInterior);
    CHECK_THROWS_AS(free_sum(shifted, cube(1)), OriginNotInterior);
}

TEST_CASE("facets agree with brute-force supporting-hyperplane enumeration") {
    std::vector<std::pair<int, std::vector<Vec>>> inputs;
    inputs.emplace_back(3, fig2().vertices());
    inputs.emplace_back(3, cross_polytope(3).vertices());
    Rng rng(211);
    for (int trial = 0; trial < 10; ++trial) {
        int d = 2 + static_cast<int>(rng.below(2));
        std::vector<Vec> pts;
        int n = d + 2 + static_cast<int>(rng.below(6));
        for (int i = 0; i < n; ++i) {
            Vec v(d);
            for (int c = 0; c < d; ++c)
                v[c] = rat(static_cast<long>(rng.below(9)) - 4,
                           static_cast<long>(rng.below(3)) + 1);
            pts.push_back(std::move(v));
        }
        if (affine_rank(pts) == d) inputs.emplace_back(d, pts);
    }
    for (const auto& [d, pts] : inputs)
        CHECK(Polytope::hull(d, pts).facets() == oracles::brute_force_facets(d, pts));
}

TEST_CASE("simplex cone membership agrees with the exact projection oracle") {
    Rng rng(223);
    for (int trial = 0; trial < 60; ++trial) {
        int d = 1 + static_cast<int>(rng.below(4));
        int m = 1 + static_cast<int>(rng.below(5));
        Mat gens;
        for (int g = 0; g < m; ++g) {
            Vec v(d);
            for (int c = 0; c < d; ++c) v[c] = rat(static_cast<long>(rng.below(7)) - 3);
            gens.push_back(std::move(v));
        }
        Vec probe(d);
        for (int c = 0; c < d; ++c) probe[c] = rat(static_cast<long>(rng.below(7)) - 3);
        CHECK(in_cone(gens, probe) == (sgn(oracles::cone_distance2(gens, probe)) == 0));
    }
}

TEST_CASE("volume properties: cross-polytopes, reflections, uniform scalings") {
    Rat f(1);
    for (int d = 1; d <= 5; ++d) {
        f *= d;
        Rat pow2(1);
        for (int i = 0; i < d; ++i) pow2 *= 2;
        CHECK(volume(cross_polytope(d)) == pow2 / f);
    }
    for (int seed = 0; seed < 3; ++seed) {
        Polytope p = random_lab(2 + seed, 5000 + seed, 2);
        for (int i = 0; i < p.dim(); ++i)
            CHECK(volume(reflect(p, i)) == volume(p));
        // both halves scaled by c multiply the volume by c
        CHECK(volume(halfspace_scale(p, 0, rat(3, 2), rat(3, 2))) ==
              volume(p) * rat(3, 2));
    }
}
