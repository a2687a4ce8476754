#include <doctest.h>

#include <set>

#include "kalai/corpus.hpp"
#include "kalai/errors.hpp"
#include "kalai/face_lattice.hpp"
#include "kalai/proof.hpp"

using namespace kalai;

namespace {

long pow3(int d) {
    long r = 1;
    for (int i = 0; i < d; ++i) r *= 3;
    return r;
}

}  // namespace

TEST_CASE("square partition: 3 + 3 + 3") {
    Polytope p = cube(2);
    FaceLattice l = FaceLattice::enumerate(p);
    PartitionReport r = partition_faces(p, l, 0);
    CHECK(l.face(r.face).dim == 1);  // the right edge
    CHECK(r.s_plus == 3);
    CHECK(r.s_zero == 3);
    CHECK(r.s_minus == 3);
    CHECK(r.sizes_cover);
    CHECK(r.bound == 3);
}

TEST_CASE("cube partitions stay above the bound") {
    for (int d = 2; d <= 4; ++d) {
        Polytope p = cube(d);
        FaceLattice l = FaceLattice::enumerate(p);
        for (int i = 0; i < d; ++i) {
            PartitionReport r = partition_faces(p, l, i);
            CHECK(r.s_plus >= pow3(d - 1));
            CHECK(r.s_zero >= pow3(d - 1));
            CHECK(r.s_minus >= pow3(d - 1));
            CHECK(r.sizes_cover);
        }
    }
}

TEST_CASE("counterexample partition for the third coordinate") {
    Polytope p = fig2();
    FaceLattice l = FaceLattice::enumerate(p);
    PartitionReport r = partition_faces(p, l, 2);
    CHECK(r.s_plus + r.s_zero + r.s_minus == 31);
    CHECK(r.s_plus >= 9);
    CHECK(r.s_zero >= 9);
    CHECK(r.s_minus >= 9);
}

TEST_CASE("complement family of the right edge of the square") {
    Polytope p = cube(2);
    FaceLattice l = FaceLattice::enumerate(p);
    int f = argmax_face(p, l, 0);
    auto family = build_complement_family(p, l, f);
    // |(empty,F]| = s(F) = 3 and |[F,P)| = 1, so 3 complements
    CHECK(family.size() == 3);
    std::set<int> distinct(family.begin(), family.end());
    CHECK(distinct.size() == 3);
}

TEST_CASE("complement family of a cube facet") {
    Polytope p = cube(3);
    FaceLattice l = FaceLattice::enumerate(p);
    int f = argmax_face(p, l, 1);
    CHECK(l.face(f).dim == 2);
    auto family = build_complement_family(p, l, f);
    CHECK(family.size() == 9);  // s(square facet) = 9, dual face a vertex
}

TEST_CASE("family size law |family| = s(F) s(F*)") {
    std::vector<Polytope> corpus = {cube(2), cube(3), fig2(), random_unconditional(3, 11, 2)};
    for (const auto& p : corpus) {
        FaceLattice l = FaceLattice::enumerate(p);
        Polytope q = polar(p);
        FaceLattice lq = FaceLattice::enumerate(q);
        for (int i = 0; i < p.dim(); ++i) {
            int f = argmax_face(p, l, i);
            long below = 0, above = 0;
            for (int g = 1; g < l.size(); ++g) below += l.leq(g, f);
            for (int g = 0; g < l.size() - 1; ++g) above += l.leq(f, g);
            auto family = build_complement_family(p, l, f);
            CHECK(static_cast<long>(family.size()) == below * above);
            (void)lq;
        }
    }
}

TEST_CASE("H-symmetric faces bound |S_0| by the section count") {
    std::vector<Polytope> corpus = {cube(3), fig2(), random_unconditional(3, 19, 2)};
    for (const auto& p : corpus) {
        FaceLattice l = FaceLattice::enumerate(p);
        for (int i = 0; i < p.dim(); ++i) {
            PartitionReport r = partition_faces(p, l, i);
            IndexSet rest;
            for (int c = 0; c < p.dim(); ++c)
                if (c != i) rest.add(c);
            long s_section = FaceLattice::enumerate(section(p, rest)).s();
            CHECK(r.s_zero >= s_section);
        }
    }
}

TEST_CASE("verify_unconditional_bound over the corpus") {
    std::vector<Polytope> corpus = {cube(1), cube(2), cube(3), cube(4), fig2(),
                                    cross_polytope(3)};
    for (int seed = 0; seed < 4; ++seed)
        corpus.push_back(random_unconditional(2 + seed % 3, 600 + seed, 2));
    for (const auto& p : corpus) {
        BoundReport r = verify_unconditional_bound(p);
        CHECK(r.ok);
        CHECK(r.s >= r.bound);
        for (const auto& c : r.coords) {
            CHECK(c.all_in_s_plus);
            CHECK(c.complements_found >= c.bound);
        }
    }
    BoundReport fig = verify_unconditional_bound(fig2());
    CHECK(fig.s == 31);
    CHECK(fig.bound == 27);
}

TEST_CASE("serial and parallel bound verification agree") {
    Polytope p = random_unconditional(3, 321, 2);
    BoundReport a = verify_unconditional_bound(p, Exec::Serial);
    BoundReport b = verify_unconditional_bound(p, Exec::Parallel);
    CHECK(a.ok == b.ok);
    REQUIRE(a.coords.size() == b.coords.size());
    for (size_t i = 0; i < a.coords.size(); ++i) {
        CHECK(a.coords[i].s_plus == b.coords[i].s_plus);
        CHECK(a.coords[i].s_zero == b.coords[i].s_zero);
        CHECK(a.coords[i].s_minus == b.coords[i].s_minus);
        CHECK(a.coords[i].complements_found == b.coords[i].complements_found);
    }
}

TEST_CASE("non-unconditional input is rejected") {
    Polytope scaled = halfspace_scale(cube(2), 0, rat(2), rat(1));
    CHECK_THROWS_AS(verify_unconditional_bound(scaled), NotUnconditional);
    FaceLattice l = FaceLattice::enumerate(scaled);
    CHECK_THROWS_AS(partition_faces(scaled, l, 0), NotUnconditional);
}
