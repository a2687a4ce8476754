// Compares the serial reference kernels against their OpenMP versions:
// special-point census, pairwise G_P classification, and the per-coordinate
// counting argument. Results must match exactly; timings are informational.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <string>

#include "kalai/corpus.hpp"
#include "kalai/io.hpp"

using namespace kalai;
using Clock = std::chrono::steady_clock;

namespace {

double seconds(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

template <class F>
double timed(F&& fn) {
    auto t0 = Clock::now();
    fn();
    return seconds(t0, Clock::now());
}

void row(const std::string& name, double serial, double parallel, bool equal) {
    std::printf("%-32s %10.3fs %10.3fs %8.2fx   %s\n", name.c_str(), serial, parallel,
                parallel > 0 ? serial / parallel : 0.0, equal ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-32s %11s %11s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        Polytope p = cube(4);
        FaceLattice l = FaceLattice::enumerate(p);
        SpecialCensus a, b;
        double ts = timed([&] { a = special_census(p, l, {128, Exec::Serial}); });
        double tp = timed([&] { b = special_census(p, l, {128, Exec::Parallel}); });
        bool equal = a.records.size() == b.records.size();
        for (size_t i = 0; equal && i < a.records.size(); ++i)
            equal = a.records[i].face == b.records[i].face &&
                    a.records[i].point[0].to_rat() == b.records[i].point[0].to_rat();
        row("special census, cube d=4", ts, tp, equal);
    }
    {
        Polytope p = random_lab(4, 2024, 2);
        FaceLattice l = FaceLattice::enumerate(p);
        SpecialCensus a, b;
        double ts = timed([&] { a = special_census(p, l, {128, Exec::Serial}); });
        double tp = timed([&] { b = special_census(p, l, {128, Exec::Parallel}); });
        bool equal = a.injective == b.injective;
        for (size_t i = 0; equal && i < a.records.size(); ++i)
            equal = a.records[i].face == b.records[i].face;
        row("special census, random d=4", ts, tp, equal);
    }
    {
        Polytope p = hanner_from_expr(random_hanner_expr(6, 7, SegmentStyle::Asymmetric));
        GPGraph a(0), b(0);
        double ts = timed([&] { a = build_gp(p, Exec::Serial); });
        double tp = timed([&] { b = build_gp(p, Exec::Parallel); });
        row("G_P sections, hanner d=6", ts, tp, a == b);
    }
    {
        Polytope p = random_unconditional(3, 99, 3);
        BoundReport a, b;
        double ts = timed([&] { a = verify_unconditional_bound(p, Exec::Serial); });
        double tp = timed([&] { b = verify_unconditional_bound(p, Exec::Parallel); });
        bool equal = a.ok == b.ok && a.s == b.s;
        for (size_t i = 0; equal && i < a.coords.size(); ++i)
            equal = a.coords[i].s_plus == b.coords[i].s_plus &&
                    a.coords[i].complements_found == b.coords[i].complements_found;
        row("counting argument, random d=3", ts, tp, equal);
    }
    return 0;
}
