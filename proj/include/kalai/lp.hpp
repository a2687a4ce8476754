#pragma once

#include "kalai/linalg.hpp"

namespace kalai {

// Exact rational linear programming, dense tableau simplex with Bland's rule.
// Sized for desk-scale systems (at most a few hundred rows/columns).

struct LpResult {
    enum Status { Optimal, Infeasible, UnboundedLp } status;
    Vec x;      // optimizer (free variables), valid when Optimal
    Rat value;  // objective value, valid when Optimal
};

// max c.x subject to a x <= b, x free.
LpResult lp_max(const Vec& c, const Mat& a, const Vec& b);

// Whether v is a nonnegative combination of the rows of gens.
bool in_cone(const Mat& gens, const Vec& v);

// Whether {x : a x <= b, e x = f} has a solution.
bool lp_feasible(const Mat& a, const Vec& b, const Mat& e, const Vec& f);

}  // namespace kalai
