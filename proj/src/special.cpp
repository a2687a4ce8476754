#include "kalai/special.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>

#include "kalai/errors.hpp"
#include "kalai/lab.hpp"
#include "kalai/lp.hpp"

namespace kalai {

namespace {

const Rat kActiveEps = rat(1, 100000000);     // 1e-8, relative to 1 + |offset|
const Rat kKktEps = rat(1, 1000000);          // 1e-6, relative to |pinv(p)|
const Rat kSignEps = rat(1, 100000000);       // 1e-8 floor on in-support coordinates

struct Reduced {
    std::vector<int> coords;  // ambient coordinate per reduced axis
    Vec flip;                 // sigma_i per reduced axis
    Mat rows;                 // reduced facet normals
    Vec rhs;
};

Reduced reduce(const Polytope& p, const SignVector& sigma) {
    Reduced r;
    for (int i = 0; i < p.dim(); ++i)
        if (sigma[i] != 0) {
            r.coords.push_back(i);
            r.flip.push_back(Rat(sigma[i]));
        }
    std::set<std::pair<Vec, Rat>> seen;
    for (const auto& f : p.facets()) {
        Vec u(r.coords.size());
        bool zero = true;
        for (size_t k = 0; k < r.coords.size(); ++k) {
            u[k] = r.flip[k] * f.normal[r.coords[k]];
            zero = zero && sgn(u[k]) == 0;
        }
        if (zero) continue;
        if (seen.emplace(u, f.offset).second) {
            r.rows.push_back(std::move(u));
            r.rhs.push_back(f.offset);
        }
    }
    return r;
}

// Interior start: maximize the smallest of all coordinates and facet slacks.
Vec interior_start(const Reduced& r) {
    const int k = static_cast<int>(r.coords.size());
    const int m = static_cast<int>(r.rows.size());
    Mat a;
    Vec b;
    Vec c(k + 1, Rat(0));
    c[k] = Rat(1);
    for (int f = 0; f < m; ++f) {
        Vec row = r.rows[f];
        row.push_back(Rat(1));
        a.push_back(std::move(row));
        b.push_back(r.rhs[f]);
    }
    for (int i = 0; i < k; ++i) {
        Vec row(k + 1, Rat(0));
        row[i] = Rat(-1);
        row[k] = Rat(1);
        a.push_back(std::move(row));
        b.push_back(Rat(0));
    }
    LpResult lp = lp_max(c, a, b);
    if (lp.status != LpResult::Optimal || sgn(lp.value) <= 0)
        throw InvariantViolation("no interior start point in a coordinate cone");
    return Vec(lp.x.begin(), lp.x.begin() + k);
}

struct Barrier {
    std::vector<std::vector<MpFloat>> rows;
    std::vector<MpFloat> rhs;
    int k, m;
    mpfr_prec_t prec;

    std::vector<MpFloat> slacks(const std::vector<MpFloat>& y) const {
        std::vector<MpFloat> s;
        s.reserve(m);
        for (int f = 0; f < m; ++f) {
            MpFloat acc = rhs[f];
            for (int i = 0; i < k; ++i) acc = acc - rows[f][i] * y[i];
            s.push_back(std::move(acc));
        }
        return s;
    }

    bool interior(const std::vector<MpFloat>& y) const {
        for (const auto& e : y)
            if (!e.positive()) return false;
        for (const auto& s : slacks(y))
            if (!s.positive()) return false;
        return true;
    }

    MpFloat value(const std::vector<MpFloat>& y, const MpFloat& mu) const {
        MpFloat v(prec);
        for (const auto& e : y) v += e.log();
        for (const auto& s : slacks(y)) v += mu * s.log();
        return v;
    }
};

// One stage of damped Newton on F_mu(y) = sum log y_i + mu sum log s_f.
void newton_stage(const Barrier& bar, const MpFloat& mu, std::vector<MpFloat>& y,
                  const MpFloat& tol2) {
    const int k = bar.k;
    for (int iter = 0; iter < 200; ++iter) {
        auto s = bar.slacks(y);
        std::vector<MpFloat> g;
        g.reserve(k);
        for (int i = 0; i < k; ++i) g.push_back(y[i].inv());
        std::vector<std::vector<MpFloat>> h(k);
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) h[i].push_back(MpFloat(bar.prec));
            h[i][i] = y[i].inv() * y[i].inv();
        }
        for (int f = 0; f < bar.m; ++f) {
            MpFloat si = s[f].inv();
            MpFloat msi = mu * si;
            for (int i = 0; i < k; ++i) {
                g[i] -= msi * bar.rows[f][i];
                MpFloat w = msi * si * bar.rows[f][i];
                for (int j = 0; j < k; ++j) h[i][j] += w * bar.rows[f][j];
            }
        }
        // solve h * delta = g; h is positive definite
        std::vector<MpFloat> d = g;
        for (int col = 0; col < k; ++col) {
            int piv = col;
            for (int r = col + 1; r < k; ++r)
                if (h[r][col].abs() > h[piv][col].abs()) piv = r;
            std::swap(h[col], h[piv]);
            std::swap(d[col], d[piv]);
            for (int r = col + 1; r < k; ++r) {
                MpFloat fct = h[r][col] / h[col][col];
                for (int c = col; c < k; ++c) h[r][c] -= fct * h[col][c];
                d[r] -= fct * d[col];
            }
        }
        std::vector<MpFloat> delta(k, MpFloat(bar.prec));
        for (int r = k - 1; r >= 0; --r) {
            MpFloat acc = d[r];
            for (int c = r + 1; c < k; ++c) acc -= h[r][c] * delta[c];
            delta[r] = acc / h[r][r];
        }
        MpFloat dec2(bar.prec);
        for (int i = 0; i < k; ++i) dec2 += g[i] * delta[i];
        if (dec2 <= tol2) return;

        // fraction to boundary, then backtrack on the objective
        MpFloat alpha = MpFloat::of(1, bar.prec);
        MpFloat shrink = MpFloat::of(rat(99, 100), bar.prec);
        for (int i = 0; i < k; ++i)
            if (delta[i].sign() < 0) {
                MpFloat cap = shrink * (y[i] / -delta[i]);
                if (cap < alpha) alpha = cap;
            }
        for (int f = 0; f < bar.m; ++f) {
            MpFloat adv(bar.prec);
            for (int i = 0; i < k; ++i) adv += bar.rows[f][i] * delta[i];
            if (adv.positive()) {
                MpFloat cap = shrink * (s[f] / adv);
                if (cap < alpha) alpha = cap;
            }
        }
        MpFloat f0 = bar.value(y, mu);
        bool moved = false;
        for (int bt = 0; bt < 60; ++bt) {
            std::vector<MpFloat> cand(y);
            for (int i = 0; i < k; ++i) cand[i] += alpha * delta[i];
            if (bar.interior(cand) && f0 < bar.value(cand, mu)) {
                y = std::move(cand);
                moved = true;
                break;
            }
            alpha = alpha * MpFloat::of(rat(1, 2), bar.prec);
        }
        if (!moved) return;  // numerically stationary for this mu
    }
}

struct Certified {
    int face;
    Rat residual2, bound2, worst_active;
};

// Exact certification on the dyadic point: active facets against the lattice,
// sign pattern, and the KKT nonnegative least squares.
Certified certify(const Polytope& p, const FaceLattice& l, const SignVector& sigma,
                  const Vec& x) {
    const int d = p.dim();
    for (int i = 0; i < d; ++i) {
        if (sigma[i] == 0) {
            if (sgn(x[i]) != 0) throw CertificationFailure("off-support coordinate is nonzero");
        } else if (Rat(sigma[i]) * x[i] <= kSignEps) {
            throw CertificationFailure("in-support coordinate lost its sign");
        }
    }

    Bits cand(p.vertex_count());
    cand.set();
    bool any = false;
    Rat worst(0);
    for (int f = 0; f < p.facet_count(); ++f) {
        Rat s = p.slack(f, x);
        if (s < kActiveEps * (1 + rat_abs(p.facets()[f].offset))) {
            cand &= p.incidence()[f];
            any = true;
            worst = std::max(worst, s);
        }
    }
    if (!any) throw CertificationFailure("no active facet at the iterate");
    if (cand.none()) throw CertificationFailure("active facets have no common vertex");
    int face = l.id_of(cand);
    if (face < 0) throw InvariantViolation("active facet intersection is not a face");
    // near relint(face): every facet containing the face must be active
    for (int f = 0; f < p.facet_count(); ++f)
        if (cand.is_subset_of(p.incidence()[f]) &&
            !(p.slack(f, x) < kActiveEps * (1 + rat_abs(p.facets()[f].offset))))
            throw CertificationFailure("iterate is not near the relative interior");

    // KKT: distance from pinv(x) to cone(normals of the active facets),
    // solved exactly by enumerating independent support sets.
    Vec pinv = pseudo_inverse(x);
    Mat gens = normal_cone_generators(p, l, face);
    Rat best = dot(pinv, pinv);
    const int m = static_cast<int>(gens.size());
    std::vector<int> pick;
    auto search = [&](auto&& self, int from) -> void {
        if (!pick.empty()) {
            Mat cols(d, Vec(pick.size()));
            for (int r = 0; r < d; ++r)
                for (size_t j = 0; j < pick.size(); ++j) cols[r][j] = gens[pick[j]][r];
            Mat check;
            for (int j : pick) check.push_back(gens[j]);
            if (rank(check) == static_cast<int>(pick.size())) {
                Vec lam = least_squares(cols, pinv);
                bool nonneg = true;
                for (const auto& e : lam) nonneg = nonneg && sgn(e) >= 0;
                if (nonneg) {
                    Vec res = pinv;
                    for (int r = 0; r < d; ++r)
                        for (size_t j = 0; j < pick.size(); ++j)
                            res[r] -= lam[j] * gens[pick[j]][r];
                    best = std::min(best, dot(res, res));
                }
            } else {
                return;  // dependent set; supersets are dependent too
            }
        }
        if (static_cast<int>(pick.size()) == d) return;
        for (int j = from; j < m; ++j) {
            pick.push_back(j);
            self(self, j + 1);
            pick.pop_back();
        }
    };
    search(search, 0);

    Rat norm2 = dot(pinv, pinv);
    Rat bound2 = kKktEps * kKktEps * norm2;
    if (best > bound2) throw CertificationFailure("KKT residual exceeds the threshold");
    return Certified{face, best, bound2, worst};
}

SpecialRecord solve_one(const Polytope& p, const FaceLattice& l, const SignVector& sigma,
                        mpfr_prec_t prec) {
    const int d = p.dim();
    SpecialRecord rec;
    rec.sigma = sigma;
    if (sigma.support().empty()) {
        for (int i = 0; i < d; ++i) rec.point.push_back(MpFloat(prec));
        rec.face = l.top();
        return rec;
    }

    Reduced r = reduce(p, sigma);
    const int k = static_cast<int>(r.coords.size());
    Vec y0 = interior_start(r);

    Barrier bar;
    bar.k = k;
    bar.m = static_cast<int>(r.rows.size());
    bar.prec = prec;
    for (const auto& row : r.rows) {
        std::vector<MpFloat> fr;
        for (const auto& e : row) fr.push_back(MpFloat::of(e, prec));
        bar.rows.push_back(std::move(fr));
    }
    for (const auto& e : r.rhs) bar.rhs.push_back(MpFloat::of(e, prec));

    std::vector<MpFloat> y;
    for (const auto& e : y0) y.push_back(MpFloat::of(e, prec));

    MpFloat mu = MpFloat::of(1, prec);
    MpFloat half = MpFloat::of(rat(1, 2), prec);
    // Path depth scales with the mantissa: the final mu = 2^(-prec/2) keeps
    // active slacks (about mu over the KKT multiplier) far below the 1e-8
    // activation threshold, and retries at doubled precision dig deeper.
    const long stages = std::max<long>(48, prec / 2);
    for (long stage = 0; stage <= stages; ++stage) {
        MpFloat tol2 = mu * mu * MpFloat::of(rat(1, 1000000), prec);
        MpFloat floor2(prec);
        {
            // 2^(-2 prec + 48): well above rounding noise at this mantissa
            Rat f = rat(1);
            for (long b = 0; b < 2 * prec - 48; ++b) f /= 2;
            floor2 = MpFloat::of(f, prec);
        }
        if (tol2 < floor2) tol2 = floor2;
        newton_stage(bar, mu, y, tol2);
        mu = mu * half;
    }

    Vec x(d, Rat(0));
    for (int i = 0; i < k; ++i) x[r.coords[i]] = r.flip[i] * y[i].to_rat();
    Certified c = certify(p, l, sigma, x);

    for (int i = 0; i < d; ++i) rec.point.push_back(MpFloat(prec));
    for (int i = 0; i < k; ++i)
        rec.point[r.coords[i]] = MpFloat::of(r.flip[i], prec) * y[i];
    rec.face = c.face;
    rec.kkt_residual = std::sqrt(c.residual2.get_d());
    rec.active_slack = c.worst_active.get_d();
    return rec;
}

}  // namespace

mpfr_prec_t default_precision() {
    if (const char* env = std::getenv("KALAI_PRECISION_BITS")) {
        long bits = std::atol(env);
        if (bits >= 24) return static_cast<mpfr_prec_t>(bits);
    }
    return 128;
}

SpecialRecord special_point(const Polytope& p, const FaceLattice& l, const SignVector& sigma,
                            const SpecialOptions& opts) {
    if (!p.origin_interior()) throw NotProper("special points need the origin interior");
    if (!is_locally_anti_blocking(p))
        throw NotLocallyAntiBlocking("special points are defined for LAB polytopes");
    mpfr_prec_t prec = opts.precision;
    for (int attempt = 0;; ++attempt) {
        try {
            return solve_one(p, l, sigma, prec);
        } catch (const CertificationFailure&) {
            if (attempt >= 3) throw;
            prec *= 2;
        }
    }
}

SpecialCensus special_census(const Polytope& p, const FaceLattice& l,
                             const SpecialOptions& opts) {
    if (!p.origin_interior()) throw NotProper("special points need the origin interior");
    if (!is_locally_anti_blocking(p))
        throw NotLocallyAntiBlocking("special points are defined for LAB polytopes");
    long n = 1;
    for (int i = 0; i < p.dim(); ++i) n *= 3;
    SpecialCensus census;
    census.records.resize(n);
    parallel_for(static_cast<int>(n), opts.exec, [&](int i) {
        SignVector sigma = SignVector::from_rank(p.dim(), i);
        census.records[i] = special_point(p, l, sigma, opts);
    });
    census.total = true;
    std::set<int> faces;
    for (const auto& r : census.records) faces.insert(r.face);
    census.injective = static_cast<long>(faces.size()) == n;
    return census;
}

bool verify_one_special_per_face(const SpecialCensus& census) {
    std::set<int> faces;
    for (const auto& r : census.records) faces.insert(r.face);
    return faces.size() == census.records.size();
}

}  // namespace kalai
