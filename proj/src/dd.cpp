#include "kalai/dd.hpp"

#include <algorithm>
#include <set>

#include "kalai/errors.hpp"

namespace kalai {

Vec primitive(const Vec& v) {
    Int l(1);
    for (const auto& e : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.get_den().get_mpz_t());
    Int g(0);
    std::vector<Int> num(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        num[i] = v[i].get_num() * (l / v[i].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num[i].get_mpz_t());
    }
    Vec out(v.size(), Rat(0));
    if (sgn(g) == 0) return out;
    for (size_t i = 0; i < v.size(); ++i) out[i] = rat(num[i] / g, Int(1));
    return out;
}

namespace {

struct Ray {
    Vec dir;                 // primitive
    std::vector<bool> tight;  // per processed row, <a_i, dir> == 0
};

// rank of the rows of a indexed by the common tight set of r1, r2
int common_tight_rank(const Mat& a, const Ray& r1, const Ray& r2, int upto) {
    Mat sub;
    for (int i = 0; i < upto; ++i)
        if (r1.tight[i] && r2.tight[i]) sub.push_back(a[i]);
    return rank(std::move(sub));
}

}  // namespace

std::vector<Vec> extreme_rays(Mat a) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    const int m = static_cast<int>(a.size());
    const int n = m ? static_cast<int>(a[0].size()) : 0;
    if (n == 0) return {};

    // Greedy rank-n row basis from the sorted list.
    std::vector<int> basis;
    {
        Mat acc;
        for (int i = 0; i < m && static_cast<int>(basis.size()) < n; ++i) {
            acc.push_back(a[i]);
            if (rank(acc) == static_cast<int>(basis.size()) + 1)
                basis.push_back(i);
            else
                acc.pop_back();
        }
    }
    if (static_cast<int>(basis.size()) < n)
        throw DegenerateInput("cone is not pointed");

    // Initial rays: columns of -inv(a_basis). Ray j is tight on every basis
    // row except the j-th, where it is strictly feasible.
    std::vector<bool> processed(m, false);
    std::vector<int> order;  // processed rows in insertion order
    std::vector<Ray> rays;
    for (int j = 0; j < n; ++j) {
        Vec rhs(n, Rat(0));
        rhs[j] = Rat(-1);
        Mat ab;
        for (int i : basis) ab.push_back(a[i]);
        auto x = solve(std::move(ab), std::move(rhs));
        if (!x) throw InvariantViolation("dd: singular basis");
        Ray r;
        r.dir = primitive(*x);
        rays.push_back(std::move(r));
    }
    for (int i : basis) {
        processed[i] = true;
        order.push_back(i);
    }
    for (auto& r : rays) {
        r.tight.resize(order.size());
        for (size_t k = 0; k < order.size(); ++k) r.tight[k] = sgn(dot(a[order[k]], r.dir)) == 0;
    }

    Mat arows;  // rows in insertion order, for rank tests
    for (int i : order) arows.push_back(a[i]);

    for (int i = 0; i < m; ++i) {
        if (processed[i]) continue;
        const Vec& row = a[i];
        std::vector<Rat> val(rays.size());
        for (size_t r = 0; r < rays.size(); ++r) val[r] = dot(row, rays[r].dir);

        std::vector<Ray> next;
        std::set<Vec> seen;
        for (size_t r = 0; r < rays.size(); ++r)
            if (sgn(val[r]) <= 0) {
                next.push_back(rays[r]);
                next.back().tight.push_back(sgn(val[r]) == 0);
                seen.insert(next.back().dir);
            }
        const int upto = static_cast<int>(arows.size());
        for (size_t r1 = 0; r1 < rays.size(); ++r1) {
            if (sgn(val[r1]) >= 0) continue;
            for (size_t r2 = 0; r2 < rays.size(); ++r2) {
                if (sgn(val[r2]) <= 0) continue;
                if (common_tight_rank(arows, rays[r1], rays[r2], upto) != n - 2) continue;
                Vec combo(n);
                for (int c = 0; c < n; ++c)
                    combo[c] = val[r2] * rays[r1].dir[c] - val[r1] * rays[r2].dir[c];
                combo = primitive(combo);
                if (!seen.insert(combo).second) continue;
                Ray nr;
                nr.dir = std::move(combo);
                nr.tight.resize(upto + 1);
                for (int k = 0; k < upto; ++k)
                    nr.tight[k] = rays[r1].tight[k] && rays[r2].tight[k];
                // recompute exactly: the combination can gain tight rows
                for (int k = 0; k < upto; ++k)
                    if (!nr.tight[k]) nr.tight[k] = sgn(dot(arows[k], nr.dir)) == 0;
                nr.tight[upto] = true;
                next.push_back(std::move(nr));
            }
        }
        rays = std::move(next);
        arows.push_back(row);
        processed[i] = true;
    }

    std::vector<Vec> out;
    out.reserve(rays.size());
    for (auto& r : rays) out.push_back(std::move(r.dir));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace kalai
