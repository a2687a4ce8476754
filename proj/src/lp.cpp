#include "kalai/lp.hpp"

#include "kalai/errors.hpp"

namespace kalai {

namespace {

// Simplex on the standard form  max c.z  s.t.  A z = b, z >= 0.
// Two phases with artificial variables, Bland's rule throughout.
class Simplex {
  public:
    Simplex(Mat a, Vec b, Vec c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
        m_ = static_cast<int>(a_.size());
        n_ = m_ ? static_cast<int>(a_[0].size()) : 0;
    }

    LpResult::Status run(Vec& z, Rat& value) {
        for (int r = 0; r < m_; ++r)
            if (sgn(b_[r]) < 0) {
                for (auto& e : a_[r]) e = -e;
                b_[r] = -b_[r];
            }
        // Phase 1: artificial basis.
        tab_ = a_;
        rhs_ = b_;
        basis_.resize(m_);
        for (int r = 0; r < m_; ++r) {
            for (int k = 0; k < m_; ++k) tab_[r].push_back(Rat(k == r ? 1 : 0));
            basis_[r] = n_ + r;
        }
        Vec phase1(n_ + m_, Rat(0));
        for (int k = 0; k < m_; ++k) phase1[n_ + k] = Rat(-1);
        iterate(phase1, n_ + m_);
        Rat art(0);
        for (int r = 0; r < m_; ++r)
            if (basis_[r] >= n_) art += rhs_[r];
        if (sgn(art) != 0) return LpResult::Infeasible;
        purge_artificials();

        Vec obj(c_);
        obj.resize(n_ + m_, Rat(0));
        if (!iterate(obj, n_)) return LpResult::UnboundedLp;
        z.assign(n_, Rat(0));
        value = 0;
        for (int r = 0; r < m_; ++r)
            if (basis_[r] < n_) {
                z[basis_[r]] = rhs_[r];
                value += c_[basis_[r]] * rhs_[r];
            }
        return LpResult::Optimal;
    }

  private:
    // Pivots until no reduced cost is positive among columns < limit.
    // Returns false on unboundedness.
    bool iterate(const Vec& obj, int limit) {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < limit; ++j) {
                if (is_basic(j)) continue;
                Rat red = obj[j];
                for (int r = 0; r < m_; ++r)
                    if (sgn(tab_[r][j]) != 0) red -= obj[basis_[r]] * tab_[r][j];
                if (sgn(red) > 0) {
                    enter = j;
                    break;  // Bland: smallest index
                }
            }
            if (enter < 0) return true;
            int leave = -1;
            Rat best;
            for (int r = 0; r < m_; ++r) {
                if (sgn(tab_[r][enter]) <= 0) continue;
                Rat ratio = rhs_[r] / tab_[r][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis_[r] < basis_[leave])) {
                    leave = r;
                    best = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }

    void pivot(int row, int col) {
        Rat p = tab_[row][col];
        for (auto& e : tab_[row]) e /= p;
        rhs_[row] /= p;
        for (int r = 0; r < m_; ++r) {
            if (r == row || sgn(tab_[r][col]) == 0) continue;
            Rat f = tab_[r][col];
            for (size_t c = 0; c < tab_[r].size(); ++c) tab_[r][c] -= f * tab_[row][c];
            rhs_[r] -= f * rhs_[row];
        }
        basis_[row] = col;
    }

    // Pivot remaining zero-valued artificials out of the basis; rows where
    // that is impossible are redundant equalities and can be cleared.
    void purge_artificials() {
        for (int r = 0; r < m_; ++r) {
            if (basis_[r] < n_) continue;
            int col = -1;
            for (int j = 0; j < n_; ++j)
                if (sgn(tab_[r][j]) != 0) {
                    col = j;
                    break;
                }
            if (col >= 0)
                pivot(r, col);
            else
                rhs_[r] = 0;  // redundant row, keep inert
        }
    }

    bool is_basic(int j) const {
        for (int b : basis_)
            if (b == j) return true;
        return false;
    }

    Mat a_, tab_;
    Vec b_, rhs_, c_;
    std::vector<int> basis_;
    int m_ = 0, n_ = 0;
};

}  // namespace

LpResult lp_max(const Vec& c, const Mat& a, const Vec& b) {
    const int m = static_cast<int>(a.size());
    const int n = static_cast<int>(c.size());
    // x = u - w with u, w >= 0, slack s >= 0 per row.
    Mat sa(m, Vec(2 * n + m, Rat(0)));
    for (int r = 0; r < m; ++r) {
        for (int j = 0; j < n; ++j) {
            sa[r][j] = a[r][j];
            sa[r][n + j] = -a[r][j];
        }
        sa[r][2 * n + r] = Rat(1);
    }
    Vec sc(2 * n + m, Rat(0));
    for (int j = 0; j < n; ++j) {
        sc[j] = c[j];
        sc[n + j] = -c[j];
    }
    Simplex sx(std::move(sa), b, std::move(sc));
    Vec z;
    LpResult out;
    out.status = sx.run(z, out.value);
    if (out.status == LpResult::Optimal) {
        out.x.assign(n, Rat(0));
        for (int j = 0; j < n; ++j) out.x[j] = z[j] - z[n + j];
    }
    return out;
}

bool in_cone(const Mat& gens, const Vec& v) {
    const int k = static_cast<int>(gens.size());
    const int d = static_cast<int>(v.size());
    if (k == 0) {
        for (const auto& e : v)
            if (sgn(e) != 0) return false;
        return true;
    }
    Mat a(d, Vec(k));
    for (int r = 0; r < d; ++r)
        for (int j = 0; j < k; ++j) a[r][j] = gens[j][r];
    Simplex sx(std::move(a), v, Vec(k, Rat(0)));
    Vec z;
    Rat val;
    return sx.run(z, val) == LpResult::Optimal;
}

bool lp_feasible(const Mat& a, const Vec& b, const Mat& e, const Vec& f) {
    const int n = a.empty() ? (e.empty() ? 0 : static_cast<int>(e[0].size()))
                            : static_cast<int>(a[0].size());
    const int m = static_cast<int>(a.size());
    const int p = static_cast<int>(e.size());
    Mat sa(m + p, Vec(2 * n + m, Rat(0)));
    Vec sb(m + p);
    for (int r = 0; r < m; ++r) {
        for (int j = 0; j < n; ++j) {
            sa[r][j] = a[r][j];
            sa[r][n + j] = -a[r][j];
        }
        sa[r][2 * n + r] = Rat(1);
        sb[r] = b[r];
    }
    for (int r = 0; r < p; ++r) {
        for (int j = 0; j < n; ++j) {
            sa[m + r][j] = e[r][j];
            sa[m + r][n + j] = -e[r][j];
        }
        sb[m + r] = f[r];
    }
    Simplex sx(std::move(sa), std::move(sb), Vec(2 * n + m, Rat(0)));
    Vec z;
    Rat val;
    return sx.run(z, val) == LpResult::Optimal;
}

}  // namespace kalai
