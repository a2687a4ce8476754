#include "kalai/linalg.hpp"

#include "kalai/errors.hpp"

namespace kalai {

namespace {

// Row echelon with partial pivoting by first nonzero; returns pivot columns.
std::vector<int> eliminate(Mat& a) {
    std::vector<int> pivots;
    if (a.empty()) return pivots;
    const int m = static_cast<int>(a.size());
    const int n = static_cast<int>(a[0].size());
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        int p = -1;
        for (int r = row; r < m; ++r)
            if (sgn(a[r][col]) != 0) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(a[row], a[p]);
        for (int r = row + 1; r < m; ++r) {
            if (sgn(a[r][col]) == 0) continue;
            Rat f = a[r][col] / a[row][col];
            for (int c = col; c < n; ++c) a[r][c] -= f * a[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

int rank(Mat a) { return static_cast<int>(eliminate(a).size()); }

int affine_rank(const std::vector<Vec>& pts) {
    if (pts.empty()) return -1;
    Mat diff;
    for (size_t i = 1; i < pts.size(); ++i) diff.push_back(pts[i] - pts[0]);
    return rank(std::move(diff));
}

Rat det(Mat a) {
    const int n = static_cast<int>(a.size());
    Rat d(1);
    for (int col = 0; col < n; ++col) {
        int p = -1;
        for (int r = col; r < n; ++r)
            if (sgn(a[r][col]) != 0) {
                p = r;
                break;
            }
        if (p < 0) return Rat(0);
        if (p != col) {
            std::swap(a[col], a[p]);
            d = -d;
        }
        d *= a[col][col];
        for (int r = col + 1; r < n; ++r) {
            if (sgn(a[r][col]) == 0) continue;
            Rat f = a[r][col] / a[col][col];
            for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return d;
}

std::optional<Vec> solve(Mat a, Vec b) {
    const int m = static_cast<int>(a.size());
    const int n = m ? static_cast<int>(a[0].size()) : 0;
    for (int r = 0; r < m; ++r) a[r].push_back(b[r]);
    Mat aug = std::move(a);
    std::vector<int> pivots = eliminate(aug);
    // Inconsistent iff a pivot lands in the augmented column.
    if (!pivots.empty() && pivots.back() == n) return std::nullopt;
    Vec x(n, Rat(0));
    for (int i = static_cast<int>(pivots.size()) - 1; i >= 0; --i) {
        int col = pivots[i];
        Rat acc = aug[i][n];
        for (int c = col + 1; c < n; ++c) acc -= aug[i][c] * x[c];
        x[col] = acc / aug[i][col];
    }
    return x;
}

std::vector<int> pivot_columns(Mat a) { return eliminate(a); }

Vec least_squares(const Mat& a, const Vec& b) {
    const int m = static_cast<int>(a.size());
    const int n = m ? static_cast<int>(a[0].size()) : 0;
    Mat normal(n, Vec(n, Rat(0)));
    Vec rhs(n, Rat(0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            for (int r = 0; r < m; ++r) normal[i][j] += a[r][i] * a[r][j];
        for (int r = 0; r < m; ++r) rhs[i] += a[r][i] * b[r];
    }
    auto x = solve(std::move(normal), std::move(rhs));
    if (!x) throw InvariantViolation("least_squares: dependent columns");
    return *x;
}

}  // namespace kalai
