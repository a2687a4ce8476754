#pragma once

#include <cstdint>
#include <vector>

#include "kalai/rat.hpp"

namespace kalai {

// Point / direction with exact rational coordinates. Length is always the
// ambient dimension of the owning object.
using Vec = std::vector<Rat>;

// Subset of coordinates {0,...,d-1}, stored as a bit mask. Exposed through
// 1-based indices only at the CLI/JSON boundary.
struct IndexSet {
    std::uint64_t mask = 0;

    static IndexSet all(int d) { return {d >= 64 ? ~0ull : (1ull << d) - 1}; }
    static IndexSet of(std::initializer_list<int> idx) {
        IndexSet j;
        for (int i : idx) j.add(i);
        return j;
    }

    void add(int i) { mask |= 1ull << i; }
    bool contains(int i) const { return (mask >> i) & 1; }
    int count() const { return __builtin_popcountll(mask); }
    bool empty() const { return mask == 0; }

    std::vector<int> indices() const {
        std::vector<int> out;
        for (std::uint64_t m = mask; m; m &= m - 1) out.push_back(__builtin_ctzll(m));
        return out;
    }

    friend IndexSet operator&(IndexSet a, IndexSet b) { return {a.mask & b.mask}; }
    friend bool operator==(IndexSet a, IndexSet b) { return a.mask == b.mask; }
};

// Element of {-1,0,+1}^d.
struct SignVector {
    std::vector<int8_t> s;

    explicit SignVector(int d = 0) : s(d, 0) {}
    int dim() const { return static_cast<int>(s.size()); }
    int8_t operator[](int i) const { return s[i]; }
    int8_t& operator[](int i) { return s[i]; }

    IndexSet support() const {
        IndexSet j;
        for (int i = 0; i < dim(); ++i)
            if (s[i] != 0) j.add(i);
        return j;
    }

    static SignVector plus(int d) {
        SignVector v(d);
        for (auto& e : v.s) e = 1;
        return v;
    }

    // Position in the ternary enumeration with digit order -1 < 0 < +1 and
    // coordinate 1 most significant; inverse of from_rank.
    long rank() const {
        long r = 0;
        for (int i = 0; i < dim(); ++i) r = 3 * r + (s[i] + 1);
        return r;
    }
    static SignVector from_rank(int d, long r) {
        SignVector v(d);
        for (int i = d - 1; i >= 0; --i) {
            v.s[i] = static_cast<int8_t>(r % 3 - 1);
            r /= 3;
        }
        return v;
    }

    friend bool operator==(const SignVector& a, const SignVector& b) { return a.s == b.s; }
    friend bool operator<(const SignVector& a, const SignVector& b) { return a.s < b.s; }
};

inline SignVector sign_of(const Vec& x) {
    SignVector v(static_cast<int>(x.size()));
    for (size_t i = 0; i < x.size(); ++i) v[static_cast<int>(i)] = static_cast<int8_t>(sign(x[i]));
    return v;
}

// Componentwise pseudo-inverse: 1/x_i where x_i != 0, else 0. An involution
// that preserves the sign vector.
inline Vec pseudo_inverse(const Vec& x) {
    Vec q(x.size());
    for (size_t i = 0; i < x.size(); ++i) q[i] = sgn(x[i]) == 0 ? Rat(0) : Rat(1 / x[i]);
    return q;
}

// Orthogonal projection onto the coordinate subspace spanned by J: keeps x_i
// for i in J, zeroes the rest.
inline Vec project_to(const Vec& x, IndexSet j) {
    Vec out(x.size(), Rat(0));
    for (size_t i = 0; i < x.size(); ++i)
        if (j.contains(static_cast<int>(i))) out[i] = x[i];
    return out;
}

inline Rat dot(const Vec& a, const Vec& b) {
    Rat r(0);
    for (size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
    return r;
}

inline Vec operator-(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

}  // namespace kalai
