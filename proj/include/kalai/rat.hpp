#pragma once

#include <gmpxx.h>

#include <string>

#include "kalai/errors.hpp"

namespace kalai {

// Exact rational scalar. mpq_class keeps the canonical form we rely on
// everywhere: gcd(|num|, den) = 1, den >= 1, zero is 0/1. Equality is
// therefore structural and values are safe to hash, sort and serialize.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline int sign(const Rat& q) { return sgn(q); }

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

// Serialized form: "a" for integers, "a/b" otherwise with b > 0.
inline std::string to_string(const Rat& q) { return q.get_str(); }

inline Rat rat_from_string(const std::string& s) {
    // stricter than mpq_set_str, which would skip embedded whitespace
    bool shape_ok = !s.empty();
    int slashes = 0;
    for (size_t i = 0; i < s.size() && shape_ok; ++i) {
        char c = s[i];
        if (c == '-')
            shape_ok = i == 0;
        else if (c == '/')
            shape_ok = ++slashes == 1 && i > 0 && i + 1 < s.size();
        else
            shape_ok = c >= '0' && c <= '9';
    }
    Rat q;
    if (!shape_ok || q.set_str(s, 10) != 0)
        throw ParseError("bad rational literal: '" + s + "'");
    if (sgn(q.get_den()) <= 0)
        throw ParseError("bad rational literal (nonpositive denominator): '" + s + "'");
    q.canonicalize();
    return q;
}

}  // namespace kalai
