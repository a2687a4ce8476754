#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "kalai/rat.hpp"

namespace kalai {

// Thin RAII wrapper over an mpfr_t with per-value precision. Binary results
// carry the larger precision of their operands; round-to-nearest throughout.
class MpFloat {
  public:
    explicit MpFloat(mpfr_prec_t prec = 128) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    MpFloat(const MpFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    MpFloat(MpFloat&& o) noexcept {
        mpfr_init2(v_, 53);
        mpfr_swap(v_, o.v_);
    }
    MpFloat& operator=(const MpFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    MpFloat& operator=(MpFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~MpFloat() { mpfr_clear(v_); }

    static MpFloat of(const Rat& q, mpfr_prec_t prec) {
        MpFloat f(prec);
        mpfr_set_q(f.v_, q.get_mpq_t(), MPFR_RNDN);
        return f;
    }
    static MpFloat of(long n, mpfr_prec_t prec) {
        MpFloat f(prec);
        mpfr_set_si(f.v_, n, MPFR_RNDN);
        return f;
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // Exact: every finite float is a dyadic rational.
    Rat to_rat() const {
        mpq_t q;
        mpq_init(q);
        mpfr_get_q(q, v_);
        Rat out(q);
        mpq_clear(q);
        return out;
    }

    std::string str(size_t digits = 20) const {
        mpfr_exp_t e;
        char* s = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
        std::string out = format(s, e);
        mpfr_free_str(s);
        return out;
    }

    int sign() const { return mpfr_sgn(v_); }
    bool positive() const { return sign() > 0; }

    friend MpFloat operator+(const MpFloat& a, const MpFloat& b) { return bin(mpfr_add, a, b); }
    friend MpFloat operator-(const MpFloat& a, const MpFloat& b) { return bin(mpfr_sub, a, b); }
    friend MpFloat operator*(const MpFloat& a, const MpFloat& b) { return bin(mpfr_mul, a, b); }
    friend MpFloat operator/(const MpFloat& a, const MpFloat& b) { return bin(mpfr_div, a, b); }
    MpFloat operator-() const {
        MpFloat r(prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }
    MpFloat& operator+=(const MpFloat& o) { return *this = *this + o; }
    MpFloat& operator-=(const MpFloat& o) { return *this = *this - o; }

    friend bool operator<(const MpFloat& a, const MpFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const MpFloat& a, const MpFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const MpFloat& a, const MpFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }

    MpFloat log() const {
        MpFloat r(prec());
        mpfr_log(r.v_, v_, MPFR_RNDN);
        return r;
    }
    MpFloat inv() const {
        MpFloat r(prec());
        mpfr_si_div(r.v_, 1, v_, MPFR_RNDN);
        return r;
    }
    MpFloat abs() const {
        MpFloat r(prec());
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }

  private:
    static MpFloat bin(int (*op)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t),
                       const MpFloat& a, const MpFloat& b) {
        MpFloat r(std::max(a.prec(), b.prec()));
        op(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    static std::string format(const char* digits, mpfr_exp_t e) {
        std::string d(digits);
        bool neg = !d.empty() && d[0] == '-';
        if (neg) d.erase(0, 1);
        if (d.empty() || d.find_first_not_of('0') == std::string::npos) return "0";
        std::string out;
        if (e <= 0)
            out = "0." + std::string(static_cast<size_t>(-e), '0') + d;
        else if (static_cast<size_t>(e) >= d.size())
            out = d + std::string(static_cast<size_t>(e) - d.size(), '0');
        else
            out = d.substr(0, static_cast<size_t>(e)) + "." + d.substr(static_cast<size_t>(e));
        if (out.find('.') != std::string::npos) {
            out.erase(out.find_last_not_of('0') + 1);
            if (out.back() == '.') out.pop_back();
        }
        return neg ? "-" + out : out;
    }

    mpfr_t v_;
};

}  // namespace kalai
