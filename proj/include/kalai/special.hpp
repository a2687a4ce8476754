#pragma once

#include "kalai/face_lattice.hpp"
#include "kalai/mpfloat.hpp"
#include "kalai/parallel.hpp"

namespace kalai {

// Result of one sign vector sigma: the approximate maximizer of
// f_sigma(x) = sum_{i in supp sigma} log(sigma_i x_i) over P n R^d_sigma,
// the exactly identified lattice face whose relative interior holds it, and
// the certification residuals.
struct SpecialRecord {
    SignVector sigma;
    std::vector<MpFloat> point;  // ambient coordinates, exact zeros off supp(sigma)
    int face = -1;               // lattice id in the face lattice of P
    double kkt_residual = 0;     // |pinv(p) - cone projection|_2, from the exact NNLS
    double active_slack = 0;     // largest facet slack treated as active
};

struct SpecialCensus {
    std::vector<SpecialRecord> records;  // ternary order, digit order -1 < 0 < +1
    bool total = false;                  // one record per sigma (3^d records)
    bool injective = false;              // the 3^d face ids are pairwise distinct
};

struct SpecialOptions {
    mpfr_prec_t precision = 128;
    Exec exec = Exec::Parallel;
};

// KALAI_PRECISION_BITS when set, else 128.
mpfr_prec_t default_precision();

// Damped-Newton log-barrier solve for one sigma; requires P proper locally
// anti-blocking. Certification (sign pattern, active set against the lattice
// face, KKT residual) is exact rational on the dyadic iterate; on failure the
// solve retries with doubled mantissa up to 3 times.
SpecialRecord special_point(const Polytope& p, const FaceLattice& l, const SignVector& sigma,
                            const SpecialOptions& opts = {});

// All 3^d solves; independent pure computations, run per opts.exec with
// results keyed by sigma so the outcome is deterministic either way.
SpecialCensus special_census(const Polytope& p, const FaceLattice& l,
                             const SpecialOptions& opts = {});

// One special point per face at most, read off the census face ids.
bool verify_one_special_per_face(const SpecialCensus& census);

}  // namespace kalai
