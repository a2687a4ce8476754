#pragma once

#include <stdexcept>
#include <string>

namespace kalai {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateInput : Error {
    using Error::Error;
};
struct Unbounded : Error {
    using Error::Error;
};
struct OriginNotInterior : Error {
    using Error::Error;
};
struct NotLocallyAntiBlocking : Error {
    using Error::Error;
};
struct NotProper : Error {
    using Error::Error;
};
struct NotUnconditional : Error {
    using Error::Error;
};
struct ImproperFace : Error {
    using Error::Error;
};
struct NotQuadrilateral : Error {
    using Error::Error;
};

// A 2-D coordinate section with more (or fewer) than 4 vertices; carries the pair.
struct SectionNotQuadrilateral : Error {
    int i, j;  // 1-based coordinates
    SectionNotQuadrilateral(int i_, int j_)
        : Error("section {" + std::to_string(i_) + "," + std::to_string(j_) +
                "} is not a quadrilateral"),
          i(i_), j(j_) {}
};

struct CertificationFailure : Error {
    using Error::Error;
};

// A condition that theory guarantees cannot fail did fail; always a bug.
struct InvariantViolation : Error {
    using Error::Error;
};

// The clique-polytope reconstruction disagreed with the normalized
// minimizer; kept as a tripwire, must not occur.
struct ReconstructionMismatch : InvariantViolation {
    using InvariantViolation::InvariantViolation;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace kalai
