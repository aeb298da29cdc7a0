#pragma once

#include <stdexcept>
#include <string>

namespace mgfront {

// Base class for all solver failures so callers can catch the whole family.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define MGFRONT_ERROR(Name)                                             \
    struct Name : Error {                                               \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

// model
MGFRONT_ERROR(NoPositiveFixedPoint);
MGFRONT_ERROR(MultipleFixedPoints);
MGFRONT_ERROR(InvalidSampleCount);
MGFRONT_ERROR(InvalidParameter);

// charfun
MGFRONT_ERROR(Overflow);
MGFRONT_ERROR(NoPositiveRoot);
MGFRONT_ERROR(NoNegativeRoot);
MGFRONT_ERROR(ConvergenceFailure);

// fundsol
MGFRONT_ERROR(NotHyperbolic);
MGFRONT_ERROR(QuadratureTolExceeded);
MGFRONT_ERROR(HorizonExceeded);
MGFRONT_ERROR(GridMismatch);

// reduction
MGFRONT_ERROR(NotInDkappa);
MGFRONT_ERROR(NegativityViolated);
MGFRONT_ERROR(NegativeInput);

// frontsolve
MGFRONT_ERROR(RangeViolation);
MGFRONT_ERROR(NotInDL);
MGFRONT_ERROR(IterationLimitReached);
MGFRONT_ERROR(CollapsedToZero);

// cli
MGFRONT_ERROR(ParseError);
MGFRONT_ERROR(ValidationError);
MGFRONT_ERROR(IoError);

#undef MGFRONT_ERROR

}  // namespace mgfront
