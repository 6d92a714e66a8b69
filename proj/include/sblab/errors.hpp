#pragma once

#include <stdexcept>
#include <string>

namespace sblab {

// Base class for all library errors so callers can catch sblab::Error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SBLAB_DEFINE_ERROR(NAME)                  \
  class NAME : public Error {                     \
   public:                                        \
    using Error::Error;                           \
  }

SBLAB_DEFINE_ERROR(ParseError);
SBLAB_DEFINE_ERROR(DegenerateDesign);
SBLAB_DEFINE_ERROR(DimensionError);
SBLAB_DEFINE_ERROR(DomainError);
SBLAB_DEFINE_ERROR(CertificateRefused);
SBLAB_DEFINE_ERROR(ComplexityRefused);
SBLAB_DEFINE_ERROR(SolverError);
SBLAB_DEFINE_ERROR(RankError);
SBLAB_DEFINE_ERROR(ConfigError);
SBLAB_DEFINE_ERROR(IoError);
SBLAB_DEFINE_ERROR(IntegralError);
SBLAB_DEFINE_ERROR(EmptyMixture);
SBLAB_DEFINE_ERROR(EmptyFamily);
SBLAB_DEFINE_ERROR(ConvergenceError);

#undef SBLAB_DEFINE_ERROR

}  // namespace sblab
