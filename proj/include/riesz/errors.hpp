#pragma once

#include <stdexcept>
#include <string>

namespace riesz {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define RIESZ_DEFINE_ERROR(Name)                                               \
  class Name : public Error {                                                  \
  public:                                                                      \
    using Error::Error;                                                        \
  }

RIESZ_DEFINE_ERROR(ZeroConstantTerm);
RIESZ_DEFINE_ERROR(NonzeroInnerConstant);
RIESZ_DEFINE_ERROR(OddPiExponent);
RIESZ_DEFINE_ERROR(PiResidue);
RIESZ_DEFINE_ERROR(InsufficientVariables);
RIESZ_DEFINE_ERROR(IndexOutOfRange);
RIESZ_DEFINE_ERROR(PoleAtOne);
RIESZ_DEFINE_ERROR(OddArgument);
RIESZ_DEFINE_ERROR(DomainError);
RIESZ_DEFINE_ERROR(NoConvergenceCertificate);

#undef RIESZ_DEFINE_ERROR

} // namespace riesz
