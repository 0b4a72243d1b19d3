#pragma once

#include <stdexcept>
#include <string>

namespace weylzeta {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define WEYLZETA_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                         \
   public:                                                            \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  };

WEYLZETA_DEFINE_ERROR(UnsupportedRank)
WEYLZETA_DEFINE_ERROR(DimensionMismatch)
WEYLZETA_DEFINE_ERROR(ZeroConstantDenominator)
WEYLZETA_DEFINE_ERROR(NonIntegralWeight)
WEYLZETA_DEFINE_ERROR(NonDivisible)
WEYLZETA_DEFINE_ERROR(SimplyLaced)
WEYLZETA_DEFINE_ERROR(GenericSearchExhausted)
WEYLZETA_DEFINE_ERROR(NonGenericPhi)
WEYLZETA_DEFINE_ERROR(ContourTooClose)
WEYLZETA_DEFINE_ERROR(SignOnNonInteger)
WEYLZETA_DEFINE_ERROR(ParseError)
WEYLZETA_DEFINE_ERROR(DomainError)

#undef WEYLZETA_DEFINE_ERROR

}  // namespace weylzeta
