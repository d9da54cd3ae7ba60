#pragma once

#include <stdexcept>
#include <string>

namespace cvec {

// Base class for every error thrown by the library. Mathematical
// violations found by the check routines are reported as data instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define CVEC_DEFINE_ERROR(Name)          \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  }

CVEC_DEFINE_ERROR(DimensionMismatch);
CVEC_DEFINE_ERROR(IndexOutOfRange);
CVEC_DEFINE_ERROR(NotUnimodular);
CVEC_DEFINE_ERROR(NonIntegerResult);
CVEC_DEFINE_ERROR(NotSkewSymmetrizable);
CVEC_DEFINE_ERROR(BudgetInvalid);
CVEC_DEFINE_ERROR(RankTooLargeForCanonicalization);
CVEC_DEFINE_ERROR(NonExactDivision);
CVEC_DEFINE_ERROR(NotHomogeneous);
CVEC_DEFINE_ERROR(NotAdmissible);
CVEC_DEFINE_ERROR(InvalidRepresentation);
CVEC_DEFINE_ERROR(AlgebraMismatch);
CVEC_DEFINE_ERROR(SupportViolation);
CVEC_DEFINE_ERROR(NotSilting);
CVEC_DEFINE_ERROR(MutationNotTwoTerm);
CVEC_DEFINE_ERROR(NotExhausted);
CVEC_DEFINE_ERROR(ParseError);

#undef CVEC_DEFINE_ERROR

}  // namespace cvec
