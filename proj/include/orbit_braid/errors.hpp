#pragma once

#include <stdexcept>
#include <string>

namespace orbit_braid {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define ORBIT_BRAID_ERROR(Name)            \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

ORBIT_BRAID_ERROR(IndexOutOfRange);
ORBIT_BRAID_ERROR(ParseError);
ORBIT_BRAID_ERROR(ParamsMismatch);
ORBIT_BRAID_ERROR(NotPure);
ORBIT_BRAID_ERROR(Underflow);
ORBIT_BRAID_ERROR(UnsupportedRank);
ORBIT_BRAID_ERROR(NotConjugateForm);
ORBIT_BRAID_ERROR(NotPermutation);
ORBIT_BRAID_ERROR(PreconditionViolated);
ORBIT_BRAID_ERROR(Stuck);
ORBIT_BRAID_ERROR(NotRealizable);
ORBIT_BRAID_ERROR(NotInKernel);
ORBIT_BRAID_ERROR(NotInSectionDomain);
ORBIT_BRAID_ERROR(SearchBudgetExceeded);

#undef ORBIT_BRAID_ERROR

}  // namespace orbit_braid
