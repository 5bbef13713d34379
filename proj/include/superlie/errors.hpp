#ifndef SUPERLIE_ERRORS_HPP
#define SUPERLIE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace superlie {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define SUPERLIE_ERROR(Name)                         \
  class Name : public Error {                        \
  public:                                            \
    explicit Name(const std::string& what)           \
        : Error(std::string(#Name ": ") + what) {}   \
  }

SUPERLIE_ERROR(ContainmentError);
SUPERLIE_ERROR(AmbientMismatch);
SUPERLIE_ERROR(SizeError);
SUPERLIE_ERROR(NotAnIdeal);
SUPERLIE_ERROR(ActionInvalid);
SUPERLIE_ERROR(IncompatibleActions);
SUPERLIE_ERROR(BracketNotWellDefined);
SUPERLIE_ERROR(NotPerfect);
SUPERLIE_ERROR(CrossedModuleMismatch);
SUPERLIE_ERROR(ComplexInconsistent);
SUPERLIE_ERROR(ClassExceeded);
SUPERLIE_ERROR(FieldUnsupported);
SUPERLIE_ERROR(DegreeOverflow);
SUPERLIE_ERROR(NotUnital);
SUPERLIE_ERROR(ParseError);
SUPERLIE_ERROR(AxiomViolation);

#undef SUPERLIE_ERROR

}  // namespace superlie

#endif
