#ifndef SUBCODE_ERRORS_HPP
#define SUBCODE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace subcode {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FieldMismatch : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct ShapeError : Error { using Error::Error; };
struct AmbientMismatch : Error { using Error::Error; };
struct PivotNotInvertible : Error { using Error::Error; };
struct EmptyComplement : Error { using Error::Error; };
struct EmptyProfile : Error { using Error::Error; };
struct FitError : Error { using Error::Error; };
struct ParamError : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };

}  // namespace subcode

#endif
