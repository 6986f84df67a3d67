#pragma once

#include <stdexcept>
#include <string>

namespace hssp {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NotPrimeError : Error { using Error::Error; };
struct TooLargeError : Error { using Error::Error; };
struct DivisionByZeroError : Error { using Error::Error; };
struct FieldMismatchError : Error { using Error::Error; };
struct ArityMismatchError : Error { using Error::Error; };
struct DuplicateAbscissaError : Error { using Error::Error; };
struct TooFewPointsError : Error { using Error::Error; };
struct InconsistentSystemError : Error { using Error::Error; };
struct SingularMatrixError : Error { using Error::Error; };
struct DomainMismatchError : Error { using Error::Error; };
struct NotClosedError : Error { using Error::Error; };
struct EvenCharacteristicError : Error { using Error::Error; };
struct SharplyTwoTransitiveError : Error { using Error::Error; };
struct FieldTooSmallError : Error { using Error::Error; };
struct NoPolynomialSizeBaseError : Error { using Error::Error; };
struct BadBaseError : Error { using Error::Error; };
struct NotGeneratingError : Error { using Error::Error; };
struct PromiseViolationError : Error { using Error::Error; };
struct NoConsistentSubgroupError : Error { using Error::Error; };
struct AmbiguousAnswerError : Error { using Error::Error; };

}  // namespace hssp
