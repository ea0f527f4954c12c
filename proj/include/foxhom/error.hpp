// foxhom - knot group invariants via Fox calculus and homomorphism counting
//
// Exception types shared by every module.

#ifndef FOXHOM_ERROR_HPP_
#define FOXHOM_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace foxhom {

  enum class ErrorKind {
    syntax,
    unknown_generator,
    duplicate_generator,
    invalid_parameter,
    missing_image,
    overflow,
    zero_polynomial,
    missing_weight,
    not_infinite_cyclic_h1,
    deficiency_too_large,
    degree_mismatch,
    too_large,
    not_a_member,
    unknown_marker,
    budget_exceeded,
  };

  [[nodiscard]] constexpr std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::syntax: return "SyntaxError";
      case ErrorKind::unknown_generator: return "UnknownGenerator";
      case ErrorKind::duplicate_generator: return "DuplicateGenerator";
      case ErrorKind::invalid_parameter: return "InvalidParameter";
      case ErrorKind::missing_image: return "MissingImage";
      case ErrorKind::overflow: return "Overflow";
      case ErrorKind::zero_polynomial: return "ZeroPolynomial";
      case ErrorKind::missing_weight: return "MissingWeight";
      case ErrorKind::not_infinite_cyclic_h1: return "NotInfiniteCyclicH1";
      case ErrorKind::deficiency_too_large: return "DeficiencyTooLarge";
      case ErrorKind::degree_mismatch: return "DegreeMismatch";
      case ErrorKind::too_large: return "TooLarge";
      case ErrorKind::not_a_member: return "NotAMember";
      case ErrorKind::unknown_marker: return "UnknownMarker";
      case ErrorKind::budget_exceeded: return "BudgetExceeded";
    }
    return "Error";
  }

  //! Every error raised by the library. what() is "<Kind>: <detail>".
  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
          _kind(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return _kind; }

   private:
    ErrorKind _kind;
  };

  //! Raised by the presentation, permutation and polynomial parsers.
  //! Line and column are 1-based.
  class SyntaxError : public Error {
   public:
    SyntaxError(std::size_t line, std::size_t column, const std::string& detail)
        : Error(ErrorKind::syntax,
                std::to_string(line) + ":" + std::to_string(column) + ": "
                    + detail),
          _line(line),
          _column(column) {}

    [[nodiscard]] std::size_t line() const noexcept { return _line; }
    [[nodiscard]] std::size_t column() const noexcept { return _column; }

   private:
    std::size_t _line;
    std::size_t _column;
  };

}  // namespace foxhom

#endif  // FOXHOM_ERROR_HPP_
