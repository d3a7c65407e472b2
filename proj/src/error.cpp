#include "weq/error.hpp"

namespace weq {

  std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::non_associative: return "NonAssociative";
      case ErrorKind::bad_index: return "BadIndex";
      case ErrorKind::not_an_ideal: return "NotAnIdeal";
      case ErrorKind::internal_disagreement: return "InternalDisagreement";
      case ErrorKind::empty_word: return "EmptyWord";
      case ErrorKind::parse_error: return "ParseError";
      case ErrorKind::wrong_constraint_shape: return "WrongConstraintShape";
      case ErrorKind::budget_exceeded: return "BudgetExceeded";
      case ErrorKind::not_quadratic: return "NotQuadratic";
      case ErrorKind::empty_side: return "EmptySide";
      case ErrorKind::not_accepting: return "NotAccepting";
      case ErrorKind::not_dlg: return "NotDLG";
      case ErrorKind::theorem_violation: return "TheoremViolation";
      case ErrorKind::invalid_argument: return "InvalidArgument";
    }
    return "Unknown";
  }

  ParseError::ParseError(std::string const& source, std::size_t line, std::size_t column,
                         std::string const& message)
      : Error(ErrorKind::parse_error,
              source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": "
                  + message),
        line_(line),
        column_(column) {}

  void fail(ErrorKind kind, std::string const& message) {
    throw Error(kind, std::string(to_string(kind)) + ": " + message);
  }

}  // namespace weq
