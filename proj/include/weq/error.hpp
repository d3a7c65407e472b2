// Exceptions thrown by the weq library.

#ifndef WEQ_ERROR_HPP_
#define WEQ_ERROR_HPP_

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace weq {

  enum class ErrorKind {
    non_associative,
    bad_index,
    not_an_ideal,
    internal_disagreement,
    empty_word,
    parse_error,
    wrong_constraint_shape,
    budget_exceeded,
    not_quadratic,
    empty_side,
    not_accepting,
    not_dlg,
    theorem_violation,
    invalid_argument
  };

  std::string_view to_string(ErrorKind kind) noexcept;

  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept {
      return kind_;
    }

   private:
    ErrorKind kind_;
  };

  // The lexicographically least triple (x, y, z) with (xy)z != x(yz).
  class NonAssociative : public Error {
   public:
    NonAssociative(std::size_t x, std::size_t y, std::size_t z, std::string const& message)
        : Error(ErrorKind::non_associative, message), triple_{x, y, z} {}

    std::array<std::size_t, 3> const& triple() const noexcept {
      return triple_;
    }

   private:
    std::array<std::size_t, 3> triple_;
  };

  // Raised by the text parsers; line and column are 1-based.
  class ParseError : public Error {
   public:
    ParseError(std::string const& source, std::size_t line, std::size_t column,
               std::string const& message);

    std::size_t line() const noexcept {
      return line_;
    }
    std::size_t column() const noexcept {
      return column_;
    }

   private:
    std::size_t line_;
    std::size_t column_;
  };

  [[noreturn]] void fail(ErrorKind kind, std::string const& message);

}  // namespace weq

#endif  // WEQ_ERROR_HPP_
