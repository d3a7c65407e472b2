// Symbols, words over constants and variables, and the symbol table.

#ifndef WEQ_WORDS_HPP_
#define WEQ_WORDS_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace weq {

  enum class SymbolKind : std::uint8_t { constant, variable };

  struct Symbol {
    SymbolKind    kind  = SymbolKind::constant;
    std::uint32_t index = 0;

    static constexpr Symbol constant(std::uint32_t i) noexcept {
      return {SymbolKind::constant, i};
    }
    static constexpr Symbol variable(std::uint32_t i) noexcept {
      return {SymbolKind::variable, i};
    }
    constexpr bool is_constant() const noexcept {
      return kind == SymbolKind::constant;
    }
    constexpr bool is_variable() const noexcept {
      return kind == SymbolKind::variable;
    }

    // Constants sort before variables.
    friend constexpr auto operator<=>(Symbol const&, Symbol const&) = default;
  };

  using Word = std::vector<Symbol>;

  //! Length first, then lexicographic.
  bool shortlex_less(Word const& u, Word const& v);

  bool is_constant_word(Word const& w);
  std::size_t occurrences(Word const& w, Symbol x);

  //! Sigma and X.  Tokens are pairwise distinct across both lists.
  class SymbolTable {
   public:
    SymbolTable() = default;
    SymbolTable(std::vector<std::string> constants, std::vector<std::string> variables);

    //! User-facing tokens; reject duplicates and the reserved '$' prefix.
    Symbol add_constant(std::string name);
    Symbol add_variable(std::string name);

    //! The first of "#", "#1", "#2", ... not already a symbol.
    Symbol add_separator();
    //! A variable named "$<k>" for the least unused k >= 1.
    Symbol add_fresh_variable();

    std::size_t num_constants() const noexcept {
      return constants_.size();
    }
    std::size_t num_variables() const noexcept {
      return variables_.size();
    }
    std::vector<std::string> const& constants() const noexcept {
      return constants_;
    }
    std::vector<std::string> const& variables() const noexcept {
      return variables_;
    }

    std::string const& name(Symbol s) const;
    std::optional<Symbol> find(std::string_view token) const;

    //! Tokens joined without separators when every token is one character,
    //! otherwise separated by single spaces.
    std::string format(Word const& w) const;
    //! Always space separated; the inverse of parse_word.
    std::string tokens(Word const& w) const;
    //! Whitespace separated tokens; throws InvalidArgument on unknown ones.
    Word parse_word(std::string_view text) const;

    friend bool operator==(SymbolTable const&, SymbolTable const&) = default;

   private:
    Symbol insert(std::string name, SymbolKind kind);

    std::vector<std::string> constants_;
    std::vector<std::string> variables_;
  };

  //! Greatest k with p^k a factor of w for some nonempty p; 0 iff w is empty.
  template <typename Sequence>
  std::size_t exp_word(Sequence const& w) {
    std::size_t const n    = std::size(w);
    std::size_t       best = n == 0 ? 0 : 1;
    for (std::size_t p = 1; p * 2 <= n; ++p) {
      // Longest stretch where w[j] == w[j - p]; a stretch of length r gives
      // a factor of length r + p with period p.
      std::size_t run = 0;
      for (std::size_t j = p; j < n; ++j) {
        if (w[j] == w[j - p]) {
          ++run;
          best = std::max(best, (run + p) / p);
        } else {
          run = 0;
        }
      }
    }
    return best;
  }

}  // namespace weq

#endif  // WEQ_WORDS_HPP_
