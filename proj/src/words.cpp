#include "weq/words.hpp"

#include <cctype>

#include "weq/error.hpp"

namespace weq {

  bool shortlex_less(Word const& u, Word const& v) {
    if (u.size() != v.size()) {
      return u.size() < v.size();
    }
    return u < v;
  }

  bool is_constant_word(Word const& w) {
    return std::all_of(w.begin(), w.end(), [](Symbol s) { return s.is_constant(); });
  }

  std::size_t occurrences(Word const& w, Symbol x) {
    return static_cast<std::size_t>(std::count(w.begin(), w.end(), x));
  }

  SymbolTable::SymbolTable(std::vector<std::string> constants, std::vector<std::string> variables) {
    for (auto& c : constants) {
      add_constant(std::move(c));
    }
    for (auto& v : variables) {
      add_variable(std::move(v));
    }
  }

  Symbol SymbolTable::insert(std::string name, SymbolKind kind) {
    if (name.empty()) {
      fail(ErrorKind::invalid_argument, "empty symbol token");
    }
    for (char ch : name) {
      if (std::isspace(static_cast<unsigned char>(ch))) {
        fail(ErrorKind::invalid_argument, "symbol token '" + name + "' contains whitespace");
      }
    }
    if (find(name)) {
      fail(ErrorKind::invalid_argument, "duplicate symbol token '" + name + "'");
    }
    if (kind == SymbolKind::constant) {
      constants_.push_back(std::move(name));
      return Symbol::constant(static_cast<std::uint32_t>(constants_.size() - 1));
    }
    variables_.push_back(std::move(name));
    return Symbol::variable(static_cast<std::uint32_t>(variables_.size() - 1));
  }

  Symbol SymbolTable::add_constant(std::string name) {
    if (name.starts_with('$')) {
      fail(ErrorKind::invalid_argument, "token '" + name + "' uses the reserved prefix '$'");
    }
    return insert(std::move(name), SymbolKind::constant);
  }

  Symbol SymbolTable::add_variable(std::string name) {
    if (name.starts_with('$')) {
      fail(ErrorKind::invalid_argument, "token '" + name + "' uses the reserved prefix '$'");
    }
    return insert(std::move(name), SymbolKind::variable);
  }

  Symbol SymbolTable::add_separator() {
    std::string name = "#";
    for (std::size_t k = 1; find(name); ++k) {
      name = "#" + std::to_string(k);
    }
    return insert(std::move(name), SymbolKind::constant);
  }

  Symbol SymbolTable::add_fresh_variable() {
    std::string name;
    for (std::size_t k = 1;; ++k) {
      name = "$" + std::to_string(k);
      if (!find(name)) {
        break;
      }
    }
    return insert(std::move(name), SymbolKind::variable);
  }

  std::string const& SymbolTable::name(Symbol s) const {
    return s.is_constant() ? constants_.at(s.index) : variables_.at(s.index);
  }

  std::optional<Symbol> SymbolTable::find(std::string_view token) const {
    for (std::uint32_t i = 0; i < constants_.size(); ++i) {
      if (constants_[i] == token) {
        return Symbol::constant(i);
      }
    }
    for (std::uint32_t i = 0; i < variables_.size(); ++i) {
      if (variables_[i] == token) {
        return Symbol::variable(i);
      }
    }
    return std::nullopt;
  }

  std::string SymbolTable::format(Word const& w) const {
    bool const compact
        = std::all_of(w.begin(), w.end(), [this](Symbol s) { return name(s).size() == 1; });
    if (!compact) {
      return tokens(w);
    }
    std::string out;
    for (Symbol s : w) {
      out += name(s);
    }
    return out;
  }

  std::string SymbolTable::tokens(Word const& w) const {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i > 0) {
        out += ' ';
      }
      out += name(w[i]);
    }
    return out;
  }

  Word SymbolTable::parse_word(std::string_view text) const {
    Word        w;
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
      std::size_t const start = i;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
      if (i == start) {
        break;
      }
      std::string_view const token = text.substr(start, i - start);
      auto const             s     = find(token);
      if (!s) {
        fail(ErrorKind::invalid_argument, "unknown symbol '" + std::string(token) + "'");
      }
      w.push_back(*s);
    }
    return w;
  }

}  // namespace weq
