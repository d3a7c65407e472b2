#include "weq/reductions.hpp"

#include "weq/error.hpp"
#include "weq/semigroup_io.hpp"

namespace weq {

  Instance system_to_single(SystemInstance const& system) {
    if (system.equations.empty()) {
      fail(ErrorKind::invalid_argument, "empty equation system");
    }
    Instance out;
    out.symbols            = system.symbols;
    Symbol const separator = out.symbols.add_separator();

    auto target = std::make_shared<FiniteSemigroup const>(adjoin_zero(system.mu.target()));
    std::vector<element_type> constant_images = system.mu.constant_images();
    constant_images.push_back(*target->adjoined_zero());
    out.mu = ConstraintMorphism(target, std::move(constant_images), system.mu.variable_images());

    for (auto const& e : system.equations) {
      out.equation.lhs.insert(out.equation.lhs.end(), e.lhs.begin(), e.lhs.end());
      out.equation.lhs.push_back(separator);
      out.equation.rhs.insert(out.equation.rhs.end(), e.rhs.begin(), e.rhs.end());
      out.equation.rhs.push_back(separator);
    }
    return out;
  }

  MonoidSolution SingularGuess::expand(Solution const& sigma) const {
    MonoidSolution out;
    for (std::uint32_t x : erased) {
      out[x] = Word{};
    }
    for (auto const& [x, w] : sigma.assignment) {
      out[original_var.at(x)] = w;
    }
    return out;
  }

  std::vector<SingularGuess> singular_guesses(MonoidSystem const& system) {
    std::size_t const n = system.symbols.num_variables();
    if (n >= 32) {
      fail(ErrorKind::invalid_argument, "too many variables to guess erasures");
    }
    auto const identity = system.mu.target().identity();

    std::vector<SingularGuess> guesses;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      SingularGuess              g;
      std::vector<std::int64_t>  renumber(n, -1);
      std::vector<element_type>  variable_images;
      bool                       admissible = true;
      for (std::uint32_t x = 0; x < n; ++x) {
        if (mask & (std::uint64_t{1} << x)) {
          g.erased.push_back(x);
          admissible = admissible && identity
                       && system.mu.image(Symbol::variable(x)) == *identity;
        } else {
          renumber[x] = static_cast<std::int64_t>(g.original_var.size());
          g.original_var.push_back(x);
          variable_images.push_back(system.mu.image(Symbol::variable(x)));
        }
      }
      if (!admissible) {
        continue;
      }
      std::vector<std::string> names;
      for (std::uint32_t x : g.original_var) {
        names.push_back(system.symbols.variables()[x]);
      }
      g.instance.symbols = SymbolTable(system.symbols.constants(), {});
      for (auto const& name : names) {
        // Reserved names from earlier reductions are carried over verbatim.
        if (name.starts_with('$')) {
          g.instance.symbols.add_fresh_variable();
        } else {
          g.instance.symbols.add_variable(name);
        }
      }
      g.instance.mu = ConstraintMorphism(system.mu.target_ptr(), system.mu.constant_images(),
                                         std::move(variable_images));

      auto erase = [&](Word const& w) {
        Word out;
        for (Symbol s : w) {
          if (s.is_variable()) {
            if (renumber[s.index] < 0) {
              continue;
            }
            out.push_back(Symbol::variable(static_cast<std::uint32_t>(renumber[s.index])));
          } else {
            out.push_back(s);
          }
        }
        return out;
      };
      for (auto const& e : system.equations) {
        WordEquation reduced{erase(e.lhs), erase(e.rhs)};
        if (reduced.lhs.empty() && reduced.rhs.empty()) {
          continue;
        }
        if (reduced.lhs.empty() || reduced.rhs.empty()) {
          admissible = false;
          break;
        }
        g.instance.equations.push_back(std::move(reduced));
      }
      if (admissible) {
        guesses.push_back(std::move(g));
      }
    }
    return guesses;
  }

  bool is_monoid_solution(MonoidSystem const& system, MonoidSolution const& sigma) {
    std::size_t const n = system.symbols.num_variables();
    if (sigma.size() != n) {
      return false;
    }
    auto const identity = system.mu.target().identity();
    for (auto const& [x, w] : sigma) {
      if (x >= n || !is_constant_word(w)) {
        return false;
      }
      element_type const expected = system.mu.image(Symbol::variable(x));
      if (w.empty() ? (!identity || *identity != expected) : system.mu.eval(w) != expected) {
        return false;
      }
    }
    auto apply = [&sigma](Word const& w) {
      Word out;
      for (Symbol s : w) {
        if (s.is_variable()) {
          Word const& image = sigma.at(s.index);
          out.insert(out.end(), image.begin(), image.end());
        } else {
          out.push_back(s);
        }
      }
      return out;
    };
    for (auto const& e : system.equations) {
      if (apply(e.lhs) != apply(e.rhs)) {
        return false;
      }
    }
    return true;
  }

  EquationSystem periodicity_reduction(SymbolTable const&               symbols,
                                       std::vector<WordEquation> const& equations,
                                       std::uint32_t variable, std::size_t m) {
    if (m == 0) {
      fail(ErrorKind::invalid_argument, "periodicity reduction needs m >= 1");
    }
    if (variable >= symbols.num_variables()) {
      fail(ErrorKind::bad_index, "variable " + std::to_string(variable) + " out of range");
    }
    EquationSystem out{symbols, equations};
    std::vector<Symbol> chain;
    for (std::size_t i = 0; i < m; ++i) {
      chain.push_back(out.symbols.add_fresh_variable());
    }
    Symbol const y = out.symbols.add_fresh_variable();
    Symbol const z = out.symbols.add_fresh_variable();
    out.equations.push_back({{Symbol::variable(variable)}, {y, chain[0], z}});
    for (std::size_t i = 1; i < m; ++i) {
      out.equations.push_back({{chain[i - 1]}, {chain[i], chain[i]}});
    }
    return out;
  }

  Solution BrandtGuess::lift(MonoidSolution const& sigma) const {
    Solution out;
    for (std::uint32_t x = 0; x < split.size(); ++x) {
      Word w = sigma.at(split[x].first);
      w.push_back(Symbol::constant(letter[x]));
      w.push_back(Symbol::constant(letter[x]));
      Word const& tail = sigma.at(split[x].second);
      w.insert(w.end(), tail.begin(), tail.end());
      out.assignment[x] = std::move(w);
    }
    return out;
  }

  std::vector<BrandtGuess> brandt_two_constant_guesses(Instance const& instance) {
    FiniteSemigroup const b2 = *builtin_semigroup("b2");
    FiniteSemigroup const& t = instance.mu.target();
    bool shape = t.rows() == b2.rows() && instance.symbols.num_constants() == 2
                 && instance.mu.constant_images() == std::vector<element_type>{0, 1};
    for (element_type e : instance.mu.variable_images()) {
      shape = shape && e == 4;
    }
    if (!shape) {
      fail(ErrorKind::wrong_constraint_shape,
           "expected two constants mapped to a, b of B2 and every variable mapped to 0");
    }
    std::size_t const n = instance.symbols.num_variables();
    if (n >= 32) {
      fail(ErrorKind::invalid_argument, "too many variables");
    }
    auto trivial = std::make_shared<FiniteSemigroup const>(*builtin_semigroup("trivial"));

    std::vector<BrandtGuess> guesses;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
      BrandtGuess g;
      g.guessed.symbols = SymbolTable(instance.symbols.constants(), {});
      for (std::uint32_t x = 0; x < n; ++x) {
        // The most significant bit belongs to the first variable.
        g.letter.push_back(static_cast<std::uint32_t>((code >> (n - 1 - x)) & 1));
        Symbol const x1 = g.guessed.symbols.add_fresh_variable();
        Symbol const x2 = g.guessed.symbols.add_fresh_variable();
        g.split.emplace_back(x1.index, x2.index);
      }
      g.guessed.mu = ConstraintMorphism(trivial, std::vector<element_type>(2, 0),
                                        std::vector<element_type>(2 * n, 0));
      auto tau = [&g](Word const& w) {
        Word out;
        for (Symbol s : w) {
          if (s.is_constant()) {
            out.push_back(s);
            continue;
          }
          Symbol const c = Symbol::constant(g.letter[s.index]);
          out.push_back(Symbol::variable(g.split[s.index].first));
          out.push_back(c);
          out.push_back(c);
          out.push_back(Symbol::variable(g.split[s.index].second));
        }
        return out;
      };
      g.guessed.equations.push_back({tau(instance.equation.lhs), tau(instance.equation.rhs)});
      guesses.push_back(std::move(g));
    }
    return guesses;
  }

}  // namespace weq
