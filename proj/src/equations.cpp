#include "weq/equations.hpp"

#include "weq/error.hpp"

namespace weq {

  ConstraintMorphism::ConstraintMorphism(std::shared_ptr<FiniteSemigroup const> target,
                                         std::vector<element_type>              constant_images,
                                         std::vector<element_type>              variable_images)
      : target_(std::move(target)),
        constant_images_(std::move(constant_images)),
        variable_images_(std::move(variable_images)) {
    if (!target_) {
      fail(ErrorKind::invalid_argument, "constraint morphism without target");
    }
    for (element_type e : constant_images_) {
      check(e);
    }
    for (element_type e : variable_images_) {
      check(e);
    }
  }

  void ConstraintMorphism::check(element_type e) const {
    if (e >= target_->size()) {
      fail(ErrorKind::bad_index, "image " + std::to_string(e) + " is not an element of the target");
    }
  }

  void ConstraintMorphism::set_image(Symbol s, element_type e) {
    check(e);
    (s.is_constant() ? constant_images_ : variable_images_).at(s.index) = e;
  }

  void ConstraintMorphism::add_constant_image(element_type e) {
    check(e);
    constant_images_.push_back(e);
  }

  void ConstraintMorphism::add_variable_image(element_type e) {
    check(e);
    variable_images_.push_back(e);
  }

  element_type ConstraintMorphism::eval(Word const& w) const {
    if (w.empty()) {
      fail(ErrorKind::empty_word, "cannot evaluate the empty word");
    }
    element_type result = image(w.front());
    for (std::size_t i = 1; i < w.size(); ++i) {
      result = target_->product(result, image(w[i]));
    }
    return result;
  }

  Substitution::Substitution(std::map<std::uint32_t, Word> assignments)
      : assignments_(std::move(assignments)) {
    for (auto const& [x, w] : assignments_) {
      if (w.empty()) {
        fail(ErrorKind::empty_word, "substitution assigns the empty word");
      }
    }
  }

  Substitution Substitution::single(std::uint32_t variable, Word image) {
    return Substitution({{variable, std::move(image)}});
  }

  Word Substitution::apply(Word const& w) const {
    Word out;
    out.reserve(w.size());
    for (Symbol s : w) {
      if (s.is_variable()) {
        if (auto it = assignments_.find(s.index); it != assignments_.end()) {
          out.insert(out.end(), it->second.begin(), it->second.end());
          continue;
        }
      }
      out.push_back(s);
    }
    return out;
  }

  bool Substitution::is_basic() const {
    if (assignments_.size() != 1) {
      return false;
    }
    auto const& [x, w] = *assignments_.begin();
    if (w.size() == 1) {
      return w[0].is_constant();
    }
    return w.size() == 2 && w[1] == Symbol::variable(x);
  }

  bool Substitution::is_trivial() const {
    for (auto const& [x, w] : assignments_) {
      bool const ends_with_x = w.back() == Symbol::variable(x);
      Word const prefix(w.begin(), ends_with_x ? w.end() - 1 : w.end());
      if (!is_constant_word(prefix)) {
        return false;
      }
    }
    return true;
  }

  Substitution Substitution::then(Substitution const& next) const {
    std::map<std::uint32_t, Word> composed;
    for (auto const& [x, w] : assignments_) {
      composed[x] = next.apply(w);
    }
    for (auto const& [x, w] : next.assignments_) {
      composed.try_emplace(x, w);
    }
    // Drop identity assignments.
    for (auto it = composed.begin(); it != composed.end();) {
      if (it->second.size() == 1 && it->second[0] == Symbol::variable(it->first)) {
        it = composed.erase(it);
      } else {
        ++it;
      }
    }
    return Substitution(std::move(composed));
  }

  std::vector<Substitution> Substitution::as_basic_sequence() const {
    if (!is_trivial()) {
      fail(ErrorKind::invalid_argument, "only trivial substitutions factor into basic ones");
    }
    std::vector<Substitution> steps;
    for (auto const& [x, w] : assignments_) {
      Symbol const xs          = Symbol::variable(x);
      bool const   ends_with_x = w.back() == xs;
      std::size_t const k      = ends_with_x ? w.size() - 1 : w.size();
      for (std::size_t i = 0; i < k; ++i) {
        if (i + 1 == k && !ends_with_x) {
          steps.push_back(single(x, {w[i]}));
        } else {
          steps.push_back(single(x, {w[i], xs}));
        }
      }
    }
    return steps;
  }

  Word Solution::apply(Word const& w) const {
    Word out;
    for (Symbol s : w) {
      if (s.is_variable()) {
        auto const it = assignment.find(s.index);
        if (it == assignment.end()) {
          fail(ErrorKind::invalid_argument,
               "solution does not assign variable " + std::to_string(s.index));
        }
        out.insert(out.end(), it->second.begin(), it->second.end());
      } else {
        out.push_back(s);
      }
    }
    return out;
  }

  bool operator<(Solution const& a, Solution const& b) {
    auto ia = a.assignment.begin();
    auto ib = b.assignment.begin();
    for (; ia != a.assignment.end() && ib != b.assignment.end(); ++ia, ++ib) {
      if (ia->first != ib->first) {
        return ia->first < ib->first;
      }
      if (shortlex_less(ia->second, ib->second)) {
        return true;
      }
      if (shortlex_less(ib->second, ia->second)) {
        return false;
      }
    }
    return ia == a.assignment.end() && ib != b.assignment.end();
  }

  bool is_quadratic(WordEquation const& e, std::size_t num_variables) {
    std::vector<std::size_t> count(num_variables, 0);
    for (Word const* side : {&e.lhs, &e.rhs}) {
      for (Symbol s : *side) {
        if (s.is_variable() && ++count.at(s.index) > 2) {
          return false;
        }
      }
    }
    return true;
  }

  void require_quadratic(Instance const& instance) {
    if (instance.equation.lhs.empty() || instance.equation.rhs.empty()) {
      fail(ErrorKind::empty_side, "both sides of the equation must be nonempty");
    }
    if (!is_quadratic(instance.equation, instance.symbols.num_variables())) {
      fail(ErrorKind::not_quadratic, "a variable occurs more than twice in "
                                         + format_equation(instance.symbols, instance.equation));
    }
  }

  namespace {

    bool respects(ConstraintMorphism const& mu, std::size_t num_variables, Solution const& sigma) {
      if (sigma.assignment.size() != num_variables) {
        return false;
      }
      for (auto const& [x, w] : sigma.assignment) {
        if (x >= num_variables || w.empty() || !is_constant_word(w)) {
          return false;
        }
        if (mu.eval(w) != mu.image(Symbol::variable(x))) {
          return false;
        }
      }
      return true;
    }

  }  // namespace

  bool is_solution(Instance const& instance, Solution const& sigma) {
    return respects(instance.mu, instance.symbols.num_variables(), sigma)
           && sigma.apply(instance.equation.lhs) == sigma.apply(instance.equation.rhs);
  }

  bool is_solution(SystemInstance const& instance, Solution const& sigma) {
    if (!respects(instance.mu, instance.symbols.num_variables(), sigma)) {
      return false;
    }
    for (auto const& e : instance.equations) {
      if (sigma.apply(e.lhs) != sigma.apply(e.rhs)) {
        return false;
      }
    }
    return true;
  }

  std::size_t exp_solution(Solution const& sigma) {
    std::size_t best = 0;
    for (auto const& [x, w] : sigma.assignment) {
      best = std::max(best, exp_word(w));
    }
    return best;
  }

  std::string format_equation(SymbolTable const& symbols, WordEquation const& e) {
    return symbols.format(e.lhs) + " = " + symbols.format(e.rhs);
  }

  std::string format_solution(SymbolTable const& symbols, Solution const& sigma) {
    std::string out;
    for (auto const& [x, w] : sigma.assignment) {
      if (!out.empty()) {
        out += ' ';
      }
      out += symbols.name(Symbol::variable(x)) + "=" + symbols.format(w);
    }
    return out;
  }

}  // namespace weq
