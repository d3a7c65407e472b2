// Word equations with regular constraints given by a morphism into a
// finite semigroup, substitutions and solutions.

#ifndef WEQ_EQUATIONS_HPP_
#define WEQ_EQUATIONS_HPP_

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "weq/semigroup.hpp"
#include "weq/words.hpp"

namespace weq {

  struct WordEquation {
    Word lhs;
    Word rhs;

    friend bool operator==(WordEquation const&, WordEquation const&) = default;
  };

  struct EquationSystem {
    SymbolTable               symbols;
    std::vector<WordEquation> equations;
  };

  //! mu: Omega -> S, extended to words by folding the Cayley table.
  class ConstraintMorphism {
   public:
    ConstraintMorphism() = default;
    //! Throws BadIndex for images outside the target.
    ConstraintMorphism(std::shared_ptr<FiniteSemigroup const> target,
                       std::vector<element_type>              constant_images,
                       std::vector<element_type>              variable_images);

    FiniteSemigroup const& target() const noexcept {
      return *target_;
    }
    std::shared_ptr<FiniteSemigroup const> const& target_ptr() const noexcept {
      return target_;
    }

    element_type image(Symbol s) const {
      return s.is_constant() ? constant_images_.at(s.index) : variable_images_.at(s.index);
    }
    std::vector<element_type> const& constant_images() const noexcept {
      return constant_images_;
    }
    std::vector<element_type> const& variable_images() const noexcept {
      return variable_images_;
    }

    void set_image(Symbol s, element_type e);
    void add_constant_image(element_type e);
    void add_variable_image(element_type e);

    //! Throws EmptyWord on the empty word.
    element_type eval(Word const& w) const;

    friend bool operator==(ConstraintMorphism const& a, ConstraintMorphism const& b) {
      return a.constant_images_ == b.constant_images_ && a.variable_images_ == b.variable_images_
             && (a.target_ == b.target_ || (a.target_ && b.target_ && *a.target_ == *b.target_));
    }

   private:
    void check(element_type e) const;

    std::shared_ptr<FiniteSemigroup const> target_;
    std::vector<element_type>              constant_images_;
    std::vector<element_type>              variable_images_;
  };

  //! Unmapped variables are fixed.
  class Substitution {
   public:
    Substitution() = default;
    explicit Substitution(std::map<std::uint32_t, Word> assignments);

    static Substitution single(std::uint32_t variable, Word image);

    std::map<std::uint32_t, Word> const& assignments() const noexcept {
      return assignments_;
    }

    Word apply(Word const& w) const;

    //! One assignment X -> alpha X or X -> a.
    bool is_basic() const;
    //! Every assignment of the form X -> wX or X -> w with w a nonempty constant word
    //! (w may be empty in the first form).
    bool is_trivial() const;

    //! The substitution w -> next(this(w)).
    Substitution then(Substitution const& next) const;

    //! Basic substitutions whose composition, first to last, equals this one.
    //! Throws InvalidArgument unless is_trivial().
    std::vector<Substitution> as_basic_sequence() const;

    friend bool operator==(Substitution const&, Substitution const&) = default;

   private:
    std::map<std::uint32_t, Word> assignments_;
  };

  //! Variable index -> nonempty constant word.
  struct Solution {
    std::map<std::uint32_t, Word> assignment;

    Word apply(Word const& w) const;

    friend bool operator==(Solution const&, Solution const&) = default;
    //! Variable by variable, each compared shortlex.
    friend bool operator<(Solution const& a, Solution const& b);
  };

  struct Instance {
    SymbolTable        symbols;
    WordEquation       equation;
    ConstraintMorphism mu;
  };

  struct SystemInstance {
    SymbolTable               symbols;
    std::vector<WordEquation> equations;
    ConstraintMorphism        mu;
  };

  //! Throws EmptySide or NotQuadratic.
  void require_quadratic(Instance const& instance);
  bool is_quadratic(WordEquation const& e, std::size_t num_variables);

  //! All declared variables assigned nonempty constant words, both sides equal
  //! under sigma, and mu(sigma(X)) = mu(X).
  bool is_solution(Instance const& instance, Solution const& sigma);
  bool is_solution(SystemInstance const& instance, Solution const& sigma);

  std::size_t exp_solution(Solution const& sigma);

  std::string format_equation(SymbolTable const& symbols, WordEquation const& e);
  //! e.g. "X=aba Y=a".
  std::string format_solution(SymbolTable const& symbols, Solution const& sigma);

}  // namespace weq

#endif  // WEQ_EQUATIONS_HPP_
