// Equation-level reductions: systems to single equations, guessing the
// variables erased by a monoid solution, the periodicity construction
// and the Brandt two-constant guessing.

#ifndef WEQ_REDUCTIONS_HPP_
#define WEQ_REDUCTIONS_HPP_

#include <map>
#include <vector>

#include "weq/equations.hpp"

namespace weq {

  //! Sides of U1#...Un# = V1#...Vn# over Sigma + {#}, target S with a new zero,
  //! mu(#) = 0.  Variable indices are unchanged, so solutions carry over as is.
  Instance system_to_single(SystemInstance const& system);

  //! Equations whose sides may be empty; the target must be a monoid for
  //! erased variables to be admissible.
  struct MonoidSystem {
    SymbolTable               symbols;
    std::vector<WordEquation> equations;
    ConstraintMorphism        mu;
  };

  //! Assignments that may map variables to the empty word.
  using MonoidSolution = std::map<std::uint32_t, Word>;

  struct SingularGuess {
    std::vector<std::uint32_t> erased;        // original variable indices
    std::vector<std::uint32_t> original_var;  // new index -> original index
    SystemInstance             instance;

    //! Re-extends a solution of the guessed instance by the empty word.
    MonoidSolution expand(Solution const& sigma) const;
  };

  //! One guess per subset of variables, subsets in increasing bitmask order.
  //! Guesses where an erased variable is not mapped to the identity, or where
  //! an equation is left with exactly one empty side, are dropped.
  std::vector<SingularGuess> singular_guesses(MonoidSystem const& system);

  bool is_monoid_solution(MonoidSystem const& system, MonoidSolution const& sigma);

  //! The input equations plus X = Y X1 Z and X_{i-1} = X_i X_i for 2 <= i <= m.
  //! Fresh variables are X1, ..., Xm, Y, Z in that order.
  EquationSystem periodicity_reduction(SymbolTable const&               symbols,
                                       std::vector<WordEquation> const& equations,
                                       std::uint32_t variable, std::size_t m);

  struct BrandtGuess {
    std::vector<std::uint32_t> letter;  // original variable -> constant c_X
    // original variable -> (X1, X2) in the guessed system
    std::vector<std::pair<std::uint32_t, std::uint32_t>> split;
    MonoidSystem                                         guessed;

    //! sigma(X) = sigma'(X1) c_X c_X sigma'(X2).
    Solution lift(MonoidSolution const& sigma) const;
  };

  //! The instance must be over two constants mapped onto a and b of B2 with
  //! every variable mapped to 0, otherwise WrongConstraintShape.  One guess per
  //! map c from variables to constants, in lexicographic order of c.
  std::vector<BrandtGuess> brandt_two_constant_guesses(Instance const& instance);

}  // namespace weq

#endif  // WEQ_REDUCTIONS_HPP_
