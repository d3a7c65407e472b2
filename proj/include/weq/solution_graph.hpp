// The solution graph of a quadratic equation with regular constraints:
// states are equations with the active variables and their constraints,
// transitions are labelled by the substitutions X -> alpha X, X -> alpha
// and the identity.  Accepting paths spell out exactly the solutions.

#ifndef WEQ_SOLUTION_GRAPH_HPP_
#define WEQ_SOLUTION_GRAPH_HPP_

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "weq/equations.hpp"

namespace weq {

  inline constexpr element_type no_image = std::numeric_limits<element_type>::max();

  struct GraphState {
    bool is_true = false;  // both sides have been cancelled completely
    Word lhs;
    Word rhs;
    //! Indexed by variable; no_image for variables outside the varset.
    std::vector<element_type> var_images;

    bool active(std::uint32_t x) const {
      return var_images[x] != no_image;
    }
    std::vector<std::uint32_t> varset() const;
    bool                       varset_empty() const;
    std::size_t                length() const {
      return lhs.size() + rhs.size();
    }
    friend bool operator==(GraphState const&, GraphState const&) = default;
  };

  struct Label {
    enum class Kind : std::uint8_t { epsilon, prepend, assign };

    Kind          kind     = Kind::epsilon;
    std::uint32_t variable = 0;
    Symbol        alpha{};  // X -> alpha X (prepend) or X -> alpha (assign)

    Substitution substitution() const;
    //! "eps", "X->aX" or "X->a".
    std::string format(SymbolTable const& symbols) const;

    friend bool operator==(Label const&, Label const&) = default;
  };

  struct Transition {
    std::size_t source = 0;
    std::size_t target = 0;
    Label       label;
  };

  struct Component {
    std::vector<std::size_t> states;  // sorted
    bool has_transition = false;
  };

  struct GraphOptions {
    bool        faithful   = false;  // rule (ii) for every absent variable, not just the least
    bool        trim       = true;
    std::size_t max_states = 2'000'000;
  };

  class SolutionGraph {
   public:
    Instance                              instance;
    std::size_t                           n0 = 0;  // |UV| of the instance
    std::vector<GraphState>               states;
    std::vector<Transition>               transitions;
    std::vector<std::vector<std::size_t>> out;  // transition ids per state
    std::vector<std::vector<std::size_t>> in;
    std::size_t                           initial = 0;
    std::vector<bool>                     is_final;
    bool                                  trimmed = false;
    std::vector<Component>                components;  // topological order
    std::vector<std::size_t>              component_of;
    std::size_t                           states_before_trim      = 0;
    std::size_t                           transitions_before_trim = 0;

    bool empty() const noexcept {
      return states.empty();
    }

    //! Image of a symbol under the constraints of a state.
    element_type image(GraphState const& s, Symbol a) const {
      return a.is_constant() ? instance.mu.image(a) : s.var_images[a.index];
    }
    element_type image(std::size_t state, Symbol a) const {
      return image(states[state], a);
    }
    //! mu evaluated under the constraints of a state.
    element_type eval(GraphState const& s, Word const& w) const;

    bool same_component(std::size_t p, std::size_t q) const {
      return component_of[p] == component_of[q];
    }

    std::string describe(std::size_t state) const;
  };

  //! Throws NotQuadratic, EmptySide or BudgetExceeded.
  SolutionGraph build_graph(Instance const& instance, GraphOptions const& options = {});

  bool is_solvable(SolutionGraph const& g);
  //! Some component of the trimmed graph carries a transition.
  bool has_infinitely_many(SolutionGraph const& g);

  //! Applies the labels first to last to the one-letter words X.  Throws
  //! NotAccepting unless the path runs from the initial to a final state.
  Solution extract_solution(SolutionGraph const& g, std::vector<std::size_t> const& path);

  //! Every solution with all |sigma(X)| <= word_bound; the path bound defaults
  //! to n0 * (word_bound + 1).
  std::vector<Solution> enumerate_solutions(SolutionGraph const& g, std::size_t word_bound,
                                            std::optional<std::size_t> path_bound = std::nullopt);

  std::string export_dot(SolutionGraph const& g);

  //! Breadth-first, transitions in id order.
  std::optional<std::vector<std::size_t>> shortest_path(SolutionGraph const& g, std::size_t from,
                                                        std::size_t to);
  std::optional<std::vector<std::size_t>> shortest_path_to_final(SolutionGraph const& g,
                                                                 std::size_t from);
  //! Shortest nonempty cycle through a state, staying in its component.
  std::optional<std::vector<std::size_t>> shortest_cycle_through(SolutionGraph const& g,
                                                                 std::size_t state);

  struct CycleList {
    std::vector<std::vector<std::size_t>> cycles;  // transition ids, rotated to start at the least state
    bool truncated = false;
  };

  //! Simple cycles (no repeated state) with at most max_length transitions.
  CycleList simple_cycles(SolutionGraph const& g, std::size_t max_length,
                          std::size_t max_count = 1'000'000);

  //! States of a transition path: source of the first, then every target.
  std::vector<std::size_t> path_states(SolutionGraph const& g, std::vector<std::size_t> const& path,
                                       std::size_t start);

}  // namespace weq

#endif  // WEQ_SOLUTION_GRAPH_HPP_
