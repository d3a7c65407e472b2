// Nicely balanced equations, strongly connected component invariants and
// pumping certificates witnessing an unbounded exponent of periodicity.

#ifndef WEQ_PERIODICITY_HPP_
#define WEQ_PERIODICITY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "weq/preimage.hpp"
#include "weq/solution_graph.hpp"

namespace weq {

  //! An equation together with the constraints on its active variables;
  //! graph states and instances both convert to this.
  struct ConstrainedEquation {
    bool                      is_true = false;
    Word                      lhs;
    Word                      rhs;
    std::vector<element_type> var_images;  // no_image for inactive variables

    static ConstrainedEquation of(Instance const& instance);
    static ConstrainedEquation of(GraphState const& state);
    GraphState                 as_state() const;
  };

  struct NiceWitness {
    bool absent  = false;  // X does not occur
    bool swapped = false;  // X heads the right-hand side
    Word u;                // side headed by X is X u
    Word v;                // other side is v X v'
    Word v_prime;
  };

  //! mu supplies the target and the constant images; variable images come
  //! from the equation.
  std::optional<NiceWitness> is_nicely_balanced(ConstraintMorphism const&  mu,
                                                ConstrainedEquation const& equation,
                                                std::uint32_t              variable);
  std::optional<NiceWitness> is_nicely_balanced(SolutionGraph const& g, std::size_t state,
                                                std::uint32_t variable);

  struct StatePlayground {
    std::size_t                state = 0;
    std::optional<std::size_t> leading_J;  // J-class index in green(target)
    Word                       lhs;        // playground prefixes
    Word                       rhs;
    std::vector<std::uint32_t> players;
    std::vector<std::uint32_t> balanced;
    std::vector<std::uint32_t> unbalanced;

    std::size_t size() const {
      return lhs.size() + rhs.size();
    }
  };

  struct SccAnalysis {
    std::size_t                  component = 0;
    std::optional<std::size_t>   leading_J;  // nullopt for components of TRUE states
    std::vector<element_type>    leading_J_elements;
    std::vector<element_type>    leading_stab;  // over S^1
    std::size_t                  playground_size = 0;
    std::vector<std::uint32_t>   players;
    std::vector<StatePlayground> states;
    std::vector<std::string>     violations;  // empty when every invariant holds
  };

  //! Reports violations instead of throwing; outside DLG they may occur.
  SccAnalysis analyze_scc(SolutionGraph const& g, std::size_t component);

  struct NiceState {
    std::size_t   state    = 0;
    std::uint32_t variable = 0;
    std::size_t   position = 0;  // index of the state along the cycle
    NiceWitness   witness;
  };

  //! Walks the states of the cycle from the source of its first transition.
  //! Under DLG constraints a miss throws TheoremViolation.
  std::optional<NiceState> find_nicely_balanced_on_cycle(SolutionGraph const&            g,
                                                         std::vector<std::size_t> const& cycle);

  enum class PumpCase { head_balanced, free_variable };
  std::string_view to_string(PumpCase c) noexcept;

  struct PumpingCertificate {
    std::vector<Label>  prefix_path;  // labels from the initial state to E'
    ConstrainedEquation state;        // E'
    std::uint32_t       variable = 0;
    PumpCase            kind     = PumpCase::head_balanced;
    Word                v;       // head_balanced: the stabilizing word over Omega
    std::size_t         omega = 1;
    Solution            base;    // solution of E' on its active variables
    std::optional<Pump> pump;    // free_variable
  };

  struct CertificateSearch {
    enum class Status { finite, certified, not_found };

    Status                            status = Status::finite;
    std::optional<PumpingCertificate> certificate;
  };

  //! Throws NotQuadratic, or TheoremViolation when DLG constraints yield no
  //! nicely balanced state.
  CertificateSearch pumping_certificate(SolutionGraph const& g);
  CertificateSearch pumping_certificate(Instance const& instance);

  //! The pumped solution of the original instance, postconditions asserted.
  Solution instantiate(Instance const& instance, PumpingCertificate const& cert, std::size_t m);

  //! Checks the certificate against the instance without the graph: the
  //! prefix labels turn the instance into E' with compatible constraints,
  //! E' is nicely balanced with regard to the variable, the base solves E'
  //! and the pump data matches.  Returns a description of the first failure.
  std::optional<std::string> verify_certificate(Instance const& instance,
                                                PumpingCertificate const& cert);

  struct ExpDecision {
    bool                              infinite = false;
    std::optional<PumpingCertificate> certificate;
  };

  //! Throws NotDLG when the constraints are outside DLG.
  ExpDecision decide_exp_infinite_dlg(Instance const& instance);

}  // namespace weq

#endif  // WEQ_PERIODICITY_HPP_
