// Brute-force ground truth: every assignment of words of length 1..L.

#ifndef WEQ_ORACLE_HPP_
#define WEQ_ORACLE_HPP_

#include <cstddef>
#include <vector>

#include "weq/equations.hpp"

namespace weq {

  struct OracleOptions {
    std::size_t budget  = 10'000'000;  // candidate assignments
    unsigned    threads = 1;
  };

  struct OracleReport {
    std::size_t           bound = 0;
    std::vector<Solution> solutions;  // sorted, duplicate free, re-verified
    std::size_t           max_exp_seen = 0;
  };

  //! prod over variables of (k + k^2 + ... + k^L), saturating at SIZE_MAX.
  std::size_t candidate_count(std::size_t num_constants, std::size_t num_variables,
                              std::size_t max_length);

  //! Throws BudgetExceeded when candidate_count exceeds the budget.
  OracleReport brute_solutions(SystemInstance const& instance, std::size_t max_length,
                               OracleOptions const& options = {});
  OracleReport brute_solutions(Instance const& instance, std::size_t max_length,
                               OracleOptions const& options = {});

  std::size_t max_exp_up_to(Instance const& instance, std::size_t max_length,
                            OracleOptions const& options = {});

  //! Literal enumeration of every candidate assignment, for cross-checking
  //! brute_solutions on small inputs.
  std::vector<Solution> naive_brute_solutions(SystemInstance const& instance,
                                              std::size_t max_length,
                                              OracleOptions const& options = {});

}  // namespace weq

#endif  // WEQ_ORACLE_HPP_
