// Exhaustive families of small quadratic equations and of all constraint
// maps into a given semigroup.

#ifndef WEQ_BATTERY_HPP_
#define WEQ_BATTERY_HPP_

#include <memory>
#include <optional>
#include <vector>

#include "weq/equations.hpp"

namespace weq {

  struct BatteryOptions {
    std::size_t num_constants = 2;  // named a, b, c, ...
    std::size_t max_variables = 2;  // named X, Y, Z, W, then X4, X5, ...
    std::size_t max_length    = 6;  // bound on |UV|
    bool        rename_constants = true;
  };

  //! A renaming of constants and variables, optionally swapping the sides.
  struct Symmetry {
    std::vector<std::uint32_t> constants;
    std::vector<std::uint32_t> variables;
    bool                       swap = false;

    WordEquation apply(WordEquation const& e) const;
    //! The constraint map of the renamed instance.
    ConstraintMorphism apply(ConstraintMorphism const& mu) const;
  };

  //! Every constant and variable permutation, with and without swapping.
  std::vector<Symmetry> symmetries(std::size_t num_constants, std::size_t num_variables,
                                   bool rename_constants = true);

  struct BatteryEquation {
    SymbolTable  symbols;  // all constants, the variables that occur
    WordEquation equation;
  };

  //! Quadratic equations with nonempty sides and |UV| bounded, one per orbit
  //! under renaming and side swapping; variables occurring form a prefix of
  //! X, Y, ...  Sorted by |UV|, then by the canonical key.
  std::vector<BatteryEquation> quadratic_equations(BatteryOptions const& options);

  //! Every map of constants and variables into the target; constant images
  //! are fixed when given.  Lexicographic with constants most significant.
  std::vector<ConstraintMorphism> constraint_maps(std::shared_ptr<FiniteSemigroup const> const& target,
                                                  std::size_t num_constants,
                                                  std::size_t num_variables,
                                                  std::optional<std::vector<element_type>> const&
                                                      constant_images = std::nullopt);

  //! quadratic_equations crossed with constraint_maps.  Fixed constant
  //! images switch off constant renaming.
  std::vector<Instance> battery_instances(BatteryOptions const&                         options,
                                          std::shared_ptr<FiniteSemigroup const> const& target,
                                          std::optional<std::vector<element_type>> const&
                                              constant_images = std::nullopt);

  //! As battery_instances, but one instance per orbit of (equation, map)
  //! under renaming; constants are renamed only when their images are free.
  std::vector<Instance> canonical_instances(BatteryOptions const&                         options,
                                            std::shared_ptr<FiniteSemigroup const> const& target,
                                            std::optional<std::vector<element_type>> const&
                                                constant_images = std::nullopt);

}  // namespace weq

#endif  // WEQ_BATTERY_HPP_
