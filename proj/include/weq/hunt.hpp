// Exhaustive sweep over small constrained quadratic equations looking for
// instances with infinitely many solutions but no pumping certificate.

#ifndef WEQ_HUNT_HPP_
#define WEQ_HUNT_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "weq/battery.hpp"

namespace weq {

  enum class HuntClass { unsatisfiable, finite_sol, infinite_certified, suspect, unknown };
  inline constexpr std::size_t num_hunt_classes = 5;
  std::string_view to_string(HuntClass c) noexcept;

  struct HuntOptions {
    BatteryOptions                            battery;
    std::shared_ptr<FiniteSemigroup const>    target;
    std::string                               semigroup_spec;
    std::optional<std::vector<element_type>>  constant_images;
    std::size_t                               budget    = 1'000'000;  // instances classified
    std::uint64_t                             seed      = 1;
    unsigned                                  threads   = 1;
    std::size_t                               cycle_cap = 20;
    std::size_t                               oracle_budget = 5'000'000;
  };

  struct HuntRecord {
    Instance                   instance;
    HuntClass                  cls = HuntClass::unknown;
    std::optional<std::size_t> exp_at_L;   // oracle max exp at L = |UV|
    std::optional<std::size_t> exp_at_L2;  // and at L + 2
    std::string                note;
  };

  struct HuntReport {
    std::size_t                                total     = 0;  // canonical instances
    std::size_t                                processed = 0;
    bool                                       budget_exceeded = false;
    std::array<std::size_t, num_hunt_classes>  counts{};
    std::vector<HuntRecord>                    findings;  // Suspect records, in instance order
  };

  //! Classifies one instance.
  HuntRecord classify(Instance const& instance, HuntOptions const& options);

  //! When more instances than the budget exist, a seeded sample of budget
  //! many is classified and budget_exceeded is set.  on_finding runs under a
  //! lock, once per Suspect record.
  HuntReport hunt(HuntOptions const&                            options,
                  std::function<void(HuntRecord const&)> const& on_finding = {});

  //! One line of the findings file.
  nlohmann::json finding_json(HuntRecord const& record, std::string const& semigroup_spec);

}  // namespace weq

#endif  // WEQ_HUNT_HPP_
