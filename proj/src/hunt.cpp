#include "weq/hunt.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <random>
#include <thread>

#include "weq/certificate_json.hpp"
#include "weq/error.hpp"
#include "weq/oracle.hpp"
#include "weq/periodicity.hpp"

namespace weq {

  std::string_view to_string(HuntClass c) noexcept {
    switch (c) {
      case HuntClass::unsatisfiable: return "Unsatisfiable";
      case HuntClass::finite_sol: return "FiniteSol";
      case HuntClass::infinite_certified: return "InfiniteCertified";
      case HuntClass::suspect: return "Suspect";
      case HuntClass::unknown: return "Unknown";
    }
    return "Unknown";
  }

  HuntRecord classify(Instance const& instance, HuntOptions const& options) {
    HuntRecord record;
    record.instance = instance;
    try {
      SolutionGraph const g = build_graph(instance);
      if (g.empty()) {
        record.cls = HuntClass::unsatisfiable;
        return record;
      }
      if (!has_infinitely_many(g)) {
        record.cls = HuntClass::finite_sol;
        return record;
      }
      CertificateSearch const search = pumping_certificate(g);
      if (search.status == CertificateSearch::Status::certified) {
        if (auto const why = verify_certificate(instance, *search.certificate)) {
          fail(ErrorKind::internal_disagreement, "certificate rejected: " + *why);
        }
        instantiate(instance, *search.certificate, 2);
        record.cls = HuntClass::infinite_certified;
        return record;
      }

      // No state of a nontrivial component is nicely balanced, so no
      // cycle carries one; bounded cycle listing is reported for context.
      CycleList const cycles = simple_cycles(g, options.cycle_cap, 10'000);
      record.note = std::to_string(cycles.cycles.size()) + (cycles.truncated ? "+" : "")
                    + " simple cycles, none nicely balanced";

      std::size_t const L = instance.equation.lhs.size() + instance.equation.rhs.size();
      OracleOptions     oracle;
      oracle.budget    = options.oracle_budget;
      record.exp_at_L  = max_exp_up_to(instance, L, oracle);
      record.exp_at_L2 = max_exp_up_to(instance, L + 2, oracle);
      record.cls       = *record.exp_at_L == *record.exp_at_L2 ? HuntClass::suspect : HuntClass::unknown;
      if (record.cls == HuntClass::unknown) {
        record.note += "; oracle exponent grows";
      }
    } catch (Error const& e) {
      if (e.kind() != ErrorKind::budget_exceeded) {
        throw;
      }
      record.cls  = HuntClass::unknown;
      record.note = e.what();
    }
    return record;
  }

  HuntReport hunt(HuntOptions const& options, std::function<void(HuntRecord const&)> const& on_finding) {
    HuntReport report;
    if (options.budget == 0) {
      fail(ErrorKind::budget_exceeded, "hunt budget is 0");
    }
    std::vector<Instance> instances = canonical_instances(options.battery, options.target,
                                                          options.constant_images);
    report.total = instances.size();
    std::vector<std::size_t> order(instances.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      order[i] = i;
    }
    if (order.size() > options.budget) {
      std::mt19937_64 rng(options.seed);
      std::shuffle(order.begin(), order.end(), rng);
      order.resize(options.budget);
      std::sort(order.begin(), order.end());
      report.budget_exceeded = true;
    }

    std::vector<std::optional<HuntRecord>> records(order.size());
    std::atomic<std::size_t>               next{0};
    std::mutex                             lock;
    auto work = [&] {
      for (std::size_t i = next++; i < order.size(); i = next++) {
        HuntRecord r = classify(instances[order[i]], options);
        if (r.cls == HuntClass::suspect && on_finding) {
          std::lock_guard guard(lock);
          on_finding(r);
        }
        records[i] = std::move(r);
      }
    };
    unsigned const threads = std::max(1u, options.threads);
    if (threads == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back(work);
      }
      for (auto& t : pool) {
        t.join();
      }
    }

    for (auto& r : records) {
      ++report.processed;
      ++report.counts[static_cast<std::size_t>(r->cls)];
      if (r->cls == HuntClass::suspect) {
        report.findings.push_back(std::move(*r));
      }
    }
    return report;
  }

  nlohmann::json finding_json(HuntRecord const& record, std::string const& semigroup_spec) {
    Instance const&    in = record.instance;
    SymbolTable const& sy = in.symbols;
    nlohmann::json     mu = nlohmann::json::object();
    for (std::uint32_t c = 0; c < sy.num_constants(); ++c) {
      mu[sy.name(Symbol::constant(c))] = in.mu.target().name(in.mu.image(Symbol::constant(c)));
    }
    for (std::uint32_t x = 0; x < sy.num_variables(); ++x) {
      mu[sy.name(Symbol::variable(x))] = in.mu.target().name(in.mu.image(Symbol::variable(x)));
    }
    auto opt = [](std::optional<std::size_t> v) -> nlohmann::json {
      return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
    };
    return {{"class", std::string(to_string(record.cls))},
            {"equation", format_equation(sy, in.equation)},
            {"constants", sy.constants()},
            {"variables", sy.variables()},
            {"semigroup", semigroup_spec},
            {"mu", std::move(mu)},
            {"oracle_max_exp", {{"L", opt(record.exp_at_L)}, {"L_plus_2", opt(record.exp_at_L2)}}},
            {"note", record.note},
            {"length_constraints", nullptr}};
  }

}  // namespace weq
