// weq: solution graphs, periodicity certificates and the hunter sweep for
// quadratic word equations with regular constraints.
//
// Exit codes: 0 affirmative, 3 negative, 2 parse or usage error, 4 verdict
// unknown (constraints outside DLG, budget exhausted), 5 unsupported
// instance (not quadratic).

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "weq/certificate_json.hpp"
#include "weq/error.hpp"
#include "weq/hunt.hpp"
#include "weq/instance_io.hpp"
#include "weq/oracle.hpp"
#include "weq/periodicity.hpp"
#include "weq/semigroup_io.hpp"
#include "weq/solution_graph.hpp"

namespace {

  using nlohmann::json;
  using namespace weq;

  constexpr int exit_yes     = 0;
  constexpr int exit_usage   = 2;
  constexpr int exit_no      = 3;
  constexpr int exit_unknown = 4;
  constexpr int exit_unsupported = 5;

  bool json_output = false;

  class Stopwatch {
   public:
    double lap_ms() {
      auto const now = std::chrono::steady_clock::now();
      double const ms = std::chrono::duration<double, std::milli>(now - start_).count();
      start_          = now;
      return ms;
    }

   private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
  };

  void emit(json const& j) {
    std::cout << j.dump(2) << '\n';
  }

  json instance_json(Instance const& in, std::string const& spec) {
    SymbolTable const& sy = in.symbols;
    json mu = json::object();
    for (std::uint32_t c = 0; c < sy.num_constants(); ++c) {
      mu[sy.name(Symbol::constant(c))] = in.mu.target().name(in.mu.image(Symbol::constant(c)));
    }
    for (std::uint32_t x = 0; x < sy.num_variables(); ++x) {
      mu[sy.name(Symbol::variable(x))] = in.mu.target().name(in.mu.image(Symbol::variable(x)));
    }
    return {{"constants", sy.constants()},
            {"variables", sy.variables()},
            {"equation", format_equation(sy, in.equation)},
            {"semigroup", spec},
            {"mu", std::move(mu)}};
  }

  json solutions_json(SymbolTable const& sy, std::vector<Solution> const& sols) {
    json arr = json::array();
    for (auto const& s : sols) {
      arr.push_back(solution_json(sy, s));
    }
    return arr;
  }

  struct Loaded {
    Instance    instance;
    std::string spec;
  };

  Loaded load(std::string const& path) {
    ParsedInstance const parsed = load_instance(path);
    return {parsed.single(), parsed.semigroup_spec};
  }

  struct Analysis {
    SolutionGraph                     graph;
    bool                              dlg = false;
    std::string                       verdict;  // Finite, InfiniteCertified, Unknown
    std::optional<PumpingCertificate> certificate;
    json                              timings = json::object();
  };

  Analysis analyze(Instance const& in) {
    Analysis  a;
    Stopwatch clock;
    a.graph                  = build_graph(in);
    a.timings["graph_ms"]    = clock.lap_ms();
    a.dlg                    = is_dlg(in.mu.target()).dlg;
    CertificateSearch search = pumping_certificate(a.graph);
    a.timings["certificate_ms"] = clock.lap_ms();
    switch (search.status) {
      case CertificateSearch::Status::finite: a.verdict = "Finite"; break;
      case CertificateSearch::Status::certified:
        if (auto const why = verify_certificate(in, *search.certificate)) {
          fail(ErrorKind::internal_disagreement, "certificate rejected: " + *why);
        }
        a.verdict     = "InfiniteCertified";
        a.certificate = std::move(search.certificate);
        break;
      case CertificateSearch::Status::not_found: a.verdict = "Unknown"; break;
    }
    return a;
  }

  json report_json(std::string const& command, Loaded const& l, Analysis const& a) {
    Instance const& in = l.instance;
    return {{"command", command},
            {"instance", instance_json(in, l.spec)},
            {"solvable", is_solvable(a.graph)},
            {"infinite", has_infinitely_many(a.graph)},
            {"dlg", a.dlg},
            {"exp_verdict", a.verdict},
            {"certificate", a.certificate ? to_json(in.symbols, in.mu.target(), *a.certificate) : json(nullptr)},
            {"state_count", a.graph.states.size()},
            {"transition_count", a.graph.transitions.size()},
            {"scc_count", a.graph.components.size()},
            {"timings", a.timings}};
  }

  void print_summary(Loaded const& l, Analysis const& a) {
    Instance const& in = l.instance;
    std::cout << "equation: " << format_equation(in.symbols, in.equation) << "  (" << l.spec << ")\n"
              << "states: " << a.graph.states.size() << ", transitions: " << a.graph.transitions.size()
              << ", components: " << a.graph.components.size() << '\n'
              << "exp verdict: " << a.verdict << '\n';
  }

  int cmd_check(std::string const& path) {
    Loaded const   l = load(path);
    Analysis const a = analyze(l.instance);
    bool const     yes = is_solvable(a.graph);
    if (json_output) {
      emit(report_json("check", l, a));
    } else {
      std::cout << (yes ? "satisfiable" : "unsatisfiable") << '\n';
      print_summary(l, a);
    }
    return yes ? exit_yes : exit_no;
  }

  int cmd_infinite(std::string const& path) {
    Loaded const   l   = load(path);
    Analysis const a   = analyze(l.instance);
    bool const     yes = has_infinitely_many(a.graph);
    if (json_output) {
      emit(report_json("infinite", l, a));
    } else {
      std::cout << (yes ? "infinitely many solutions" : "finitely many solutions") << '\n';
      print_summary(l, a);
    }
    return yes ? exit_yes : exit_no;
  }

  std::string describe_certificate(Instance const& in, PumpingCertificate const& c) {
    SymbolTable const& sy = in.symbols;
    std::ostringstream os;
    os << to_string(c.kind) << " on " << sy.name(Symbol::variable(c.variable)) << " at "
       << (c.state.is_true ? std::string("TRUE") : sy.format(c.state.lhs) + " = " + sy.format(c.state.rhs));
    if (c.kind == PumpCase::head_balanced) {
      os << ", v = " << sy.format(c.v) << ", omega = " << c.omega;
    } else {
      os << ", pump u = " << sy.format(c.pump->u) << " y = " << sy.format(c.pump->y)
         << " w = " << sy.format(c.pump->w);
    }
    os << ", base " << format_solution(sy, c.base) << ", prefix of " << c.prefix_path.size() << " transitions";
    return os.str();
  }

  int cmd_pump(std::string const& path, std::size_t m, std::string const& cert_in,
               std::string const& cert_out) {
    Loaded const    l  = load(path);
    Instance const& in = l.instance;
    require_quadratic(in);
    PumpingCertificate cert;
    if (!cert_in.empty()) {
      std::ifstream file(cert_in);
      if (!file) {
        throw ParseError(cert_in, 0, 0, "cannot open certificate");
      }
      json j;
      try {
        j = json::parse(file);
      } catch (json::exception const& e) {
        throw ParseError(cert_in, 0, 0, e.what());
      }
      cert = certificate_from_json(in.symbols, in.mu.target(), j.contains("certificate") ? j["certificate"] : j);
      if (auto const why = verify_certificate(in, cert)) {
        std::cerr << "certificate rejected: " << *why << '\n';
        return exit_usage;
      }
    } else {
      ExpDecision d = decide_exp_infinite_dlg(in);
      if (!d.infinite) {
        if (json_output) {
          emit({{"command", "pump"}, {"instance", instance_json(in, l.spec)}, {"exp_verdict", "Finite"},
                {"certificate", nullptr}, {"solutions", json::array()}});
        } else {
          std::cout << "finitely many solutions; exponent of periodicity is bounded\n";
        }
        return exit_no;
      }
      cert = std::move(*d.certificate);
    }
    if (!cert_out.empty()) {
      std::ofstream out(cert_out);
      out << to_json(in.symbols, in.mu.target(), cert).dump(2) << '\n';
    }

    json rows = json::array();
    if (!json_output) {
      std::cout << "certificate: " << describe_certificate(in, cert) << '\n';
    }
    for (std::size_t i = 0; i <= m; ++i) {
      Solution const sigma = instantiate(in, cert, i);
      std::size_t const e  = exp_solution(sigma);
      if (json_output) {
        rows.push_back({{"m", i}, {"solution", solution_json(in.symbols, sigma)}, {"exp", e}, {"verified", true}});
      } else {
        std::cout << "m=" << i << "  " << format_solution(in.symbols, sigma) << "  exp=" << e << "  verified\n";
      }
    }
    if (json_output) {
      emit({{"command", "pump"},
            {"instance", instance_json(in, l.spec)},
            {"exp_verdict", "InfiniteCertified"},
            {"certificate", to_json(in.symbols, in.mu.target(), cert)},
            {"solutions", std::move(rows)}});
    }
    return exit_yes;
  }

  int cmd_solve(std::string const& path, std::size_t max_len) {
    Loaded const          l  = load(path);
    SolutionGraph const   g  = build_graph(l.instance);
    std::vector<Solution> s  = enumerate_solutions(g, max_len);
    if (json_output) {
      emit({{"command", "solve"}, {"instance", instance_json(l.instance, l.spec)}, {"max_len", max_len},
            {"count", s.size()}, {"solutions", solutions_json(l.instance.symbols, s)}});
    } else {
      for (auto const& sigma : s) {
        std::cout << format_solution(l.instance.symbols, sigma) << '\n';
      }
    }
    return s.empty() ? exit_no : exit_yes;
  }

  int cmd_oracle(std::string const& path, std::size_t max_len, std::size_t budget) {
    Loaded const  l = load(path);
    OracleOptions opts;
    opts.budget          = budget;
    OracleReport const r = brute_solutions(l.instance, max_len, opts);
    if (json_output) {
      emit({{"command", "oracle"}, {"instance", instance_json(l.instance, l.spec)}, {"max_len", max_len},
            {"count", r.solutions.size()}, {"max_exp_seen", r.max_exp_seen},
            {"solutions", solutions_json(l.instance.symbols, r.solutions)}});
    } else {
      for (auto const& sigma : r.solutions) {
        std::cout << format_solution(l.instance.symbols, sigma) << '\n';
      }
    }
    return r.solutions.empty() ? exit_no : exit_yes;
  }

  int cmd_graph(std::string const& path, std::string const& dot, bool faithful) {
    Loaded const l = load(path);
    GraphOptions opts;
    opts.faithful           = faithful;
    SolutionGraph const g   = build_graph(l.instance, opts);
    std::string const   txt = export_dot(g);
    if (!dot.empty()) {
      std::ofstream out(dot);
      if (!out) {
        throw Error(ErrorKind::invalid_argument, "cannot write " + dot);
      }
      out << txt;
    }
    if (json_output) {
      emit({{"command", "graph"},
            {"instance", instance_json(l.instance, l.spec)},
            {"state_count", g.states.size()},
            {"transition_count", g.transitions.size()},
            {"scc_count", g.components.size()},
            {"states_before_trim", g.states_before_trim},
            {"transitions_before_trim", g.transitions_before_trim}});
    } else if (dot.empty()) {
      std::cout << txt;
    } else {
      std::cout << "wrote " << dot << ": " << g.states.size() << " states, " << g.transitions.size()
                << " transitions\n";
    }
    return g.empty() ? exit_no : exit_yes;
  }

  json classes_json(FiniteSemigroup const& s, Partition const& p) {
    json out = json::array();
    for (auto const& c : p.classes) {
      json names = json::array();
      for (element_type x : c) {
        names.push_back(s.name(x));
      }
      out.push_back(std::move(names));
    }
    return out;
  }

  std::string classes_text(FiniteSemigroup const& s, Partition const& p) {
    std::string out;
    for (auto const& c : p.classes) {
      out += " {";
      for (std::size_t i = 0; i < c.size(); ++i) {
        out += (i ? " " : "") + s.name(c[i]);
      }
      out += "}";
    }
    return out;
  }

  int cmd_semigroup(std::string const& spec, bool report) {
    FiniteSemigroup const s = resolve_semigroup(spec);
    GreenData const       gd = green(s);
    DlgVerdict const      v  = is_dlg(s);
    std::string const     witness = describe_witness(s, v);
    if (json_output) {
      json j = {{"command", "semigroup"}, {"name", s.label()}, {"elements", s.names()}, {"table", s.rows()}};
      j["green"] = {{"L", classes_json(s, gd.L)}, {"R", classes_json(s, gd.R)}, {"J", classes_json(s, gd.J)},
                    {"H", classes_json(s, gd.H)}, {"D", classes_json(s, gd.D)}};
      j["regular_D"] = gd.regular_D;
      j["dlg"]       = v.dlg;
      j["dlg_witness"] = witness.empty() ? json(nullptr) : json(witness);
      if (report) {
        json r = json::object();
        for (auto const& [name, holds] : variety_report(s).entries()) {
          r[name] = holds;
        }
        j["varieties"] = std::move(r);
      }
      emit(j);
    } else {
      std::cout << format_semigroup(s) << "L:" << classes_text(s, gd.L) << "\nR:" << classes_text(s, gd.R)
                << "\nJ:" << classes_text(s, gd.J) << "\nH:" << classes_text(s, gd.H) << '\n';
      if (report) {
        for (auto const& [name, holds] : variety_report(s).entries()) {
          std::cout << name << '=' << (holds ? "true" : "false") << '\n';
        }
      } else {
        std::cout << "dlg=" << (v.dlg ? "true" : "false") << '\n';
      }
      if (!witness.empty()) {
        std::cout << "witness: " << witness << '\n';
      }
    }
    return exit_yes;
  }

  struct HuntArgs {
    std::size_t   sigma   = 2;
    std::size_t   vars    = 2;
    std::size_t   max_len = 6;
    std::string   semigroup = "builtin:trivial";
    std::size_t   budget  = 1'000'000;
    std::uint64_t seed    = 1;
    unsigned      threads = 1;
    std::string   const_images;
    std::string   findings;
  };

  int cmd_hunt(HuntArgs const& args) {
    HuntOptions opts;
    opts.battery        = {args.sigma, args.vars, args.max_len};
    opts.target         = std::make_shared<FiniteSemigroup const>(resolve_semigroup(args.semigroup));
    opts.semigroup_spec = args.semigroup;
    opts.budget         = args.budget;
    opts.seed           = args.seed;
    opts.threads        = args.threads;
    if (!args.const_images.empty()) {
      std::vector<element_type> images;
      std::istringstream        in(args.const_images);
      std::string               tok;
      while (std::getline(in, tok, ',')) {
        auto const e = opts.target->find(tok);
        if (!e) {
          throw Error(ErrorKind::invalid_argument, "unknown element '" + tok + "' in --const-images");
        }
        images.push_back(*e);
      }
      opts.constant_images = std::move(images);
    }

    std::ofstream findings;
    if (!args.findings.empty()) {
      findings.open(args.findings, std::ios::app);
      if (!findings) {
        throw Error(ErrorKind::invalid_argument, "cannot write " + args.findings);
      }
    }
    auto write = [&](HuntRecord const& r) {
      if (findings) {
        findings << finding_json(r, args.semigroup).dump() << '\n' << std::flush;
      }
    };
    HuntReport const report = hunt(opts, write);

    if (json_output) {
      json counts = json::object();
      for (std::size_t c = 0; c < num_hunt_classes; ++c) {
        counts[std::string(to_string(static_cast<HuntClass>(c)))] = report.counts[c];
      }
      json f = json::array();
      for (auto const& r : report.findings) {
        f.push_back(finding_json(r, args.semigroup));
      }
      emit({{"command", "hunt"}, {"semigroup", args.semigroup}, {"total", report.total},
            {"processed", report.processed}, {"budget_exceeded", report.budget_exceeded},
            {"counts", std::move(counts)}, {"findings", std::move(f)}});
    } else {
      std::cout << "instances: " << report.total << ", classified: " << report.processed << '\n';
      for (std::size_t c = 0; c < num_hunt_classes; ++c) {
        std::cout << to_string(static_cast<HuntClass>(c)) << ": " << report.counts[c] << '\n';
      }
      std::cout << "Suspect entries are neither certified nor refuted.\n";
    }
    if (report.budget_exceeded) {
      std::cerr << "BudgetExceeded: classified " << report.processed << " of " << report.total
                << " instances\n";
      return exit_unknown;
    }
    return exit_yes;
  }

  int exit_code_for(ErrorKind k) {
    switch (k) {
      case ErrorKind::parse_error:
      case ErrorKind::invalid_argument:
      case ErrorKind::bad_index:
      case ErrorKind::non_associative:
      case ErrorKind::wrong_constraint_shape:
      case ErrorKind::empty_word: return exit_usage;
      case ErrorKind::not_quadratic:
      case ErrorKind::empty_side: return exit_unsupported;
      default: return exit_unknown;
    }
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quadratic word equations with regular constraints"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", json_output, "Machine-readable output");

  std::string path;
  std::size_t m = 3, max_len = 4, budget = 10'000'000;
  std::string cert_in, cert_out, dot, spec;
  bool        faithful = false, report = false;
  HuntArgs    hunt_args;

  auto* check = app.add_subcommand("check", "Decide satisfiability");
  check->add_option("instance", path)->required();
  auto* infinite = app.add_subcommand("infinite", "Decide whether there are infinitely many solutions");
  infinite->add_option("instance", path)->required();
  auto* pump = app.add_subcommand("pump", "Pumped solutions with growing exponent of periodicity");
  pump->add_option("instance", path)->required();
  pump->add_option("--m", m, "Largest pumping parameter");
  pump->add_option("--cert", cert_in, "Verify and use a certificate file");
  pump->add_option("--cert-out", cert_out, "Write the certificate");
  auto* solve = app.add_subcommand("solve", "Solutions from the graph up to a word length");
  solve->add_option("instance", path)->required();
  solve->add_option("--max-len", max_len);
  auto* graph = app.add_subcommand("graph", "Build and export the solution graph");
  graph->add_option("instance", path)->required();
  graph->add_option("--dot", dot, "DOT output file");
  graph->add_flag("--faithful", faithful, "Rule (ii) for every absent variable");
  auto* oracle = app.add_subcommand("oracle", "Brute-force solutions up to a word length");
  oracle->add_option("instance", path)->required();
  oracle->add_option("--max-len", max_len);
  oracle->add_option("--budget", budget);
  auto* semigroup = app.add_subcommand("semigroup", "Green's relations and varieties");
  semigroup->add_option("spec", spec, "builtin:<name>, file:<path>, a builtin name or a path")->required();
  semigroup->add_flag("--report", report, "Variety membership table");
  auto* hunt_cmd = app.add_subcommand("hunt", "Sweep small instances for uncertified infinitude");
  hunt_cmd->add_option("--sigma", hunt_args.sigma, "Number of constants");
  hunt_cmd->add_option("--vars", hunt_args.vars, "Maximal number of variables");
  hunt_cmd->add_option("--max-len", hunt_args.max_len, "Bound on |UV|");
  hunt_cmd->add_option("--semigroup", hunt_args.semigroup);
  hunt_cmd->add_option("--budget", hunt_args.budget, "Maximal number of instances classified");
  hunt_cmd->add_option("--seed", hunt_args.seed);
  hunt_cmd->add_option("--threads", hunt_args.threads);
  hunt_cmd->add_option("--const-images", hunt_args.const_images, "Comma separated constant images");
  hunt_cmd->add_option("--findings", hunt_args.findings, "Append Suspect records as JSON lines");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*check) return cmd_check(path);
    if (*infinite) return cmd_infinite(path);
    if (*pump) return cmd_pump(path, m, cert_in, cert_out);
    if (*solve) return cmd_solve(path, max_len);
    if (*graph) return cmd_graph(path, dot, faithful);
    if (*oracle) return cmd_oracle(path, max_len, budget);
    if (*semigroup) return cmd_semigroup(spec, report);
    if (*hunt_cmd) return cmd_hunt(hunt_args);
  } catch (Error const& e) {
    std::cerr << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
