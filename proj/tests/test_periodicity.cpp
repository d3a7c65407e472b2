#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "weq/battery.hpp"
#include "weq/certificate_json.hpp"
#include "weq/error.hpp"
#include "weq/periodicity.hpp"
#include "zoo.hpp"

using namespace weq;
using weq::testing::shared;

namespace {

  std::string spaced(std::string const& s) {
    std::string out;
    for (char c : s) {
      out += c;
      out += ' ';
    }
    return out;
  }

  Instance make(std::string const& lhs, std::string const& rhs, std::vector<std::string> vars,
                std::string const& target = "trivial", std::vector<std::string> images = {}) {
    SymbolTable sy({"a", "b"}, std::move(vars));
    WordEquation e{sy.parse_word(spaced(lhs)), sy.parse_word(spaced(rhs))};
    auto const   t = shared(target);
    std::vector<element_type> c(2, 0), x(sy.num_variables(), 0);
    for (std::size_t i = 0; i < images.size(); ++i) {
      (i < 2 ? c[i] : x[i - 2]) = *t->find(images[i]);
    }
    return Instance{std::move(sy), e, ConstraintMorphism(t, c, x)};
  }

  std::string word(Instance const& in, Word const& w) {
    return in.symbols.format(w);
  }

  // Component of the initial state, which must carry a transition.
  std::size_t initial_component(SolutionGraph const& g) {
    std::size_t const c = g.component_of[g.initial];
    REQUIRE(g.components[c].has_transition);
    return c;
  }

  bool dlg_target(Instance const& in) {
    return is_dlg(in.mu.target()).dlg;
  }

}  // namespace

TEST_CASE("nicely balanced equations") {
  Instance const xaby = make("XabY", "YbaX", {"X", "Y"});
  auto const     w    = is_nicely_balanced(xaby.mu, ConstrainedEquation::of(xaby), 0);
  REQUIRE(w.has_value());
  CHECK_FALSE(w->absent);
  CHECK(word(xaby, w->v) == "Yba");
  CHECK(word(xaby, w->u) == "abY");
  CHECK(w->v_prime.empty());
  auto const wy = is_nicely_balanced(xaby.mu, ConstrainedEquation::of(xaby), 1);
  REQUIRE(wy.has_value());
  CHECK(wy->swapped);

  Instance const xy = make("XY", "Yab", {"X", "Y"});
  CHECK_FALSE(is_nicely_balanced(xy.mu, ConstrainedEquation::of(xy), 0).has_value());

  Instance const b2 = make("Xa", "bXa", {"X"}, "b2", {"a", "b", "a"});
  CHECK_FALSE(is_nicely_balanced(b2.mu, ConstrainedEquation::of(b2), 0).has_value());
  Instance const b2_ok = make("Xa", "abXa", {"X"}, "b2", {"a", "b", "a"});
  CHECK(is_nicely_balanced(b2_ok.mu, ConstrainedEquation::of(b2_ok), 0).has_value());

  Instance const absent = make("ab", "ab", {"X"});
  auto const     wa     = is_nicely_balanced(absent.mu, ConstrainedEquation::of(absent), 0);
  REQUIRE(wa.has_value());
  CHECK(wa->absent);

  Instance const empty_v = make("Xa", "Xa", {"X"});
  auto const     we      = is_nicely_balanced(empty_v.mu, ConstrainedEquation::of(empty_v), 0);
  REQUIRE(we.has_value());
  CHECK(we->v.empty());

  // The constraint of X has a single preimage word, so it cannot be pumped.
  Instance const fixed = make("Xa", "aX", {"X"}, "n2", {"x", "x", "x"});
  CHECK_FALSE(is_nicely_balanced(fixed.mu, ConstrainedEquation::of(fixed), 0).has_value());
}

TEST_CASE("SCC analysis over the trivial semigroup") {
  Instance const      in = make("XabY", "YbaX", {"X", "Y"});
  SolutionGraph const g  = build_graph(in);
  SccAnalysis const   a  = analyze_scc(g, initial_component(g));
  CHECK(a.violations.empty());
  CHECK(a.leading_J_elements == std::vector<element_type>{0});
  CHECK(a.leading_stab.size() == 2);
  CHECK(a.players == std::vector<std::uint32_t>{0, 1});
  CHECK(a.playground_size == 8);
  auto const it = std::find_if(a.states.begin(), a.states.end(),
                               [&](StatePlayground const& p) { return p.state == g.initial; });
  REQUIRE(it != a.states.end());
  CHECK(word(in, it->lhs) == "XabY");
  CHECK(word(in, it->rhs) == "YbaX");

  for (std::size_t c = 0; c < g.components.size(); ++c) {
    if (g.components[c].has_transition) {
      SccAnalysis const b = analyze_scc(g, c);
      CHECK(b.violations.empty());
      for (auto const& p : b.states) {
        CHECK(p.size() == g.states[p.state].length());
      }
    }
  }
}

TEST_CASE("SCC analysis with nilpotent constraints") {
  Instance const      in = make("XaY", "YaX", {"X", "Y"}, "n2", {"x", "x", "0", "0"});
  SolutionGraph const g  = build_graph(in);
  SccAnalysis const   a  = analyze_scc(g, initial_component(g));
  CHECK(a.violations.empty());
  CHECK(a.leading_J_elements == std::vector<element_type>{*in.mu.target().find("0")});
  CHECK(a.leading_stab.size() == 3);
  CHECK(a.players == std::vector<std::uint32_t>{0, 1});
  auto const it = std::find_if(a.states.begin(), a.states.end(),
                               [&](StatePlayground const& p) { return p.state == g.initial; });
  REQUIRE(it != a.states.end());
  CHECK(it->balanced == std::vector<std::uint32_t>{0, 1});
  CHECK(it->unbalanced.empty());
}

TEST_CASE("nicely balanced states on cycles") {
  Instance const      in = make("Xa", "aX", {"X"});
  SolutionGraph const g  = build_graph(in);
  auto const          cycle = shortest_cycle_through(g, g.initial);
  REQUIRE(cycle.has_value());
  auto const nice = find_nicely_balanced_on_cycle(g, *cycle);
  REQUIRE(nice.has_value());
  CHECK(nice->variable == 0);
  CHECK(word(in, nice->witness.v) == "a");

  Instance const      xaby = make("XabY", "YbaX", {"X", "Y"});
  SolutionGraph const h    = build_graph(xaby);
  auto const          c2   = shortest_cycle_through(h, h.initial);
  REQUIRE(c2.has_value());
  auto const n2 = find_nicely_balanced_on_cycle(h, *c2);
  REQUIRE(n2.has_value());
  CHECK(n2->state == h.initial);
  CHECK(n2->variable == 0);
  CHECK(word(xaby, n2->witness.v) == "Yba");
}

TEST_CASE("certificate of Xa = aX") {
  Instance const          in = make("Xa", "aX", {"X"});
  CertificateSearch const s  = pumping_certificate(in);
  REQUIRE(s.status == CertificateSearch::Status::certified);
  PumpingCertificate const& c = *s.certificate;
  CHECK(c.kind == PumpCase::head_balanced);
  CHECK(word(in, c.v) == "a");
  CHECK(c.omega == 1);
  CHECK(format_solution(in.symbols, c.base) == "X=a");
  CHECK_FALSE(verify_certificate(in, c).has_value());
  CHECK(format_solution(in.symbols, instantiate(in, c, 3)) == "X=aaaa");
  CHECK(format_solution(in.symbols, instantiate(in, c, 0)) == "X=a");
}

TEST_CASE("certificate of XabY = YbaX") {
  Instance const          in = make("XabY", "YbaX", {"X", "Y"});
  CertificateSearch const s  = pumping_certificate(in);
  REQUIRE(s.status == CertificateSearch::Status::certified);
  PumpingCertificate const& c = *s.certificate;
  CHECK(c.kind == PumpCase::head_balanced);
  CHECK(c.variable == 0);
  CHECK(word(in, c.v) == "Yba");
  CHECK(format_solution(in.symbols, c.base) == "X=aba Y=a");
  CHECK(c.prefix_path.empty());
  CHECK(format_solution(in.symbols, instantiate(in, c, 1)) == "X=abaaba Y=a");
  for (std::size_t m = 0; m <= 6; ++m) {
    Solution const sm = instantiate(in, c, m);
    CHECK(is_solution(in, sm));
    CHECK(exp_solution(sm) >= m);
  }
  ExpDecision const d = decide_exp_infinite_dlg(in);
  CHECK(d.infinite);
  CHECK(d.certificate.has_value());
}

TEST_CASE("finite cases") {
  Instance const n2 = make("Xa", "aX", {"X"}, "n2", {"x", "x", "x"});
  CHECK(pumping_certificate(n2).status == CertificateSearch::Status::finite);
  CHECK_FALSE(decide_exp_infinite_dlg(n2).infinite);

  Instance const none = make("Xa", "bX", {"X"});
  CHECK(pumping_certificate(none).status == CertificateSearch::Status::finite);
  CHECK_FALSE(decide_exp_infinite_dlg(none).infinite);

  Instance const fixed = make("ab", "ab", {});
  CHECK_FALSE(decide_exp_infinite_dlg(fixed).infinite);
}

TEST_CASE("decision rejects non-DLG constraints and non-quadratic equations") {
  Instance const b2 = make("XaYb", "YbXa", {"X", "Y"}, "b2", {"a", "b", "0", "0"});
  try {
    decide_exp_infinite_dlg(b2);
    FAIL("expected NotDLG");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::not_dlg);
  }
  try {
    pumping_certificate(make("XXX", "aXa", {"X"}));
    FAIL("expected NotQuadratic");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::not_quadratic);
  }
}

TEST_CASE("free variable certificates") {
  Instance const          in = make("Xa", "Ya", {"X", "Y"});
  CertificateSearch const s  = pumping_certificate(in);
  REQUIRE(s.status == CertificateSearch::Status::certified);
  PumpingCertificate const& c = *s.certificate;
  CHECK_FALSE(verify_certificate(in, c).has_value());
  std::set<Solution> seen;
  for (std::size_t m = 0; m <= 5; ++m) {
    Solution const sm = instantiate(in, c, m);
    CHECK(is_solution(in, sm));
    CHECK(exp_solution(sm) >= m);
    seen.insert(sm);
  }
  CHECK(seen.size() == 6);

  Instance const absent = make("aX", "aX", {"X"});
  auto const     sa     = pumping_certificate(absent);
  REQUIRE(sa.status == CertificateSearch::Status::certified);
  CHECK(sa.certificate->kind == PumpCase::free_variable);
  CHECK(sa.certificate->pump.has_value());
}

TEST_CASE("certificate JSON round trip and tamper detection") {
  Instance const            in = make("XabY", "YbaX", {"X", "Y"});
  PumpingCertificate const  c  = *pumping_certificate(in).certificate;
  nlohmann::json const      j  = to_json(in.symbols, in.mu.target(), c);
  PumpingCertificate const  r  = certificate_from_json(in.symbols, in.mu.target(), j);
  CHECK(to_json(in.symbols, in.mu.target(), r) == j);
  CHECK_FALSE(verify_certificate(in, r).has_value());
  CHECK(instantiate(in, r, 3) == instantiate(in, c, 3));

  nlohmann::json bad_v = j;
  bad_v["v"] = "a";
  CHECK(verify_certificate(in, certificate_from_json(in.symbols, in.mu.target(), bad_v)).has_value());

  nlohmann::json bad_base = j;
  bad_base["base"]["X"] = "b a";
  CHECK(verify_certificate(in, certificate_from_json(in.symbols, in.mu.target(), bad_base)).has_value());

  nlohmann::json bad_path = j;
  bad_path["prefix_path"] = {"X->aX"};
  CHECK(verify_certificate(in, certificate_from_json(in.symbols, in.mu.target(), bad_path)).has_value());

  nlohmann::json bad_omega = j;
  bad_omega["omega"] = 3;
  CHECK(verify_certificate(in, certificate_from_json(in.symbols, in.mu.target(), bad_omega)).has_value());

  Instance const other = make("Xa", "aX", {"X"});
  CHECK(verify_certificate(other, *pumping_certificate(in).certificate).has_value());

  nlohmann::json broken = j;
  broken.erase("variable");
  CHECK_THROWS_AS(certificate_from_json(in.symbols, in.mu.target(), broken), ParseError);
  nlohmann::json bad_label = j;
  bad_label["prefix_path"] = {"X=>a"};
  CHECK_THROWS_AS(certificate_from_json(in.symbols, in.mu.target(), bad_label), ParseError);
}

TEST_CASE("labels parse back from their printed form") {
  SymbolTable const sy({"a", "b"}, {"X", "Y"});
  for (std::string const text : {"eps", "X->aX", "Y->XY", "X->b", "Y->X"}) {
    CHECK(parse_label(sy, text).format(sy) == text);
  }
  CHECK_THROWS(parse_label(sy, "Z->a"));
}

TEST_CASE("DLG battery: certificates exactly for infinite solution sets") {
  for (auto const& name : weq::testing::base_names()) {
    auto const t = shared(name);
    if (!is_dlg(*t).dlg || t->size() > 3) {
      continue;
    }
    for (Instance const& in : canonical_instances(BatteryOptions{2, 2, 5}, t)) {
      INFO(format_equation(in.symbols, in.equation) << " over " << name);
      SolutionGraph const g = build_graph(in);
      ExpDecision const   d = decide_exp_infinite_dlg(in);
      REQUIRE(d.infinite == has_infinitely_many(g));
      if (!d.infinite) {
        continue;
      }
      REQUIRE_FALSE(verify_certificate(in, *d.certificate).has_value());
      std::set<Solution> seen;
      for (std::size_t m = 0; m <= 5; ++m) {
        Solution const sm = instantiate(in, *d.certificate, m);
        CHECK(is_solution(in, sm));
        CHECK(exp_solution(sm) >= m);
        seen.insert(sm);
      }
      CHECK(seen.size() == 6);
    }
  }
}

TEST_CASE("DLG battery: component invariants and nicely balanced cycles") {
  for (auto const& name : weq::testing::base_names()) {
    auto const t = shared(name);
    if (!is_dlg(*t).dlg) {
      continue;
    }
    for (Instance const& in : canonical_instances(BatteryOptions{2, 2, 5}, t)) {
      INFO(format_equation(in.symbols, in.equation) << " over " << name);
      SolutionGraph const g = build_graph(in);
      for (std::size_t c = 0; c < g.components.size(); ++c) {
        if (g.components[c].has_transition) {
          CHECK(analyze_scc(g, c).violations.empty());
        }
      }
      CycleList const cycles = simple_cycles(g, 20);
      CHECK_FALSE(cycles.truncated);
      for (auto const& cycle : cycles.cycles) {
        CHECK(find_nicely_balanced_on_cycle(g, cycle).has_value());
      }
    }
  }
}

TEST_CASE("unconstrained battery never misses a certificate") {
  for (Instance const& in : battery_instances(BatteryOptions{2, 3, 7}, shared("trivial"))) {
    INFO(format_equation(in.symbols, in.equation));
    SolutionGraph const     g = build_graph(in);
    CertificateSearch const s = pumping_certificate(g);
    CHECK((s.status == CertificateSearch::Status::certified) == has_infinitely_many(g));
    CHECK(s.status != CertificateSearch::Status::not_found);
  }
}

TEST_CASE("non-DLG constraints never crash the machinery") {
  std::size_t violations = 0, misses = 0;
  for (char const* name : {"b2", "lz2"}) {
    for (Instance const& in : canonical_instances(BatteryOptions{2, 2, 5}, shared(name))) {
      INFO(format_equation(in.symbols, in.equation) << " over " << name);
      SolutionGraph const g = build_graph(in);
      for (std::size_t c = 0; c < g.components.size(); ++c) {
        if (g.components[c].has_transition) {
          violations += analyze_scc(g, c).violations.size();
        }
      }
      for (auto const& cycle : simple_cycles(g, 20).cycles) {
        misses += !find_nicely_balanced_on_cycle(g, cycle).has_value();
      }
      CertificateSearch const s = pumping_certificate(g);
      if (s.status == CertificateSearch::Status::certified) {
        CHECK_FALSE(verify_certificate(in, *s.certificate).has_value());
        CHECK(is_solution(in, instantiate(in, *s.certificate, 2)));
      }
    }
  }
  INFO("violations: " << violations << ", cycles without a nicely balanced state: " << misses);
  SUCCEED();
}

TEST_CASE("constrained equations convert to states and back") {
  Instance const            in = make("XaY", "YaX", {"X", "Y"}, "n2", {"x", "x", "0", "0"});
  ConstrainedEquation const e  = ConstrainedEquation::of(in);
  GraphState const          s  = e.as_state();
  CHECK(s.lhs == in.equation.lhs);
  CHECK(s.var_images == in.mu.variable_images());
  CHECK(ConstrainedEquation::of(s).var_images == e.var_images);
  CHECK(to_string(PumpCase::head_balanced) == "HeadBalanced");
  CHECK(to_string(PumpCase::free_variable) == "FreeVariable");
  CHECK(dlg_target(in));
}
