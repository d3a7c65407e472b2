#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "weq/battery.hpp"
#include "weq/error.hpp"
#include "weq/oracle.hpp"
#include "weq/periodicity.hpp"
#include "weq/solution_graph.hpp"
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
      element_type const img = *t->find(images[i]);
      (i < 2 ? c[i] : x[i - 2]) = img;
    }
    return Instance{std::move(sy), e, ConstraintMorphism(t, c, x)};
  }

  // Follows transitions by their printed labels from the initial state.
  std::vector<std::size_t> follow(SolutionGraph const& g, std::vector<std::string> const& labels) {
    std::vector<std::size_t> path;
    std::size_t              at = g.initial;
    for (auto const& l : labels) {
      auto const& out = g.out[at];
      auto const  it  = std::find_if(out.begin(), out.end(), [&](std::size_t t) {
        return g.transitions[t].label.format(g.instance.symbols) == l;
      });
      REQUIRE(it != out.end());
      path.push_back(*it);
      at = g.transitions[*it].target;
    }
    return path;
  }

  std::vector<std::size_t> to_final(SolutionGraph const& g, std::vector<std::size_t> path) {
    std::size_t const at   = path.empty() ? g.initial : g.transitions[path.back()].target;
    auto const        rest = shortest_path_to_final(g, at);
    REQUIRE(rest.has_value());
    path.insert(path.end(), rest->begin(), rest->end());
    return path;
  }

}  // namespace

TEST_CASE("graph of Xa = aX") {
  Instance const      in = make("Xa", "aX", {"X"});
  SolutionGraph const g  = build_graph(in);
  CHECK(is_solvable(g));
  CHECK(has_infinitely_many(g));
  bool cycle = false, exit = false;
  for (auto const& t : g.transitions) {
    std::string const l = t.label.format(in.symbols);
    if (l == "X->aX" && g.same_component(t.source, t.target)) {
      cycle = shortest_cycle_through(g, t.source).has_value();
    }
    exit |= l == "X->a";
  }
  CHECK(cycle);
  CHECK(exit);

  Solution const two = extract_solution(g, to_final(g, follow(g, {"X->aX", "X->a"})));
  CHECK(format_solution(in.symbols, two) == "X=aa");
  Solution const one = extract_solution(g, to_final(g, follow(g, {"X->a"})));
  CHECK(format_solution(in.symbols, one) == "X=a");
  CHECK_THROWS_AS(extract_solution(g, follow(g, {"X->aX"})), Error);

  std::vector<std::string> sols;
  for (auto const& s : enumerate_solutions(g, 3)) {
    sols.push_back(format_solution(in.symbols, s));
  }
  CHECK(sols == std::vector<std::string>{"X=a", "X=aa", "X=aaa"});
}

TEST_CASE("graph of XabY = YbaX") {
  Instance const      in = make("XabY", "YbaX", {"X", "Y"});
  SolutionGraph const g  = build_graph(in);
  CHECK(is_solvable(g));
  CHECK(has_infinitely_many(g));
  auto const sols = enumerate_solutions(g, 3);
  CHECK(sols == brute_solutions(in, 3).solutions);
  bool found = false;
  for (auto const& s : sols) {
    found |= format_solution(in.symbols, s) == "X=aba Y=a";
  }
  CHECK(found);
}

TEST_CASE("constraints can cut the cycle") {
  Instance const      in = make("Xa", "aX", {"X"}, "n2", {"x", "x", "x"});
  SolutionGraph const g  = build_graph(in);
  for (auto const& t : g.transitions) {
    CHECK(t.label.format(in.symbols) != "X->aX");
  }
  CHECK(is_solvable(g));
  CHECK_FALSE(has_infinitely_many(g));
  CHECK(brute_solutions(in, 4).solutions.size() == 1);
}

TEST_CASE("unsatisfiable and variable-free equations") {
  SolutionGraph const none = build_graph(make("Xa", "bX", {"X"}));
  CHECK_FALSE(is_solvable(none));
  CHECK(none.empty());
  CHECK(enumerate_solutions(none, 4).empty());

  SolutionGraph const fixed = build_graph(make("ab", "ab", {}));
  CHECK(is_solvable(fixed));
  CHECK_FALSE(has_infinitely_many(fixed));
  CHECK(enumerate_solutions(fixed, 2).size() == 1);
}

TEST_CASE("equations collapsing to the empty equation") {
  Instance const      in = make("X", "Y", {"X", "Y"});
  SolutionGraph const g  = build_graph(in);
  bool                has_true = false;
  for (auto const& s : g.states) {
    has_true |= s.is_true;
  }
  CHECK(has_true);
  CHECK(enumerate_solutions(g, 3) == brute_solutions(in, 3).solutions);
}

TEST_CASE("graph build rejects unsupported instances") {
  CHECK_THROWS_AS(build_graph(make("XXX", "aXa", {"X"})), Error);
  GraphOptions tiny;
  tiny.max_states = 2;
  CHECK_THROWS_AS(build_graph(make("XabY", "YbaX", {"X", "Y"}), tiny), Error);
}

TEST_CASE("faithful graphs have the same solutions") {
  Instance const in = make("XY", "ab", {"X", "Y"});
  GraphOptions   f;
  f.faithful = true;
  SolutionGraph const lean = build_graph(make("XaY", "aXb", {"X", "Y", "Z"}));
  SolutionGraph const full = build_graph(make("XaY", "aXb", {"X", "Y", "Z"}), f);
  CHECK(full.states_before_trim >= lean.states_before_trim);
  CHECK(enumerate_solutions(lean, 3) == enumerate_solutions(full, 3));
  CHECK(enumerate_solutions(build_graph(in, f), 3) == brute_solutions(in, 3).solutions);
}

TEST_CASE("DOT export") {
  SolutionGraph const g   = build_graph(make("ab", "ab", {}));
  std::string const   dot = export_dot(g);
  CHECK(dot.find("digraph") != std::string::npos);

  SolutionGraph const  h = build_graph(make("Xa", "aX", {"X"}));
  std::string const    d = export_dot(h);
  CHECK(d.find("X->aX") != std::string::npos);
  CHECK(d.find("doublecircle") != std::string::npos);
  CHECK(d.find("dashed") != std::string::npos);
  CHECK(d == export_dot(build_graph(make("Xa", "aX", {"X"}))));
}

TEST_CASE("graph invariants and bounded completeness over the zoo battery") {
  for (auto const& name : weq::testing::base_names()) {
    if (shared(name)->size() > 3) {
      continue;
    }
    auto const instances = battery_instances(BatteryOptions{2, 2, 5}, shared(name));
    for (Instance const& in : instances) {
      INFO(format_equation(in.symbols, in.equation) << " over " << name);
      GraphOptions untrimmed;
      untrimmed.trim = false;
      SolutionGraph const raw = build_graph(in, untrimmed);
      for (auto const& t : raw.transitions) {
        std::size_t const from = raw.states[t.source].length();
        std::size_t const to   = raw.states[t.target].length();
        CHECK(to <= from);
        if (t.label.kind == Label::Kind::epsilon) {
          CHECK(to < from);
        }
      }
      SolutionGraph const g    = build_graph(in);
      auto const          sols = enumerate_solutions(g, 3);
      for (auto const& s : sols) {
        CHECK(is_solution(in, s));
      }
      CHECK(sols == brute_solutions(in, 3).solutions);
      if (!sols.empty()) {
        CHECK(is_solvable(g));
      }
      if (is_solvable(g)) {
        auto const p = shortest_path_to_final(g, g.initial);
        REQUIRE(p.has_value());
        CHECK(is_solution(in, extract_solution(g, *p)));
      }
    }
  }
}

TEST_CASE("bounded completeness on larger equations") {
  std::mt19937_64 rng(7);
  auto const      equations = quadratic_equations(BatteryOptions{2, 2, 8});
  for (char const* name : {"b2", "z2", "lz2"}) {
    auto const t = shared(name);
    for (std::size_t i = 0; i < equations.size(); i += 53) {
      auto const& be = equations[i];
      std::uniform_int_distribution<element_type> pick(0, static_cast<element_type>(t->size() - 1));
      std::vector<element_type> c(2), x(be.symbols.num_variables());
      for (auto& e : c) e = pick(rng);
      for (auto& e : x) e = pick(rng);
      Instance const in{be.symbols, be.equation, ConstraintMorphism(t, c, x)};
      INFO(format_equation(in.symbols, in.equation) << " over " << name);
      SolutionGraph const g = build_graph(in);
      CHECK(enumerate_solutions(g, 4) == brute_solutions(in, 4).solutions);
    }
  }
}

TEST_CASE("in-component transitions prepend within the L-class") {
  for (auto const& name : weq::testing::base_names()) {
    auto const instances = canonical_instances(BatteryOptions{2, 2, 5}, shared(name));
    GreenData const gd = green(*shared(name));
    for (Instance const& in : instances) {
      SolutionGraph const g = build_graph(in);
      for (auto const& t : g.transitions) {
        if (!g.same_component(t.source, t.target)) {
          continue;
        }
        INFO(g.describe(t.source) << " over " << name);
        REQUIRE(t.label.kind == Label::Kind::prepend);
        element_type const mx = g.states[t.source].var_images[t.label.variable];
        element_type const ma = g.image(t.source, t.label.alpha);
        element_type const mt = g.states[t.target].var_images[t.label.variable];
        CHECK(gd.leq_R(mx, ma));
        CHECK(gd.L_equiv(mx, mt));
        CHECK(preimage_infinite(in.mu, mx));
      }
    }
  }
}

TEST_CASE("path helpers") {
  SolutionGraph const g = build_graph(make("XabY", "YbaX", {"X", "Y"}));
  auto const          p = shortest_path_to_final(g, g.initial);
  REQUIRE(p.has_value());
  auto const states = path_states(g, *p, g.initial);
  CHECK(states.front() == g.initial);
  CHECK(g.is_final[states.back()]);
  CycleList const cycles = simple_cycles(g, 20);
  CHECK_FALSE(cycles.cycles.empty());
  CHECK_FALSE(cycles.truncated);
  for (auto const& c : cycles.cycles) {
    auto const on = path_states(g, c, g.transitions[c.front()].source);
    CHECK(on.front() == on.back());
    CHECK(on.front() == *std::min_element(on.begin(), on.end()));
  }
}
