#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "weq/battery.hpp"
#include "weq/error.hpp"
#include "weq/oracle.hpp"
#include "weq/preimage.hpp"
#include "weq/reductions.hpp"
#include "zoo.hpp"

using namespace weq;
using weq::testing::shared;

namespace {

  SymbolTable ab_xy() {
    return SymbolTable({"a", "b"}, {"X", "Y"});
  }

  Word w(SymbolTable const& sy, std::string const& compact) {
    std::string spaced;
    for (char c : compact) {
      spaced += c;
      spaced += ' ';
    }
    return sy.parse_word(spaced);
  }

  ConstraintMorphism b2_ab(std::size_t variables, std::string const& var_image = "0") {
    auto const t = shared("b2");
    return ConstraintMorphism(t, {*t->find("a"), *t->find("b")},
                              std::vector<element_type>(variables, *t->find(var_image)));
  }

  ConstraintMorphism trivial(std::size_t constants, std::size_t variables) {
    return ConstraintMorphism(shared("trivial"), std::vector<element_type>(constants, 0),
                              std::vector<element_type>(variables, 0));
  }

  std::size_t exp_brute(std::string const& s) {
    std::size_t best = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t l = 1; i + l <= s.size(); ++l) {
        std::size_t k = 1;
        while (i + (k + 1) * l <= s.size() && s.compare(i + k * l, l, s, i, l) == 0) {
          ++k;
        }
        best = std::max(best, k);
      }
    }
    return best;
  }

}  // namespace

TEST_CASE("symbol tables") {
  SymbolTable sy = ab_xy();
  CHECK(sy.num_constants() == 2);
  CHECK(sy.num_variables() == 2);
  CHECK(sy.format(w(sy, "XabY")) == "XabY");
  CHECK(sy.tokens(w(sy, "XabY")) == "X a b Y");
  CHECK_THROWS_AS(sy.add_variable("X"), Error);
  CHECK_THROWS_AS(sy.add_constant("$1"), Error);
  CHECK_THROWS_AS(sy.parse_word("a c"), Error);
  CHECK(sy.name(sy.add_separator()) == "#");
  CHECK(sy.name(sy.add_separator()) == "#1");
  CHECK(sy.name(sy.add_fresh_variable()) == "$1");
  sy.add_variable("long");
  CHECK(sy.format(sy.parse_word("a long")) == "a long");
}

TEST_CASE("constraint evaluation") {
  SymbolTable const        sy = ab_xy();
  ConstraintMorphism const mu = b2_ab(2);
  FiniteSemigroup const&   t  = mu.target();
  CHECK(t.name(mu.eval(w(sy, "ab"))) == "ab");
  CHECK(t.name(mu.eval(w(sy, "aa"))) == "0");
  CHECK(trivial(2, 2).eval(w(sy, "XabY")) == 0);
  CHECK_THROWS_AS(mu.eval(Word{}), Error);
  CHECK_THROWS_AS(ConstraintMorphism(shared("z2"), {0, 5}, {}), Error);
}

TEST_CASE("exponent of periodicity") {
  CHECK(exp_word(std::string()) == 0);
  CHECK(exp_word(std::string("a")) == 1);
  CHECK(exp_word(std::string("ababab")) == 3);
  CHECK(exp_word(std::string("aabaa")) == 2);

  SymbolTable const sy = ab_xy();
  CHECK(exp_solution(Solution{{{0, w(sy, "aa")}, {1, w(sy, "aba")}}}) == 2);
  CHECK(exp_solution(Solution{{{0, w(sy, "a")}}}) == 1);
  CHECK(exp_solution(Solution{{{0, w(sy, "abaabaaba")}, {1, w(sy, "a")}}}) == 3);

  std::mt19937 rng(7);
  for (int i = 0; i < 500; ++i) {
    std::string s;
    std::size_t const n = rng() % 16;
    for (std::size_t j = 0; j < n; ++j) {
      s += static_cast<char>('a' + rng() % 3);
    }
    CHECK(exp_word(s) == exp_brute(s));
    std::string renamed = s;
    for (char& c : renamed) {
      c = c == 'a' ? 'c' : c == 'c' ? 'a' : c;
    }
    CHECK(exp_word(renamed) == exp_word(s));
    if (!s.empty()) {
      std::string p;
      for (int k = 1; k <= 3; ++k) {
        p += s;
        CHECK(exp_word(p) >= static_cast<std::size_t>(k));
      }
    }
  }
}

TEST_CASE("substitutions") {
  SymbolTable const  sy = ab_xy();
  Substitution const t  = Substitution::single(0, w(sy, "aX"));
  CHECK(t.is_basic());
  CHECK(t.is_trivial());
  CHECK(t.apply(w(sy, "XbX")) == w(sy, "aXbaX"));
  CHECK(Substitution::single(0, w(sy, "YX")).is_basic());
  CHECK_FALSE(Substitution::single(0, w(sy, "YX")).is_trivial());
  CHECK_FALSE(Substitution::single(0, w(sy, "ab")).is_basic());
  CHECK(Substitution::single(0, w(sy, "ab")).is_trivial());
  CHECK_THROWS_AS(Substitution::single(0, Word{}), Error);

  Substitution const u = Substitution::single(0, w(sy, "b"));
  CHECK(t.then(u).apply(w(sy, "X")) == w(sy, "ab"));

  // Every trivial substitution of length <= 4 is a composition of basic ones.
  std::vector<Word> images;
  for (std::string s : {"a", "ab", "aab", "abab", "X", "aX", "abX", "abaX"}) {
    images.push_back(w(sy, s));
  }
  for (Word const& img : images) {
    if (img == w(sy, "X")) {
      continue;
    }
    Substitution const s   = Substitution::single(0, img);
    auto const         seq = s.as_basic_sequence();
    Substitution       composed;
    for (auto const& step : seq) {
      CHECK(step.is_basic());
      composed = composed.then(step);
    }
    CHECK(composed.apply(w(sy, "XY")) == s.apply(w(sy, "XY")));
  }
  CHECK_THROWS_AS(Substitution::single(0, w(sy, "YX")).as_basic_sequence(), Error);
}

TEST_CASE("solutions and quadraticity") {
  SymbolTable const sy = ab_xy();
  Instance const    in{sy, {w(sy, "XabY"), w(sy, "YbaX")}, trivial(2, 2)};
  CHECK(is_solution(in, Solution{{{0, w(sy, "aba")}, {1, w(sy, "a")}}}));
  CHECK_FALSE(is_solution(in, Solution{{{0, w(sy, "ab")}, {1, w(sy, "a")}}}));
  CHECK_FALSE(is_solution(in, Solution{{{0, w(sy, "aba")}}}));
  CHECK(format_solution(sy, Solution{{{0, w(sy, "aba")}, {1, w(sy, "a")}}}) == "X=aba Y=a");
  CHECK(format_equation(sy, in.equation) == "XabY = YbaX");
  CHECK(is_quadratic(in.equation, 2));
  CHECK_FALSE(is_quadratic({w(sy, "XXa"), w(sy, "X")}, 2));
  CHECK_THROWS_AS(require_quadratic(Instance{sy, {Word{}, w(sy, "a")}, trivial(2, 2)}), Error);

  Solution const lo{{{0, w(sy, "b")}}};
  Solution const hi{{{0, w(sy, "aa")}}};
  CHECK(lo < hi);
}

TEST_CASE("preimage languages") {
  SymbolTable const        sy = ab_xy();
  ConstraintMorphism const tr = trivial(2, 0);
  CHECK(preimage_infinite(tr, 0));
  auto const p = preimage_pump(tr, 0);
  REQUIRE(p.has_value());
  CHECK_FALSE(p->y.empty());
  for (std::size_t m = 0; m <= 3; ++m) {
    CHECK(tr.eval(p->instantiate(m)) == 0);
  }

  ConstraintMorphism const mu = b2_ab(0);
  element_type const       ab = *mu.target().find("ab");
  CHECK(preimage_infinite(mu, ab));
  CHECK(shortest_preimage(mu, ab) == w(sy, "ab"));
  CHECK(count_preimage(mu, ab, 6) == 3);

  auto const         n2 = shared("n2");
  ConstraintMorphism nx(n2, {*n2->find("x")}, {});
  CHECK_FALSE(preimage_infinite(nx, *n2->find("x")));
  CHECK(count_preimage(nx, *n2->find("x"), 5) == 1);
  CHECK_FALSE(preimage_pump(nx, *n2->find("x")).has_value());
}

TEST_CASE("preimage infinitude matches the pumping threshold on the zoo") {
  for (auto const& name : weq::testing::base_names()) {
    auto const t = shared(name);
    for (auto const& mu : constraint_maps(t, 2, 0)) {
      for (element_type s = 0; s < t->size(); ++s) {
        std::size_t const k = t->size() + 1;
        bool const grows    = count_preimage(mu, s, 2 * k) > count_preimage(mu, s, k);
        CHECK(preimage_infinite(mu, s) == grows);
        CHECK(preimage_nonempty(mu, s) == (count_preimage(mu, s, k) > 0));
        if (auto const p = preimage_pump(mu, s)) {
          for (std::size_t m = 0; m <= 3; ++m) {
            CHECK(mu.eval(p->instantiate(m)) == s);
          }
        }
      }
    }
  }
}

TEST_CASE("systems fold into single equations") {
  SymbolTable const sy = ab_xy();
  SystemInstance const one{sy, {{w(sy, "Xa"), w(sy, "aX")}}, trivial(2, 2)};
  Instance const       s1 = system_to_single(one);
  CHECK(format_equation(s1.symbols, s1.equation) == "Xa# = aX#");
  CHECK(s1.mu.target().size() == 2);

  SystemInstance const two{sy, {{w(sy, "Xa"), w(sy, "aX")}, {w(sy, "Xb"), w(sy, "bX")}}, trivial(2, 2)};
  Instance const       s2 = system_to_single(two);
  CHECK(format_equation(s2.symbols, s2.equation) == "Xa#Xb# = aX#bX#");

  Solution const sigma{{{0, w(sy, "a")}, {1, w(sy, "a")}}};
  CHECK(is_solution(one, sigma));
  CHECK(is_solution(s1, sigma));

  // The folded instance has exactly the solutions of the system.
  SystemInstance const mixed{sy, {{w(sy, "XY"), w(sy, "YX")}, {w(sy, "Xa"), w(sy, "aX")}}, trivial(2, 2)};
  Instance const       folded = system_to_single(mixed);
  auto const           lhs    = brute_solutions(mixed, 4).solutions;
  auto const           rhs    = brute_solutions(SystemInstance{folded.symbols, {folded.equation}, folded.mu}, 4).solutions;
  CHECK(lhs == rhs);
  CHECK_FALSE(lhs.empty());
}

TEST_CASE("singular guesses") {
  SymbolTable const sy = ab_xy();
  auto const         tp  = shared("trivial");
  element_type const one = *tp->identity();
  MonoidSystem const sys{sy, {{w(sy, "XY"), w(sy, "ab")}}, ConstraintMorphism(tp, {0, 0}, {one, one})};
  auto const guesses = singular_guesses(sys);
  REQUIRE(guesses.size() == 3);  // {}, {X}, {Y}; erasing both leaves empty = ab
  CHECK(guesses[0].erased.empty());
  CHECK(format_equation(guesses[0].instance.symbols, guesses[0].instance.equations[0]) == "XY = ab");
  CHECK(guesses[1].erased == std::vector<std::uint32_t>{0});
  CHECK(format_equation(guesses[1].instance.symbols, guesses[1].instance.equations[0]) == "Y = ab");

  SymbolTable const  sx({"a", "b"}, {"X"});
  MonoidSystem const single{sx, {{w(sx, "X"), w(sx, "a")}}, ConstraintMorphism(tp, {0, 0}, {one})};
  CHECK(singular_guesses(single).size() == 1);

  // Monoid solutions are exactly the expanded guess solutions.
  std::set<MonoidSolution> expanded;
  for (auto const& g : guesses) {
    for (auto const& sigma : brute_solutions(g.instance, 3).solutions) {
      MonoidSolution const m = g.expand(sigma);
      CHECK(is_monoid_solution(sys, m));
      expanded.insert(m);
    }
  }
  CHECK(expanded.size() == 3);
}

TEST_CASE("periodicity reduction") {
  SymbolTable const sy = ab_xy();
  std::vector<WordEquation> const eqs = {{w(sy, "XabY"), w(sy, "YbaX")}};
  EquationSystem const m1 = periodicity_reduction(sy, eqs, 0, 1);
  CHECK(m1.symbols.num_variables() == 5);
  REQUIRE(m1.equations.size() == 2);
  CHECK(m1.symbols.format(m1.equations[1].lhs) == "X");
  CHECK(m1.equations[1].rhs.size() == 3);

  EquationSystem const m2 = periodicity_reduction(sy, eqs, 0, 2);
  CHECK(m2.symbols.num_variables() == 6);
  REQUIRE(m2.equations.size() == 3);
  CHECK(m2.equations[2].lhs.size() == 1);
  CHECK(m2.equations[2].rhs.size() == 2);
  CHECK(m2.equations[2].rhs[0] == m2.equations[2].rhs[1]);
  CHECK_THROWS_AS(periodicity_reduction(sy, eqs, 0, 0), Error);
}

TEST_CASE("Brandt two-constant guesses") {
  SymbolTable const sx({"a", "b"}, {"X"});
  Instance const    one{sx, {w(sx, "Xa"), w(sx, "aX")}, b2_ab(1)};
  auto const        g1 = brandt_two_constant_guesses(one);
  REQUIRE(g1.size() == 2);
  CHECK(g1[0].letter == std::vector<std::uint32_t>{0});
  auto const& e = g1[0].guessed.equations[0];
  CHECK(g1[0].guessed.symbols.tokens(e.lhs).find("a a") != std::string::npos);

  SymbolTable const sy = ab_xy();
  Instance const    two{sy, {w(sy, "XabY"), w(sy, "YbaX")}, b2_ab(2)};
  CHECK(brandt_two_constant_guesses(two).size() == 4);

  Instance const wrong{sy, {w(sy, "XabY"), w(sy, "YbaX")}, b2_ab(2, "a")};
  CHECK_THROWS_AS(brandt_two_constant_guesses(wrong), Error);
  CHECK_THROWS_AS(brandt_two_constant_guesses(Instance{sy, two.equation, trivial(2, 2)}), Error);

  // Soundness spot check.
  for (auto const& g : brandt_two_constant_guesses(one)) {
    for (auto const& sg : singular_guesses(g.guessed)) {
      for (auto const& part : brute_solutions(sg.instance, 2).solutions) {
        CHECK(is_solution(one, g.lift(sg.expand(part))));
      }
    }
  }
}
