#include <catch_amalgamated.hpp>

#include <string>

#include "weq/battery.hpp"
#include "weq/error.hpp"
#include "weq/instance_io.hpp"
#include "weq/oracle.hpp"
#include "weq/semigroup_io.hpp"
#include "zoo.hpp"

using namespace weq;

namespace {

  std::string data(std::string const& name) {
    return std::string(WEQ_DATA_DIR) + "/" + name;
  }

  // Line and column of the error raised by parsing the text.
  std::pair<std::size_t, std::size_t> error_at(std::string const& text) {
    try {
      parse_instance(text);
    } catch (ParseError const& e) {
      return {e.line(), e.column()};
    }
    FAIL("expected a parse error");
    return {0, 0};
  }

}  // namespace

TEST_CASE("instances with default constraints") {
  ParsedInstance const p = load_instance(data("xabby.weq"));
  CHECK(p.semigroup_spec == "builtin:trivial");
  Instance const in = p.single();
  CHECK(format_equation(in.symbols, in.equation) == "XabY = YbaX");
  CHECK(in.mu.target().size() == 1);
  CHECK(in.symbols.constants() == std::vector<std::string>{"a", "b"});
  CHECK(in.symbols.variables() == std::vector<std::string>{"X", "Y"});
}

TEST_CASE("instances with explicit constraints") {
  Instance const in = load_instance(data("xaby_b2.weq")).single();
  FiniteSemigroup const& t = in.mu.target();
  CHECK(t.size() == 5);
  CHECK(in.mu.constant_images() == std::vector<element_type>{*t.find("a"), *t.find("b")});
  CHECK(in.mu.variable_images() == std::vector<element_type>{*t.find("0"), *t.find("0")});

  Instance const z = load_instance(data("file_semigroup.weq")).single();
  CHECK(z.mu.target().size() == 2);
  CHECK(z.mu.constant_images() == std::vector<element_type>{1, 0});
}

TEST_CASE("systems fold into one equation") {
  ParsedInstance const p = load_instance(data("system.weq"));
  CHECK(p.system.equations.size() == 2);
  Instance const in = p.single();
  CHECK(in.symbols.num_constants() == 3);
  CHECK(brute_solutions(in, 2).solutions.size() == brute_solutions(p.system, 2).solutions.size());
}

TEST_CASE("comments, blank lines and carriage returns") {
  ParsedInstance const p =
      parse_instance("; header\r\n\r\nconstants a # ; trailing\r\nvariables X\r\nequation X # = # X ; x\r\n");
  Instance const in = p.single();
  CHECK(in.symbols.constants() == std::vector<std::string>{"a", "#"});
  CHECK(in.equation.lhs.size() == 2);
}

TEST_CASE("parse errors carry line and column") {
  try {
    load_instance(data("malformed.weq"));
    FAIL("expected a parse error");
  } catch (ParseError const& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 16);
    CHECK(std::string(e.what()).find("second '='") != std::string::npos);
  }
  CHECK(error_at("constants a\nvariables X\nequation X c = a\n") == std::pair<std::size_t, std::size_t>{3, 12});
  CHECK(error_at("constants a\nfoo\n") == std::pair<std::size_t, std::size_t>{2, 1});
  CHECK(error_at("constants a\n  equation X = a\n").first == 2);
  CHECK(error_at("constants a\nequation a a\n") == std::pair<std::size_t, std::size_t>{2, 1});
  CHECK(error_at("constants a\nequation = a\n") == std::pair<std::size_t, std::size_t>{2, 1});
  CHECK(error_at("variables X\n") == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK(error_at("constants a\nvariables X\n").first == 3);
  CHECK(error_at("constants a a\nequation a = a\n") == std::pair<std::size_t, std::size_t>{1, 13});
  CHECK(error_at("constants a\nequation a = a\nsemigroup builtin:nonesuch\n") ==
        std::pair<std::size_t, std::size_t>{3, 11});
  CHECK(error_at("constants a\nequation a = a\nsemigroup zz\n") == std::pair<std::size_t, std::size_t>{3, 11});
  CHECK(error_at("constants a\nequation a = a\nsemigroup builtin:z2\n").first == 4);
  CHECK(error_at("constants a\nequation a = a\nsemigroup builtin:z2\nmap a -> 7\n") ==
        std::pair<std::size_t, std::size_t>{4, 10});
  CHECK(error_at("constants a\nequation a = a\nsemigroup builtin:z2\nmap a -> 0\nmap a -> 1\n") ==
        std::pair<std::size_t, std::size_t>{5, 5});
  CHECK(error_at("constants a\nequation a = a\nmap a 0\n") == std::pair<std::size_t, std::size_t>{3, 1});
  CHECK_THROWS_AS(load_instance(data("does_not_exist.weq")), ParseError);
}

TEST_CASE("semigroup files") {
  FiniteSemigroup const z2 = load_semigroup(data("z2.sg"));
  CHECK(z2.size() == 2);
  CHECK(z2.product(1, 1) == 0);
  CHECK(resolve_semigroup("file:" + data("z2.sg")).rows() == z2.rows());
  CHECK(resolve_semigroup(data("z2.sg")).rows() == z2.rows());
  CHECK_THROWS_AS(parse_semigroup("semigroup x\nelements p q\ntable\np q\nq q\nq q\n"), ParseError);
  CHECK_THROWS_AS(parse_semigroup("semigroup x\nelements p q\ntable\nq p\np p\n"), NonAssociative);
}

TEST_CASE("format_instance round trips") {
  for (auto const& name : weq::testing::base_names()) {
    auto const instances = canonical_instances(BatteryOptions{2, 2, 4}, weq::testing::shared(name));
    for (std::size_t i = 0; i < instances.size(); i += 5) {
      Instance const&   in   = instances[i];
      std::string const text = format_instance(in, "builtin:" + name);
      INFO(text);
      Instance const back = parse_instance(text).single();
      CHECK(back.symbols == in.symbols);
      CHECK(back.equation == in.equation);
      CHECK(back.mu.constant_images() == in.mu.constant_images());
      CHECK(back.mu.variable_images() == in.mu.variable_images());
      CHECK(back.mu.target().rows() == in.mu.target().rows());
    }
  }
}
