#include "weq/certificate_json.hpp"

#include <cstdint>

#include "weq/error.hpp"

namespace weq {

  namespace {

    [[noreturn]] void bad(std::string const& msg) {
      throw ParseError("certificate", 0, 0, msg);
    }

    Word word_field(SymbolTable const& symbols, nlohmann::json const& j, char const* field) {
      if (!j.contains(field) || !j[field].is_string()) {
        bad(std::string("missing string field '") + field + "'");
      }
      try {
        return symbols.parse_word(j[field].get<std::string>());
      } catch (Error const& e) {
        bad(std::string("field '") + field + "': " + e.what());
      }
    }

    std::uint32_t variable_named(SymbolTable const& symbols, std::string const& name) {
      auto const s = symbols.find(name);
      if (!s || !s->is_variable()) {
        bad("unknown variable '" + name + "'");
      }
      return s->index;
    }

    element_type element_named(FiniteSemigroup const& target, std::string const& name) {
      auto const e = target.find(name);
      if (!e) {
        bad("unknown element '" + name + "'");
      }
      return *e;
    }

  }  // namespace

  nlohmann::json solution_json(SymbolTable const& symbols, Solution const& sigma) {
    nlohmann::json j = nlohmann::json::object();
    for (auto const& [x, w] : sigma.assignment) {
      j[symbols.name(Symbol::variable(x))] = symbols.tokens(w);
    }
    return j;
  }

  nlohmann::json to_json(SymbolTable const& symbols, FiniteSemigroup const& target,
                         PumpingCertificate const& cert) {
    nlohmann::json state = {{"lhs", symbols.tokens(cert.state.lhs)},
                            {"rhs", symbols.tokens(cert.state.rhs)},
                            {"is_true", cert.state.is_true}};
    nlohmann::json varset = nlohmann::json::object();
    for (std::uint32_t x = 0; x < cert.state.var_images.size(); ++x) {
      if (cert.state.var_images[x] != no_image) {
        varset[symbols.name(Symbol::variable(x))] = target.name(cert.state.var_images[x]);
      }
    }
    state["varset"] = std::move(varset);

    nlohmann::json path = nlohmann::json::array();
    for (Label const& l : cert.prefix_path) {
      path.push_back(l.format(symbols));
    }
    nlohmann::json pump = nullptr;
    if (cert.pump) {
      pump = {{"u", symbols.tokens(cert.pump->u)},
              {"y", symbols.tokens(cert.pump->y)},
              {"w", symbols.tokens(cert.pump->w)}};
    }
    return {{"state", std::move(state)},
            {"variable", symbols.name(Symbol::variable(cert.variable))},
            {"case", std::string(to_string(cert.kind))},
            {"v", symbols.tokens(cert.v)},
            {"omega", cert.omega},
            {"base", solution_json(symbols, cert.base)},
            {"prefix_path", std::move(path)},
            {"pump", std::move(pump)}};
  }

  Label parse_label(SymbolTable const& symbols, std::string const& text) {
    Label l;
    if (text == "eps") {
      return l;
    }
    auto const arrow = text.find("->");
    if (arrow == std::string::npos) {
      bad("malformed label '" + text + "'");
    }
    std::string const x    = text.substr(0, arrow);
    std::string const rest = text.substr(arrow + 2);
    l.variable             = variable_named(symbols, x);
    if (auto const a = symbols.find(rest)) {
      l.kind  = Label::Kind::assign;
      l.alpha = *a;
      return l;
    }
    if (rest.size() > x.size() && rest.ends_with(x)) {
      if (auto const a = symbols.find(rest.substr(0, rest.size() - x.size()))) {
        l.kind  = Label::Kind::prepend;
        l.alpha = *a;
        return l;
      }
    }
    bad("malformed label '" + text + "'");
  }

  PumpingCertificate certificate_from_json(SymbolTable const& symbols, FiniteSemigroup const& target,
                                           nlohmann::json const& j) {
    if (!j.is_object()) {
      bad("certificate must be an object");
    }
    for (char const* field : {"state", "variable", "case", "v", "omega", "base", "prefix_path"}) {
      if (!j.contains(field)) {
        bad(std::string("missing field '") + field + "'");
      }
    }
    PumpingCertificate cert;
    nlohmann::json const& state = j["state"];
    if (!state.is_object() || !state.contains("varset") || !state["varset"].is_object()) {
      bad("malformed state");
    }
    cert.state.lhs     = word_field(symbols, state, "lhs");
    cert.state.rhs     = word_field(symbols, state, "rhs");
    cert.state.is_true = state.value("is_true", false);
    cert.state.var_images.assign(symbols.num_variables(), no_image);
    for (auto const& [name, elem] : state["varset"].items()) {
      if (!elem.is_string()) {
        bad("varset images must be element names");
      }
      cert.state.var_images[variable_named(symbols, name)] = element_named(target, elem.get<std::string>());
    }

    if (!j["variable"].is_string()) {
      bad("field 'variable' must be a string");
    }
    cert.variable = variable_named(symbols, j["variable"].get<std::string>());
    std::string const kind = j["case"].is_string() ? j["case"].get<std::string>() : "";
    if (kind == "HeadBalanced") {
      cert.kind = PumpCase::head_balanced;
    } else if (kind == "FreeVariable") {
      cert.kind = PumpCase::free_variable;
    } else {
      bad("field 'case' must be HeadBalanced or FreeVariable");
    }
    cert.v = word_field(symbols, j, "v");
    if (!j["omega"].is_number_integer() || j["omega"].get<std::int64_t>() <= 0) {
      bad("field 'omega' must be a positive integer");
    }
    cert.omega = j["omega"].get<std::size_t>();

    if (!j["base"].is_object()) {
      bad("field 'base' must be an object");
    }
    for (auto const& [name, w] : j["base"].items()) {
      if (!w.is_string()) {
        bad("base images must be strings");
      }
      Word word;
      try {
        word = symbols.parse_word(w.get<std::string>());
      } catch (Error const& e) {
        bad("base image of " + name + ": " + e.what());
      }
      if (word.empty()) {
        bad("base image of " + name + " is empty");
      }
      cert.base.assignment[variable_named(symbols, name)] = std::move(word);
    }

    if (!j["prefix_path"].is_array()) {
      bad("field 'prefix_path' must be an array");
    }
    for (auto const& l : j["prefix_path"]) {
      if (!l.is_string()) {
        bad("labels must be strings");
      }
      cert.prefix_path.push_back(parse_label(symbols, l.get<std::string>()));
    }

    if (j.contains("pump") && !j["pump"].is_null()) {
      nlohmann::json const& p = j["pump"];
      if (!p.is_object()) {
        bad("field 'pump' must be an object or null");
      }
      cert.pump = Pump{word_field(symbols, p, "u"), word_field(symbols, p, "y"), word_field(symbols, p, "w")};
    }
    return cert;
  }

}  // namespace weq
