#include "weq/instance_io.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "weq/error.hpp"
#include "weq/reductions.hpp"
#include "weq/semigroup_io.hpp"

namespace weq {

  namespace {

    struct Token {
      std::string text;
      std::size_t column;
    };

    std::vector<Token> tokenize(std::string_view line) {
      std::vector<Token> tokens;
      std::size_t        i = 0;
      while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
          ++i;
        }
        std::size_t const start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
          ++i;
        }
        if (i > start) {
          tokens.push_back({std::string(line.substr(start, i - start)), start + 1});
        }
      }
      return tokens;
    }

    struct MapLine {
      Token       symbol;
      Token       element;
      std::size_t line;
    };

  }  // namespace

  Instance ParsedInstance::single() const {
    if (system.equations.size() == 1) {
      return Instance{system.symbols, system.equations.front(), system.mu};
    }
    return system_to_single(system);
  }

  ParsedInstance parse_instance(std::string_view text, std::string const& source,
                                std::string const& base_dir) {
    std::istringstream in{std::string(text)};
    std::string        line;
    std::size_t        line_no = 0;

    SymbolTable               symbols;
    std::vector<WordEquation> equations;
    bool                      seen_constants = false;
    bool                      seen_variables = false;
    std::optional<std::string> semigroup_spec;
    std::size_t               semigroup_line   = 0;
    std::size_t               semigroup_column = 0;
    std::vector<MapLine>      maps;

    auto error = [&](std::size_t column, std::string const& message) {
      return ParseError(source, line_no, column, message);
    };

    while (std::getline(in, line)) {
      ++line_no;
      if (auto const semi = line.find(';'); semi != std::string::npos) {
        line.erase(semi);
      }
      if (!line.empty() && line.back() == '\r') {
        line.pop_back();
      }
      std::vector<Token> const tokens = tokenize(line);
      if (tokens.empty()) {
        continue;
      }
      std::string const& keyword = tokens.front().text;

      if (keyword == "constants" || keyword == "variables") {
        bool const constants = keyword == "constants";
        if ((constants && seen_constants) || (!constants && seen_variables)) {
          throw error(tokens.front().column, "duplicate '" + keyword + "' line");
        }
        if (!equations.empty()) {
          throw error(tokens.front().column, "'" + keyword + "' must precede the equations");
        }
        if (!constants && !seen_constants) {
          throw error(tokens.front().column, "'constants' must precede 'variables'");
        }
        for (std::size_t i = 1; i < tokens.size(); ++i) {
          try {
            if (constants) {
              symbols.add_constant(tokens[i].text);
            } else {
              symbols.add_variable(tokens[i].text);
            }
          } catch (Error const& e) {
            throw error(tokens[i].column, e.what());
          }
        }
        if (constants && tokens.size() == 1) {
          throw error(tokens.front().column, "at least one constant is required");
        }
        (constants ? seen_constants : seen_variables) = true;
      } else if (keyword == "equation") {
        if (!seen_constants) {
          throw error(tokens.front().column, "'constants' must precede the equations");
        }
        WordEquation e;
        bool         rhs = false;
        for (std::size_t i = 1; i < tokens.size(); ++i) {
          if (tokens[i].text == "=") {
            if (rhs) {
              throw error(tokens[i].column, "second '=' in equation");
            }
            rhs = true;
            continue;
          }
          auto const s = symbols.find(tokens[i].text);
          if (!s) {
            throw error(tokens[i].column, "unknown symbol '" + tokens[i].text + "'");
          }
          (rhs ? e.rhs : e.lhs).push_back(*s);
        }
        if (!rhs) {
          throw error(tokens.front().column, "equation without '='");
        }
        if (e.lhs.empty() || e.rhs.empty()) {
          throw error(tokens.front().column, "both sides of an equation must be nonempty");
        }
        equations.push_back(std::move(e));
      } else if (keyword == "semigroup") {
        if (semigroup_spec) {
          throw error(tokens.front().column, "duplicate 'semigroup' line");
        }
        if (tokens.size() != 2) {
          throw error(tokens.front().column, "expected 'semigroup builtin:<name>' or 'semigroup file:<path>'");
        }
        if (!tokens[1].text.starts_with("builtin:") && !tokens[1].text.starts_with("file:")) {
          throw error(tokens[1].column, "semigroup must be 'builtin:<name>' or 'file:<path>'");
        }
        semigroup_spec   = tokens[1].text;
        semigroup_line   = line_no;
        semigroup_column = tokens[1].column;
      } else if (keyword == "map") {
        if (tokens.size() != 4 || tokens[2].text != "->") {
          throw error(tokens.front().column, "expected 'map <symbol> -> <element>'");
        }
        maps.push_back({tokens[1], tokens[3], line_no});
      } else {
        throw error(tokens.front().column, "unknown directive '" + keyword + "'");
      }
    }

    std::size_t const end_line = line_no + 1;
    if (!seen_constants) {
      throw ParseError(source, end_line, 1, "missing 'constants' line");
    }
    if (equations.empty()) {
      throw ParseError(source, end_line, 1, "missing 'equation' line");
    }

    ParsedInstance out;
    out.semigroup_spec = semigroup_spec.value_or("builtin:trivial");
    std::shared_ptr<FiniteSemigroup const> target;
    try {
      std::string spec = out.semigroup_spec;
      if (spec.starts_with("file:")) {
        std::filesystem::path p(spec.substr(5));
        if (p.is_relative()) {
          p = std::filesystem::path(base_dir) / p;
        }
        target = std::make_shared<FiniteSemigroup const>(load_semigroup(p.string()));
      } else {
        target = std::make_shared<FiniteSemigroup const>(resolve_semigroup(spec));
      }
    } catch (ParseError const&) {
      throw;
    } catch (Error const& e) {
      throw ParseError(source, semigroup_line == 0 ? end_line : semigroup_line,
                       semigroup_line == 0 ? 1 : semigroup_column, e.what());
    }

    bool const defaults = out.semigroup_spec == "builtin:trivial";
    std::vector<std::optional<element_type>> constant_images(symbols.num_constants());
    std::vector<std::optional<element_type>> variable_images(symbols.num_variables());
    for (auto const& m : maps) {
      line_no      = m.line;
      auto const s = symbols.find(m.symbol.text);
      if (!s) {
        throw error(m.symbol.column, "unknown symbol '" + m.symbol.text + "'");
      }
      auto const e = target->find(m.element.text);
      if (!e) {
        throw error(m.element.column, "unknown element '" + m.element.text + "'");
      }
      auto& slot = s->is_constant() ? constant_images[s->index] : variable_images[s->index];
      if (slot) {
        throw error(m.symbol.column, "duplicate map for '" + m.symbol.text + "'");
      }
      slot = *e;
    }

    auto resolve = [&](std::vector<std::optional<element_type>> const& images, SymbolKind kind) {
      std::vector<element_type> out_images;
      for (std::uint32_t i = 0; i < images.size(); ++i) {
        if (images[i]) {
          out_images.push_back(*images[i]);
        } else if (defaults) {
          out_images.push_back(0);
        } else {
          throw ParseError(source, end_line, 1,
                           "missing 'map " + symbols.name(Symbol{kind, i}) + " -> ...' line");
        }
      }
      return out_images;
    };
    auto ci = resolve(constant_images, SymbolKind::constant);
    auto vi = resolve(variable_images, SymbolKind::variable);

    out.system.symbols   = std::move(symbols);
    out.system.equations = std::move(equations);
    out.system.mu        = ConstraintMorphism(target, std::move(ci), std::move(vi));
    return out;
  }

  ParsedInstance load_instance(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ParseError(path, 0, 0, "cannot open file");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    std::string const dir = std::filesystem::path(path).parent_path().string();
    return parse_instance(buffer.str(), path, dir.empty() ? "." : dir);
  }

  std::string format_instance(Instance const& instance, std::string const& semigroup_spec) {
    SymbolTable const& sy = instance.symbols;
    std::ostringstream out;
    out << "constants";
    for (auto const& c : sy.constants()) {
      out << ' ' << c;
    }
    out << "\nvariables";
    for (auto const& v : sy.variables()) {
      out << ' ' << v;
    }
    out << "\nequation " << sy.tokens(instance.equation.lhs) << " = "
        << sy.tokens(instance.equation.rhs) << "\nsemigroup " << semigroup_spec << '\n';
    FiniteSemigroup const& t = instance.mu.target();
    for (std::uint32_t i = 0; i < sy.num_constants(); ++i) {
      out << "map " << sy.constants()[i] << " -> "
          << t.name(instance.mu.image(Symbol::constant(i))) << '\n';
    }
    for (std::uint32_t i = 0; i < sy.num_variables(); ++i) {
      out << "map " << sy.variables()[i] << " -> "
          << t.name(instance.mu.image(Symbol::variable(i))) << '\n';
    }
    return out.str();
  }

}  // namespace weq
