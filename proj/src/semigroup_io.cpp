#include "weq/semigroup_io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

#include "weq/error.hpp"

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

    FiniteSemigroup cyclic_group(std::size_t n, std::string label) {
      std::vector<std::string>               names;
      std::vector<std::vector<element_type>> table(n);
      for (std::size_t i = 0; i < n; ++i) {
        names.push_back(std::to_string(i));
        for (std::size_t j = 0; j < n; ++j) {
          table[i].push_back(static_cast<element_type>((i + j) % n));
        }
      }
      return FiniteSemigroup::from_table(std::move(names), table, std::move(label));
    }

    // Permutations of {0,1,2} in one-line notation; p q maps i to q(p(i)).
    FiniteSemigroup symmetric_group_3() {
      std::vector<std::array<int, 3>> perms;
      std::array<int, 3>              p{0, 1, 2};
      do {
        perms.push_back(p);
      } while (std::next_permutation(p.begin(), p.end()));
      std::vector<std::string>               names;
      std::vector<std::vector<element_type>> table(perms.size());
      for (auto const& q : perms) {
        names.push_back(std::to_string(q[0]) + std::to_string(q[1]) + std::to_string(q[2]));
      }
      for (std::size_t i = 0; i < perms.size(); ++i) {
        for (std::size_t j = 0; j < perms.size(); ++j) {
          std::array<int, 3> r{};
          for (int k = 0; k < 3; ++k) {
            r[k] = perms[j][perms[i][k]];
          }
          auto const it = std::find(perms.begin(), perms.end(), r);
          table[i].push_back(static_cast<element_type>(it - perms.begin()));
        }
      }
      return FiniteSemigroup::from_table(std::move(names), table, "s3");
    }

  }  // namespace

  FiniteSemigroup parse_semigroup(std::string_view text, std::string const& source) {
    std::istringstream in{std::string(text)};
    std::string        line;
    std::size_t        line_no = 0;

    std::string              label;
    std::vector<std::string> names;
    std::vector<std::vector<element_type>> rows;
    enum class Stage { header, elements, table_keyword, rows } stage = Stage::header;

    auto error = [&](std::size_t column, std::string const& message) -> ParseError {
      return ParseError(source, line_no, column, message);
    };

    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') {
        line.pop_back();
      }
      std::vector<Token> const tokens = tokenize(line);
      if (tokens.empty() || tokens.front().text.front() == '#') {
        continue;
      }
      switch (stage) {
        case Stage::header:
          if (tokens.front().text != "semigroup") {
            throw error(tokens.front().column, "expected 'semigroup <name>'");
          }
          if (tokens.size() != 2) {
            throw error(tokens.front().column, "'semigroup' takes exactly one name");
          }
          label = tokens[1].text;
          stage = Stage::elements;
          break;
        case Stage::elements:
          if (tokens.front().text != "elements") {
            throw error(tokens.front().column, "expected 'elements <tok> ...'");
          }
          for (std::size_t i = 1; i < tokens.size(); ++i) {
            if (std::find(names.begin(), names.end(), tokens[i].text) != names.end()) {
              throw error(tokens[i].column, "duplicate element '" + tokens[i].text + "'");
            }
            names.push_back(tokens[i].text);
          }
          stage = Stage::table_keyword;
          break;
        case Stage::table_keyword:
          if (tokens.size() != 1 || tokens.front().text != "table") {
            throw error(tokens.front().column, "expected 'table'");
          }
          stage = Stage::rows;
          break;
        case Stage::rows: {
          if (rows.size() == names.size()) {
            throw error(tokens.front().column, "unexpected extra row");
          }
          if (tokens.size() != names.size()) {
            throw error(tokens.front().column, "row has " + std::to_string(tokens.size())
                                                   + " entries, expected "
                                                   + std::to_string(names.size()));
          }
          std::vector<element_type> row;
          for (auto const& t : tokens) {
            auto const it = std::find(names.begin(), names.end(), t.text);
            if (it == names.end()) {
              throw error(t.column, "unknown element '" + t.text + "'");
            }
            row.push_back(static_cast<element_type>(it - names.begin()));
          }
          rows.push_back(std::move(row));
          break;
        }
      }
    }
    if (stage != Stage::rows) {
      throw ParseError(source, line_no + 1, 1, "unexpected end of input");
    }
    if (rows.size() != names.size()) {
      throw ParseError(source, line_no + 1, 1,
                       "expected " + std::to_string(names.size()) + " rows, got "
                           + std::to_string(rows.size()));
    }
    return FiniteSemigroup::from_table(std::move(names), rows, std::move(label));
  }

  FiniteSemigroup load_semigroup(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ParseError(path, 0, 0, "cannot open file");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_semigroup(buffer.str(), path);
  }

  std::vector<std::string> builtin_semigroup_names() {
    return {"trivial", "b2", "z2", "z3", "s3", "lz2", "rz2", "n2", "sl2"};
  }

  std::optional<FiniteSemigroup> builtin_semigroup(std::string_view name) {
    if (name == "trivial") {
      return FiniteSemigroup::from_table({"e"}, {{0}}, "trivial");
    }
    if (name == "b2") {
      // a b ab ba 0 with aba = a, bab = b, a^2 = b^2 = 0.
      return FiniteSemigroup::from_table({"a", "b", "ab", "ba", "0"},
                                         {{4, 2, 4, 0, 4},
                                          {3, 4, 1, 4, 4},
                                          {0, 4, 2, 4, 4},
                                          {4, 1, 4, 3, 4},
                                          {4, 4, 4, 4, 4}},
                                         "b2");
    }
    if (name == "z2") {
      return cyclic_group(2, "z2");
    }
    if (name == "z3") {
      return cyclic_group(3, "z3");
    }
    if (name == "s3") {
      return symmetric_group_3();
    }
    if (name == "lz2") {
      return FiniteSemigroup::from_table({"x", "y"}, {{0, 0}, {1, 1}}, "lz2");
    }
    if (name == "rz2") {
      return FiniteSemigroup::from_table({"x", "y"}, {{0, 1}, {0, 1}}, "rz2");
    }
    if (name == "n2") {
      return FiniteSemigroup::from_table({"x", "0"}, {{1, 1}, {1, 1}}, "n2");
    }
    if (name == "sl2") {
      return FiniteSemigroup::from_table({"1", "0"}, {{0, 1}, {1, 1}}, "sl2");
    }
    return std::nullopt;
  }

  FiniteSemigroup resolve_semigroup(std::string const& spec) {
    if (spec.starts_with("builtin:")) {
      std::string const name = spec.substr(8);
      if (auto s = builtin_semigroup(name)) {
        return *s;
      }
      fail(ErrorKind::invalid_argument, "unknown builtin semigroup '" + name + "'");
    }
    if (spec.starts_with("file:")) {
      return load_semigroup(spec.substr(5));
    }
    if (auto s = builtin_semigroup(spec)) {
      return *s;
    }
    return load_semigroup(spec);
  }

  std::string format_semigroup(FiniteSemigroup const& s) {
    std::ostringstream out;
    out << "semigroup " << (s.label().empty() ? "S" : s.label()) << "\nelements";
    for (auto const& n : s.names()) {
      out << ' ' << n;
    }
    out << "\ntable\n";
    std::size_t width = 0;
    for (auto const& n : s.names()) {
      width = std::max(width, n.size());
    }
    for (element_type x = 0; x < s.size(); ++x) {
      for (element_type y = 0; y < s.size(); ++y) {
        std::string const& n = s.name(s.product(x, y));
        out << (y == 0 ? "" : " ") << n;
        if (y + 1 < s.size()) {
          out << std::string(width - n.size(), ' ');
        }
      }
      out << '\n';
    }
    return out.str();
  }

}  // namespace weq
