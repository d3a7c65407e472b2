#include "weq/battery.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "weq/error.hpp"

namespace weq {

  namespace {

    std::string constant_name(std::size_t i) {
      return std::string(1, static_cast<char>('a' + i));
    }

    std::string variable_name(std::size_t i) {
      static constexpr char names[] = {'X', 'Y', 'Z', 'W'};
      return i < 4 ? std::string(1, names[i]) : "X" + std::to_string(i);
    }

    using Key = std::vector<std::uint32_t>;

    Key key_of(WordEquation const& e, std::size_t k) {
      Key key;
      auto code = [k](Symbol s) {
        return s.is_constant() ? s.index : static_cast<std::uint32_t>(k) + s.index;
      };
      for (Symbol s : e.lhs) {
        key.push_back(code(s));
      }
      key.push_back(std::numeric_limits<std::uint32_t>::max());
      for (Symbol s : e.rhs) {
        key.push_back(code(s));
      }
      return key;
    }

    Key key_of(ConstraintMorphism const& mu) {
      Key key(mu.constant_images().begin(), mu.constant_images().end());
      key.insert(key.end(), mu.variable_images().begin(), mu.variable_images().end());
      return key;
    }

    std::vector<std::uint32_t> identity_permutation(std::size_t n) {
      std::vector<std::uint32_t> p(n);
      std::iota(p.begin(), p.end(), 0u);
      return p;
    }

    bool variables_form_prefix(WordEquation const& e, std::size_t max_variables) {
      std::vector<std::size_t> count(max_variables, 0);
      for (Word const* side : {&e.lhs, &e.rhs}) {
        for (Symbol s : *side) {
          if (s.is_variable() && ++count[s.index] > 2) {
            return false;
          }
        }
      }
      for (std::size_t x = 1; x < max_variables; ++x) {
        if (count[x] > 0 && count[x - 1] == 0) {
          return false;
        }
      }
      return true;
    }

    std::size_t variables_used(WordEquation const& e) {
      std::size_t n = 0;
      for (Word const* side : {&e.lhs, &e.rhs}) {
        for (Symbol s : *side) {
          if (s.is_variable()) {
            n = std::max<std::size_t>(n, s.index + 1);
          }
        }
      }
      return n;
    }

    void words_of_length(std::size_t length, std::size_t k, std::size_t v, Word& current,
                         std::vector<Word>& out) {
      if (current.size() == length) {
        out.push_back(current);
        return;
      }
      for (std::uint32_t c = 0; c < k; ++c) {
        current.push_back(Symbol::constant(c));
        words_of_length(length, k, v, current, out);
        current.pop_back();
      }
      for (std::uint32_t x = 0; x < v; ++x) {
        current.push_back(Symbol::variable(x));
        words_of_length(length, k, v, current, out);
        current.pop_back();
      }
    }

  }  // namespace

  WordEquation Symmetry::apply(WordEquation const& e) const {
    auto rename = [this](Word const& w) {
      Word out;
      out.reserve(w.size());
      for (Symbol s : w) {
        out.push_back(s.is_constant() ? Symbol::constant(constants[s.index])
                                      : Symbol::variable(variables[s.index]));
      }
      return out;
    };
    WordEquation r{rename(e.lhs), rename(e.rhs)};
    if (swap) {
      std::swap(r.lhs, r.rhs);
    }
    return r;
  }

  ConstraintMorphism Symmetry::apply(ConstraintMorphism const& mu) const {
    std::vector<element_type> c(mu.constant_images().size());
    std::vector<element_type> x(mu.variable_images().size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      c[constants[i]] = mu.constant_images()[i];
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
      x[variables[i]] = mu.variable_images()[i];
    }
    return ConstraintMorphism(mu.target_ptr(), std::move(c), std::move(x));
  }

  std::vector<Symmetry> symmetries(std::size_t num_constants, std::size_t num_variables,
                                   bool rename_constants) {
    std::vector<Symmetry> out;
    std::vector<std::uint32_t> c = identity_permutation(num_constants);
    do {
      std::vector<std::uint32_t> x = identity_permutation(num_variables);
      do {
        for (bool swap : {false, true}) {
          out.push_back(Symmetry{c, x, swap});
        }
      } while (std::next_permutation(x.begin(), x.end()));
    } while (rename_constants && std::next_permutation(c.begin(), c.end()));
    return out;
  }

  std::vector<BatteryEquation> quadratic_equations(BatteryOptions const& options) {
    std::size_t const k = options.num_constants;
    std::size_t const v = options.max_variables;
    if (k == 0) {
      fail(ErrorKind::invalid_argument, "at least one constant is required");
    }
    std::vector<Symmetry> const group = symmetries(k, v, options.rename_constants);

    std::vector<std::vector<Word>> by_length(options.max_length + 1);
    for (std::size_t len = 1; len < options.max_length; ++len) {
      Word current;
      words_of_length(len, k, v, current, by_length[len]);
    }

    std::vector<std::pair<Key, WordEquation>> found;
    for (std::size_t total = 2; total <= options.max_length; ++total) {
      std::vector<std::pair<Key, WordEquation>> level;
      for (std::size_t l = 1; l < total; ++l) {
        for (Word const& lhs : by_length[l]) {
          for (Word const& rhs : by_length[total - l]) {
            WordEquation const e{lhs, rhs};
            if (!variables_form_prefix(e, v)) {
              continue;
            }
            Key const key = key_of(e, k);
            bool const least = std::all_of(group.begin(), group.end(), [&](Symmetry const& g) {
              return !(key_of(g.apply(e), k) < key);
            });
            if (least) {
              level.emplace_back(key, e);
            }
          }
        }
      }
      std::sort(level.begin(), level.end(),
                [](auto const& a, auto const& b) { return a.first < b.first; });
      found.insert(found.end(), level.begin(), level.end());
    }

    std::vector<BatteryEquation> out;
    out.reserve(found.size());
    for (auto& [key, e] : found) {
      BatteryEquation b;
      for (std::size_t i = 0; i < k; ++i) {
        b.symbols.add_constant(constant_name(i));
      }
      std::size_t const used = variables_used(e);
      for (std::size_t i = 0; i < used; ++i) {
        b.symbols.add_variable(variable_name(i));
      }
      b.equation = std::move(e);
      out.push_back(std::move(b));
    }
    return out;
  }

  std::vector<ConstraintMorphism> constraint_maps(std::shared_ptr<FiniteSemigroup const> const& target,
                                                  std::size_t num_constants, std::size_t num_variables,
                                                  std::optional<std::vector<element_type>> const& constant_images) {
    std::size_t const n = target->size();
    if (n == 0) {
      return {};
    }
    if (constant_images && constant_images->size() != num_constants) {
      fail(ErrorKind::invalid_argument, "expected " + std::to_string(num_constants) + " constant images");
    }
    std::size_t const         free_constants = constant_images ? 0 : num_constants;
    std::size_t const         digits         = free_constants + num_variables;
    std::vector<element_type> d(digits, 0);
    std::vector<ConstraintMorphism> out;
    while (true) {
      std::vector<element_type> c = constant_images ? *constant_images
                                                    : std::vector<element_type>(d.begin(), d.begin() + free_constants);
      std::vector<element_type> x(d.begin() + static_cast<std::ptrdiff_t>(free_constants), d.end());
      out.emplace_back(target, std::move(c), std::move(x));
      std::size_t i = digits;
      while (i > 0 && d[i - 1] + 1 == n) {
        d[--i] = 0;
      }
      if (i == 0) {
        break;
      }
      ++d[i - 1];
    }
    return out;
  }

  std::vector<Instance> battery_instances(BatteryOptions const& options,
                                          std::shared_ptr<FiniteSemigroup const> const& target,
                                          std::optional<std::vector<element_type>> const& constant_images) {
    BatteryOptions opts = options;
    opts.rename_constants = options.rename_constants && !constant_images;
    std::vector<Instance> out;
    for (auto const& b : quadratic_equations(opts)) {
      for (auto& mu : constraint_maps(target, b.symbols.num_constants(), b.symbols.num_variables(),
                                      constant_images)) {
        out.push_back(Instance{b.symbols, b.equation, std::move(mu)});
      }
    }
    return out;
  }

  std::vector<Instance> canonical_instances(BatteryOptions const& options,
                                            std::shared_ptr<FiniteSemigroup const> const& target,
                                            std::optional<std::vector<element_type>> const& constant_images) {
    BatteryOptions opts = options;
    opts.rename_constants = options.rename_constants && !constant_images;
    std::vector<Instance> out;
    for (auto const& b : quadratic_equations(opts)) {
      std::size_t const k = b.symbols.num_constants();
      std::size_t const v = b.symbols.num_variables();
      // Symmetries fixing the canonical equation act on the maps.
      std::vector<Symmetry> stabilizer;
      for (auto const& g : symmetries(k, v, opts.rename_constants)) {
        if (g.apply(b.equation) == b.equation) {
          stabilizer.push_back(g);
        }
      }
      for (auto& mu : constraint_maps(target, k, v, constant_images)) {
        Key const key   = key_of(mu);
        bool const least = std::all_of(stabilizer.begin(), stabilizer.end(), [&](Symmetry const& g) {
          return !(key_of(g.apply(mu)) < key);
        });
        if (least) {
          out.push_back(Instance{b.symbols, b.equation, std::move(mu)});
        }
      }
    }
    return out;
  }

}  // namespace weq
