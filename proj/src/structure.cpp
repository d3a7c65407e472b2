#include <algorithm>
#include <functional>
#include <set>

#include "weq/error.hpp"
#include "weq/semigroup.hpp"

namespace weq {

  namespace {

    std::string fresh_name(std::vector<std::string> const& names, std::string base) {
      while (std::find(names.begin(), names.end(), base) != names.end()) {
        base += "'";
      }
      return base;
    }

    void check_subset(FiniteSemigroup const& s, std::vector<element_type> const& subset) {
      for (element_type x : subset) {
        if (x >= s.size()) {
          fail(ErrorKind::bad_index, "element " + std::to_string(x) + " out of range");
        }
      }
    }

    std::vector<bool> membership(std::size_t n, std::vector<element_type> const& subset) {
      std::vector<bool> in(n, false);
      for (element_type x : subset) {
        in[x] = true;
      }
      return in;
    }

  }  // namespace

  FiniteSemigroup opposite(FiniteSemigroup const& s) {
    std::size_t const                      n = s.size();
    std::vector<std::vector<element_type>> table(n, std::vector<element_type>(n));
    for (element_type x = 0; x < n; ++x) {
      for (element_type y = 0; y < n; ++y) {
        table[x][y] = s.product(y, x);
      }
    }
    return FiniteSemigroup::from_table(s.names(), table, s.label() + "^op");
  }

  FiniteSemigroup adjoin_identity(FiniteSemigroup const& s) {
    std::size_t const        n     = s.size();
    std::vector<std::string> names = s.names();
    names.push_back(fresh_name(s.names(), "1"));
    std::vector<std::vector<element_type>> table = s.rows();
    for (element_type x = 0; x < n; ++x) {
      table[x].push_back(x);
    }
    table.emplace_back();
    for (element_type x = 0; x <= n; ++x) {
      table[n].push_back(x);
    }
    FiniteSemigroup t     = FiniteSemigroup::from_table(std::move(names), table, s.label() + "^1");
    t.adjoined_identity_ = static_cast<element_type>(n);
    t.adjoined_zero_     = s.adjoined_zero_;
    return t;
  }

  FiniteSemigroup adjoin_zero(FiniteSemigroup const& s) {
    std::size_t const        n     = s.size();
    std::vector<std::string> names = s.names();
    names.push_back(fresh_name(s.names(), "0"));
    std::vector<std::vector<element_type>> table = s.rows();
    for (element_type x = 0; x < n; ++x) {
      table[x].push_back(static_cast<element_type>(n));
    }
    table.emplace_back(n + 1, static_cast<element_type>(n));
    FiniteSemigroup t     = FiniteSemigroup::from_table(std::move(names), table, s.label() + "^0");
    t.adjoined_zero_     = static_cast<element_type>(n);
    t.adjoined_identity_ = s.adjoined_identity_;
    return t;
  }

  FiniteSemigroup direct_product(FiniteSemigroup const& s, FiniteSemigroup const& t) {
    std::size_t const        m = t.size();
    std::vector<std::string> names;
    for (element_type x = 0; x < s.size(); ++x) {
      for (element_type y = 0; y < m; ++y) {
        names.push_back("(" + s.name(x) + "," + t.name(y) + ")");
      }
    }
    std::size_t const                      n = names.size();
    std::vector<std::vector<element_type>> table(n, std::vector<element_type>(n));
    for (element_type p = 0; p < n; ++p) {
      for (element_type q = 0; q < n; ++q) {
        element_type const x = s.product(p / m, q / m);
        element_type const y = t.product(p % m, q % m);
        table[p][q]          = static_cast<element_type>(x * m + y);
      }
    }
    return FiniteSemigroup::from_table(std::move(names), table, s.label() + "x" + t.label());
  }

  std::vector<element_type> subsemigroup(FiniteSemigroup const&           s,
                                         std::vector<element_type> const& generators) {
    check_subset(s, generators);
    std::set<element_type>    closure(generators.begin(), generators.end());
    std::vector<element_type> frontier(closure.begin(), closure.end());
    while (!frontier.empty()) {
      std::vector<element_type> next;
      std::vector<element_type> const current(closure.begin(), closure.end());
      for (element_type x : frontier) {
        for (element_type y : current) {
          for (element_type z : {s.product(x, y), s.product(y, x)}) {
            if (closure.insert(z).second) {
              next.push_back(z);
            }
          }
        }
      }
      frontier = std::move(next);
    }
    return {closure.begin(), closure.end()};
  }

  bool is_subsemigroup(FiniteSemigroup const& s, std::vector<element_type> const& subset) {
    check_subset(s, subset);
    std::vector<bool> const in = membership(s.size(), subset);
    for (element_type x : subset) {
      for (element_type y : subset) {
        if (!in[s.product(x, y)]) {
          return false;
        }
      }
    }
    return true;
  }

  FiniteSemigroup restrict_to(FiniteSemigroup const& s, std::vector<element_type> const& subset) {
    if (!is_subsemigroup(s, subset)) {
      fail(ErrorKind::invalid_argument, "subset is not closed under multiplication");
    }
    std::vector<element_type> position(s.size(), 0);
    for (std::size_t i = 0; i < subset.size(); ++i) {
      position[subset[i]] = static_cast<element_type>(i);
    }
    std::vector<std::string>               names;
    std::vector<std::vector<element_type>> table(subset.size());
    for (std::size_t i = 0; i < subset.size(); ++i) {
      names.push_back(s.name(subset[i]));
      for (element_type y : subset) {
        table[i].push_back(position[s.product(subset[i], y)]);
      }
    }
    return FiniteSemigroup::from_table(std::move(names), table, s.label());
  }

  bool is_ideal(FiniteSemigroup const& t, std::vector<element_type> const& subset) {
    check_subset(t, subset);
    std::vector<bool> const in = membership(t.size(), subset);
    for (element_type x : subset) {
      for (element_type y = 0; y < t.size(); ++y) {
        if (!in[t.product(x, y)] || !in[t.product(y, x)]) {
          return false;
        }
      }
    }
    return true;
  }

  NilpotentExtension is_nilpotent_extension(FiniteSemigroup const&           t,
                                            std::vector<element_type> const& subset) {
    if (!is_ideal(t, subset)) {
      return {false, 0};
    }
    std::vector<bool> const in = membership(t.size(), subset);
    // power holds T^k as a set; T^{k+1} = T^k T.
    std::set<element_type> power;
    for (element_type x = 0; x < t.size(); ++x) {
      power.insert(x);
    }
    for (std::size_t k = 1;; ++k) {
      if (std::all_of(power.begin(), power.end(), [&in](element_type x) { return in[x]; })) {
        return {true, k};
      }
      std::set<element_type> next;
      for (element_type x : power) {
        for (element_type y = 0; y < t.size(); ++y) {
          next.insert(t.product(x, y));
        }
      }
      if (next == power) {
        return {false, 0};
      }
      power = std::move(next);
    }
  }

  std::optional<std::vector<element_type>> find_retraction(FiniteSemigroup const&           t,
                                                           std::vector<element_type> const& ideal) {
    if (!is_ideal(t, ideal)) {
      fail(ErrorKind::not_an_ideal, "subset is not an ideal");
    }
    std::size_t const       n  = t.size();
    std::vector<bool> const in = membership(n, ideal);
    std::vector<element_type> rho(n, 0);
    std::vector<bool>         assigned(n, false);
    std::vector<element_type> free;
    for (element_type x = 0; x < n; ++x) {
      if (in[x]) {
        rho[x]      = x;
        assigned[x] = true;
      } else {
        free.push_back(x);
      }
    }

    // Checks rho(xy) = rho(x) rho(y) for every pair whose values are all known.
    auto consistent = [&](element_type fresh) {
      for (element_type p = 0; p < n; ++p) {
        if (!assigned[p]) {
          continue;
        }
        for (element_type q = 0; q < n; ++q) {
          element_type const pq = t.product(p, q);
          if (!assigned[q] || !assigned[pq] || (p != fresh && q != fresh && pq != fresh)) {
            continue;
          }
          if (rho[pq] != t.product(rho[p], rho[q])) {
            return false;
          }
        }
      }
      return true;
    };

    std::function<bool(std::size_t)> search = [&](std::size_t i) {
      if (i == free.size()) {
        return true;
      }
      element_type const x = free[i];
      assigned[x]          = true;
      for (element_type image : ideal) {
        rho[x] = image;
        if (consistent(x) && search(i + 1)) {
          return true;
        }
      }
      assigned[x] = false;
      return false;
    };

    if (!search(0)) {
      return std::nullopt;
    }
    return rho;
  }

}  // namespace weq
