#include "weq/semigroup.hpp"

#include <algorithm>
#include <set>

#include "weq/error.hpp"

namespace weq {

  FiniteSemigroup FiniteSemigroup::from_table(std::vector<std::string>               names,
                                              std::vector<std::vector<element_type>> const& table,
                                              std::string                            label) {
    std::size_t const n = names.size();
    if (table.size() != n) {
      fail(ErrorKind::bad_index,
           "table has " + std::to_string(table.size()) + " rows, expected " + std::to_string(n));
    }
    {
      std::set<std::string> seen(names.begin(), names.end());
      if (seen.size() != n) {
        fail(ErrorKind::invalid_argument, "element names are not pairwise distinct");
      }
    }
    FiniteSemigroup s;
    s.names_ = std::move(names);
    s.label_ = std::move(label);
    s.table_.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (table[i].size() != n) {
        fail(ErrorKind::bad_index, "row " + std::to_string(i) + " has "
                                       + std::to_string(table[i].size()) + " entries, expected "
                                       + std::to_string(n));
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (table[i][j] >= n) {
          fail(ErrorKind::bad_index, "entry (" + std::to_string(i) + ", " + std::to_string(j)
                                         + ") = " + std::to_string(table[i][j])
                                         + " is not an element index");
        }
        s.table_.push_back(table[i][j]);
      }
    }
    for (element_type x = 0; x < n; ++x) {
      for (element_type y = 0; y < n; ++y) {
        for (element_type z = 0; z < n; ++z) {
          if (s.product(s.product(x, y), z) != s.product(x, s.product(y, z))) {
            throw NonAssociative(x, y, z,
                                 "NonAssociative: (" + s.names_[x] + s.names_[y] + ")"
                                     + s.names_[z] + " != " + s.names_[x] + "(" + s.names_[y]
                                     + s.names_[z] + ")");
          }
        }
      }
    }
    return s;
  }

  std::optional<element_type> FiniteSemigroup::find(std::string_view name) const {
    for (element_type x = 0; x < size(); ++x) {
      if (names_[x] == name) {
        return x;
      }
    }
    return std::nullopt;
  }

  std::optional<element_type> FiniteSemigroup::identity() const {
    for (element_type e = 0; e < size(); ++e) {
      bool ok = true;
      for (element_type x = 0; x < size() && ok; ++x) {
        ok = product(e, x) == x && product(x, e) == x;
      }
      if (ok) {
        return e;
      }
    }
    return std::nullopt;
  }

  std::optional<element_type> FiniteSemigroup::zero() const {
    for (element_type z = 0; z < size(); ++z) {
      bool ok = true;
      for (element_type x = 0; x < size() && ok; ++x) {
        ok = product(z, x) == z && product(x, z) == z;
      }
      if (ok) {
        return z;
      }
    }
    return std::nullopt;
  }

  std::vector<std::vector<element_type>> FiniteSemigroup::rows() const {
    std::vector<std::vector<element_type>> result(size());
    for (element_type x = 0; x < size(); ++x) {
      for (element_type y = 0; y < size(); ++y) {
        result[x].push_back(product(x, y));
      }
    }
    return result;
  }

  element_type power(FiniteSemigroup const& s, element_type x, std::size_t k) {
    if (k == 0) {
      fail(ErrorKind::invalid_argument, "power exponent must be positive");
    }
    element_type result = x;
    for (std::size_t i = 1; i < k; ++i) {
      result = s.product(result, x);
    }
    return result;
  }

  OmegaPower omega(FiniteSemigroup const& s, element_type x) {
    if (x >= s.size()) {
      fail(ErrorKind::bad_index, "element " + std::to_string(x) + " out of range");
    }
    // Some power x^k with k <= |S| is idempotent.
    element_type p = x;
    for (std::size_t k = 1;; ++k) {
      if (s.is_idempotent(p)) {
        return {p, k};
      }
      p = s.product(p, x);
    }
  }

  element_type monoid_product(FiniteSemigroup const& s, element_type u, element_type x) {
    element_type const one = monoid_one(s);
    if (u == one) {
      return x;
    }
    if (x == one) {
      return u;
    }
    return s.product(u, x);
  }

  element_type monoid_omega(FiniteSemigroup const& s, element_type u) {
    return u == monoid_one(s) ? u : omega(s, u).element;
  }

  std::vector<element_type> stab_L(FiniteSemigroup const& s, element_type x) {
    std::vector<element_type> result;
    for (element_type u = 0; u <= s.size(); ++u) {
      if (monoid_product(s, monoid_omega(s, u), x) == x) {
        result.push_back(u);
      }
    }
    return result;
  }

  std::vector<std::vector<bool>> stabilizer_table(FiniteSemigroup const& s) {
    std::vector<element_type> omegas;
    for (element_type u = 0; u <= s.size(); ++u) {
      omegas.push_back(monoid_omega(s, u));
    }
    std::vector<std::vector<bool>> table(s.size(), std::vector<bool>(s.size() + 1, false));
    for (element_type x = 0; x < s.size(); ++x) {
      for (element_type u = 0; u <= s.size(); ++u) {
        table[x][u] = monoid_product(s, omegas[u], x) == x;
      }
    }
    return table;
  }

}  // namespace weq
