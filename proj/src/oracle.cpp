#include "weq/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <thread>

#include "weq/error.hpp"

namespace weq {

  namespace {

    std::size_t saturating_mul(std::size_t a, std::size_t b) {
      if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) {
        return std::numeric_limits<std::size_t>::max();
      }
      return a * b;
    }

    std::size_t saturating_add(std::size_t a, std::size_t b) {
      return b > std::numeric_limits<std::size_t>::max() - a ? std::numeric_limits<std::size_t>::max()
                                                             : a + b;
    }

    void check_budget(SystemInstance const& instance, std::size_t max_length,
                      OracleOptions const& options) {
      if (max_length == 0) {
        fail(ErrorKind::invalid_argument, "length bound must be at least 1");
      }
      std::size_t const count = candidate_count(instance.symbols.num_constants(),
                                                instance.symbols.num_variables(), max_length);
      if (count > options.budget) {
        fail(ErrorKind::budget_exceeded, std::to_string(count) + " candidate assignments exceed the budget of "
                                             + std::to_string(options.budget));
      }
    }

    struct UnionFind {
      std::vector<std::size_t> parent;

      explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
      }
      std::size_t find(std::size_t x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      }
      void unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x != y) {
          parent[std::max(x, y)] = std::min(x, y);
        }
      }
    };

    // All solutions whose word lengths are exactly `lengths`.  With the lengths
    // fixed, sigma(U) = sigma(V) is a set of letter-position identifications.
    void solve_for_lengths(SystemInstance const& instance, std::vector<std::size_t> const& lengths,
                           std::vector<Solution>& out) {
      std::size_t const n = lengths.size();
      std::size_t const k = instance.symbols.num_constants();
      std::vector<std::size_t> offset(n + 1, 0);
      for (std::size_t x = 0; x < n; ++x) {
        offset[x + 1] = offset[x] + lengths[x];
      }
      std::size_t const positions = offset[n];

      auto side_length = [&](Word const& w) {
        std::size_t len = 0;
        for (Symbol s : w) {
          len += s.is_variable() ? lengths[s.index] : 1;
        }
        return len;
      };
      // Cell ids: variable positions first, then one node per constant.
      auto cells = [&](Word const& w) {
        std::vector<std::size_t> c;
        for (Symbol s : w) {
          if (s.is_variable()) {
            for (std::size_t j = 0; j < lengths[s.index]; ++j) {
              c.push_back(offset[s.index] + j);
            }
          } else {
            c.push_back(positions + s.index);
          }
        }
        return c;
      };

      UnionFind uf(positions + k);
      for (auto const& e : instance.equations) {
        if (side_length(e.lhs) != side_length(e.rhs)) {
          return;
        }
        auto const l = cells(e.lhs);
        auto const r = cells(e.rhs);
        for (std::size_t i = 0; i < l.size(); ++i) {
          uf.unite(l[i], r[i]);
        }
      }
      // A class holding two constant nodes is contradictory.
      std::vector<std::ptrdiff_t> letter_of_root(positions + k, -1);
      for (std::size_t c = 0; c < k; ++c) {
        std::size_t const root = uf.find(positions + c);
        if (letter_of_root[root] >= 0) {
          return;
        }
        letter_of_root[root] = static_cast<std::ptrdiff_t>(c);
      }
      std::vector<std::size_t> free_roots;
      for (std::size_t p = 0; p < positions; ++p) {
        std::size_t const root = uf.find(p);
        if (letter_of_root[root] < 0 && std::find(free_roots.begin(), free_roots.end(), root) == free_roots.end()) {
          free_roots.push_back(root);
        }
      }
      std::vector<std::size_t> free_index(positions + k, 0);
      for (std::size_t i = 0; i < free_roots.size(); ++i) {
        free_index[free_roots[i]] = i;
      }

      std::vector<std::size_t> choice(free_roots.size(), 0);
      while (true) {
        Solution sigma;
        bool     ok = true;
        for (std::size_t x = 0; x < n && ok; ++x) {
          Word w;
          for (std::size_t j = 0; j < lengths[x]; ++j) {
            std::size_t const root   = uf.find(offset[x] + j);
            std::size_t const letter = letter_of_root[root] >= 0
                                           ? static_cast<std::size_t>(letter_of_root[root])
                                           : choice[free_index[root]];
            w.push_back(Symbol::constant(static_cast<std::uint32_t>(letter)));
          }
          ok = instance.mu.eval(w) == instance.mu.image(Symbol::variable(static_cast<std::uint32_t>(x)));
          sigma.assignment[static_cast<std::uint32_t>(x)] = std::move(w);
        }
        if (ok) {
          out.push_back(std::move(sigma));
        }
        std::size_t i = 0;
        while (i < choice.size() && ++choice[i] == k) {
          choice[i++] = 0;
        }
        if (i == choice.size()) {
          break;
        }
      }
    }

    void finish(SystemInstance const& instance, std::vector<Solution>& solutions) {
      std::sort(solutions.begin(), solutions.end());
      solutions.erase(std::unique(solutions.begin(), solutions.end()), solutions.end());
      for (auto const& sigma : solutions) {
        if (!is_solution(instance, sigma)) {
          fail(ErrorKind::internal_disagreement,
               "oracle produced a non-solution " + format_solution(instance.symbols, sigma));
        }
      }
    }

    SystemInstance as_system(Instance const& instance) {
      return SystemInstance{instance.symbols, {instance.equation}, instance.mu};
    }

  }  // namespace

  std::size_t candidate_count(std::size_t num_constants, std::size_t num_variables,
                              std::size_t max_length) {
    std::size_t per_variable = 0;
    std::size_t power        = 1;
    for (std::size_t l = 1; l <= max_length; ++l) {
      power        = saturating_mul(power, num_constants);
      per_variable = saturating_add(per_variable, power);
    }
    std::size_t total = 1;
    for (std::size_t x = 0; x < num_variables; ++x) {
      total = saturating_mul(total, per_variable);
    }
    return total;
  }

  OracleReport brute_solutions(SystemInstance const& instance, std::size_t max_length,
                               OracleOptions const& options) {
    check_budget(instance, max_length, options);
    std::size_t const n = instance.symbols.num_variables();

    // Length vectors in lexicographic order; vector i goes to worker i mod T.
    std::vector<std::vector<std::size_t>> vectors;
    std::vector<std::size_t>              lengths(n, 1);
    while (true) {
      vectors.push_back(lengths);
      std::size_t i = n;
      while (i > 0 && lengths[i - 1] == max_length) {
        lengths[--i] = 1;
      }
      if (i == 0) {
        break;
      }
      ++lengths[i - 1];
    }

    unsigned const threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(vectors.size())));
    std::vector<std::vector<Solution>> partial(threads);
    auto work = [&](unsigned t) {
      for (std::size_t i = t; i < vectors.size(); i += threads) {
        solve_for_lengths(instance, vectors[i], partial[t]);
      }
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back(work, t);
      }
      for (auto& th : pool) {
        th.join();
      }
    }

    OracleReport report;
    report.bound = max_length;
    for (auto& p : partial) {
      report.solutions.insert(report.solutions.end(), std::make_move_iterator(p.begin()),
                              std::make_move_iterator(p.end()));
    }
    finish(instance, report.solutions);
    for (auto const& sigma : report.solutions) {
      report.max_exp_seen = std::max(report.max_exp_seen, exp_solution(sigma));
    }
    return report;
  }

  OracleReport brute_solutions(Instance const& instance, std::size_t max_length,
                               OracleOptions const& options) {
    return brute_solutions(as_system(instance), max_length, options);
  }

  std::size_t max_exp_up_to(Instance const& instance, std::size_t max_length,
                            OracleOptions const& options) {
    return brute_solutions(instance, max_length, options).max_exp_seen;
  }

  std::vector<Solution> naive_brute_solutions(SystemInstance const& instance,
                                              std::size_t max_length,
                                              OracleOptions const& options) {
    check_budget(instance, max_length, options);
    std::size_t const k = instance.symbols.num_constants();
    std::size_t const n = instance.symbols.num_variables();

    std::vector<Word> words;
    for (std::size_t len = 1; len <= max_length; ++len) {
      std::vector<std::size_t> digits(len, 0);
      while (true) {
        Word w;
        for (std::size_t d : digits) {
          w.push_back(Symbol::constant(static_cast<std::uint32_t>(d)));
        }
        words.push_back(std::move(w));
        std::size_t i = len;
        while (i > 0 && digits[i - 1] + 1 == k) {
          digits[--i] = 0;
        }
        if (i == 0) {
          break;
        }
        ++digits[i - 1];
      }
    }

    std::vector<Solution>    out;
    std::vector<std::size_t> pick(n, 0);
    while (true) {
      Solution sigma;
      for (std::size_t x = 0; x < n; ++x) {
        sigma.assignment[static_cast<std::uint32_t>(x)] = words[pick[x]];
      }
      if (is_solution(instance, sigma)) {
        out.push_back(std::move(sigma));
      }
      std::size_t i = n;
      while (i > 0 && pick[i - 1] + 1 == words.size()) {
        pick[--i] = 0;
      }
      if (i == 0) {
        break;
      }
      ++pick[i - 1];
    }
    std::sort(out.begin(), out.end());
    return out;
  }

}  // namespace weq
