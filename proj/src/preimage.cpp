#include "weq/preimage.hpp"

#include <deque>

#include "weq/error.hpp"

namespace weq {

  namespace {

    class PreimageAutomaton {
     public:
      explicit PreimageAutomaton(ConstraintMorphism const& mu)
          : s_(mu.target()), images_(mu.constant_images()) {}

      element_type start() const noexcept {
        return monoid_one(s_);
      }
      std::size_t num_states() const noexcept {
        return s_.size() + 1;
      }
      std::size_t num_letters() const noexcept {
        return images_.size();
      }
      element_type next(element_type t, std::size_t letter) const {
        return monoid_product(s_, t, images_[letter]);
      }

      // Shortlex-least words from source to every state; the source itself
      // receives the empty word.
      std::vector<std::optional<Word>> paths_from(element_type source) const {
        std::vector<std::optional<Word>> path(num_states());
        std::deque<element_type>         queue{source};
        path[source] = Word{};
        while (!queue.empty()) {
          element_type const t = queue.front();
          queue.pop_front();
          for (std::size_t a = 0; a < num_letters(); ++a) {
            element_type const u = next(t, a);
            if (!path[u]) {
              path[u] = *path[t];
              path[u]->push_back(Symbol::constant(static_cast<std::uint32_t>(a)));
              queue.push_back(u);
            }
          }
        }
        return path;
      }

      // Shortest nonempty cycle from t back to t.
      std::optional<Word> cycle_at(element_type t) const {
        std::vector<std::optional<Word>> path(num_states());
        std::deque<element_type>         queue;
        for (std::size_t a = 0; a < num_letters(); ++a) {
          element_type const u = next(t, a);
          Word const         w{Symbol::constant(static_cast<std::uint32_t>(a))};
          if (u == t) {
            return w;
          }
          if (!path[u]) {
            path[u] = w;
            queue.push_back(u);
          }
        }
        while (!queue.empty()) {
          element_type const v = queue.front();
          queue.pop_front();
          for (std::size_t a = 0; a < num_letters(); ++a) {
            element_type const u = next(v, a);
            Word               w = *path[v];
            w.push_back(Symbol::constant(static_cast<std::uint32_t>(a)));
            if (u == t) {
              return w;
            }
            if (!path[u]) {
              path[u] = std::move(w);
              queue.push_back(u);
            }
          }
        }
        return std::nullopt;
      }

     private:
      FiniteSemigroup const&           s_;
      std::vector<element_type> const& images_;
    };

    void check_element(ConstraintMorphism const& mu, element_type s) {
      if (s >= mu.target().size()) {
        fail(ErrorKind::bad_index, "element " + std::to_string(s) + " out of range");
      }
    }

  }  // namespace

  Word Pump::instantiate(std::size_t m) const {
    Word out = u;
    for (std::size_t i = 0; i < m; ++i) {
      out.insert(out.end(), y.begin(), y.end());
    }
    out.insert(out.end(), w.begin(), w.end());
    return out;
  }

  bool preimage_nonempty(ConstraintMorphism const& mu, element_type s) {
    return shortest_preimage(mu, s).has_value();
  }

  std::optional<Word> shortest_preimage(ConstraintMorphism const& mu, element_type s) {
    check_element(mu, s);
    PreimageAutomaton const a(mu);
    // s is never the start state, so any path to it is nonempty.
    return a.paths_from(a.start())[s];
  }

  std::optional<Pump> preimage_pump(ConstraintMorphism const& mu, element_type s) {
    check_element(mu, s);
    PreimageAutomaton const a(mu);
    auto const              from_start = a.paths_from(a.start());
    if (!from_start[s]) {
      return std::nullopt;
    }
    // Visit states in the order of their shortlex-least access word.
    std::vector<element_type> order;
    for (element_type t = 0; t < a.num_states(); ++t) {
      if (from_start[t]) {
        order.push_back(t);
      }
    }
    std::stable_sort(order.begin(), order.end(), [&](element_type x, element_type y) {
      return shortlex_less(*from_start[x], *from_start[y]);
    });
    for (element_type q : order) {
      auto const to_s = a.paths_from(q)[s];
      if (!to_s) {
        continue;
      }
      if (auto y = a.cycle_at(q)) {
        return Pump{*from_start[q], std::move(*y), *to_s};
      }
    }
    return std::nullopt;
  }

  bool preimage_infinite(ConstraintMorphism const& mu, element_type s) {
    return preimage_pump(mu, s).has_value();
  }

  std::size_t count_preimage(ConstraintMorphism const& mu, element_type s, std::size_t max_length) {
    check_element(mu, s);
    PreimageAutomaton const  a(mu);
    std::vector<std::size_t> count(a.num_states(), 0);
    count[a.start()]  = 1;
    std::size_t total = 0;
    for (std::size_t len = 1; len <= max_length; ++len) {
      std::vector<std::size_t> next(a.num_states(), 0);
      for (element_type t = 0; t < a.num_states(); ++t) {
        if (count[t] == 0) {
          continue;
        }
        for (std::size_t c = 0; c < a.num_letters(); ++c) {
          next[a.next(t, c)] += count[t];
        }
      }
      count = std::move(next);
      total += count[s];
    }
    return total;
  }

}  // namespace weq
