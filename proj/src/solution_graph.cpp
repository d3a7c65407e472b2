#include "weq/solution_graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>
#include <unordered_map>

#include "weq/error.hpp"

namespace weq {

  std::vector<std::uint32_t> GraphState::varset() const {
    std::vector<std::uint32_t> v;
    for (std::uint32_t x = 0; x < var_images.size(); ++x) {
      if (active(x)) {
        v.push_back(x);
      }
    }
    return v;
  }

  bool GraphState::varset_empty() const {
    return std::all_of(var_images.begin(), var_images.end(),
                       [](element_type e) { return e == no_image; });
  }

  Substitution Label::substitution() const {
    switch (kind) {
      case Kind::epsilon: return Substitution();
      case Kind::prepend: return Substitution::single(variable, {alpha, Symbol::variable(variable)});
      case Kind::assign: return Substitution::single(variable, {alpha});
    }
    return Substitution();
  }

  std::string Label::format(SymbolTable const& symbols) const {
    if (kind == Kind::epsilon) {
      return "eps";
    }
    std::string const x = symbols.name(Symbol::variable(variable));
    std::string       s = x + "->" + symbols.name(alpha);
    if (kind == Kind::prepend) {
      s += x;
    }
    return s;
  }

  element_type SolutionGraph::eval(GraphState const& s, Word const& w) const {
    if (w.empty()) {
      fail(ErrorKind::empty_word, "cannot evaluate the empty word");
    }
    FiniteSemigroup const& t      = instance.mu.target();
    element_type           result = image(s, w.front());
    for (std::size_t i = 1; i < w.size(); ++i) {
      result = t.product(result, image(s, w[i]));
    }
    return result;
  }

  std::string SolutionGraph::describe(std::size_t state) const {
    GraphState const&  s  = states[state];
    SymbolTable const& sy = instance.symbols;
    std::string        out = s.is_true ? "TRUE" : sy.format(s.lhs) + " = " + sy.format(s.rhs);
    out += " |";
    for (std::uint32_t x : s.varset()) {
      out += " " + sy.name(Symbol::variable(x));
    }
    out += " |";
    for (std::uint32_t x : s.varset()) {
      out += " " + sy.name(Symbol::variable(x)) + ":" + instance.mu.target().name(s.var_images[x]);
    }
    return out;
  }

  namespace {

    std::string state_key(GraphState const& s) {
      std::string key;
      key.reserve(8 + 5 * (s.lhs.size() + s.rhs.size()) + 4 * s.var_images.size());
      auto put32 = [&key](std::uint32_t v) {
        for (int i = 0; i < 4; ++i) {
          key.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
        }
      };
      key.push_back(s.is_true ? 'T' : 'E');
      for (Word const* side : {&s.lhs, &s.rhs}) {
        put32(static_cast<std::uint32_t>(side->size()));
        for (Symbol a : *side) {
          key.push_back(a.is_constant() ? 'c' : 'v');
          put32(a.index);
        }
      }
      for (element_type e : s.var_images) {
        put32(e);
      }
      return key;
    }

    Word substitute(Word const& w, std::uint32_t x, Word const& image) {
      Word out;
      out.reserve(w.size() + image.size());
      for (Symbol a : w) {
        if (a == Symbol::variable(x)) {
          out.insert(out.end(), image.begin(), image.end());
        } else {
          out.push_back(a);
        }
      }
      return out;
    }

    bool occurs(GraphState const& s, std::uint32_t x) {
      Symbol const xs = Symbol::variable(x);
      return std::find(s.lhs.begin(), s.lhs.end(), xs) != s.lhs.end()
             || std::find(s.rhs.begin(), s.rhs.end(), xs) != s.rhs.end();
    }

    struct Successor {
      GraphState state;
      Label      label;
    };

    class Builder {
     public:
      Builder(Instance const& instance, GraphOptions const& options)
          : instance_(instance), options_(options), target_(instance.mu.target()) {}

      void successors(GraphState const& s, std::vector<Successor>& out) const {
        out.clear();
        if (!s.is_true && s.lhs.front() == s.rhs.front()) {
          Word u(s.lhs.begin() + 1, s.lhs.end());
          Word v(s.rhs.begin() + 1, s.rhs.end());
          if (u.empty() != v.empty()) {
            return;
          }
          GraphState next = s;
          next.is_true    = u.empty();
          next.lhs        = std::move(u);
          next.rhs        = std::move(v);
          out.push_back({std::move(next), Label{}});
          return;
        }
        if (!s.is_true) {
          if (s.lhs.front().is_variable()) {
            head_rule(s, true, out);
          }
          if (s.rhs.front().is_variable()) {
            head_rule(s, false, out);
          }
        }
        for (std::uint32_t x = 0; x < s.var_images.size(); ++x) {
          if (s.active(x) && !occurs(s, x)) {
            absent_rule(s, x, out);
            if (!options_.faithful) {
              break;
            }
          }
        }
      }

     private:
      element_type image(GraphState const& s, Symbol a) const {
        return a.is_constant() ? instance_.mu.image(a) : s.var_images[a.index];
      }

      // Both orientations of XU = alpha V.  lhs_head selects X on the left.
      void head_rule(GraphState const& s, bool lhs_head, std::vector<Successor>& out) const {
        Word const&         xside = lhs_head ? s.lhs : s.rhs;
        Word const&         aside = lhs_head ? s.rhs : s.lhs;
        std::uint32_t const x     = xside.front().index;
        Symbol const        alpha = aside.front();
        element_type const  mx    = s.var_images[x];
        element_type const  ma    = image(s, alpha);

        Word const u(xside.begin() + 1, xside.end());
        Word const v(aside.begin() + 1, aside.end());

        // X -> alpha X, then cancel the common alpha.
        Word const prepend{alpha, Symbol::variable(x)};
        Word       tx = substitute(u, x, prepend);
        tx.insert(tx.begin(), Symbol::variable(x));
        Word const tv = substitute(v, x, prepend);
        if (!tv.empty()) {
          for (element_type t = 0; t < target_.size(); ++t) {
            if (target_.product(ma, t) != mx) {
              continue;
            }
            GraphState next    = s;
            next.var_images[x] = t;
            next.lhs           = lhs_head ? tx : tv;
            next.rhs           = lhs_head ? tv : tx;
            out.push_back({std::move(next), Label{Label::Kind::prepend, x, alpha}});
          }
        }

        // X -> alpha.
        if (mx == ma) {
          Word const replace{alpha};
          Word       tu = substitute(u, x, replace);
          Word       tw = substitute(v, x, replace);
          if (tu.empty() == tw.empty()) {
            GraphState next    = s;
            next.var_images[x] = no_image;
            next.is_true       = tu.empty();
            next.lhs           = lhs_head ? std::move(tu) : std::move(tw);
            next.rhs           = lhs_head ? std::move(tw) : std::move(tu);
            out.push_back({std::move(next), Label{Label::Kind::assign, x, alpha}});
          }
        }
      }

      void absent_rule(GraphState const& s, std::uint32_t x, std::vector<Successor>& out) const {
        element_type const mx = s.var_images[x];
        for (std::uint32_t c = 0; c < instance_.symbols.num_constants(); ++c) {
          Symbol const       a  = Symbol::constant(c);
          element_type const ma = instance_.mu.image(a);
          for (element_type t = 0; t < target_.size(); ++t) {
            if (target_.product(ma, t) != mx) {
              continue;
            }
            GraphState next    = s;
            next.var_images[x] = t;
            out.push_back({std::move(next), Label{Label::Kind::prepend, x, a}});
          }
          if (mx == ma) {
            GraphState next    = s;
            next.var_images[x] = no_image;
            out.push_back({std::move(next), Label{Label::Kind::assign, x, a}});
          }
        }
      }

      Instance const&        instance_;
      GraphOptions const&    options_;
      FiniteSemigroup const& target_;
    };

    bool final_state(GraphState const& s) {
      if (!s.varset_empty()) {
        return false;
      }
      return s.is_true
             || (s.lhs.size() == 1 && s.rhs.size() == 1 && s.lhs[0] == s.rhs[0]
                 && s.lhs[0].is_constant());
    }

    void index_adjacency(SolutionGraph& g) {
      g.out.assign(g.states.size(), {});
      g.in.assign(g.states.size(), {});
      for (std::size_t i = 0; i < g.transitions.size(); ++i) {
        g.out[g.transitions[i].source].push_back(i);
        g.in[g.transitions[i].target].push_back(i);
      }
    }

    void trim(SolutionGraph& g) {
      std::size_t const n = g.states.size();
      std::vector<bool> forward(n, false);
      std::vector<bool> backward(n, false);
      std::deque<std::size_t> queue{g.initial};
      forward[g.initial] = true;
      while (!queue.empty()) {
        std::size_t const p = queue.front();
        queue.pop_front();
        for (std::size_t t : g.out[p]) {
          std::size_t const q = g.transitions[t].target;
          if (!forward[q]) {
            forward[q] = true;
            queue.push_back(q);
          }
        }
      }
      for (std::size_t p = 0; p < n; ++p) {
        if (g.is_final[p]) {
          backward[p] = true;
          queue.push_back(p);
        }
      }
      while (!queue.empty()) {
        std::size_t const p = queue.front();
        queue.pop_front();
        for (std::size_t t : g.in[p]) {
          std::size_t const q = g.transitions[t].source;
          if (!backward[q]) {
            backward[q] = true;
            queue.push_back(q);
          }
        }
      }

      std::vector<std::size_t> renumber(n, n);
      std::vector<GraphState>  states;
      std::vector<bool>        finals;
      for (std::size_t p = 0; p < n; ++p) {
        if (forward[p] && backward[p]) {
          renumber[p] = states.size();
          states.push_back(std::move(g.states[p]));
          finals.push_back(g.is_final[p]);
        }
      }
      std::vector<Transition> transitions;
      for (auto const& t : g.transitions) {
        if (renumber[t.source] != n && renumber[t.target] != n) {
          transitions.push_back({renumber[t.source], renumber[t.target], t.label});
        }
      }
      g.states      = std::move(states);
      g.is_final    = std::move(finals);
      g.transitions = std::move(transitions);
      g.initial     = 0;
      g.trimmed     = true;
      index_adjacency(g);
    }

    // Iterative Tarjan; components arrive in reverse topological order.
    void strongly_connected_components(SolutionGraph& g) {
      std::size_t const        n     = g.states.size();
      std::size_t const        unset = n;
      std::vector<std::size_t> index(n, unset);
      std::vector<std::size_t> low(n, 0);
      std::vector<bool>        on_stack(n, false);
      std::vector<std::size_t> stack;
      std::vector<std::vector<std::size_t>> found;
      std::size_t counter = 0;

      struct Frame {
        std::size_t state;
        std::size_t next_edge;
      };
      for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != unset) {
          continue;
        }
        std::vector<Frame> frames{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
          Frame& f = frames.back();
          if (f.next_edge < g.out[f.state].size()) {
            std::size_t const q = g.transitions[g.out[f.state][f.next_edge++]].target;
            if (index[q] == unset) {
              index[q] = low[q] = counter++;
              stack.push_back(q);
              on_stack[q] = true;
              frames.push_back({q, 0});
            } else if (on_stack[q]) {
              low[f.state] = std::min(low[f.state], index[q]);
            }
            continue;
          }
          std::size_t const p = f.state;
          if (low[p] == index[p]) {
            std::vector<std::size_t> component;
            std::size_t              q = 0;
            do {
              q = stack.back();
              stack.pop_back();
              on_stack[q] = false;
              component.push_back(q);
            } while (q != p);
            std::sort(component.begin(), component.end());
            found.push_back(std::move(component));
          }
          frames.pop_back();
          if (!frames.empty()) {
            low[frames.back().state] = std::min(low[frames.back().state], low[p]);
          }
        }
      }
      std::reverse(found.begin(), found.end());
      g.components.clear();
      g.component_of.assign(n, 0);
      for (std::size_t c = 0; c < found.size(); ++c) {
        for (std::size_t p : found[c]) {
          g.component_of[p] = c;
        }
        g.components.push_back({std::move(found[c]), false});
      }
      for (auto const& t : g.transitions) {
        if (g.component_of[t.source] == g.component_of[t.target]) {
          g.components[g.component_of[t.source]].has_transition = true;
        }
      }
    }

    std::size_t count_occurrences(GraphState const& s, std::uint32_t x) {
      return occurrences(s.lhs, Symbol::variable(x)) + occurrences(s.rhs, Symbol::variable(x));
    }

  }  // namespace

  SolutionGraph build_graph(Instance const& instance, GraphOptions const& options) {
    require_quadratic(instance);
    SolutionGraph g;
    g.instance = instance;
    g.n0       = instance.equation.lhs.size() + instance.equation.rhs.size();

    GraphState start;
    start.lhs        = instance.equation.lhs;
    start.rhs        = instance.equation.rhs;
    start.var_images = instance.mu.variable_images();

    std::unordered_map<std::string, std::size_t> ids;
    ids.emplace(state_key(start), 0);
    g.states.push_back(std::move(start));
    g.initial = 0;

    Builder const          builder(instance, options);
    std::vector<Successor> next;
    for (std::size_t p = 0; p < g.states.size(); ++p) {
      builder.successors(g.states[p], next);
      for (auto& succ : next) {
        if (succ.state.length() > g.n0 || (succ.label.kind == Label::Kind::epsilon && succ.state.length() >= g.states[p].length())) {
          fail(ErrorKind::internal_disagreement, "transition increases the equation length");
        }
        for (std::uint32_t x = 0; x < succ.state.var_images.size(); ++x) {
          std::size_t const k = count_occurrences(succ.state, x);
          if (k > 2 || (k > 0 && !succ.state.active(x))) {
            fail(ErrorKind::internal_disagreement, "transition breaks the state invariants");
          }
        }
        auto [it, inserted] = ids.emplace(state_key(succ.state), g.states.size());
        if (inserted) {
          if (g.states.size() >= options.max_states) {
            fail(ErrorKind::budget_exceeded,
                 "solution graph exceeds " + std::to_string(options.max_states) + " states");
          }
          g.states.push_back(std::move(succ.state));
        }
        g.transitions.push_back({p, it->second, succ.label});
      }
    }
    g.is_final.resize(g.states.size());
    for (std::size_t p = 0; p < g.states.size(); ++p) {
      g.is_final[p] = final_state(g.states[p]);
    }
    g.states_before_trim      = g.states.size();
    g.transitions_before_trim = g.transitions.size();
    index_adjacency(g);
    if (options.trim) {
      trim(g);
    }
    strongly_connected_components(g);
    return g;
  }

  bool is_solvable(SolutionGraph const& g) {
    if (g.trimmed) {
      return !g.empty();
    }
    std::vector<bool>       seen(g.states.size(), false);
    std::deque<std::size_t> queue{g.initial};
    seen[g.initial] = true;
    while (!queue.empty()) {
      std::size_t const p = queue.front();
      queue.pop_front();
      if (g.is_final[p]) {
        return true;
      }
      for (std::size_t t : g.out[p]) {
        std::size_t const q = g.transitions[t].target;
        if (!seen[q]) {
          seen[q] = true;
          queue.push_back(q);
        }
      }
    }
    return false;
  }

  bool has_infinitely_many(SolutionGraph const& g) {
    if (!g.trimmed) {
      fail(ErrorKind::invalid_argument, "infinitude is read off the trimmed graph");
    }
    return std::any_of(g.components.begin(), g.components.end(),
                       [](Component const& c) { return c.has_transition; });
  }

  Solution extract_solution(SolutionGraph const& g, std::vector<std::size_t> const& path) {
    if (g.empty()) {
      fail(ErrorKind::not_accepting, "the graph has no accepting path");
    }
    std::size_t state = g.initial;
    for (std::size_t t : path) {
      if (t >= g.transitions.size() || g.transitions[t].source != state) {
        fail(ErrorKind::not_accepting, "the transitions do not form a path from the initial state");
      }
      state = g.transitions[t].target;
    }
    if (!g.is_final[state]) {
      fail(ErrorKind::not_accepting, "the path does not end in a final state");
    }
    std::size_t const n = g.instance.symbols.num_variables();
    std::vector<Word> words(n);
    for (std::uint32_t x = 0; x < n; ++x) {
      words[x] = {Symbol::variable(x)};
    }
    for (std::size_t t : path) {
      Label const& l = g.transitions[t].label;
      if (l.kind == Label::Kind::epsilon) {
        continue;
      }
      Word const image = l.kind == Label::Kind::prepend ? Word{l.alpha, Symbol::variable(l.variable)}
                                                        : Word{l.alpha};
      for (auto& w : words) {
        w = substitute(w, l.variable, image);
      }
    }
    Solution sigma;
    for (std::uint32_t x = 0; x < n; ++x) {
      if (words[x].empty() || !is_constant_word(words[x])) {
        fail(ErrorKind::internal_disagreement, "accepting path leaves a variable unresolved");
      }
      sigma.assignment[x] = std::move(words[x]);
    }
    if (!is_solution(g.instance, sigma)) {
      fail(ErrorKind::internal_disagreement,
           "accepting path spells a non-solution " + format_solution(g.instance.symbols, sigma));
    }
    return sigma;
  }

  std::vector<Solution> enumerate_solutions(SolutionGraph const& g, std::size_t word_bound,
                                            std::optional<std::size_t> path_bound) {
    std::vector<Solution> found;
    if (g.empty()) {
      return found;
    }
    std::size_t const max_path = path_bound.value_or(g.n0 * (word_bound + 1));
    std::size_t const n        = g.instance.symbols.num_variables();

    std::vector<Word> words(n);
    for (std::uint32_t x = 0; x < n; ++x) {
      words[x] = {Symbol::variable(x)};
    }
    std::set<Solution> seen;

    std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t state, std::size_t depth) {
      if (g.is_final[state]) {
        Solution sigma;
        for (std::uint32_t x = 0; x < n; ++x) {
          sigma.assignment[x] = words[x];
        }
        seen.insert(std::move(sigma));
      }
      if (depth == max_path) {
        return;
      }
      for (std::size_t t : g.out[state]) {
        Label const& l = g.transitions[t].label;
        if (l.kind == Label::Kind::epsilon) {
          dfs(g.transitions[t].target, depth + 1);
          continue;
        }
        Word const image = l.kind == Label::Kind::prepend
                               ? Word{l.alpha, Symbol::variable(l.variable)}
                               : Word{l.alpha};
        std::vector<Word> saved = words;
        bool              fits  = true;
        for (auto& w : words) {
          w    = substitute(w, l.variable, image);
          fits = fits && w.size() <= word_bound;
        }
        if (fits) {
          dfs(g.transitions[t].target, depth + 1);
        }
        words = std::move(saved);
      }
    };
    dfs(g.initial, 0);

    for (auto const& sigma : seen) {
      if (!is_solution(g.instance, sigma)) {
        fail(ErrorKind::internal_disagreement,
             "accepting path spells a non-solution " + format_solution(g.instance.symbols, sigma));
      }
      found.push_back(sigma);
    }
    return found;
  }

  std::string export_dot(SolutionGraph const& g) {
    std::ostringstream out;
    auto quote = [](std::string const& s) {
      std::string q = "\"";
      for (char c : s) {
        if (c == '"' || c == '\\') {
          q += '\\';
        }
        q += c;
      }
      return q + "\"";
    };
    out << "digraph solution_graph {\n  rankdir=LR;\n  node [shape=circle];\n";
    if (!g.empty()) {
      out << "  start [shape=point];\n  start -> s" << g.initial << ";\n";
    }
    for (std::size_t p = 0; p < g.states.size(); ++p) {
      out << "  s" << p << " [label=" << quote(g.describe(p));
      if (g.is_final[p]) {
        out << ", shape=doublecircle";
      }
      out << "];\n";
    }
    for (auto const& t : g.transitions) {
      out << "  s" << t.source << " -> s" << t.target << " [label="
          << quote(t.label.format(g.instance.symbols));
      if (t.label.kind == Label::Kind::epsilon) {
        out << ", style=dashed";
      }
      out << "];\n";
    }
    out << "}\n";
    return out.str();
  }

  namespace {

    std::optional<std::vector<std::size_t>> bfs_path(SolutionGraph const& g, std::size_t from,
                                                     std::function<bool(std::size_t)> const& goal,
                                                     std::function<bool(std::size_t)> const& allowed) {
      std::size_t const        n = g.states.size();
      std::vector<std::size_t> via(n, g.transitions.size());
      std::vector<bool>        seen(n, false);
      std::deque<std::size_t>  queue{from};
      seen[from] = true;
      while (!queue.empty()) {
        std::size_t const p = queue.front();
        queue.pop_front();
        if (goal(p)) {
          std::vector<std::size_t> path;
          for (std::size_t q = p; q != from; q = g.transitions[via[q]].source) {
            path.push_back(via[q]);
          }
          std::reverse(path.begin(), path.end());
          return path;
        }
        for (std::size_t t : g.out[p]) {
          std::size_t const q = g.transitions[t].target;
          if (!seen[q] && allowed(q)) {
            seen[q] = true;
            via[q]  = t;
            queue.push_back(q);
          }
        }
      }
      return std::nullopt;
    }

  }  // namespace

  std::optional<std::vector<std::size_t>> shortest_path(SolutionGraph const& g, std::size_t from,
                                                        std::size_t to) {
    return bfs_path(
        g, from, [to](std::size_t p) { return p == to; }, [](std::size_t) { return true; });
  }

  std::optional<std::vector<std::size_t>> shortest_path_to_final(SolutionGraph const& g,
                                                                 std::size_t from) {
    return bfs_path(
        g, from, [&g](std::size_t p) { return g.is_final[p]; }, [](std::size_t) { return true; });
  }

  std::optional<std::vector<std::size_t>> shortest_cycle_through(SolutionGraph const& g,
                                                                 std::size_t state) {
    std::optional<std::vector<std::size_t>> best;
    for (std::size_t t : g.out[state]) {
      std::size_t const q = g.transitions[t].target;
      if (!g.same_component(q, state)) {
        continue;
      }
      if (q == state) {
        return std::vector<std::size_t>{t};
      }
      auto rest = bfs_path(
          g, q, [state](std::size_t p) { return p == state; },
          [&g, state](std::size_t p) { return g.same_component(p, state); });
      if (rest && (!best || rest->size() + 1 < best->size())) {
        rest->insert(rest->begin(), t);
        best = std::move(rest);
      }
    }
    return best;
  }

  CycleList simple_cycles(SolutionGraph const& g, std::size_t max_length, std::size_t max_count) {
    CycleList                result;
    std::size_t const        n = g.states.size();
    std::vector<bool>        on_path(n, false);
    std::vector<std::size_t> path;

    for (std::size_t s = 0; s < n && !result.truncated; ++s) {
      if (!g.components[g.component_of[s]].has_transition) {
        continue;
      }
      // Cycles whose least state is s.
      std::function<void(std::size_t)> extend = [&](std::size_t p) {
        for (std::size_t t : g.out[p]) {
          if (result.truncated) {
            return;
          }
          std::size_t const q = g.transitions[t].target;
          if (q < s || !g.same_component(q, s)) {
            continue;
          }
          if (q == s) {
            path.push_back(t);
            result.cycles.push_back(path);
            path.pop_back();
            if (result.cycles.size() >= max_count) {
              result.truncated = true;
            }
            continue;
          }
          if (on_path[q] || path.size() + 1 >= max_length) {
            continue;
          }
          on_path[q] = true;
          path.push_back(t);
          extend(q);
          path.pop_back();
          on_path[q] = false;
        }
      };
      on_path[s] = true;
      extend(s);
      on_path[s] = false;
    }
    return result;
  }

  std::vector<std::size_t> path_states(SolutionGraph const& g, std::vector<std::size_t> const& path,
                                       std::size_t start) {
    std::vector<std::size_t> states{start};
    for (std::size_t t : path) {
      states.push_back(g.transitions[t].target);
    }
    return states;
  }

}  // namespace weq
