#include "weq/periodicity.hpp"

#include <algorithm>

#include "weq/error.hpp"

namespace weq {

  namespace {

    element_type image(ConstraintMorphism const& mu, ConstrainedEquation const& e, Symbol a) {
      return a.is_constant() ? mu.image(a) : e.var_images.at(a.index);
    }

    // Product in S^1; the empty word evaluates to the adjoined identity.
    element_type eval1(ConstraintMorphism const& mu, ConstrainedEquation const& e, Word const& w) {
      FiniteSemigroup const& s      = mu.target();
      element_type           result = monoid_one(s);
      for (Symbol a : w) {
        element_type const x = image(mu, e, a);
        if (x == no_image) {
          fail(ErrorKind::invalid_argument, "word mentions an inactive variable");
        }
        result = monoid_product(s, result, x);
      }
      return result;
    }

    Word substitute(Word const& w, std::uint32_t x, Word const& image) {
      Word out;
      for (Symbol a : w) {
        if (a == Symbol::variable(x)) {
          out.insert(out.end(), image.begin(), image.end());
        } else {
          out.push_back(a);
        }
      }
      return out;
    }

    Word label_image(Label const& l) {
      return l.kind == Label::Kind::prepend ? Word{l.alpha, Symbol::variable(l.variable)}
                                            : Word{l.alpha};
    }

    // tau_k ... tau_1 (Z) for every variable Z.
    std::vector<Word> replay(std::size_t num_variables, std::vector<Label> const& labels) {
      std::vector<Word> words(num_variables);
      for (std::uint32_t x = 0; x < num_variables; ++x) {
        words[x] = {Symbol::variable(x)};
      }
      for (Label const& l : labels) {
        if (l.kind == Label::Kind::epsilon) {
          continue;
        }
        Word const img = label_image(l);
        for (auto& w : words) {
          w = substitute(w, l.variable, img);
        }
      }
      return words;
    }

    Word apply_words(std::vector<Word> const& words, Word const& w) {
      Word out;
      for (Symbol a : w) {
        if (a.is_variable()) {
          out.insert(out.end(), words[a.index].begin(), words[a.index].end());
        } else {
          out.push_back(a);
        }
      }
      return out;
    }

    std::vector<Label> labels_of(SolutionGraph const& g, std::vector<std::size_t> const& path) {
      std::vector<Label> labels;
      for (std::size_t t : path) {
        labels.push_back(g.transitions[t].label);
      }
      return labels;
    }

    std::size_t count_in(Word const& w, std::uint32_t x) {
      return occurrences(w, Symbol::variable(x));
    }

    bool solves_state(ConstraintMorphism const& mu, ConstrainedEquation const& e,
                      Solution const& sigma) {
      for (std::uint32_t x = 0; x < e.var_images.size(); ++x) {
        bool const active = e.var_images[x] != no_image;
        auto const it     = sigma.assignment.find(x);
        if (active != (it != sigma.assignment.end())) {
          return false;
        }
        if (active && (it->second.empty() || !is_constant_word(it->second)
                       || mu.eval(it->second) != e.var_images[x])) {
          return false;
        }
      }
      if (sigma.assignment.size() != static_cast<std::size_t>(std::count_if(
              e.var_images.begin(), e.var_images.end(), [](element_type i) { return i != no_image; }))) {
        return false;
      }
      return e.is_true || sigma.apply(e.lhs) == sigma.apply(e.rhs);
    }

  }  // namespace

  ConstrainedEquation ConstrainedEquation::of(Instance const& instance) {
    return {false, instance.equation.lhs, instance.equation.rhs, instance.mu.variable_images()};
  }

  ConstrainedEquation ConstrainedEquation::of(GraphState const& state) {
    return {state.is_true, state.lhs, state.rhs, state.var_images};
  }

  GraphState ConstrainedEquation::as_state() const {
    GraphState s;
    s.is_true    = is_true;
    s.lhs        = lhs;
    s.rhs        = rhs;
    s.var_images = var_images;
    return s;
  }

  std::string_view to_string(PumpCase c) noexcept {
    return c == PumpCase::head_balanced ? "HeadBalanced" : "FreeVariable";
  }

  std::optional<NiceWitness> is_nicely_balanced(ConstraintMorphism const&  mu,
                                                ConstrainedEquation const& e,
                                                std::uint32_t              x) {
    if (x >= e.var_images.size() || e.var_images[x] == no_image) {
      return std::nullopt;
    }
    element_type const mx = e.var_images[x];
    if (!preimage_infinite(mu, mx)) {
      return std::nullopt;
    }
    std::size_t const in_lhs = count_in(e.lhs, x);
    std::size_t const in_rhs = count_in(e.rhs, x);
    if (in_lhs + in_rhs == 0) {
      NiceWitness w;
      w.absent = true;
      return w;
    }
    if (in_lhs != 1 || in_rhs != 1) {
      return std::nullopt;
    }
    FiniteSemigroup const& s = mu.target();
    for (bool swapped : {false, true}) {
      Word const& a = swapped ? e.rhs : e.lhs;
      Word const& b = swapped ? e.lhs : e.rhs;
      if (a.front() != Symbol::variable(x)) {
        continue;
      }
      auto const  at = std::find(b.begin(), b.end(), Symbol::variable(x));
      NiceWitness w;
      w.swapped = swapped;
      w.u       = Word(a.begin() + 1, a.end());
      w.v       = Word(b.begin(), at);
      w.v_prime = Word(at + 1, b.end());
      element_type const mv = eval1(mu, e, w.v);
      if (monoid_product(s, monoid_omega(s, mv), mx) == mx) {
        return w;
      }
    }
    return std::nullopt;
  }

  std::optional<NiceWitness> is_nicely_balanced(SolutionGraph const& g, std::size_t state,
                                                std::uint32_t variable) {
    return is_nicely_balanced(g.instance.mu, ConstrainedEquation::of(g.states.at(state)), variable);
  }

  SccAnalysis analyze_scc(SolutionGraph const& g, std::size_t component) {
    ConstraintMorphism const& mu = g.instance.mu;
    FiniteSemigroup const&    s  = mu.target();
    GreenData const           green_data = green(s);
    Component const&          comp       = g.components.at(component);
    SymbolTable const&        sy         = g.instance.symbols;

    SccAnalysis result;
    result.component = component;
    auto violation   = [&result](std::string message) {
      result.violations.push_back(std::move(message));
    };

    std::vector<bool> infinite(s.size());
    for (element_type x = 0; x < s.size(); ++x) {
      infinite[x] = preimage_infinite(mu, x);
    }

    // Leading J-class of every state.
    bool first = true;
    for (std::size_t p : comp.states) {
      GraphState const& st = g.states[p];
      StatePlayground    pg;
      pg.state = p;
      if (!st.is_true) {
        Symbol const       ha = st.lhs.front();
        Symbol const       hb = st.rhs.front();
        element_type const a  = g.image(st, ha);
        element_type const b  = g.image(st, hb);
        if (ha.is_constant() && hb.is_constant()) {
          violation("both heads are constants in a nontrivial component: " + g.describe(p));
        } else if (ha.is_constant() != hb.is_constant()) {
          pg.leading_J = green_data.J.class_of[ha.is_variable() ? a : b];
        } else {
          bool const ab = green_data.leq_J(a, b);
          bool const ba = green_data.leq_J(b, a);
          if (!ab && !ba) {
            violation("IncomparableHeads: " + g.describe(p));
          } else {
            pg.leading_J = green_data.J.class_of[ab ? a : b];
          }
        }
      }
      if (first) {
        result.leading_J = pg.leading_J;
        first            = false;
      } else if (pg.leading_J != result.leading_J) {
        violation("leading J-class differs at " + g.describe(p));
      }
      result.states.push_back(std::move(pg));
    }

    std::vector<bool> in_stab(s.size() + 1, true);
    if (result.leading_J) {
      result.leading_J_elements = green_data.J.classes[*result.leading_J];
      result.leading_stab       = stab_L(s, result.leading_J_elements.front());
      std::fill(in_stab.begin(), in_stab.end(), false);
      for (element_type u : result.leading_stab) {
        in_stab[u] = true;
      }
    } else {
      for (element_type u = 0; u <= s.size(); ++u) {
        result.leading_stab.push_back(u);
      }
    }

    // Playgrounds and players.
    for (auto& pg : result.states) {
      GraphState const& st = g.states[pg.state];
      if (st.is_true || !result.leading_J) {
        continue;
      }
      auto prefix = [&](Word const& w) {
        Word out;
        for (Symbol a : w) {
          out.push_back(a);
          if (!in_stab[g.image(st, a)]) {
            break;
          }
        }
        return out;
      };
      pg.lhs = prefix(st.lhs);
      pg.rhs = prefix(st.rhs);
      for (std::uint32_t x : st.varset()) {
        element_type const mx = st.var_images[x];
        std::size_t const  l  = count_in(pg.lhs, x);
        std::size_t const  r  = count_in(pg.rhs, x);
        if (green_data.J.class_of[mx] != *result.leading_J || !infinite[mx] || l + r != 2) {
          continue;
        }
        pg.players.push_back(x);
        (l == 1 ? pg.balanced : pg.unbalanced).push_back(x);
      }
    }
    if (!result.states.empty()) {
      result.playground_size = result.states.front().size();
      result.players         = result.states.front().players;
      for (auto const& pg : result.states) {
        if (pg.size() != result.playground_size || pg.players != result.players) {
          violation("playground size or players differ at " + g.describe(pg.state));
        }
      }
    }

    // Transitions inside the component.
    auto player_of = [&result](std::size_t state, std::uint32_t x) {
      for (auto const& pg : result.states) {
        if (pg.state == state) {
          return std::find(pg.players.begin(), pg.players.end(), x) != pg.players.end();
        }
      }
      return false;
    };
    for (std::size_t p : comp.states) {
      for (std::size_t t : g.out[p]) {
        Transition const& tr = g.transitions[t];
        if (!g.same_component(tr.target, p)) {
          continue;
        }
        std::string const where = g.describe(p) + " --" + tr.label.format(sy) + "--> " + g.describe(tr.target);
        if (tr.label.kind != Label::Kind::prepend) {
          violation("in-component transition is not of the form X->aX: " + where);
          continue;
        }
        std::uint32_t const x  = tr.label.variable;
        element_type const  mx = g.states[p].var_images[x];
        element_type const  ma = g.image(p, tr.label.alpha);
        element_type const  mt = g.states[tr.target].var_images[x];
        if (!green_data.leq_R(mx, ma)) {
          violation("mu(X) is not R-below mu(alpha): " + where);
        }
        if (mt == no_image || !green_data.L_equiv(mx, mt)) {
          violation("mu(X) and mu'(X) are not L-equivalent: " + where);
        }
        if (!infinite[mx]) {
          violation("L_mu(X) is finite: " + where);
        }
        if (count_in(g.states[p].lhs, x) + count_in(g.states[p].rhs, x) >= 1) {
          if (!in_stab[ma]) {
            violation("mu(alpha) outside the leading L-stabilizer: " + where);
          }
          if (!player_of(p, x)) {
            violation("X is not a player: " + where);
          }
        }
      }
    }
    return result;
  }

  std::optional<NiceState> find_nicely_balanced_on_cycle(SolutionGraph const&            g,
                                                         std::vector<std::size_t> const& cycle) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      std::size_t const p  = g.transitions.at(cycle[i]).source;
      GraphState const& st = g.states[p];
      for (std::uint32_t x : st.varset()) {
        if (auto w = is_nicely_balanced(g, p, x)) {
          return NiceState{p, x, i, std::move(*w)};
        }
      }
    }
    if (is_dlg(g.instance.mu.target()).dlg) {
      std::string states;
      for (std::size_t t : cycle) {
        states += "\n  " + g.describe(g.transitions[t].source);
      }
      fail(ErrorKind::theorem_violation, "no nicely balanced state on a cycle under DLG constraints:" + states);
    }
    return std::nullopt;
  }

  namespace {

    PumpingCertificate build_certificate(SolutionGraph const& g, std::vector<std::size_t> const& prefix,
                                         NiceState const& nice, std::vector<std::size_t> const& rest) {
      ConstraintMorphism const& mu = g.instance.mu;
      PumpingCertificate        cert;
      cert.prefix_path = labels_of(g, prefix);
      cert.state       = ConstrainedEquation::of(g.states[nice.state]);
      cert.variable    = nice.variable;

      // The base solution at E' spelled by the remaining path.
      std::size_t const n     = g.instance.symbols.num_variables();
      std::vector<Word> words = replay(n, labels_of(g, rest));
      for (std::uint32_t x = 0; x < n; ++x) {
        if (cert.state.var_images[x] != no_image) {
          cert.base.assignment[x] = words[x];
        }
      }
      if (!solves_state(mu, cert.state, cert.base)) {
        fail(ErrorKind::internal_disagreement, "base path does not solve the nicely balanced state");
      }

      NiceWitness const& w = nice.witness;
      if (w.absent || w.v.empty()) {
        cert.kind = PumpCase::free_variable;
        cert.pump = preimage_pump(mu, cert.state.var_images[nice.variable]);
        if (!cert.pump) {
          fail(ErrorKind::internal_disagreement, "nicely balanced variable has a finite language");
        }
        cert.base.assignment[nice.variable] = cert.pump->instantiate(0);
      } else {
        cert.kind  = PumpCase::head_balanced;
        cert.v     = w.v;
        cert.omega = omega(mu.target(), eval1(mu, cert.state, w.v)).exponent;
      }
      return cert;
    }

  }  // namespace

  CertificateSearch pumping_certificate(SolutionGraph const& g) {
    CertificateSearch search;
    if (g.empty() || !has_infinitely_many(g)) {
      return search;
    }

    auto const first = std::find_if(g.components.begin(), g.components.end(),
                                    [](Component const& c) { return c.has_transition; });
    std::size_t const c0    = first->states.front();
    auto const        cycle = shortest_cycle_through(g, c0);
    if (cycle) {
      if (auto nice = find_nicely_balanced_on_cycle(g, *cycle)) {
        // Accepting path: reach c0, run the cycle up to its last state, exit.
        std::vector<std::size_t> const on = path_states(g, *cycle, c0);
        std::size_t const last_state      = on[cycle->size() - 1];
        auto const to_cycle               = shortest_path(g, g.initial, c0);
        auto const exit                   = shortest_path_to_final(g, last_state);
        if (!to_cycle || !exit) {
          fail(ErrorKind::internal_disagreement, "trimmed graph lacks an accepting path through a cycle");
        }
        std::vector<std::size_t> prefix = *to_cycle;
        prefix.insert(prefix.end(), cycle->begin(), cycle->begin() + static_cast<std::ptrdiff_t>(nice->position));
        std::vector<std::size_t> rest(cycle->begin() + static_cast<std::ptrdiff_t>(nice->position),
                                      cycle->end() - 1);
        rest.insert(rest.end(), exit->begin(), exit->end());
        search.status      = CertificateSearch::Status::certified;
        search.certificate = build_certificate(g, prefix, *nice, rest);
        return search;
      }
    }

    // Outside DLG the chosen cycle may miss; try every state of every
    // nontrivial component.
    for (Component const& comp : g.components) {
      if (!comp.has_transition) {
        continue;
      }
      for (std::size_t p : comp.states) {
        for (std::uint32_t x : g.states[p].varset()) {
          auto w = is_nicely_balanced(g, p, x);
          if (!w) {
            continue;
          }
          auto const prefix = shortest_path(g, g.initial, p);
          auto const rest   = shortest_path_to_final(g, p);
          if (!prefix || !rest) {
            fail(ErrorKind::internal_disagreement, "trimmed graph lacks an accepting path");
          }
          search.status      = CertificateSearch::Status::certified;
          search.certificate = build_certificate(g, *prefix, NiceState{p, x, 0, std::move(*w)}, *rest);
          return search;
        }
      }
    }
    search.status = CertificateSearch::Status::not_found;
    return search;
  }

  CertificateSearch pumping_certificate(Instance const& instance) {
    return pumping_certificate(build_graph(instance));
  }

  Solution instantiate(Instance const& instance, PumpingCertificate const& cert, std::size_t m) {
    Solution local = cert.base;
    Word&    x     = local.assignment.at(cert.variable);
    if (cert.kind == PumpCase::head_balanced) {
      Word const  sv = cert.base.apply(cert.v);
      Word        pumped;
      std::size_t const reps = m * cert.omega;
      for (std::size_t i = 0; i < reps; ++i) {
        pumped.insert(pumped.end(), sv.begin(), sv.end());
      }
      pumped.insert(pumped.end(), x.begin(), x.end());
      x = std::move(pumped);
    } else {
      x = cert.pump->instantiate(m);
    }

    std::size_t const n     = instance.symbols.num_variables();
    std::vector<Word> words = replay(n, cert.prefix_path);
    Solution          sigma;
    for (std::uint32_t z = 0; z < n; ++z) {
      sigma.assignment[z] = local.apply(words[z]);
    }
    if (!is_solution(instance, sigma)) {
      fail(ErrorKind::theorem_violation, "pumped assignment " + format_solution(instance.symbols, sigma)
                                             + " is not a solution");
    }
    if (exp_solution(sigma) < m) {
      fail(ErrorKind::theorem_violation, "pumped solution has exponent below " + std::to_string(m));
    }
    return sigma;
  }

  std::optional<std::string> verify_certificate(Instance const& instance,
                                                PumpingCertificate const& cert) {
    ConstraintMorphism const&  mu = instance.mu;
    ConstrainedEquation const& e  = cert.state;
    std::size_t const          n  = instance.symbols.num_variables();
    if (e.var_images.size() != n) {
      return "state has the wrong number of variables";
    }
    for (element_type i : e.var_images) {
      if (i != no_image && i >= mu.target().size()) {
        return "state constraint out of range";
      }
    }
    if (cert.variable >= n || e.var_images[cert.variable] == no_image) {
      return "pumped variable is not active in the state";
    }
    for (Label const& l : cert.prefix_path) {
      if (l.kind != Label::Kind::epsilon
          && (l.variable >= n || (l.alpha.is_constant() ? l.alpha.index >= instance.symbols.num_constants()
                                                         : l.alpha.index >= n))) {
        return "prefix label mentions an unknown symbol";
      }
    }
    for (Word const* side : {&e.lhs, &e.rhs}) {
      for (Symbol a : *side) {
        if (a.is_constant() ? a.index >= instance.symbols.num_constants()
                            : (a.index >= n || e.var_images[a.index] == no_image)) {
          return "state mentions an unknown or inactive symbol";
        }
      }
    }
    if (e.is_true != (e.lhs.empty() && e.rhs.empty()) || (e.lhs.empty() != e.rhs.empty())) {
      return "malformed state";
    }

    // tau(U0) = p U' and tau(V0) = p V'.
    std::vector<Word> const words = replay(n, cert.prefix_path);
    Word const lhs = apply_words(words, instance.equation.lhs);
    Word const rhs = apply_words(words, instance.equation.rhs);
    if (lhs.size() < e.lhs.size() || rhs.size() < e.rhs.size()
        || lhs.size() - e.lhs.size() != rhs.size() - e.rhs.size()) {
      return "prefix path does not lead to the state";
    }
    std::size_t const cut = lhs.size() - e.lhs.size();
    if (!std::equal(lhs.begin(), lhs.begin() + static_cast<std::ptrdiff_t>(cut), rhs.begin())
        || !std::equal(e.lhs.begin(), e.lhs.end(), lhs.begin() + static_cast<std::ptrdiff_t>(cut))
        || !std::equal(e.rhs.begin(), e.rhs.end(), rhs.begin() + static_cast<std::ptrdiff_t>(cut))) {
      return "prefix path does not lead to the state";
    }
    for (std::uint32_t z = 0; z < n; ++z) {
      for (Symbol a : words[z]) {
        if (a.is_variable() && e.var_images[a.index] == no_image) {
          return "prefix image of a variable mentions an inactive variable";
        }
      }
      if (eval1(mu, e, words[z]) != mu.image(Symbol::variable(z))) {
        return "state constraints are incompatible with the prefix path";
      }
    }

    auto const w = is_nicely_balanced(mu, e, cert.variable);
    if (!w) {
      return "state is not nicely balanced with regard to the variable";
    }
    if (!solves_state(mu, e, cert.base)) {
      return "base does not solve the state";
    }
    bool const free = w->absent || w->v.empty();
    if (free != (cert.kind == PumpCase::free_variable)) {
      return "certificate case does not match the state";
    }
    if (free) {
      if (!cert.pump || cert.pump->y.empty()) {
        return "missing or degenerate pump";
      }
      for (std::size_t m = 0; m <= 3; ++m) {
        Word const word = cert.pump->instantiate(m);
        if (word.empty() || !is_constant_word(word) || mu.eval(word) != e.var_images[cert.variable]) {
          return "pump leaves the constraint language";
        }
      }
      if (cert.base.assignment.at(cert.variable) != cert.pump->instantiate(0)) {
        return "base does not start the pump";
      }
    } else {
      if (cert.v != w->v) {
        return "stabilizing word does not match the state";
      }
      if (cert.omega != omega(mu.target(), eval1(mu, e, cert.v)).exponent) {
        return "omega does not match the stabilizing word";
      }
    }
    return std::nullopt;
  }

  ExpDecision decide_exp_infinite_dlg(Instance const& instance) {
    require_quadratic(instance);
    if (!is_dlg(instance.mu.target()).dlg) {
      fail(ErrorKind::not_dlg, "constraints in " + instance.mu.target().label() + " are not in DLG");
    }
    SolutionGraph const g      = build_graph(instance);
    CertificateSearch   search = pumping_certificate(g);
    ExpDecision         d;
    switch (search.status) {
      case CertificateSearch::Status::finite: break;
      case CertificateSearch::Status::certified:
        d.infinite    = true;
        d.certificate = std::move(search.certificate);
        break;
      case CertificateSearch::Status::not_found:
        fail(ErrorKind::theorem_violation, "infinitely many solutions but no certificate");
    }
    return d;
  }

}  // namespace weq
