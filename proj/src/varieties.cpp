#include <algorithm>
#include <set>

#include "weq/error.hpp"
#include "weq/semigroup.hpp"

namespace weq {

  namespace {

    std::vector<element_type> omegas(FiniteSemigroup const& s) {
      std::vector<element_type> result;
      result.reserve(s.size());
      for (element_type x = 0; x < s.size(); ++x) {
        result.push_back(omega(s, x).element);
      }
      return result;
    }

    std::optional<std::array<element_type, 2>> right_group_violation(FiniteSemigroup const& s,
                                                                     GreenData const&       g,
                                                                     std::vector<element_type> const& om) {
      for (element_type x = 0; x < s.size(); ++x) {
        std::size_t const d = g.D.class_of[x];
        if (!g.regular_D[d]) {
          continue;
        }
        for (element_type y = 0; y < s.size(); ++y) {
          if (g.D.class_of[y] != d) {
            continue;
          }
          if (g.D.class_of[s.product(x, y)] != d || s.product(om[y], x) != x) {
            return std::array<element_type, 2>{x, y};
          }
        }
      }
      return std::nullopt;
    }

    bool regular_D_classes_closed(FiniteSemigroup const& s, GreenData const& g, bool idempotents_too) {
      for (std::size_t d = 0; d < g.D.classes.size(); ++d) {
        if (!g.regular_D[d]) {
          continue;
        }
        auto const& cls = g.D.classes[d];
        for (element_type x : cls) {
          for (element_type y : cls) {
            element_type const xy = s.product(x, y);
            if (g.D.class_of[xy] != d) {
              return false;
            }
            if (idempotents_too && s.is_idempotent(x) && s.is_idempotent(y) && !s.is_idempotent(xy)) {
              return false;
            }
          }
        }
      }
      return true;
    }

  }  // namespace

  DlgVerdict is_dlg(FiniteSemigroup const& s) {
    std::size_t const               n  = s.size();
    std::vector<element_type> const om = omegas(s);
    GreenData const                 g  = green(s);
    DlgVerdict                      v;

    for (element_type x = 0; x < n && !v.identity_xy; ++x) {
      for (element_type y = 0; y < n; ++y) {
        element_type const e = om[s.product(x, y)];
        if (e != s.product(om[y], e)) {
          v.identity_xy = {x, y};
          break;
        }
      }
    }
    for (element_type x = 0; x < n && !v.identity_xyz; ++x) {
      for (element_type y = 0; y < n && !v.identity_xyz; ++y) {
        for (element_type z = 0; z < n; ++z) {
          element_type const e = om[s.product(s.product(x, y), z)];
          if (e != s.product(om[y], e)) {
            v.identity_xyz = {x, y, z};
            break;
          }
        }
      }
    }
    for (element_type x = 0; x < n && !v.identity_swap; ++x) {
      for (element_type y = 0; y < n; ++y) {
        element_type const e = om[s.product(x, y)];
        if (e != s.product(om[s.product(y, x)], e)) {
          v.identity_swap = {x, y};
          break;
        }
      }
    }
    v.right_group = right_group_violation(s, g, om);

    bool const c1 = !v.identity_xy;
    bool const c2 = !v.identity_xyz;
    bool const c3 = !v.identity_swap;
    bool const c4 = !v.right_group;
    if (c1 != c2 || c2 != c3 || c3 != c4) {
      fail(ErrorKind::internal_disagreement, "DLG characterizations disagree on " + s.label());
    }
    v.dlg = c1;

    for (element_type x = 0; x < n && !v.stabilizer; ++x) {
      for (element_type u = 0; u < n; ++u) {
        if (g.L_equiv(s.product(u, x), x) && s.product(om[u], x) != x) {
          v.stabilizer = {x, u};
          break;
        }
      }
    }
    if (v.stabilizer.has_value() == v.dlg) {
      fail(ErrorKind::internal_disagreement,
           "stabilizer characterization of DLG disagrees with the identities on " + s.label());
    }
    return v;
  }

  std::string describe_witness(FiniteSemigroup const& s, DlgVerdict const& verdict) {
    if (!verdict.stabilizer) {
      return "";
    }
    auto const [x, u]  = *verdict.stabilizer;
    element_type const ux    = s.product(u, x);
    element_type const image = s.product(omega(s, u).element, x);
    return s.name(ux) + " ~L " + s.name(x) + " but " + s.name(u) + "^ω·" + s.name(x) + " = "
           + s.name(image) + " ≠ " + s.name(x);
  }

  bool is_right_group(FiniteSemigroup const& s) {
    std::vector<element_type> const om = omegas(s);
    bool                            by_identity = true;
    for (element_type x = 0; x < s.size() && by_identity; ++x) {
      for (element_type y = 0; y < s.size(); ++y) {
        if (s.product(om[y], x) != x) {
          by_identity = false;
          break;
        }
      }
    }
    // Right simple: all elements are R-equivalent.
    GreenData const g           = green(s);
    bool const      right_simple = g.R.classes.size() <= 1;
    if (by_identity != right_simple) {
      fail(ErrorKind::internal_disagreement,
           "right group identity disagrees with right simplicity on " + s.label());
    }
    return by_identity;
  }

  std::vector<std::pair<std::string, bool>> VarietyReport::entries() const {
    return {{"right_group", right_group},
            {"group", group},
            {"commutative", commutative},
            {"semilattice", semilattice},
            {"J_trivial", j_trivial},
            {"L_trivial", l_trivial},
            {"nilpotent", nilpotent},
            {"duo", duo},
            {"dlg", dlg},
            {"drg", drg},
            {"do", do_},
            {"ds", ds}};
  }

  VarietyReport variety_report(FiniteSemigroup const& s) {
    std::size_t const               n  = s.size();
    std::vector<element_type> const om = omegas(s);
    GreenData const                 g  = green(s);
    VarietyReport                   r{};

    r.right_group = is_right_group(s);
    bool left_group = true;
    for (element_type x = 0; x < n && left_group; ++x) {
      for (element_type y = 0; y < n; ++y) {
        if (s.product(x, om[y]) != x) {
          left_group = false;
          break;
        }
      }
    }
    r.group = r.right_group && left_group;

    r.commutative = true;
    for (element_type x = 0; x < n && r.commutative; ++x) {
      for (element_type y = 0; y < n; ++y) {
        if (s.product(x, y) != s.product(y, x)) {
          r.commutative = false;
          break;
        }
      }
    }
    bool all_idempotent = true;
    for (element_type x = 0; x < n; ++x) {
      all_idempotent = all_idempotent && s.is_idempotent(x);
    }
    r.semilattice = r.commutative && all_idempotent;
    r.j_trivial   = g.J.classes.size() == n;
    r.l_trivial   = g.L.classes.size() == n;

    if (n == 0) {
      r.nilpotent = true;
    } else if (auto const z = s.zero()) {
      std::vector<element_type> current(n);
      for (element_type x = 0; x < n; ++x) {
        current[x] = x;
      }
      // S^{k+1} = S^k S is contained in S^k; iterate until it stabilizes.
      while (true) {
        std::set<element_type> next;
        for (element_type x : current) {
          for (element_type y = 0; y < n; ++y) {
            next.insert(s.product(x, y));
          }
        }
        std::vector<element_type> nv(next.begin(), next.end());
        if (nv == current) {
          break;
        }
        current = std::move(nv);
      }
      r.nilpotent = current.size() == 1 && current.front() == *z;
    } else {
      r.nilpotent = false;
    }

    r.duo = true;
    for (element_type x = 0; x < n && r.duo; ++x) {
      std::set<element_type> right{x};
      std::set<element_type> left{x};
      for (element_type y = 0; y < n; ++y) {
        right.insert(s.product(x, y));
        left.insert(s.product(y, x));
      }
      r.duo = right == left;
    }

    r.dlg = is_dlg(s).dlg;
    r.drg = is_dlg(opposite(s)).dlg;
    r.ds  = regular_D_classes_closed(s, g, false);
    r.do_ = regular_D_classes_closed(s, g, true);
    return r;
  }

}  // namespace weq
