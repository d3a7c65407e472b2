#include <algorithm>

#include "weq/error.hpp"
#include "weq/semigroup.hpp"

namespace weq {

  Partition partition_of(Relation const& equivalence) {
    std::size_t const n = equivalence.size();
    Partition         p;
    p.class_of.assign(n, n);
    for (element_type x = 0; x < n; ++x) {
      if (p.class_of[x] != n) {
        continue;
      }
      std::size_t const id = p.classes.size();
      p.classes.emplace_back();
      for (element_type y = x; y < n; ++y) {
        if (p.class_of[y] == n && equivalence(x, y)) {
          p.class_of[y] = id;
          p.classes.back().push_back(y);
        }
      }
    }
    return p;
  }

  namespace {

    Relation symmetric_part(Relation const& preorder) {
      Relation result(preorder.size());
      for (element_type x = 0; x < preorder.size(); ++x) {
        for (element_type y = 0; y < preorder.size(); ++y) {
          if (preorder(x, y) && preorder(y, x)) {
            result.set(x, y);
          }
        }
      }
      return result;
    }

  }  // namespace

  GreenData green(FiniteSemigroup const& s) {
    std::size_t const n = s.size();
    GreenData         g;
    g.leq_L = Relation(n);
    g.leq_R = Relation(n);
    g.leq_J = Relation(n);

    // S^1 y = {y} u Sy, y S^1 = {y} u yS and S^1 y S^1 = {y} u Sy u yS u SyS.
    for (element_type y = 0; y < n; ++y) {
      g.leq_L.set(y, y);
      g.leq_R.set(y, y);
      g.leq_J.set(y, y);
      for (element_type a = 0; a < n; ++a) {
        element_type const ay = s.product(a, y);
        element_type const ya = s.product(y, a);
        g.leq_L.set(ay, y);
        g.leq_R.set(ya, y);
        g.leq_J.set(ay, y);
        g.leq_J.set(ya, y);
        for (element_type b = 0; b < n; ++b) {
          g.leq_J.set(s.product(ay, b), y);
        }
      }
    }

    Relation const eq_L = symmetric_part(g.leq_L);
    Relation const eq_R = symmetric_part(g.leq_R);
    Relation const eq_J = symmetric_part(g.leq_J);

    Relation eq_H(n);
    Relation eq_D(n);
    for (element_type x = 0; x < n; ++x) {
      for (element_type y = 0; y < n; ++y) {
        if (eq_L(x, y) && eq_R(x, y)) {
          eq_H.set(x, y);
        }
        for (element_type z = 0; z < n; ++z) {
          if (eq_L(x, z) && eq_R(z, y)) {
            eq_D.set(x, y);
            break;
          }
        }
      }
    }
    if (!(eq_D == eq_J)) {
      fail(ErrorKind::internal_disagreement, "D computed as L o R differs from J");
    }

    g.L = partition_of(eq_L);
    g.R = partition_of(eq_R);
    g.J = partition_of(eq_J);
    g.H = partition_of(eq_H);
    g.D = partition_of(eq_D);

    for (auto const& cls : g.D.classes) {
      g.regular_D.push_back(std::any_of(cls.begin(), cls.end(), [&s](element_type x) {
        return s.is_idempotent(x);
      }));
    }
    return g;
  }

}  // namespace weq
