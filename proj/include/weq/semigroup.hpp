// Finite semigroups given by Cayley tables, Green's relations, omega powers,
// L-stabilizers and the variety predicates used by the periodicity machinery.

#ifndef WEQ_SEMIGROUP_HPP_
#define WEQ_SEMIGROUP_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace weq {

  using element_type = std::uint32_t;

  //! A finite semigroup stored as a multiplication table.
  //!
  //! Elements are the indices 0, ..., size() - 1; names are display only.
  //! Instances are immutable once constructed and every constructor path goes
  //! through from_table(), which verifies associativity exhaustively.
  class FiniteSemigroup {
   public:
    //! The empty semigroup.
    FiniteSemigroup() = default;

    //! Throws NonAssociative with the least violating triple, or BadIndex.
    static FiniteSemigroup from_table(std::vector<std::string>               names,
                                      std::vector<std::vector<element_type>> const& table,
                                      std::string                            label = "");

    std::size_t size() const noexcept {
      return names_.size();
    }

    element_type product(element_type x, element_type y) const noexcept {
      return table_[static_cast<std::size_t>(x) * size() + y];
    }

    std::string const& name(element_type x) const {
      return names_.at(x);
    }

    std::vector<std::string> const& names() const noexcept {
      return names_;
    }

    std::string const& label() const noexcept {
      return label_;
    }

    std::optional<element_type> find(std::string_view name) const;

    //! Set when the element was added by adjoin_identity / adjoin_zero.
    std::optional<element_type> adjoined_identity() const noexcept {
      return adjoined_identity_;
    }
    std::optional<element_type> adjoined_zero() const noexcept {
      return adjoined_zero_;
    }
    bool has_adjoined_identity() const noexcept {
      return adjoined_identity_.has_value();
    }
    bool has_adjoined_zero() const noexcept {
      return adjoined_zero_.has_value();
    }

    //! The least neutral element, if any (adjoined or not).
    std::optional<element_type> identity() const;
    //! The least absorbing element, if any (adjoined or not).
    std::optional<element_type> zero() const;

    bool is_idempotent(element_type x) const noexcept {
      return product(x, x) == x;
    }

    std::vector<std::vector<element_type>> rows() const;

    friend bool operator==(FiniteSemigroup const&, FiniteSemigroup const&) = default;

    friend FiniteSemigroup adjoin_identity(FiniteSemigroup const& s);
    friend FiniteSemigroup adjoin_zero(FiniteSemigroup const& s);

   private:
    std::vector<std::string>    names_;
    std::vector<element_type>   table_;
    std::string                 label_;
    std::optional<element_type> adjoined_identity_;
    std::optional<element_type> adjoined_zero_;
  };

  ////////////////////////////////////////////////////////////////////////
  // Omega powers
  ////////////////////////////////////////////////////////////////////////

  struct OmegaPower {
    element_type element;   // the idempotent power of x
    std::size_t  exponent;  // least k >= 1 with x^k idempotent
  };

  OmegaPower   omega(FiniteSemigroup const& s, element_type x);
  element_type power(FiniteSemigroup const& s, element_type x, std::size_t k);

  ////////////////////////////////////////////////////////////////////////
  // Green's relations
  ////////////////////////////////////////////////////////////////////////

  //! Square boolean matrix over the elements of a semigroup.
  class Relation {
   public:
    Relation() = default;
    explicit Relation(std::size_t n) : n_(n), bits_(n * n, 0) {}

    bool operator()(element_type x, element_type y) const noexcept {
      return bits_[static_cast<std::size_t>(x) * n_ + y] != 0;
    }
    void set(element_type x, element_type y) noexcept {
      bits_[static_cast<std::size_t>(x) * n_ + y] = 1;
    }
    std::size_t size() const noexcept {
      return n_;
    }

    friend bool operator==(Relation const&, Relation const&) = default;

   private:
    std::size_t               n_ = 0;
    std::vector<std::uint8_t> bits_;
  };

  //! Classes are sorted internally and ordered by their least element.
  struct Partition {
    std::vector<std::vector<element_type>> classes;
    std::vector<std::size_t>               class_of;

    bool same(element_type x, element_type y) const {
      return class_of[x] == class_of[y];
    }
    std::vector<element_type> const& class_containing(element_type x) const {
      return classes[class_of[x]];
    }

    friend bool operator==(Partition const&, Partition const&) = default;
  };

  //! The partition induced by an equivalence relation.
  Partition partition_of(Relation const& equivalence);

  struct GreenData {
    Relation  leq_L;  // x <=_L y  iff  S^1 x is contained in S^1 y
    Relation  leq_R;
    Relation  leq_J;
    Partition L;
    Partition R;
    Partition J;
    Partition H;
    Partition D;  // computed as L o R, checked against J
    std::vector<bool> regular_D;  // indexed like D.classes

    bool L_equiv(element_type x, element_type y) const {
      return L.same(x, y);
    }
    bool R_equiv(element_type x, element_type y) const {
      return R.same(x, y);
    }
    bool J_equiv(element_type x, element_type y) const {
      return J.same(x, y);
    }
  };

  //! Throws InternalDisagreement if D computed as L o R differs from J.
  GreenData green(FiniteSemigroup const& s);

  ////////////////////////////////////////////////////////////////////////
  // L-stabilizers
  ////////////////////////////////////////////////////////////////////////

  //! Elements of S^1 are indexed 0, ..., s.size(); the index s.size() is the
  //! adjoined neutral element 1 (always adjoined, even if s is a monoid).
  inline element_type monoid_one(FiniteSemigroup const& s) noexcept {
    return static_cast<element_type>(s.size());
  }

  //! Product in S^1 using the indexing of monoid_one().
  element_type monoid_product(FiniteSemigroup const& s, element_type u, element_type x);

  //! u^omega in S^1 (1^omega = 1).
  element_type monoid_omega(FiniteSemigroup const& s, element_type u);

  //! {u in S^1 : u^omega x = x}, sorted, always containing monoid_one(s).
  std::vector<element_type> stab_L(FiniteSemigroup const& s, element_type x);

  //! Row x, column u is set iff u in stab_L(x).  size() x (size() + 1).
  std::vector<std::vector<bool>> stabilizer_table(FiniteSemigroup const& s);

  ////////////////////////////////////////////////////////////////////////
  // DLG and other varieties
  ////////////////////////////////////////////////////////////////////////

  struct DlgVerdict {
    bool dlg = true;

    // Lexicographically least violations of each characterization.
    std::optional<std::array<element_type, 2>> identity_xy;    // (xy)^w = y^w (xy)^w
    std::optional<std::array<element_type, 3>> identity_xyz;   // (xyz)^w = y^w (xyz)^w
    std::optional<std::array<element_type, 2>> identity_swap;  // (xy)^w = (yx)^w (xy)^w
    // x, y in a regular D-class with xy outside the class or x != y^w x.
    std::optional<std::array<element_type, 2>> right_group;

    // Least (x, u) with u x ~L x and u^w x != x.  Present iff !dlg.
    std::optional<std::array<element_type, 2>> stabilizer;
  };

  //! Evaluates all four characterizations and throws InternalDisagreement
  //! if they do not agree.
  DlgVerdict is_dlg(FiniteSemigroup const& s);

  //! e.g. "ba ~L a but b^ω·a = 0 ≠ a"; empty when there is no violation.
  std::string describe_witness(FiniteSemigroup const& s, DlgVerdict const& verdict);

  bool is_right_group(FiniteSemigroup const& s);

  struct VarietyReport {
    bool right_group;
    bool group;
    bool commutative;
    bool semilattice;
    bool j_trivial;
    bool l_trivial;
    bool nilpotent;
    bool duo;
    bool dlg;
    bool drg;
    bool do_;
    bool ds;

    std::vector<std::pair<std::string, bool>> entries() const;
  };

  VarietyReport variety_report(FiniteSemigroup const& s);

  ////////////////////////////////////////////////////////////////////////
  // Structure operations
  ////////////////////////////////////////////////////////////////////////

  FiniteSemigroup opposite(FiniteSemigroup const& s);
  //! The new neutral element is placed at index s.size().
  FiniteSemigroup adjoin_identity(FiniteSemigroup const& s);
  //! The new zero is placed at index s.size().
  FiniteSemigroup adjoin_zero(FiniteSemigroup const& s);
  FiniteSemigroup direct_product(FiniteSemigroup const& s, FiniteSemigroup const& t);

  //! Closure of the generators under multiplication, sorted.
  std::vector<element_type> subsemigroup(FiniteSemigroup const&        s,
                                         std::vector<element_type> const& generators);

  bool is_subsemigroup(FiniteSemigroup const& s, std::vector<element_type> const& subset);

  //! The subsemigroup on a closed subset, elements renumbered in subset order.
  FiniteSemigroup restrict_to(FiniteSemigroup const& s, std::vector<element_type> const& subset);

  bool is_ideal(FiniteSemigroup const& t, std::vector<element_type> const& subset);

  struct NilpotentExtension {
    bool        holds;
    std::size_t k;  // least k with T^k inside the subset; 0 when !holds
  };

  NilpotentExtension is_nilpotent_extension(FiniteSemigroup const&        t,
                                            std::vector<element_type> const& subset);

  //! A homomorphism T -> T with image in the ideal, fixing the ideal pointwise.
  //! The result maps every element of T to an element of the ideal.  Throws
  //! NotAnIdeal if the subset is not an ideal.
  std::optional<std::vector<element_type>> find_retraction(FiniteSemigroup const&        t,
                                                           std::vector<element_type> const& ideal);

}  // namespace weq

#endif  // WEQ_SEMIGROUP_HPP_
