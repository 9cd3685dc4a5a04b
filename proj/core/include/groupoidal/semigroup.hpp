#ifndef GROUPOIDAL_SEMIGROUP_HPP_
#define GROUPOIDAL_SEMIGROUP_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "groupoidal/partial_perm.hpp"

namespace groupoidal {

// Multiplication table of a finite group, with exhaustively verified axioms.
struct GroupTable {
  int size = 0;
  std::vector<std::vector<int>> mul;
  int identity = 0;
  std::vector<int> inv;
  std::vector<std::string> labels;

  static GroupTable from_mul(std::vector<std::vector<int>> mul,
                             std::vector<std::string> labels = {});

  int product(int a, int b) const { return mul[a][b]; }
  int order_of(int a) const;
  int exponent() const;
  bool is_abelian() const;
  // Sorted multiset of element orders; cheap isomorphism invariant.
  std::vector<int> order_sequence() const;
};

// Green's relations as class indices per element plus sorted class lists.
struct GreenData {
  std::vector<int> l_class, r_class, h_class, d_class, j_class;
  std::vector<std::vector<int>> l_classes, r_classes, h_classes, d_classes, j_classes;
};

// A finite inverse semigroup given by its multiplication table. Validated on
// construction: associativity, s * inv(s) * s == s, commuting idempotents.
// Immutable afterwards; all queries are pure reads.
class FiniteInverseSemigroup {
 public:
  // If inv is absent it is recovered as the unique t with sts = s, tst = t.
  // trusted skips the O(n^3) associativity scan (for tables we computed
  // ourselves, e.g. closures and subtables).
  static FiniteInverseSemigroup from_table(std::vector<std::vector<int>> mul,
                                           std::optional<std::vector<int>> inv = std::nullopt,
                                           std::vector<std::string> labels = {},
                                           bool trusted = false);

  // Closure of the generators under composition and inversion; elements are
  // interned by their canonical image arrays.
  static FiniteInverseSemigroup from_generators(const std::vector<PartialPerm>& gens,
                                                std::size_t element_cap = 1000000);

  int size() const { return n_; }
  int mul(int s, int t) const { return mul_[s][t]; }
  int inv(int s) const { return inv_[s]; }
  int d(int s) const { return d_[s]; }  // inv(s) * s
  int r(int s) const { return r_[s]; }  // s * inv(s)
  bool is_idempotent(int s) const { return mul_[s][s] == s; }
  const std::vector<int>& idempotents() const { return idempotents_; }
  std::optional<int> zero() const { return zero_; }

  // Natural partial order: s <= t iff s == t * d(s).
  bool leq(int s, int t) const { return mul_[t][d_[s]] == s; }
  bool lt(int s, int t) const { return s != t && leq(s, t); }

  const std::string& label(int s) const { return labels_[s]; }
  const std::vector<std::string>& labels() const { return labels_; }

  const GreenData& green() const { return green_; }

  // --- element-set helpers (sets are sorted unique index vectors) ---
  std::vector<int> up_closure(const std::vector<int>& a) const;
  std::vector<int> product_sets(const std::vector<int>& a, const std::vector<int>& b) const;
  std::vector<int> inverse_set(const std::vector<int>& a) const;
  std::vector<int> all_elements() const;

  // Maximal subgroup at the idempotent e (its H-class). embedding, when
  // non-null, receives the global index of each group element.
  GroupTable maximal_subgroup(int e, std::vector<int>* embedding = nullptr) const;

  // Minimum group congruence sigma: a sigma b iff some c <= a, b. Returns the
  // quotient group and the class index of each element.
  const GroupTable& sigma_group() const { return sigma_group_; }
  const std::vector<int>& sigma_class() const { return sigma_class_; }

  // Subsemigroup on a carrier closed under product and inverse, reindexed
  // densely in carrier order.
  FiniteInverseSemigroup subsemigroup(const std::vector<int>& carrier) const;

  // Present when built from generators, in element-index order.
  const std::vector<PartialPerm>* partial_perms() const {
    return elements_.empty() ? nullptr : &elements_;
  }
  // Index of a partial perm, or -1.
  int index_of(const PartialPerm& p) const;
  // Index of a label, or -1.
  int index_of_label(const std::string& label) const;

 private:
  FiniteInverseSemigroup() = default;
  void validate_table(bool trusted);  // associativity, commuting idempotents
  void validate(bool trusted);        // inverse axioms
  void finalize();                    // idempotents, zero, d/r, green, sigma

  int n_ = 0;
  std::vector<std::vector<int>> mul_;
  std::vector<int> inv_;
  std::vector<int> d_, r_;
  std::vector<int> idempotents_;
  std::optional<int> zero_;
  std::vector<std::string> labels_;
  GreenData green_;
  GroupTable sigma_group_;
  std::vector<int> sigma_class_;
  std::vector<PartialPerm> elements_;  // only for generator-built semigroups
};

// Brute-force isomorphism search with an order-sequence prefilter; intended
// for the small groups showing up as local groups and maximal subgroups.
std::optional<std::vector<int>> find_group_isomorphism(const GroupTable& a,
                                                       const GroupTable& b);
bool groups_isomorphic(const GroupTable& a, const GroupTable& b);

// All subgroups as sorted element-index sets, deterministically ordered.
std::vector<std::vector<int>> enumerate_subgroups(const GroupTable& g);

namespace detail {
bool is_sorted_subset(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> set_intersect(const std::vector<int>& a, const std::vector<int>& b);
bool set_contains(const std::vector<int>& a, int x);
}  // namespace detail

}  // namespace groupoidal

#endif  // GROUPOIDAL_SEMIGROUP_HPP_
