#ifndef GROUPOIDAL_COSETS_HPP_
#define GROUPOIDAL_COSETS_HPP_

#include <cstddef>
#include <vector>

#include "groupoidal/actions.hpp"
#include "groupoidal/order.hpp"
#include "groupoidal/semigroup.hpp"

namespace groupoidal {

// A = AA^-1A?
bool is_atlas(const FiniteInverseSemigroup& s, const std::vector<int>& a);

// Non-empty and every pair has a lower bound inside the set?
bool is_directed(const FiniteInverseSemigroup& s, const std::vector<int>& a);

// A closed atlas (sH)up, stored with its canonical pair: the subsemigroup
// H = (A^-1 A)up and the minimum representative.
struct Coset {
  std::vector<int> carrier;       // sorted
  std::vector<int> subsemigroup;  // H, sorted
  int rep = -1;                   // min element of the carrier; d(rep) in H
};

// Validates the atlas law, upward closure, and that (rep, H) reproduces the
// carrier.
Coset coset_from_carrier(const FiniteInverseSemigroup& s, std::vector<int> carrier);

// (sH)up; requires d(s) in H.
Coset left_coset(const FiniteInverseSemigroup& s, int rep, const std::vector<int>& h);

// Equality via the s^-1 t in H test, cross-checked against carrier equality.
bool cosets_equal(const FiniteInverseSemigroup& s, const Coset& a, const Coset& b);

// The product A (x) B = (ab<b^-1 H b, K>)up by the generation formula.
Coset coset_product(const FiniteInverseSemigroup& s, const Coset& a, const Coset& b,
                    std::size_t cap = 1000000);

// Meet of a non-empty family under reverse inclusion: the smallest coset
// containing the union, by closure iteration.
Coset coset_meet(const FiniteInverseSemigroup& s, const std::vector<Coset>& parts);

// Up-closure of a directed subset; the normal form of Lenz's equivalence.
Coset normalize_directed_subset(const FiniteInverseSemigroup& s,
                                const std::vector<int>& a);

// Blocks of a ~ b iff some c in A lies below both; each block is a directed
// coset, all H-equivalent, and their meet is A.
std::vector<Coset> meet_decomposition(const FiniteInverseSemigroup& s, const Coset& a);

// The coset semigroup K(S) (all cosets of all closed inverse subsemigroups)
// or its inverse subsemigroup L(S) of directed cosets. The product table is
// materialized below table_threshold and computed per pair otherwise.
class CosetSemigroup {
 public:
  static CosetSemigroup full(const FiniteInverseSemigroup& s,
                             std::size_t max_cosets = 100000,
                             std::size_t table_threshold = 512);
  static CosetSemigroup directed(const FiniteInverseSemigroup& s,
                                 std::size_t max_cosets = 100000,
                                 std::size_t table_threshold = 2048);

  const FiniteInverseSemigroup& base() const { return *s_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const Coset& coset(int i) const { return elements_[i]; }
  const std::vector<Coset>& elements() const { return elements_; }

  int product(int a, int b) const;
  int inverse(int a) const { return inv_[a]; }
  int iota(int s) const { return iota_[s]; }  // index of s-up
  int index_of_carrier(const std::vector<int>& carrier) const;  // -1 if absent
  int zero_index() const { return zero_; }    // the coset S
  bool directed_only() const { return directed_only_; }

  // Natural partial order of K(S) is reverse inclusion of carriers.
  bool leq(int a, int b) const;

  // Table form, with carrier labels; requires the materialized table.
  FiniteInverseSemigroup to_semigroup() const;

 private:
  CosetSemigroup() = default;
  static CosetSemigroup build(const FiniteInverseSemigroup& s, bool directed_only,
                              std::size_t max_cosets, std::size_t table_threshold);

  const FiniteInverseSemigroup* s_ = nullptr;
  bool directed_only_ = false;
  std::vector<Coset> elements_;  // sorted by (size, carrier)
  std::vector<int> inv_;
  std::vector<int> iota_;
  std::vector<std::vector<int>> table_;  // empty when lazy
  int zero_ = -1;
};

// Restriction along iota of the Schutzenberger action of K(S) on the
// L-class of the idempotent coset H; equals the action of S on S/H.
TransitiveAction ks_schutzenberger_restricted(const CosetSemigroup& ks, int h_index);

}  // namespace groupoidal

#endif  // GROUPOIDAL_COSETS_HPP_
