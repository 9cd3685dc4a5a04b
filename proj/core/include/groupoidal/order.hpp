#ifndef GROUPOIDAL_ORDER_HPP_
#define GROUPOIDAL_ORDER_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "groupoidal/semigroup.hpp"

namespace groupoidal {

// A filter in E(S): non-empty, up-closed within E(S), closed under meets.
// For finite S every filter is principal; min is its generating idempotent.
struct Filter {
  std::vector<int> carrier;  // sorted idempotent indices
  int min = -1;
};

// An up-closed inverse subsemigroup of S.
struct ClosedInverseSubsemigroup {
  std::vector<int> carrier;  // sorted
  bool is_proper = true;     // contains no zero of S
};

bool is_filter(const FiniteInverseSemigroup& s, const std::vector<int>& carrier);
Filter make_filter(const FiniteInverseSemigroup& s, std::vector<int> carrier);
Filter principal_filter(const FiniteInverseSemigroup& s, int e);

// All filters in E(S). Each is checked to be principal with a unique minimum.
std::vector<Filter> enumerate_filters(const FiniteInverseSemigroup& s);

bool is_closed_inverse_subsemigroup(const FiniteInverseSemigroup& s,
                                    const std::vector<int>& carrier);
ClosedInverseSubsemigroup make_cis(const FiniteInverseSemigroup& s,
                                   std::vector<int> carrier);

// F-bar: everything whose conjugation fixes F; the largest closed inverse
// subsemigroup with idempotent set F.
ClosedInverseSubsemigroup bar_closure(const FiniteInverseSemigroup& s,
                                      const Filter& f);

// The up-closure of F taken in S; the smallest such subsemigroup.
ClosedInverseSubsemigroup filter_up_in_s(const FiniteInverseSemigroup& s,
                                         const Filter& f);

// Closure of a seed set under product, inverse and up-closure.
std::vector<int> close_up_inverse(const FiniteInverseSemigroup& s,
                                  std::vector<int> seed,
                                  std::size_t cap = 1000000);

// Complete list of closed inverse subsemigroups, by breadth-first closure of
// growing seeds; deterministic order (carrier size, then lexicographic).
std::vector<ClosedInverseSubsemigroup> enumerate_closed_inverse_subsemigroups(
    const FiniteInverseSemigroup& s, std::size_t cap = 1000000);

// Witness s with (sHs^-1)up = K and (s^-1Ks)up = H, if one exists.
std::optional<int> conjugacy_witness(const FiniteInverseSemigroup& s,
                                     const std::vector<int>& h,
                                     const std::vector<int>& k);

// The inclusion-preserving bijection between wide closed inverse
// subsemigroups of S and subgroups of S/sigma.
struct WideSubgroupPair {
  ClosedInverseSubsemigroup wide;
  std::vector<int> subgroup;  // element indices in S/sigma
};
std::vector<WideSubgroupPair> wide_subsemigroups_vs_subgroups(
    const FiniteInverseSemigroup& s);

}  // namespace groupoidal

#endif  // GROUPOIDAL_ORDER_HPP_
