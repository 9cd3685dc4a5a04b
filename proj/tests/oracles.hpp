#ifndef GROUPOIDAL_TESTS_ORACLES_HPP_
#define GROUPOIDAL_TESTS_ORACLES_HPP_

// Brute-force reference computations used to pin expected values. These stay
// independent of the library code paths they certify.

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "groupoidal/actions.hpp"
#include "groupoidal/partial_perm.hpp"
#include "groupoidal/semigroup.hpp"

namespace oracle {

// Every injective partial map on {1..n}, by direct odometer enumeration.
inline std::vector<groupoidal::PartialPerm> all_partial_perms(int n) {
  std::vector<groupoidal::PartialPerm> out;
  std::vector<int> images(n, 0);
  while (true) {
    bool injective = true;
    std::vector<bool> seen(n + 1, false);
    for (int v : images) {
      if (v != 0) {
        if (seen[v]) injective = false;
        seen[v] = true;
      }
    }
    if (injective) {
      out.push_back(groupoidal::PartialPerm::from_images(images));
    }
    int k = 0;
    while (k < n && images[k] == n) {
      images[k] = 0;
      ++k;
    }
    if (k == n) break;
    ++images[k];
  }
  return out;
}

// All subsets of S (|S| small) that are up-closed inverse subsemigroups,
// found by raw powerset filtering.
inline std::vector<std::vector<int>> closed_inverse_subsemigroups_powerset(
    const groupoidal::FiniteInverseSemigroup& s) {
  const int n = s.size();
  std::vector<std::vector<int>> out;
  for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
    std::vector<int> carrier;
    for (int i = 0; i < n; ++i) {
      if (mask & (1ul << i)) carrier.push_back(i);
    }
    bool ok = true;
    for (int a : carrier) {
      if (!std::binary_search(carrier.begin(), carrier.end(), s.inv(a))) ok = false;
      for (int b : carrier) {
        if (!std::binary_search(carrier.begin(), carrier.end(), s.mul(a, b))) ok = false;
      }
      for (int t = 0; t < n && ok; ++t) {
        if (s.leq(a, t) && !std::binary_search(carrier.begin(), carrier.end(), t)) {
          ok = false;
        }
      }
      if (!ok) break;
    }
    if (ok) out.push_back(std::move(carrier));
  }
  return out;
}

// All filters in E(S) by powerset filtering: non-empty, up-closed within E,
// closed under meets.
inline std::vector<std::vector<int>> filters_powerset(
    const groupoidal::FiniteInverseSemigroup& s) {
  const auto& es = s.idempotents();
  const int k = static_cast<int>(es.size());
  std::vector<std::vector<int>> out;
  for (unsigned long mask = 1; mask < (1ul << k); ++mask) {
    std::vector<int> carrier;
    for (int i = 0; i < k; ++i) {
      if (mask & (1ul << i)) carrier.push_back(es[i]);
    }
    bool ok = true;
    for (int a : carrier) {
      for (int b : carrier) {
        if (!std::binary_search(carrier.begin(), carrier.end(), s.mul(a, b))) ok = false;
      }
      for (int e : es) {
        if (s.leq(a, e) && !std::binary_search(carrier.begin(), carrier.end(), e)) {
          ok = false;
        }
      }
      if (!ok) break;
    }
    if (ok) out.push_back(std::move(carrier));
  }
  return out;
}

// All cosets (closed atlases) by raw powerset filtering; |S| must be small.
inline std::vector<std::vector<int>> cosets_powerset(
    const groupoidal::FiniteInverseSemigroup& s) {
  const int n = s.size();
  std::vector<std::vector<int>> out;
  for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
    std::vector<int> a;
    for (int i = 0; i < n; ++i) {
      if (mask & (1ul << i)) a.push_back(i);
    }
    // upward closed?
    bool ok = true;
    for (int x : a) {
      for (int t = 0; t < n && ok; ++t) {
        if (s.leq(x, t) && !std::binary_search(a.begin(), a.end(), t)) ok = false;
      }
    }
    if (!ok) continue;
    // atlas law A = A A^-1 A, elementwise
    std::set<int> prod;
    for (int x : a) {
      for (int y : a) {
        for (int z : a) {
          prod.insert(s.mul(s.mul(x, s.inv(y)), z));
        }
      }
    }
    if (std::vector<int>(prod.begin(), prod.end()) == a) out.push_back(a);
  }
  return out;
}

// The product of the paper: intersection of all cosets containing AB.
inline std::vector<int> coset_product_intersection(
    const groupoidal::FiniteInverseSemigroup& s,
    const std::vector<std::vector<int>>& all_cosets, const std::vector<int>& a,
    const std::vector<int>& b) {
  std::set<int> ab;
  for (int x : a) {
    for (int y : b) ab.insert(s.mul(x, y));
  }
  std::vector<int> result;
  bool first = true;
  for (const auto& z : all_cosets) {
    if (!std::includes(z.begin(), z.end(), ab.begin(), ab.end())) continue;
    if (first) {
      result = z;
      first = false;
    } else {
      result = groupoidal::detail::set_intersect(result, z);
    }
  }
  return result;
}

// Every map X -> Y satisfying the (strong) morphism axioms, by raw search
// over all |Y|^|X| vertex maps. Feasible for <= 6 points.
inline std::vector<std::vector<int>> all_morphisms(
    const groupoidal::TransitiveAction& x, const groupoidal::TransitiveAction& y,
    bool strong) {
  std::vector<std::vector<int>> out;
  std::vector<int> map(x.points(), 0);
  while (true) {
    const bool ok = strong ? groupoidal::is_strong_morphism(x, y, map)
                           : groupoidal::is_morphism(x, y, map);
    if (ok) out.push_back(map);
    int k = 0;
    while (k < x.points() && map[k] + 1 == y.points()) {
      map[k] = 0;
      ++k;
    }
    if (k == x.points()) break;
    ++map[k];
  }
  return out;
}

// All strong congruences on X by enumerating every partition of the points
// (restricted growth strings; Bell(6) = 203).
inline std::vector<std::vector<int>> strong_congruences_by_partitions(
    const groupoidal::TransitiveAction& x) {
  const int n = x.points();
  const auto& s = x.semigroup();
  std::vector<std::vector<int>> out;
  std::vector<int> block(n, 0);
  auto is_strong_congruence = [&](const std::vector<int>& b) {
    for (int p = 0; p < n; ++p) {
      for (int q = 0; q < n; ++q) {
        if (b[p] != b[q]) continue;
        for (int a = 0; a < s.size(); ++a) {
          const bool dp = x.defined(a, p), dq = x.defined(a, q);
          if (dp != dq) return false;
          if (dp && b[x.act(a, p)] != b[x.act(a, q)]) return false;
        }
      }
    }
    return true;
  };
  // restricted growth: block[0] = 0, block[k] <= max(block[0..k-1]) + 1
  std::function<void(int, int)> rec = [&](int k, int maxb) {
    if (k == n) {
      if (is_strong_congruence(block)) out.push_back(block);
      return;
    }
    for (int b = 0; b <= maxb + 1; ++b) {
      block[k] = b;
      rec(k + 1, std::max(maxb, b));
    }
  };
  rec(1, 0);
  return out;
}

}  // namespace oracle

#endif  // GROUPOIDAL_TESTS_ORACLES_HPP_
