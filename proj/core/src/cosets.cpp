#include "groupoidal/cosets.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "groupoidal/errors.hpp"

namespace groupoidal {

using detail::set_contains;

bool is_atlas(const FiniteInverseSemigroup& s, const std::vector<int>& a) {
  auto aia = s.product_sets(s.product_sets(a, s.inverse_set(a)), a);
  return aia == a;
}

bool is_directed(const FiniteInverseSemigroup& s, const std::vector<int>& a) {
  if (a.empty()) {
    throw ValidationError("directedness is undefined for the empty set");
  }
  for (int x : a) {
    for (int y : a) {
      bool found = false;
      for (int c : a) {
        if (s.leq(c, x) && s.leq(c, y)) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

Coset coset_from_carrier(const FiniteInverseSemigroup& s, std::vector<int> carrier) {
  std::sort(carrier.begin(), carrier.end());
  carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
  if (carrier.empty()) {
    throw ValidationError("a coset cannot be empty");
  }
  if (s.up_closure(carrier) != carrier) {
    throw ValidationError("coset carrier is not upward closed");
  }
  if (!is_atlas(s, carrier)) {
    throw ValidationError("coset carrier fails the atlas law");
  }
  Coset c;
  c.subsemigroup = s.up_closure(s.product_sets(s.inverse_set(carrier), carrier));
  if (!is_closed_inverse_subsemigroup(s, c.subsemigroup)) {
    throw ValidationError("derived subsemigroup is not closed (internal)");
  }
  c.rep = carrier.front();
  if (!set_contains(c.subsemigroup, s.d(c.rep))) {
    throw ValidationError("coset representative has d outside H (internal)");
  }
  // the canonical pair reproduces the carrier
  if (s.up_closure(s.product_sets({c.rep}, c.subsemigroup)) != carrier) {
    throw ValidationError("canonical pair fails to reproduce the coset (internal)");
  }
  c.carrier = std::move(carrier);
  return c;
}

Coset left_coset(const FiniteInverseSemigroup& s, int rep, const std::vector<int>& h) {
  if (!set_contains(h, s.d(rep))) {
    throw ValidationError("left coset requires d(s) in H");
  }
  return coset_from_carrier(s, s.up_closure(s.product_sets({rep}, h)));
}

bool cosets_equal(const FiniteInverseSemigroup& s, const Coset& a, const Coset& b) {
  if (a.subsemigroup != b.subsemigroup) {
    throw ValidationError("coset equality requires cosets of the same H");
  }
  const bool via_test = set_contains(a.subsemigroup, s.mul(s.inv(a.rep), b.rep));
  const bool via_sets = a.carrier == b.carrier;
  if (via_test != via_sets) {
    throw ValidationError("coset equality routes disagree (internal)");
  }
  return via_test;
}

Coset coset_product(const FiniteInverseSemigroup& s, const Coset& a, const Coset& b,
                    std::size_t cap) {
  // <b^-1 H b, K>: the inverse subsemigroup generated, then shifted by ab
  // and closed upward.
  std::set<int> gen;
  for (int h : a.subsemigroup) {
    gen.insert(s.mul(s.mul(s.inv(b.rep), h), b.rep));
  }
  gen.insert(b.subsemigroup.begin(), b.subsemigroup.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(gen.begin(), gen.end());
    if (cur.size() > cap) {
      throw CapExceededError("generated subsemigroup exceeds cap");
    }
    for (int x : cur) {
      if (gen.insert(s.inv(x)).second) grew = true;
      for (int y : cur) {
        if (gen.insert(s.mul(x, y)).second) grew = true;
      }
    }
  }
  const int ab = s.mul(a.rep, b.rep);
  std::vector<int> shifted;
  for (int m : gen) shifted.push_back(s.mul(ab, m));
  return coset_from_carrier(s, s.up_closure(shifted));
}

Coset coset_meet(const FiniteInverseSemigroup& s, const std::vector<Coset>& parts) {
  if (parts.empty()) {
    throw ValidationError("meet of an empty family");
  }
  std::set<int> acc;
  for (const auto& c : parts) acc.insert(c.carrier.begin(), c.carrier.end());
  // smallest closed atlas containing the union: iterate X -> (X X^-1 X)up
  std::vector<int> x(acc.begin(), acc.end());
  while (true) {
    auto next = s.up_closure(s.product_sets(s.product_sets(x, s.inverse_set(x)), x));
    next = detail::set_union(next, x);
    if (next == x) break;
    x = std::move(next);
  }
  return coset_from_carrier(s, std::move(x));
}

Coset normalize_directed_subset(const FiniteInverseSemigroup& s,
                                const std::vector<int>& a) {
  if (!is_directed(s, a)) {
    throw ValidationError("input set is not directed");
  }
  auto c = coset_from_carrier(s, s.up_closure(a));
  if (!is_directed(s, c.carrier)) {
    throw ValidationError("up-closure of a directed set is not directed (internal)");
  }
  return c;
}

std::vector<Coset> meet_decomposition(const FiniteInverseSemigroup& s, const Coset& a) {
  const auto& carrier = a.carrier;
  const int n = static_cast<int>(carrier.size());
  // a ~ b iff some c in A lies below both; transitive inside an atlas
  std::vector<int> block(n, -1);
  int nblocks = 0;
  for (int i = 0; i < n; ++i) {
    if (block[i] >= 0) continue;
    block[i] = nblocks;
    for (int j = i + 1; j < n; ++j) {
      if (block[j] >= 0) continue;
      for (int c : carrier) {
        if (s.leq(c, carrier[i]) && s.leq(c, carrier[j])) {
          block[j] = nblocks;
          break;
        }
      }
    }
    ++nblocks;
  }
  // the relation must already be transitive; parts must be closed and directed
  std::vector<Coset> parts;
  for (int b = 0; b < nblocks; ++b) {
    std::vector<int> members;
    for (int i = 0; i < n; ++i) {
      if (block[i] == b) members.push_back(carrier[i]);
    }
    if (!is_directed(s, members)) {
      throw ValidationError("meet decomposition block is not directed (internal)");
    }
    parts.push_back(coset_from_carrier(s, members));
  }
  // meet of the blocks gives A back
  auto meet = coset_meet(s, parts);
  if (meet.carrier != a.carrier) {
    throw ValidationError("meet decomposition does not reassemble (internal)");
  }
  return parts;
}

// ------------------------------------------------------------ CosetSemigroup

CosetSemigroup CosetSemigroup::build(const FiniteInverseSemigroup& s,
                                     bool directed_only, std::size_t max_cosets,
                                     std::size_t table_threshold) {
  CosetSemigroup out;
  out.s_ = &s;
  out.directed_only_ = directed_only;
  std::set<std::vector<int>> carriers;
  for (const auto& h : enumerate_closed_inverse_subsemigroups(s, max_cosets)) {
    if (directed_only && !is_directed(s, h.carrier)) continue;
    for (int a = 0; a < s.size(); ++a) {
      if (!set_contains(h.carrier, s.d(a))) continue;
      carriers.insert(s.up_closure(s.product_sets({a}, h.carrier)));
      if (carriers.size() > max_cosets) {
        throw CapExceededError("coset count exceeds cap of " +
                               std::to_string(max_cosets));
      }
    }
  }
  std::vector<std::vector<int>> sorted(carriers.begin(), carriers.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) {
                     return a.size() != b.size() ? a.size() < b.size() : a < b;
                   });
  for (auto& c : sorted) {
    out.elements_.push_back(coset_from_carrier(s, std::move(c)));
  }
  const int n = out.size();
  out.inv_.resize(n);
  for (int i = 0; i < n; ++i) {
    const int j = out.index_of_carrier(s.inverse_set(out.elements_[i].carrier));
    if (j < 0) {
      throw ValidationError("coset inverse escaped the enumeration (internal)");
    }
    out.inv_[i] = j;
  }
  out.iota_.resize(s.size());
  for (int a = 0; a < s.size(); ++a) {
    out.iota_[a] = out.index_of_carrier(s.up_closure({a}));
    if (out.iota_[a] < 0) {
      throw ValidationError("principal coset missing from enumeration (internal)");
    }
  }
  out.zero_ = out.index_of_carrier(s.all_elements());
  if (static_cast<std::size_t>(n) <= table_threshold) {
    out.table_.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        auto p = coset_product(s, out.elements_[i], out.elements_[j]);
        const int k = out.index_of_carrier(p.carrier);
        if (k < 0) {
          throw ValidationError("coset product escaped the enumeration (internal)");
        }
        out.table_[i][j] = k;
      }
    }
  }
  return out;
}

CosetSemigroup CosetSemigroup::full(const FiniteInverseSemigroup& s,
                                    std::size_t max_cosets,
                                    std::size_t table_threshold) {
  return build(s, /*directed_only=*/false, max_cosets, table_threshold);
}

CosetSemigroup CosetSemigroup::directed(const FiniteInverseSemigroup& s,
                                        std::size_t max_cosets,
                                        std::size_t table_threshold) {
  return build(s, /*directed_only=*/true, max_cosets, table_threshold);
}

int CosetSemigroup::product(int a, int b) const {
  if (!table_.empty()) return table_[a][b];
  auto p = coset_product(*s_, elements_[a], elements_[b]);
  const int k = index_of_carrier(p.carrier);
  if (k < 0) {
    throw ValidationError("coset product escaped the enumeration (internal)");
  }
  return k;
}

int CosetSemigroup::index_of_carrier(const std::vector<int>& carrier) const {
  for (int i = 0; i < size(); ++i) {
    if (elements_[i].carrier == carrier) return i;
  }
  return -1;
}

bool CosetSemigroup::leq(int a, int b) const {
  return detail::is_sorted_subset(elements_[b].carrier, elements_[a].carrier);
}

FiniteInverseSemigroup CosetSemigroup::to_semigroup() const {
  const int n = size();
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  std::vector<int> inv = inv_;
  for (int i = 0; i < n; ++i) {
    std::string lab = "{";
    const auto& car = elements_[i].carrier;
    for (size_t k = 0; k < car.size(); ++k) {
      if (k) lab += ",";
      lab += s_->label(car[k]);
    }
    labels[i] = lab + "}";
    for (int j = 0; j < n; ++j) {
      mul[i][j] = product(i, j);
    }
  }
  return FiniteInverseSemigroup::from_table(std::move(mul), std::move(inv),
                                            std::move(labels), /*trusted=*/false);
}

TransitiveAction ks_schutzenberger_restricted(const CosetSemigroup& ks, int h_index) {
  const auto& s = ks.base();
  const auto& h = ks.coset(h_index);
  if (h.carrier != h.subsemigroup) {
    throw ValidationError("expected an idempotent coset");
  }
  // L-class of the idempotent H inside K(S): cosets A with A^-1 (x) A = H
  std::vector<int> points;
  for (int i = 0; i < ks.size(); ++i) {
    if (ks.product(ks.inverse(i), i) == h_index) points.push_back(i);
  }
  std::vector<int> pos(ks.size(), -1);
  for (size_t i = 0; i < points.size(); ++i) pos[points[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> act(s.size(), std::vector<int>(points.size(), -1));
  std::vector<std::string> labels;
  for (int p : points) labels.push_back("L" + std::to_string(p));
  for (int a = 0; a < s.size(); ++a) {
    const int ia = ks.iota(a);
    for (size_t i = 0; i < points.size(); ++i) {
      const int image = ks.product(ia, points[i]);
      if (pos[image] >= 0 && ks.product(ks.inverse(image), image) == h_index) {
        act[a][i] = pos[image];
      }
    }
  }
  return TransitiveAction(s, std::move(act), std::move(labels));
}

}  // namespace groupoidal
