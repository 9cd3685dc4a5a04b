#include <algorithm>
#include <set>

#include "doctest.h"
#include "groupoidal/builtins.hpp"
#include "groupoidal/errors.hpp"
#include "groupoidal/order.hpp"
#include "oracles.hpp"

using namespace groupoidal;

namespace {

const FiniteInverseSemigroup& i2() {
  static FiniteInverseSemigroup s = inverse_symmetric(2);
  return s;
}

int el(const FiniteInverseSemigroup& s, const std::string& label) {
  int i = s.index_of_label(label);
  REQUIRE(i >= 0);
  return i;
}

std::vector<const FiniteInverseSemigroup*> corpus() {
  static auto s1 = inverse_symmetric(1);
  static auto s2 = inverse_symmetric(2);
  static auto c2 = chain_semilattice(2);
  static auto c3 = chain_semilattice(3);
  static auto b2 = brandt(cyclic_group(1), 2);
  static auto z2e = adjoin_identity(group_as_semigroup(cyclic_group(2)));
  return {&s1, &s2, &c2, &c3, &b2, &z2e};
}

}  // namespace

TEST_SUITE("order") {

TEST_CASE("up closure") {
  const auto& s = i2();
  int e1 = el(s, "[1,0]"), e12 = el(s, "[1,2]");
  CHECK(s.up_closure({e12}) == std::vector<int>{e12});
  // brute-force oracle: exhaustive natural_leq scan
  std::vector<int> expect;
  for (int x = 0; x < s.size(); ++x) {
    if (s.leq(e1, x)) expect.push_back(x);
  }
  CHECK(s.up_closure({e1}) == expect);
  CHECK(expect == std::vector<int>{std::min(e1, e12), std::max(e1, e12)});
  CHECK(s.up_closure({}).empty());
  // idempotent operator
  for (int x = 0; x < s.size(); ++x) {
    auto once = s.up_closure({x});
    CHECK(s.up_closure(once) == once);
  }
}

TEST_CASE("filters are the principal ones") {
  CHECK(enumerate_filters(i2()).size() == 4);
  auto trivial = FiniteInverseSemigroup::from_generators({PartialPerm::identity(1)});
  CHECK(enumerate_filters(trivial).size() == 1);
  CHECK(enumerate_filters(chain_semilattice(3)).size() == 3);
  // powerset oracle agrees on the whole corpus
  for (const auto* s : corpus()) {
    auto brute = oracle::filters_powerset(*s);
    auto fast = enumerate_filters(*s);
    std::set<std::vector<int>> a, b;
    for (auto& f : brute) a.insert(f);
    for (auto& f : fast) b.insert(f.carrier);
    CHECK(a == b);
  }
}

TEST_CASE("bar closure") {
  const auto& s = i2();
  int e12 = el(s, "[1,2]"), t = el(s, "[2,1]");
  auto f = make_filter(s, {e12});
  auto bar = bar_closure(s, f);
  std::vector<int> expect = {std::min(e12, t), std::max(e12, t)};
  CHECK(bar.carrier == expect);

  // F = E(S): the bar closure is wide and contains every wide closed
  // inverse subsemigroup
  auto fe = make_filter(s, s.idempotents());
  auto bare = bar_closure(s, fe);
  for (const auto& pair : wide_subsemigroups_vs_subgroups(s)) {
    CHECK(detail::is_sorted_subset(pair.wide.carrier, bare.carrier));
  }

  // in a group, the bar closure of {identity} is everything
  auto z3 = group_as_semigroup(cyclic_group(3));
  auto fz = make_filter(z3, {z3.idempotents()[0]});
  CHECK(bar_closure(z3, fz).carrier.size() == 3);
}

TEST_CASE("filter up-closure in S and the sandwich") {
  const auto& s = i2();
  int e12 = el(s, "[1,2]");
  CHECK(filter_up_in_s(s, make_filter(s, {e12})).carrier == std::vector<int>{e12});

  auto c3 = chain_semilattice(3);
  CHECK(filter_up_in_s(c3, make_filter(c3, c3.idempotents())).carrier.size() == 3);

  int e1 = el(s, "[1,0]");
  auto up = filter_up_in_s(s, make_filter(s, {e1, e12}));
  CHECK(up.carrier == s.up_closure({e1, e12}));

  // Sandwich F_up subseteq H subseteq F_bar for every enumerated H, and both
  // closures have idempotent set exactly F, on the whole corpus.
  for (const auto* sp : corpus()) {
    for (const auto& h : enumerate_closed_inverse_subsemigroups(*sp)) {
      std::vector<int> es;
      for (int a : h.carrier) {
        if (sp->is_idempotent(a)) es.push_back(a);
      }
      auto f = make_filter(*sp, es);
      auto lo = filter_up_in_s(*sp, f);
      auto hi = bar_closure(*sp, f);
      CHECK(detail::is_sorted_subset(lo.carrier, h.carrier));
      CHECK(detail::is_sorted_subset(h.carrier, hi.carrier));
      std::vector<int> lo_es, hi_es;
      for (int a : lo.carrier) {
        if (sp->is_idempotent(a)) lo_es.push_back(a);
      }
      for (int a : hi.carrier) {
        if (sp->is_idempotent(a)) hi_es.push_back(a);
      }
      CHECK(lo_es == f.carrier);
      CHECK(hi_es == f.carrier);
    }
  }
}

TEST_CASE("closed inverse subsemigroup enumeration") {
  auto s1 = inverse_symmetric(1);
  auto list1 = enumerate_closed_inverse_subsemigroups(s1);
  CHECK(list1.size() == 2);  // {id} and {id, 0}

  // groups: subgroup closure
  auto z6 = group_as_semigroup(cyclic_group(6));
  CHECK(enumerate_closed_inverse_subsemigroups(z6).size() == 4);

  // powerset oracle on the corpus
  for (const auto* s : corpus()) {
    auto brute = oracle::closed_inverse_subsemigroups_powerset(*s);
    auto fast = enumerate_closed_inverse_subsemigroups(*s);
    std::set<std::vector<int>> a(brute.begin(), brute.end());
    std::set<std::vector<int>> b;
    for (auto& h : fast) b.insert(h.carrier);
    CHECK(a == b);
  }

  const auto& s = i2();
  auto list = enumerate_closed_inverse_subsemigroups(s);
  CHECK(list.size() == 5);
  int e12 = el(s, "[1,2]"), t = el(s, "[2,1]");
  std::set<std::vector<int>> carriers;
  bool proper_count = 0;
  for (auto& h : list) carriers.insert(h.carrier);
  CHECK(carriers.count({e12}) == 1);
  std::vector<int> g = {std::min(e12, t), std::max(e12, t)};
  CHECK(carriers.count(g) == 1);
  for (auto& h : list) {
    CHECK(h.is_proper == !detail::set_contains(h.carrier, *s.zero()));
    (void)proper_count;
  }

  // Lemma 2.13(i): intersections of families with common idempotent set stay
  // in the enumeration with that idempotent set
  for (const auto* sp : corpus()) {
    auto all = enumerate_closed_inverse_subsemigroups(*sp);
    auto es_of = [&](const std::vector<int>& c) {
      std::vector<int> es;
      for (int a : c) {
        if (sp->is_idempotent(a)) es.push_back(a);
      }
      return es;
    };
    std::set<std::vector<int>> known;
    for (auto& h : all) known.insert(h.carrier);
    for (size_t i = 0; i < all.size(); ++i) {
      for (size_t j = 0; j < all.size(); ++j) {
        if (es_of(all[i].carrier) != es_of(all[j].carrier)) continue;
        auto meet = detail::set_intersect(all[i].carrier, all[j].carrier);
        CHECK(known.count(meet) == 1);
        CHECK(es_of(meet) == es_of(all[i].carrier));
      }
    }
  }
}

TEST_CASE("conjugacy of closed inverse subsemigroups") {
  const auto& s = i2();
  int e1 = el(s, "[1,0]"), e2 = el(s, "[0,2]"), e12 = el(s, "[1,2]");
  int a12 = el(s, "[2,0]");
  auto up_e1 = s.up_closure({e1});
  auto up_e2 = s.up_closure({e2});

  auto w = conjugacy_witness(s, up_e1, up_e2);
  REQUIRE(w.has_value());
  // a12 is one valid witness: a12 e1 a12^-1 = e2
  CHECK(s.mul(s.mul(a12, e1), s.inv(a12)) == e2);
  // and the returned witness satisfies both closure equalities
  {
    std::vector<int> conj;
    for (int x : up_e1) conj.push_back(s.mul(s.mul(*w, x), s.inv(*w)));
    std::sort(conj.begin(), conj.end());
    conj.erase(std::unique(conj.begin(), conj.end()), conj.end());
    CHECK(s.up_closure(conj) == up_e2);
  }

  CHECK(!conjugacy_witness(s, {e12}, up_e1).has_value());

  // reflexive with an idempotent witness
  auto self = conjugacy_witness(s, up_e1, up_e1);
  REQUIRE(self.has_value());

  // equivalence relation on the enumerated list, corpus-wide
  for (const auto* sp : corpus()) {
    auto all = enumerate_closed_inverse_subsemigroups(*sp);
    const size_t n = all.size();
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        rel[i][j] = conjugacy_witness(*sp, all[i].carrier, all[j].carrier).has_value();
      }
    }
    for (size_t i = 0; i < n; ++i) {
      CHECK(rel[i][i]);
      for (size_t j = 0; j < n; ++j) {
        CHECK(rel[i][j] == rel[j][i]);
        for (size_t k = 0; k < n; ++k) {
          if (rel[i][j] && rel[j][k]) CHECK(rel[i][k]);
        }
      }
    }
  }
}

TEST_CASE("wide closed inverse subsemigroups vs subgroups of S/sigma") {
  // a group pairs its subgroup lattice with itself
  auto z4 = group_as_semigroup(cyclic_group(4));
  CHECK(wide_subsemigroups_vs_subgroups(z4).size() == 3);

  // I_2 has a zero: sigma collapses, single pair (S, trivial)
  auto pairs = wide_subsemigroups_vs_subgroups(i2());
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].wide.carrier.size() == 7);
  CHECK(pairs[0].subgroup.size() == 1);

  // Z/2 with adjoined identity: both subgroups of Z/2 appear
  auto z2e = adjoin_identity(group_as_semigroup(cyclic_group(2)));
  auto p2 = wide_subsemigroups_vs_subgroups(z2e);
  CHECK(p2.size() == 2);

  // bijection: T is the full preimage of its subgroup, and the map is
  // inclusion-preserving
  for (const auto* sp : corpus()) {
    auto ps = wide_subsemigroups_vs_subgroups(*sp);
    for (size_t i = 0; i < ps.size(); ++i) {
      std::set<int> image;
      for (int a : ps[i].wide.carrier) image.insert(sp->sigma_class()[a]);
      CHECK(std::vector<int>(image.begin(), image.end()) == ps[i].subgroup);
      for (size_t j = 0; j < ps.size(); ++j) {
        CHECK(detail::is_sorted_subset(ps[i].subgroup, ps[j].subgroup) ==
              detail::is_sorted_subset(ps[i].wide.carrier, ps[j].wide.carrier));
      }
    }
  }
}

}  // TEST_SUITE
