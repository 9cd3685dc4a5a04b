#include <algorithm>
#include <set>

#include "doctest.h"
#include "groupoidal/builtins.hpp"
#include "groupoidal/cosets.hpp"
#include "groupoidal/errors.hpp"
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

TEST_SUITE("cosets") {

TEST_CASE("atlas recognition") {
  const auto& s = i2();
  for (int x = 0; x < s.size(); ++x) {
    CHECK(is_atlas(s, {x}));  // ss^-1s = s
  }
  CHECK(is_atlas(s, s.idempotents()));
  // {e1, t}: decided by direct computation
  int e1 = el(s, "[1,0]"), t = el(s, "[2,1]");
  std::vector<int> a = {std::min(e1, t), std::max(e1, t)};
  std::set<int> aia;
  for (int x : a) {
    for (int y : a) {
      for (int z : a) aia.insert(s.mul(s.mul(x, s.inv(y)), z));
    }
  }
  CHECK(is_atlas(s, a) == (std::vector<int>(aia.begin(), aia.end()) == a));
}

TEST_CASE("directedness") {
  const auto& s = i2();
  for (int x = 0; x < s.size(); ++x) CHECK(is_directed(s, {x}));
  int e12 = el(s, "[1,2]"), t = el(s, "[2,1]");
  CHECK(!is_directed(s, {std::min(e12, t), std::max(e12, t)}));
  CHECK(is_directed(s, s.all_elements()));  // zero below everything
  CHECK_THROWS_AS(is_directed(s, {}), ValidationError);
}

TEST_CASE("left cosets and equality") {
  const auto& s = i2();
  int e12 = el(s, "[1,2]"), t = el(s, "[2,1]"), a12 = el(s, "[2,0]");
  int e1 = el(s, "[1,0]");

  // (e, e-up) is e-up itself
  auto up_e1 = s.up_closure({e1});
  auto c1 = left_coset(s, e1, up_e1);
  CHECK(c1.carrier == up_e1);

  // (a12, up({e1})) gives a12-up
  auto c2 = left_coset(s, a12, up_e1);
  CHECK(c2.carrier == s.up_closure({a12}));

  // t lies in the subgroup {e12, t}: tH = H
  std::vector<int> g = {std::min(e12, t), std::max(e12, t)};
  auto c3 = left_coset(s, t, g);
  CHECK(c3.carrier == g);
  auto c4 = left_coset(s, e12, g);
  CHECK(cosets_equal(s, c3, c4));
  CHECK(cosets_equal(s, c3, c3));

  CHECK_THROWS_AS(left_coset(s, a12, g), ValidationError);  // d(a12) not in H

  // Lemma 2.5(ii): unequal cosets of the same H are disjoint, corpus-wide
  for (const auto* sp : corpus()) {
    for (const auto& h : enumerate_closed_inverse_subsemigroups(*sp)) {
      std::vector<Coset> cosets;
      for (int a = 0; a < sp->size(); ++a) {
        if (detail::set_contains(h.carrier, sp->d(a))) {
          cosets.push_back(left_coset(*sp, a, h.carrier));
        }
      }
      for (const auto& x : cosets) {
        for (const auto& y : cosets) {
          const bool equal = cosets_equal(*sp, x, y);
          const bool disjoint = detail::set_intersect(x.carrier, y.carrier).empty();
          CHECK(equal == !disjoint);
        }
      }
    }
  }
}

TEST_CASE("K(S) sizes and embedding") {
  auto s1 = inverse_symmetric(1);
  auto k1 = CosetSemigroup::full(s1);
  CHECK(k1.size() == 2);

  const auto& s = i2();
  auto ks = CosetSemigroup::full(s);
  CHECK(ks.size() == 8);
  CHECK(ks.zero_index() >= 0);
  CHECK(ks.coset(ks.zero_index()).carrier == s.all_elements());

  // iota is an injective homomorphism
  std::set<int> image;
  for (int a = 0; a < s.size(); ++a) {
    image.insert(ks.iota(a));
    for (int b = 0; b < s.size(); ++b) {
      CHECK(ks.product(ks.iota(a), ks.iota(b)) == ks.iota(s.mul(a, b)));
    }
  }
  CHECK(static_cast<int>(image.size()) == s.size());

  // a group: cosets of subgroups under the usual product
  auto z6 = group_as_semigroup(cyclic_group(6));
  auto k6 = CosetSemigroup::full(z6);
  // subgroups of orders 1,2,3,6 give 6+3+2+1 cosets
  CHECK(k6.size() == 12);
}

TEST_CASE("product formula matches the intersection oracle, corpus-wide") {
  for (const auto* sp : corpus()) {
    auto all = oracle::cosets_powerset(*sp);
    auto ks = CosetSemigroup::full(*sp);
    REQUIRE(ks.size() == static_cast<int>(all.size()));
    for (int i = 0; i < ks.size(); ++i) {
      for (int j = 0; j < ks.size(); ++j) {
        auto via_formula = ks.coset(ks.product(i, j)).carrier;
        auto via_oracle = oracle::coset_product_intersection(
            *sp, all, ks.coset(i).carrier, ks.coset(j).carrier);
        CHECK(via_formula == via_oracle);
      }
    }
  }
}

TEST_CASE("product is independent of the representatives") {
  const auto& s = i2();
  auto ks = CosetSemigroup::full(s);
  for (int i = 0; i < ks.size(); ++i) {
    for (int j = 0; j < ks.size(); ++j) {
      const auto& a = ks.coset(i);
      const auto& b = ks.coset(j);
      auto expected = coset_product(s, a, b).carrier;
      for (int ra : a.carrier) {
        for (int rb : b.carrier) {
          Coset a2 = a, b2 = b;
          a2.rep = ra;
          b2.rep = rb;
          CHECK(coset_product(s, a2, b2).carrier == expected);
        }
      }
    }
  }
}

TEST_CASE("natural order of K(S) is reverse inclusion") {
  for (const auto* sp : corpus()) {
    auto ks = CosetSemigroup::full(*sp);
    for (int a = 0; a < ks.size(); ++a) {
      for (int b = 0; b < ks.size(); ++b) {
        // s <= t iff s = t * d(s), in K(S) terms
        const int d_a = ks.product(ks.inverse(a), a);
        const bool via_mul = ks.product(b, d_a) == a;
        CHECK(via_mul == ks.leq(a, b));
      }
    }
  }
}

TEST_CASE("K(S) is an inverse semigroup and idempotents are the closed "
          "inverse subsemigroups") {
  for (const auto* sp : corpus()) {
    auto ks = CosetSemigroup::full(*sp);
    auto table = ks.to_semigroup();  // validates the axioms
    std::set<std::vector<int>> idem_carriers;
    for (int i = 0; i < ks.size(); ++i) {
      if (table.is_idempotent(i)) idem_carriers.insert(ks.coset(i).carrier);
    }
    std::set<std::vector<int>> subs;
    for (const auto& h : enumerate_closed_inverse_subsemigroups(*sp)) {
      subs.insert(h.carrier);
    }
    CHECK(idem_carriers == subs);

    // D-classes of idempotents match conjugacy classes
    for (int i = 0; i < ks.size(); ++i) {
      if (!table.is_idempotent(i)) continue;
      for (int j = 0; j < ks.size(); ++j) {
        if (!table.is_idempotent(j)) continue;
        const bool same_d =
            table.green().d_class[i] == table.green().d_class[j];
        const bool conj =
            conjugacy_witness(*sp, ks.coset(i).carrier, ks.coset(j).carrier)
                .has_value();
        CHECK(same_d == conj);
      }
    }
  }
}

TEST_CASE("meets in K(S)") {
  const auto& s = i2();
  auto ks = CosetSemigroup::full(s);
  int e12 = el(s, "[1,2]"), t = el(s, "[2,1]");

  // meet of iota(e12), iota(t) is the subgroup coset {e12, t}
  auto m = coset_meet(s, {ks.coset(ks.iota(e12)), ks.coset(ks.iota(t))});
  CHECK(m.carrier == std::vector<int>{std::min(e12, t), std::max(e12, t)});

  // meet of a single coset is itself
  for (int i = 0; i < ks.size(); ++i) {
    CHECK(coset_meet(s, {ks.coset(i)}).carrier == ks.coset(i).carrier);
  }

  // meet of all iota(s) is S, the zero of K(S)
  std::vector<Coset> all;
  for (int a = 0; a < s.size(); ++a) all.push_back(ks.coset(ks.iota(a)));
  CHECK(coset_meet(s, all).carrier == s.all_elements());

  // every coset is the meet of the principal cosets of its members
  for (const auto* sp : corpus()) {
    auto k = CosetSemigroup::full(*sp);
    for (int i = 0; i < k.size(); ++i) {
      std::vector<Coset> parts;
      for (int a : k.coset(i).carrier) parts.push_back(k.coset(k.iota(a)));
      CHECK(coset_meet(*sp, parts).carrier == k.coset(i).carrier);
    }
  }
}

TEST_CASE("L(S) is isomorphic to S in the finite case") {
  for (const auto* sp : corpus()) {
    auto ls = CosetSemigroup::directed(*sp);
    CHECK(ls.size() == sp->size());
    // s -> s-up is a bijective homomorphism
    std::set<int> image;
    for (int a = 0; a < sp->size(); ++a) {
      image.insert(ls.iota(a));
      for (int b = 0; b < sp->size(); ++b) {
        CHECK(ls.product(ls.iota(a), ls.iota(b)) == ls.iota(sp->mul(a, b)));
      }
    }
    CHECK(static_cast<int>(image.size()) == sp->size());
    // every directed coset is principal: the up-set of its order-minimum
    for (int i = 0; i < ls.size(); ++i) {
      const auto& carrier = ls.coset(i).carrier;
      CHECK(is_directed(*sp, carrier));
      int minimum = -1;
      for (int m : carrier) {
        bool below_all = true;
        for (int x : carrier) {
          if (!sp->leq(m, x)) below_all = false;
        }
        if (below_all) minimum = m;
      }
      REQUIRE(minimum >= 0);
      CHECK(carrier == sp->up_closure({minimum}));
    }
  }
  auto l2 = CosetSemigroup::directed(i2());
  CHECK(l2.size() == 7);
  auto z3 = group_as_semigroup(cyclic_group(3));
  CHECK(CosetSemigroup::directed(z3).size() == 3);
}

TEST_CASE("idempotents of L(S) are the principal filters' up-closures") {
  const auto& s = i2();
  auto ls = CosetSemigroup::directed(s);
  std::set<std::vector<int>> idems;
  for (int i = 0; i < ls.size(); ++i) {
    if (ls.product(i, i) == i) idems.insert(ls.coset(i).carrier);
  }
  std::set<std::vector<int>> expected;
  for (int e : s.idempotents()) expected.insert(s.up_closure({e}));
  CHECK(idems == expected);
}

TEST_CASE("meet decomposition") {
  const auto& s = i2();
  auto ks = CosetSemigroup::full(s);
  int e12 = el(s, "[1,2]"), t = el(s, "[2,1]");
  std::vector<int> g = {std::min(e12, t), std::max(e12, t)};
  auto subgroup_coset = coset_from_carrier(s, g);
  auto blocks = meet_decomposition(s, subgroup_coset);
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0].carrier == std::vector<int>{g[0]});
  CHECK(blocks[1].carrier == std::vector<int>{g[1]});

  // s-up decomposes trivially
  for (int a = 0; a < s.size(); ++a) {
    CHECK(meet_decomposition(s, ks.coset(ks.iota(a))).size() == 1);
  }

  // B_2 = I_1: the zero makes S a single block
  auto s1 = inverse_symmetric(1);
  auto full = coset_from_carrier(s1, s1.all_elements());
  CHECK(meet_decomposition(s1, full).size() == 1);

  // every block pair is H-equivalent in L(S): d and r blocks match
  // K = E(H)-up and L = (a K a^-1)-up from the statement
  for (const auto* sp : corpus()) {
    auto k = CosetSemigroup::full(*sp);
    for (int i = 0; i < k.size(); ++i) {
      const auto& a = k.coset(i);
      auto blocks_i = meet_decomposition(*sp, a);
      std::vector<int> es;
      for (int x : a.subsemigroup) {
        if (sp->is_idempotent(x)) es.push_back(x);
      }
      auto kk = sp->up_closure(es);
      std::vector<int> aka;
      for (int x : kk) aka.push_back(sp->mul(sp->mul(a.rep, x), sp->inv(a.rep)));
      std::sort(aka.begin(), aka.end());
      aka.erase(std::unique(aka.begin(), aka.end()), aka.end());
      auto ll = sp->up_closure(aka);
      for (const auto& block : blocks_i) {
        auto d_block = coset_product(
            *sp, Coset{sp->inverse_set(block.carrier),
                       block.subsemigroup, /*unused*/ block.rep},
            block);
        // d(B) = B^-1 (x) B must be K, r(B) = B (x) B^-1 must be L
        auto binv = coset_from_carrier(*sp, sp->inverse_set(block.carrier));
        CHECK(coset_product(*sp, binv, block).carrier == kk);
        CHECK(coset_product(*sp, block, binv).carrier == ll);
        (void)d_block;
      }
    }
  }
}

TEST_CASE("normalization of directed subsets") {
  const auto& s = i2();
  int e1 = el(s, "[1,0]"), e12 = el(s, "[1,2]");
  int zero = *s.zero();

  // already closed: unchanged
  auto c = normalize_directed_subset(s, s.up_closure({e1}));
  CHECK(c.carrier == s.up_closure({e1}));

  // {0} normalizes to the whole of S
  CHECK(normalize_directed_subset(s, {zero}).carrier == s.all_elements());

  // coinitial directed subsets share a normal form
  auto a = normalize_directed_subset(s, {e1});
  auto b = normalize_directed_subset(s, {e1, e12});
  CHECK(a.carrier == b.carrier);

  CHECK_THROWS_AS(
      normalize_directed_subset(s, {e12, el(s, "[2,1]")}), ValidationError);

  // two directed subsets normalize equally iff mutually coinitial
  auto sets = std::vector<std::vector<int>>{
      {e1}, {e1, e12}, {e12}, {zero}, {zero, e1}, s.all_elements()};
  auto coinitial = [&](const std::vector<int>& x, const std::vector<int>& y) {
    // every element of y is above some element of x, and vice versa
    for (int b2 : y) {
      bool ok = false;
      for (int a2 : x) {
        if (s.leq(a2, b2)) ok = true;
      }
      if (!ok) return false;
    }
    for (int a2 : x) {
      bool ok = false;
      for (int b2 : y) {
        if (s.leq(b2, a2)) ok = true;
      }
      if (!ok) return false;
    }
    return true;
  };
  for (const auto& x : sets) {
    for (const auto& y : sets) {
      const bool same =
          normalize_directed_subset(s, x).carrier ==
          normalize_directed_subset(s, y).carrier;
      CHECK(same == coinitial(x, y));
    }
  }
}

TEST_CASE("coset space actions") {
  const auto& s = i2();
  // H = S gives one point
  CHECK(coset_space_action(s, s.all_elements()).points() == 1);

  int e12 = el(s, "[1,2]"), t = el(s, "[2,1]");
  // H = {e12}: matches the Schutzenberger action on L_{e12}
  auto h = std::vector<int>{e12};
  auto action = coset_space_action(s, h);
  CHECK(action.points() == 2);
  auto schutz = schutzenberger_action(s, e12);
  CHECK(actions_equivalent(action, schutz).has_value());

  // H = {e12, t}: the subgroup collapses to one point
  std::vector<int> g = {std::min(e12, t), std::max(e12, t)};
  CHECK(coset_space_action(s, g).points() == 1);

  // stabilizer of the base coset H is H itself
  for (const auto* sp : corpus()) {
    for (const auto& h2 : enumerate_closed_inverse_subsemigroups(*sp)) {
      std::vector<std::vector<int>> carriers;
      auto x = coset_space_action(*sp, h2.carrier, &carriers);
      auto it = std::find(carriers.begin(), carriers.end(), h2.carrier);
      REQUIRE(it != carriers.end());
      CHECK(x.stabilizer(static_cast<int>(it - carriers.begin())) == h2.carrier);
    }
  }
}

TEST_CASE("every transitive action is a restricted K(S) Schutzenberger action") {
  for (const auto* sp : corpus()) {
    auto ks = CosetSemigroup::full(*sp);
    for (const auto& h : enumerate_closed_inverse_subsemigroups(*sp)) {
      const int h_index = ks.index_of_carrier(h.carrier);
      REQUIRE(h_index >= 0);
      auto via_ks = ks_schutzenberger_restricted(ks, h_index);
      auto direct = coset_space_action(*sp, h.carrier);
      // same number of points and an equivalence between them
      CHECK(via_ks.points() == direct.points());
      CHECK(actions_equivalent(via_ks, direct).has_value());
    }
  }
}

TEST_CASE("coset caps") {
  CHECK_THROWS_AS(CosetSemigroup::full(i2(), 3), CapExceededError);
}

}  // TEST_SUITE
