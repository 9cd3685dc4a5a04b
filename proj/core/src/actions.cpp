#include "groupoidal/actions.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <string>

#include "groupoidal/errors.hpp"

namespace groupoidal {

using detail::set_contains;

namespace {

std::string brace_label(const FiniteInverseSemigroup& s, const std::vector<int>& set) {
  std::string out = "{";
  for (size_t i = 0; i < set.size(); ++i) {
    if (i) out += ",";
    out += s.label(set[i]);
  }
  return out + "}";
}

}  // namespace

TransitiveAction::TransitiveAction(const FiniteInverseSemigroup& s,
                                   std::vector<std::vector<int>> act,
                                   std::vector<std::string> point_labels)
    : s_(&s), act_(std::move(act)), point_labels_(std::move(point_labels)) {
  if (act_.size() != static_cast<size_t>(s.size()) || act_.empty() || act_[0].empty()) {
    throw ValidationError("action table has wrong shape");
  }
  npoints_ = static_cast<int>(act_[0].size());
  if (point_labels_.empty()) {
    for (int x = 0; x < npoints_; ++x) {
      point_labels_.push_back("x" + std::to_string(x));
    }
  }
  for (const auto& row : act_) {
    if (static_cast<int>(row.size()) != npoints_) {
      throw ValidationError("action table has ragged rows");
    }
    for (int v : row) {
      if (v < -1 || v >= npoints_) {
        throw ValidationError("action table entry out of range");
      }
    }
  }
  // (A1)
  for (int e : s.idempotents()) {
    for (int x = 0; x < npoints_; ++x) {
      if (act_[e][x] >= 0 && act_[e][x] != x) {
        throw ValidationError("(A1) fails: idempotent " + s.label(e) +
                              " moves a point");
      }
    }
  }
  // (A2)
  for (int a = 0; a < s.size(); ++a) {
    for (int b = 0; b < s.size(); ++b) {
      const int ab = s.mul(a, b);
      for (int x = 0; x < npoints_; ++x) {
        const int bx = act_[b][x];
        const int nested = bx < 0 ? -1 : act_[a][bx];
        if (act_[ab][x] != nested) {
          throw ValidationError("(A2) fails at (" + s.label(a) + "," +
                                s.label(b) + ")");
        }
      }
    }
  }
  // effective
  for (int x = 0; x < npoints_; ++x) {
    bool hit = false;
    for (int a = 0; a < s.size() && !hit; ++a) {
      hit = act_[a][x] >= 0;
    }
    if (!hit) {
      throw ValidationError("action is not effective at point " +
                            point_labels_[x]);
    }
  }
  // transitive
  std::vector<bool> seen(npoints_, false);
  std::queue<int> bfs;
  seen[0] = true;
  bfs.push(0);
  int reached = 1;
  while (!bfs.empty()) {
    int x = bfs.front();
    bfs.pop();
    for (int a = 0; a < s.size(); ++a) {
      int y = act_[a][x];
      if (y >= 0 && !seen[y]) {
        seen[y] = true;
        ++reached;
        bfs.push(y);
      }
    }
  }
  if (reached != npoints_) {
    throw ValidationError("action is not transitive");
  }
}

std::vector<int> TransitiveAction::stabilizer(int x) const {
  std::vector<int> out;
  for (int a = 0; a < s_->size(); ++a) {
    if (act_[a][x] == x) out.push_back(a);
  }
  if (!is_closed_inverse_subsemigroup(*s_, out)) {
    throw ValidationError("stabilizer is not a closed inverse subsemigroup");
  }
  return out;
}

TransitiveAction schutzenberger_action(const FiniteInverseSemigroup& s, int e) {
  if (!s.is_idempotent(e)) {
    throw ValidationError("Schutzenberger action requires an idempotent");
  }
  std::vector<int> points;
  for (int x = 0; x < s.size(); ++x) {
    if (s.d(x) == e) points.push_back(x);
  }
  std::vector<int> pos(s.size(), -1);
  for (size_t i = 0; i < points.size(); ++i) pos[points[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> act(s.size(), std::vector<int>(points.size(), -1));
  std::vector<std::string> labels;
  for (int x : points) labels.push_back(s.label(x));
  for (int a = 0; a < s.size(); ++a) {
    for (size_t i = 0; i < points.size(); ++i) {
      const int ax = s.mul(a, points[i]);
      if (s.d(ax) == e) act[a][i] = pos[ax];
    }
  }
  return TransitiveAction(s, std::move(act), std::move(labels));
}

TransitiveAction coset_space_action(const FiniteInverseSemigroup& s,
                                    const std::vector<int>& h,
                                    std::vector<std::vector<int>>* point_carriers) {
  if (!is_closed_inverse_subsemigroup(s, h)) {
    throw ValidationError("coset space requires a closed inverse subsemigroup");
  }
  std::set<std::vector<int>> carriers;
  for (int a = 0; a < s.size(); ++a) {
    if (set_contains(h, s.d(a))) {
      carriers.insert(s.up_closure(s.product_sets({a}, h)));
    }
  }
  std::vector<std::vector<int>> points(carriers.begin(), carriers.end());
  auto index_of = [&](const std::vector<int>& c) {
    auto it = std::lower_bound(points.begin(), points.end(), c);
    return static_cast<int>(it - points.begin());
  };
  std::vector<std::vector<int>> act(s.size(), std::vector<int>(points.size(), -1));
  std::vector<std::string> labels;
  for (const auto& c : points) labels.push_back(brace_label(s, c));
  for (int a = 0; a < s.size(); ++a) {
    for (size_t i = 0; i < points.size(); ++i) {
      // the action is independent of the representative; check every one
      int target = -2;
      for (int c : points[i]) {
        const int ac = s.mul(a, c);
        int here = -1;
        if (set_contains(h, s.d(ac))) {
          here = index_of(s.up_closure(s.product_sets({ac}, h)));
        }
        if (target == -2) {
          target = here;
        } else if (target != here) {
          throw ValidationError("coset action is not well defined (internal)");
        }
      }
      act[a][i] = target;
    }
  }
  auto out = TransitiveAction(s, std::move(act), std::move(labels));
  if (point_carriers) *point_carriers = std::move(points);
  return out;
}

bool is_morphism(const TransitiveAction& x, const TransitiveAction& y,
                 const std::vector<int>& map) {
  const auto& s = x.semigroup();
  for (int a = 0; a < s.size(); ++a) {
    for (int p = 0; p < x.points(); ++p) {
      if (x.defined(a, p)) {
        if (!y.defined(a, map[p])) return false;
        if (map[x.act(a, p)] != y.act(a, map[p])) return false;
      }
    }
  }
  return true;
}

bool is_strong_morphism(const TransitiveAction& x, const TransitiveAction& y,
                        const std::vector<int>& map) {
  const auto& s = x.semigroup();
  for (int a = 0; a < s.size(); ++a) {
    for (int p = 0; p < x.points(); ++p) {
      if (x.defined(a, p) != y.defined(a, map[p])) return false;
      if (x.defined(a, p) && map[x.act(a, p)] != y.act(a, map[p])) return false;
    }
  }
  return true;
}

namespace {

std::optional<std::vector<int>> build_morphism_impl(const TransitiveAction& x,
                                                    int x0,
                                                    const TransitiveAction& y,
                                                    int y0, bool strong) {
  const auto& s = x.semigroup();
  auto sx = x.stabilizer(x0);
  auto sy = y.stabilizer(y0);
  if (!detail::is_sorted_subset(sx, sy)) return std::nullopt;
  if (strong) {
    std::vector<int> ex, ey;
    for (int a : sx) {
      if (s.is_idempotent(a)) ex.push_back(a);
    }
    for (int a : sy) {
      if (s.is_idempotent(a)) ey.push_back(a);
    }
    if (ex != ey) return std::nullopt;
  }
  std::vector<int> map(x.points(), -1);
  for (int a = 0; a < s.size(); ++a) {
    if (!x.defined(a, x0)) continue;
    const int p = x.act(a, x0);
    const int q = y.act(a, y0);
    if (q < 0) {
      throw ValidationError("morphism target undefined (internal)");
    }
    if (map[p] >= 0 && map[p] != q) {
      throw ValidationError("morphism is not well defined (internal)");
    }
    map[p] = q;
  }
  for (int p = 0; p < x.points(); ++p) {
    if (map[p] < 0) {
      throw ValidationError("morphism left a point unmapped (internal)");
    }
  }
  if (strong ? !is_strong_morphism(x, y, map) : !is_morphism(x, y, map)) {
    throw ValidationError("constructed map fails morphism axioms (internal)");
  }
  return map;
}

}  // namespace

std::optional<std::vector<int>> build_morphism(const TransitiveAction& x, int x0,
                                               const TransitiveAction& y, int y0) {
  return build_morphism_impl(x, x0, y, y0, /*strong=*/false);
}

std::optional<std::vector<int>> build_strong_morphism(const TransitiveAction& x,
                                                      int x0,
                                                      const TransitiveAction& y,
                                                      int y0) {
  return build_morphism_impl(x, x0, y, y0, /*strong=*/true);
}

CosetEquivalence equivalent_to_coset_action(const TransitiveAction& x, int x0) {
  const auto& s = x.semigroup();
  auto h = x.stabilizer(x0);
  std::vector<std::vector<int>> carriers;
  auto target = coset_space_action(s, h, &carriers);
  // base point of the coset space is the coset H itself
  auto it = std::lower_bound(carriers.begin(), carriers.end(), h);
  if (it == carriers.end() || *it != h) {
    throw ValidationError("coset space lacks the base coset (internal)");
  }
  const int base = static_cast<int>(it - carriers.begin());
  auto map = build_strong_morphism(x, x0, target, base);
  if (!map) {
    throw ValidationError("coset equivalence failed to build (internal)");
  }
  // bijective check; a bijective strong morphism is an equivalence
  std::vector<int> seen(target.points(), 0);
  for (int p : *map) seen[p] += 1;
  for (int c : seen) {
    if (c != 1) {
      throw ValidationError("coset equivalence is not bijective (internal)");
    }
  }
  // the inverse is a strong morphism too
  std::vector<int> inv(target.points());
  for (int p = 0; p < x.points(); ++p) inv[(*map)[p]] = p;
  if (!is_strong_morphism(target, x, inv)) {
    throw ValidationError("inverse of coset equivalence is not strong (internal)");
  }
  return CosetEquivalence{std::move(target), std::move(*map)};
}

std::optional<int> actions_equivalent(const TransitiveAction& x,
                                      const TransitiveAction& y) {
  return conjugacy_witness(x.semigroup(), x.stabilizer(0), y.stabilizer(0));
}

namespace {

bool stabilizer_matches(const TransitiveAction& x, bool fundamental) {
  const auto& s = x.semigroup();
  int verdict = -1;
  for (int p = 0; p < x.points(); ++p) {
    auto stab = x.stabilizer(p);
    std::vector<int> es;
    for (int a : stab) {
      if (s.is_idempotent(a)) es.push_back(a);
    }
    auto f = make_filter(s, es);
    auto want = fundamental ? bar_closure(s, f) : filter_up_in_s(s, f);
    const int here = want.carrier == stab ? 1 : 0;
    if (verdict < 0) {
      verdict = here;
    } else if (verdict != here) {
      throw ValidationError("universality is point dependent (internal)");
    }
  }
  return verdict == 1;
}

}  // namespace

bool is_universal(const TransitiveAction& x) {
  return stabilizer_matches(x, /*fundamental=*/false);
}

bool is_fundamental(const TransitiveAction& x) {
  return stabilizer_matches(x, /*fundamental=*/true);
}

Cover universal_cover(const TransitiveAction& y, int y0) {
  const auto& s = y.semigroup();
  auto sy = y.stabilizer(y0);
  std::vector<int> es;
  for (int a : sy) {
    if (s.is_idempotent(a)) es.push_back(a);
  }
  auto h = filter_up_in_s(s, make_filter(s, es));
  std::vector<std::vector<int>> carriers;
  auto total = coset_space_action(s, h.carrier, &carriers);
  auto it = std::lower_bound(carriers.begin(), carriers.end(), h.carrier);
  const int base = static_cast<int>(it - carriers.begin());
  auto map = build_strong_morphism(total, base, y, y0);
  if (!map) {
    throw ValidationError("universal cover morphism missing (internal)");
  }
  return Cover{std::move(total), base, std::move(*map)};
}

Quotient fundamental_quotient(const TransitiveAction& y, int y0) {
  const auto& s = y.semigroup();
  auto sy = y.stabilizer(y0);
  std::vector<int> es;
  for (int a : sy) {
    if (s.is_idempotent(a)) es.push_back(a);
  }
  auto h = bar_closure(s, make_filter(s, es));
  std::vector<std::vector<int>> carriers;
  auto quot = coset_space_action(s, h.carrier, &carriers);
  auto it = std::lower_bound(carriers.begin(), carriers.end(), h.carrier);
  const int base = static_cast<int>(it - carriers.begin());
  auto map = build_strong_morphism(y, y0, quot, base);
  if (!map) {
    throw ValidationError("fundamental quotient morphism missing (internal)");
  }
  return Quotient{std::move(quot), base, std::move(*map)};
}

StrongCongruenceLattice strong_congruences(const TransitiveAction& x, int x0) {
  const auto& s = x.semigroup();
  if (!is_universal(x)) {
    throw ValidationError("strong congruence lattice requires a universal action");
  }
  auto stab = x.stabilizer(x0);
  std::vector<int> es;
  for (int a : stab) {
    if (s.is_idempotent(a)) es.push_back(a);
  }
  auto f = make_filter(s, es);
  auto bar = bar_closure(s, f);
  auto sub = s.subsemigroup(bar.carrier);
  std::vector<int> local_of(s.size(), -1);
  for (size_t i = 0; i < bar.carrier.size(); ++i) {
    local_of[bar.carrier[i]] = static_cast<int>(i);
  }
  StrongCongruenceLattice out{sub.sigma_group(), {}};
  for (const auto& u : enumerate_subgroups(sub.sigma_group())) {
    // H is the preimage of the subgroup inside bar(F)
    std::vector<int> carrier;
    for (int a : bar.carrier) {
      if (set_contains(u, sub.sigma_class()[local_of[a]])) carrier.push_back(a);
    }
    std::vector<std::vector<int>> carriers;
    auto quot = coset_space_action(s, carrier, &carriers);
    auto it = std::lower_bound(carriers.begin(), carriers.end(), carrier);
    const int base = static_cast<int>(it - carriers.begin());
    auto map = build_strong_morphism(x, x0, quot, base);
    if (!map) {
      throw ValidationError("congruence morphism missing (internal)");
    }
    out.congruences.push_back(StrongCongruence{std::move(*map), u, carrier});
  }
  return out;
}

ActionGraph action_graph(const TransitiveAction& x) {
  ActionGraph g;
  g.vertices = x.points();
  for (int p = 0; p < x.points(); ++p) {
    g.vertex_labels.push_back(x.point_label(p));
    for (int a = 0; a < x.semigroup().size(); ++a) {
      if (x.defined(a, p)) {
        g.edges.push_back({p, a, x.act(a, p)});
      }
    }
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const auto& e, const auto& f) {
    return std::tie(e.from, e.label, e.to) < std::tie(f.from, f.label, f.to);
  });
  // involution sanity: each edge has the reverse edge with inverted label
  const auto& s = x.semigroup();
  for (const auto& e : g.edges) {
    if (!x.defined(s.inv(e.label), e.to) || x.act(s.inv(e.label), e.to) != e.from) {
      throw ValidationError("action graph involution fails (internal)");
    }
  }
  return g;
}

bool is_label_preserving(const ActionGraph& gx, const ActionGraph& gy,
                         const std::vector<int>& vertex_map) {
  auto has_edge = [&](int from, int label, int to) {
    for (const auto& e : gy.edges) {
      if (e.from == from && e.label == label && e.to == to) return true;
    }
    return false;
  };
  for (const auto& e : gx.edges) {
    if (!has_edge(vertex_map[e.from], e.label, vertex_map[e.to])) return false;
  }
  return true;
}

namespace {

std::vector<std::pair<int, int>> star_image(const ActionGraph& gx,
                                            const std::vector<int>& vertex_map,
                                            int v) {
  std::vector<std::pair<int, int>> out;  // (label, mapped target)
  for (const auto& e : gx.edges) {
    if (e.from == v) out.emplace_back(e.label, vertex_map[e.to]);
  }
  return out;
}

std::vector<std::pair<int, int>> star(const ActionGraph& g, int v) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : g.edges) {
    if (e.from == v) out.emplace_back(e.label, e.to);
  }
  return out;
}

}  // namespace

bool check_immersion(const ActionGraph& gx, const ActionGraph& gy,
                     const std::vector<int>& vertex_map) {
  if (!is_label_preserving(gx, gy, vertex_map)) {
    throw ValidationError("vertex map is not label preserving");
  }
  for (int v = 0; v < gx.vertices; ++v) {
    auto image = star_image(gx, vertex_map, v);
    std::sort(image.begin(), image.end());
    if (std::adjacent_find(image.begin(), image.end()) != image.end()) {
      return false;
    }
  }
  return true;
}

bool check_cover(const ActionGraph& gx, const ActionGraph& gy,
                 const std::vector<int>& vertex_map) {
  if (!check_immersion(gx, gy, vertex_map)) return false;
  for (int v = 0; v < gx.vertices; ++v) {
    auto image = star_image(gx, vertex_map, v);
    auto full = star(gy, vertex_map[v]);
    std::sort(image.begin(), image.end());
    std::sort(full.begin(), full.end());
    if (image != full) return false;
  }
  return true;
}

}  // namespace groupoidal
