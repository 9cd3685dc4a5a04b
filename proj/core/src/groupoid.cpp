#include "groupoidal/groupoid.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "groupoidal/errors.hpp"

namespace groupoidal {

using detail::set_contains;

void validate_groupoid(const FiniteGroupoid& g) {
  const int n = g.narrows;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const bool composable = g.src[a] == g.dst[b];
      if (composable != (g.comp[a][b] >= 0)) {
        throw ValidationError("composition defined on the wrong pairs");
      }
      if (composable) {
        const int ab = g.comp[a][b];
        if (g.src[ab] != g.src[b] || g.dst[ab] != g.dst[a]) {
          throw ValidationError("composite has wrong endpoints");
        }
        for (int c = 0; c < n; ++c) {
          if (g.src[b] == g.dst[c]) {
            if (g.comp[ab][c] != g.comp[a][g.comp[b][c]]) {
              throw ValidationError("groupoid composition not associative");
            }
          }
        }
      }
    }
  }
  for (size_t i = 0; i < g.identity_arrows.size(); ++i) {
    const int e = g.identity_arrows[i];
    if (g.src[e] != static_cast<int>(i) || g.dst[e] != static_cast<int>(i)) {
      throw ValidationError("identity arrow has wrong endpoints");
    }
  }
  for (int a = 0; a < n; ++a) {
    if (g.comp[a][g.identity_arrows[g.src[a]]] != a ||
        g.comp[g.identity_arrows[g.dst[a]]][a] != a) {
      throw ValidationError("identity laws fail");
    }
    if (g.comp[a][g.inv[a]] != g.identity_arrows[g.dst[a]] ||
        g.comp[g.inv[a]][a] != g.identity_arrows[g.src[a]]) {
      throw ValidationError("inverse laws fail");
    }
  }
}

FiniteGroupoid restricted_product_groupoid(const FiniteInverseSemigroup& s) {
  FiniteGroupoid g;
  g.narrows = s.size();
  g.identity_arrows = s.idempotents();
  std::vector<int> pos(s.size(), -1);
  for (size_t i = 0; i < g.identity_arrows.size(); ++i) {
    pos[g.identity_arrows[i]] = static_cast<int>(i);
    g.identity_labels.push_back(s.label(g.identity_arrows[i]));
  }
  g.src.resize(s.size());
  g.dst.resize(s.size());
  g.inv.resize(s.size());
  g.labels.resize(s.size());
  g.comp.assign(s.size(), std::vector<int>(s.size(), -1));
  for (int a = 0; a < s.size(); ++a) {
    g.src[a] = pos[s.d(a)];
    g.dst[a] = pos[s.r(a)];
    g.inv[a] = s.inv(a);
    g.labels[a] = s.label(a);
    for (int b = 0; b < s.size(); ++b) {
      if (s.d(a) == s.r(b)) {
        g.comp[a][b] = s.mul(a, b);
      }
    }
  }
  validate_groupoid(g);
  return g;
}

PatersonGroupoid paterson_groupoid(const FiniteInverseSemigroup& s,
                                   std::size_t max_cosets) {
  auto ls = CosetSemigroup::directed(s, max_cosets);
  auto table = ls.to_semigroup();
  auto g = restricted_product_groupoid(table);
  return PatersonGroupoid{std::move(ls), std::move(table), std::move(g)};
}

bool paterson_iso_certificate(const FiniteInverseSemigroup& s,
                              const PatersonGroupoid& pg) {
  const auto rp = restricted_product_groupoid(s);
  const auto& g = pg.groupoid;
  if (rp.narrows != g.narrows) return false;
  // iota as an arrow map
  std::vector<int> map(s.size());
  std::vector<bool> hit(g.narrows, false);
  for (int a = 0; a < s.size(); ++a) {
    map[a] = pg.ls.iota(a);
    if (map[a] < 0 || hit[map[a]]) return false;
    hit[map[a]] = true;
  }
  // identities map to identities
  for (int e : rp.identity_arrows) {
    if (!set_contains(g.identity_arrows, map[e])) return false;
  }
  // composability and composites are preserved both ways
  for (int a = 0; a < rp.narrows; ++a) {
    if (map[rp.inv[a]] != g.inv[map[a]]) return false;
    for (int b = 0; b < rp.narrows; ++b) {
      const int lhs = rp.comp[a][b];
      const int rhs = g.comp[map[a]][map[b]];
      if ((lhs >= 0) != (rhs >= 0)) return false;
      if (lhs >= 0 && map[lhs] != rhs) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> connected_components(const FiniteGroupoid& g) {
  const int k = g.identities();
  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int a = 0; a < g.narrows; ++a) {
    parent[find(g.src[a])] = find(g.dst[a]);
  }
  std::map<int, std::vector<int>> comps;
  for (int i = 0; i < k; ++i) comps[find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : comps) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

GroupTable local_group(const FiniteGroupoid& g, int identity_pos,
                       std::vector<int>* arrow_of) {
  std::vector<int> arrows;
  for (int a = 0; a < g.narrows; ++a) {
    if (g.src[a] == identity_pos && g.dst[a] == identity_pos) arrows.push_back(a);
  }
  const int k = static_cast<int>(arrows.size());
  std::vector<int> local(g.narrows, -1);
  for (int i = 0; i < k; ++i) local[arrows[i]] = i;
  std::vector<std::vector<int>> mul(k, std::vector<int>(k));
  std::vector<std::string> labels(k);
  for (int i = 0; i < k; ++i) {
    labels[i] = g.labels[arrows[i]];
    for (int j = 0; j < k; ++j) {
      const int p = local[g.comp[arrows[i]][arrows[j]]];
      if (p < 0) {
        throw ValidationError("local arrows are not closed (internal)");
      }
      mul[i][j] = p;
    }
  }
  if (arrow_of) *arrow_of = arrows;
  return GroupTable::from_mul(std::move(mul), std::move(labels));
}

LocalGroupCertificate local_group_certificate(const PatersonGroupoid& pg,
                                              int identity_pos) {
  const auto& s = pg.ls.base();
  const auto& g = pg.groupoid;
  std::vector<int> arrows;
  auto local = local_group(g, identity_pos, &arrows);

  // H as a closed directed inverse subsemigroup of S
  const int h_index = g.identity_arrows[identity_pos];
  const auto& h = pg.ls.coset(h_index);
  std::vector<int> es;
  for (int a : h.carrier) {
    if (s.is_idempotent(a)) es.push_back(a);
  }
  auto bar = bar_closure(s, make_filter(s, es));
  auto sub = s.subsemigroup(bar.carrier);
  std::vector<int> local_of(s.size(), -1);
  for (size_t i = 0; i < bar.carrier.size(); ++i) {
    local_of[bar.carrier[i]] = static_cast<int>(i);
  }
  const auto& quotient = sub.sigma_group();

  // theta(A) = sigma(a) for a in A: check it is independent of a
  std::vector<int> theta(local.size, -1);
  for (int i = 0; i < local.size; ++i) {
    const auto& carrier = pg.ls.coset(arrows[i]).carrier;
    for (int a : carrier) {
      if (local_of[a] < 0) {
        throw ValidationError("theta: arrow carrier escapes bar(E(H))");
      }
      const int cls = sub.sigma_class()[local_of[a]];
      if (theta[i] < 0) {
        theta[i] = cls;
      } else if (theta[i] != cls) {
        throw ValidationError("theta is not well defined");
      }
    }
  }
  // injective
  for (int i = 0; i < local.size; ++i) {
    for (int j = i + 1; j < local.size; ++j) {
      if (theta[i] == theta[j]) {
        throw ValidationError("theta is not injective");
      }
    }
  }
  // surjective
  std::vector<bool> hit(quotient.size, false);
  for (int v : theta) hit[v] = true;
  if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) {
    throw ValidationError("theta is not surjective");
  }
  // multiplicative
  for (int i = 0; i < local.size; ++i) {
    for (int j = 0; j < local.size; ++j) {
      if (theta[local.mul[i][j]] != quotient.mul[theta[i]][theta[j]]) {
        throw ValidationError("theta is not multiplicative");
      }
    }
  }
  return LocalGroupCertificate{std::move(local), quotient, std::move(theta)};
}

PatersonCoordinate paterson_coordinates(const FiniteInverseSemigroup& s,
                                        const Coset& a) {
  if (!is_directed(s, a.carrier)) {
    throw ValidationError("Paterson coordinates need a directed coset");
  }
  PatersonCoordinate c;
  c.p = s.up_closure(s.product_sets(a.carrier, s.inverse_set(a.carrier)));
  c.rep = a.rep;
  if (!set_contains(c.p, s.r(c.rep))) {
    throw ValidationError("coordinate representative has r outside P (internal)");
  }
  // round-trip: (P a)up is the carrier again
  if (s.up_closure(s.product_sets(c.p, {c.rep})) != a.carrier) {
    throw ValidationError("Paterson coordinate round-trip fails (internal)");
  }
  return c;
}

bool coordinates_identified(const FiniteInverseSemigroup& s,
                            const std::vector<int>& p, int a, int b) {
  for (int x : p) {
    if (s.mul(x, a) == s.mul(x, b)) return true;
  }
  return false;
}

std::vector<TopologyBasisSet> topology_basis(const CosetSemigroup& ls) {
  const auto& s = ls.base();
  std::vector<TopologyBasisSet> out;
  std::set<std::vector<int>> seen;
  for (int x = 0; x < s.size(); ++x) {
    std::vector<int> below;
    for (int y = 0; y < s.size(); ++y) {
      if (s.lt(y, x)) below.push_back(y);
    }
    if (below.size() > 20) {
      throw CapExceededError("too many elements below " + s.label(x) +
                             " for basis enumeration");
    }
    std::vector<int> u_s;
    for (int i = 0; i < ls.size(); ++i) {
      if (set_contains(ls.coset(i).carrier, x)) u_s.push_back(i);
    }
    const unsigned long total = 1ul << below.size();
    for (unsigned long mask = 0; mask < total; ++mask) {
      std::vector<int> excl;
      for (size_t k = 0; k < below.size(); ++k) {
        if (mask & (1ul << k)) excl.push_back(below[k]);
      }
      // antichains only; comparable pairs give duplicate sets
      bool antichain = true;
      for (size_t i = 0; i < excl.size() && antichain; ++i) {
        for (size_t j = i + 1; j < excl.size() && antichain; ++j) {
          antichain = !s.leq(excl[i], excl[j]) && !s.leq(excl[j], excl[i]);
        }
      }
      if (!antichain) continue;
      std::vector<int> members;
      for (int i : u_s) {
        bool excluded = false;
        for (int y : excl) {
          if (set_contains(ls.coset(i).carrier, y)) {
            excluded = true;
            break;
          }
        }
        if (!excluded) members.push_back(i);
      }
      if (members.empty()) continue;
      if (seen.insert(members).second) {
        out.push_back(TopologyBasisSet{x, std::move(excl), std::move(members)});
      }
    }
  }
  return out;
}

std::string export_dot(const FiniteGroupoid& g) {
  std::ostringstream os;
  os << "digraph groupoid {\n";
  os << "  node [shape=box];\n";
  for (int i = 0; i < g.identities(); ++i) {
    os << "  n" << i << " [label=\"" << g.identity_labels[i] << "\"];\n";
  }
  for (int a = 0; a < g.narrows; ++a) {
    os << "  n" << g.src[a] << " -> n" << g.dst[a] << " [label=\""
       << g.labels[a] << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string export_dot(const ActionGraph& g, const FiniteInverseSemigroup& s) {
  std::ostringstream os;
  os << "digraph action {\n";
  for (int i = 0; i < g.vertices; ++i) {
    os << "  n" << i << " [label=\"" << g.vertex_labels[i] << "\"];\n";
  }
  for (const auto& e : g.edges) {
    os << "  n" << e.from << " -> n" << e.to << " [label=\"" << s.label(e.label)
       << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace groupoidal
