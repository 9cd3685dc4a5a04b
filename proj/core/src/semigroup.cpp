#include "groupoidal/semigroup.hpp"

#include <algorithm>
#include <map>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "groupoidal/errors.hpp"

namespace groupoidal {

namespace detail {

bool is_sorted_subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> set_intersect(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool set_contains(const std::vector<int>& a, int x) {
  return std::binary_search(a.begin(), a.end(), x);
}

}  // namespace detail

// ---------------------------------------------------------------- GroupTable

GroupTable GroupTable::from_mul(std::vector<std::vector<int>> mul,
                                std::vector<std::string> labels) {
  GroupTable g;
  g.size = static_cast<int>(mul.size());
  g.mul = std::move(mul);
  if (g.size == 0) {
    throw ValidationError("group table must be non-empty");
  }
  for (const auto& row : g.mul) {
    if (static_cast<int>(row.size()) != g.size) {
      throw ValidationError("group table is not square");
    }
    for (int v : row) {
      if (v < 0 || v >= g.size) {
        throw ValidationError("group table entry out of range");
      }
    }
  }
  for (int a = 0; a < g.size; ++a) {
    for (int b = 0; b < g.size; ++b) {
      for (int c = 0; c < g.size; ++c) {
        if (g.mul[g.mul[a][b]][c] != g.mul[a][g.mul[b][c]]) {
          throw ValidationError("group table not associative at (" +
                                std::to_string(a) + "," + std::to_string(b) +
                                "," + std::to_string(c) + ")");
        }
      }
    }
  }
  int id = -1;
  for (int e = 0; e < g.size; ++e) {
    bool ok = true;
    for (int a = 0; a < g.size && ok; ++a) {
      ok = g.mul[e][a] == a && g.mul[a][e] == a;
    }
    if (ok) {
      id = e;
      break;
    }
  }
  if (id < 0) {
    throw ValidationError("group table has no identity");
  }
  g.identity = id;
  g.inv.assign(g.size, -1);
  for (int a = 0; a < g.size; ++a) {
    for (int b = 0; b < g.size; ++b) {
      if (g.mul[a][b] == id && g.mul[b][a] == id) {
        g.inv[a] = b;
        break;
      }
    }
    if (g.inv[a] < 0) {
      throw ValidationError("group table element " + std::to_string(a) +
                            " has no inverse");
    }
  }
  if (labels.empty()) {
    for (int a = 0; a < g.size; ++a) {
      labels.push_back("g" + std::to_string(a));
    }
  }
  g.labels = std::move(labels);
  return g;
}

int GroupTable::order_of(int a) const {
  int x = a, ord = 1;
  while (x != identity) {
    x = mul[x][a];
    ++ord;
  }
  return ord;
}

int GroupTable::exponent() const {
  long long m = 1;
  for (int a = 0; a < size; ++a) {
    m = std::lcm(m, static_cast<long long>(order_of(a)));
  }
  return static_cast<int>(m);
}

bool GroupTable::is_abelian() const {
  for (int a = 0; a < size; ++a) {
    for (int b = a + 1; b < size; ++b) {
      if (mul[a][b] != mul[b][a]) return false;
    }
  }
  return true;
}

std::vector<int> GroupTable::order_sequence() const {
  std::vector<int> seq(size);
  for (int a = 0; a < size; ++a) seq[a] = order_of(a);
  std::sort(seq.begin(), seq.end());
  return seq;
}

namespace {

bool extend_isomorphism(const GroupTable& a, const GroupTable& b,
                        std::vector<int>& image, std::vector<bool>& used,
                        int next) {
  // image is a partial map on a dense prefix closed under known products.
  while (next < a.size && image[next] >= 0) ++next;
  if (next == a.size) return true;
  for (int cand = 0; cand < b.size; ++cand) {
    if (used[cand] || b.order_of(cand) != a.order_of(next)) continue;
    std::vector<int> im = image;
    std::vector<bool> us = used;
    im[next] = cand;
    us[cand] = true;
    // close under products with everything already mapped
    bool ok = true;
    std::queue<std::pair<int, int>> work;
    for (int x = 0; x < a.size && ok; ++x) {
      if (im[x] >= 0) {
        work.emplace(x, next);
        work.emplace(next, x);
      }
    }
    while (ok && !work.empty()) {
      auto [x, y] = work.front();
      work.pop();
      if (im[x] < 0 || im[y] < 0) continue;
      int p = a.mul[x][y];
      int q = b.mul[im[x]][im[y]];
      if (im[p] < 0) {
        if (us[q]) {
          ok = false;
        } else {
          im[p] = q;
          us[q] = true;
          for (int z = 0; z < a.size; ++z) {
            if (im[z] >= 0) {
              work.emplace(z, p);
              work.emplace(p, z);
            }
          }
        }
      } else if (im[p] != q) {
        ok = false;
      }
    }
    if (ok && extend_isomorphism(a, b, im, us, next + 1)) {
      image = im;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_group_isomorphism(const GroupTable& a,
                                                       const GroupTable& b) {
  if (a.size != b.size) return std::nullopt;
  if (a.order_sequence() != b.order_sequence()) return std::nullopt;
  std::vector<int> image(a.size, -1);
  std::vector<bool> used(b.size, false);
  image[a.identity] = b.identity;
  used[b.identity] = true;
  if (extend_isomorphism(a, b, image, used, 0)) return image;
  return std::nullopt;
}

bool groups_isomorphic(const GroupTable& a, const GroupTable& b) {
  return find_group_isomorphism(a, b).has_value();
}

std::vector<std::vector<int>> enumerate_subgroups(const GroupTable& g) {
  auto close = [&](std::vector<int> seed) {
    std::set<int> have(seed.begin(), seed.end());
    have.insert(g.identity);
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<int> cur(have.begin(), have.end());
      for (int a : cur) {
        if (have.insert(g.inv[a]).second) grew = true;
        for (int b : cur) {
          if (have.insert(g.mul[a][b]).second) grew = true;
        }
      }
    }
    return std::vector<int>(have.begin(), have.end());
  };
  std::set<std::vector<int>> found;
  std::queue<std::vector<int>> work;
  auto trivial = close({});
  found.insert(trivial);
  work.push(trivial);
  while (!work.empty()) {
    auto h = work.front();
    work.pop();
    for (int x = 0; x < g.size; ++x) {
      if (detail::set_contains(h, x)) continue;
      auto bigger = h;
      bigger.push_back(x);
      auto k = close(std::move(bigger));
      if (found.insert(k).second) {
        work.push(k);
      }
    }
  }
  return {found.begin(), found.end()};
}

// --------------------------------------------------- FiniteInverseSemigroup

FiniteInverseSemigroup FiniteInverseSemigroup::from_table(
    std::vector<std::vector<int>> mul, std::optional<std::vector<int>> inv,
    std::vector<std::string> labels, bool trusted) {
  FiniteInverseSemigroup s;
  s.n_ = static_cast<int>(mul.size());
  if (s.n_ == 0) {
    throw ValidationError("semigroup must be non-empty");
  }
  for (const auto& row : mul) {
    if (static_cast<int>(row.size()) != s.n_) {
      throw ValidationError("multiplication table is not square");
    }
    for (int v : row) {
      if (v < 0 || v >= s.n_) {
        throw ValidationError("multiplication table entry out of range");
      }
    }
  }
  s.mul_ = std::move(mul);
  s.validate_table(trusted);
  if (inv) {
    if (static_cast<int>(inv->size()) != s.n_) {
      throw ValidationError("inverse array has wrong length");
    }
    s.inv_ = std::move(*inv);
  } else {
    // recover the unique generalized inverse of each element
    s.inv_.assign(s.n_, -1);
    for (int a = 0; a < s.n_; ++a) {
      for (int t = 0; t < s.n_; ++t) {
        if (s.mul_[s.mul_[a][t]][a] == a && s.mul_[s.mul_[t][a]][t] == t) {
          if (s.inv_[a] >= 0) {
            throw ValidationError("element " + std::to_string(a) +
                                  " has non-unique inverse (candidates " +
                                  std::to_string(s.inv_[a]) + " and " +
                                  std::to_string(t) + ")");
          }
          s.inv_[a] = t;
        }
      }
      if (s.inv_[a] < 0) {
        throw ValidationError("element " + std::to_string(a) +
                              " has no generalized inverse");
      }
    }
  }
  if (labels.empty()) {
    for (int a = 0; a < s.n_; ++a) {
      labels.push_back("s" + std::to_string(a));
    }
  }
  if (static_cast<int>(labels.size()) != s.n_) {
    throw ValidationError("label array has wrong length");
  }
  s.labels_ = std::move(labels);
  s.validate(trusted);
  s.finalize();
  return s;
}

FiniteInverseSemigroup FiniteInverseSemigroup::from_generators(
    const std::vector<PartialPerm>& gens, std::size_t element_cap) {
  if (gens.empty()) {
    throw ValidationError("generator list must be non-empty");
  }
  const int deg = gens[0].degree();
  for (const auto& g : gens) {
    if (g.degree() != deg) {
      throw ValidationError("generators must share a degree");
    }
  }
  std::map<PartialPerm, int> index;
  std::vector<PartialPerm> elems;
  auto intern = [&](const PartialPerm& p) {
    auto [it, fresh] = index.emplace(p, static_cast<int>(elems.size()));
    if (fresh) {
      elems.push_back(p);
      if (elems.size() > element_cap) {
        throw CapExceededError("closure exceeds element cap of " +
                               std::to_string(element_cap));
      }
    }
    return std::pair(it->second, fresh);
  };
  std::queue<int> work;
  for (const auto& g : gens) {
    auto [i, fresh] = intern(g);
    if (fresh) work.push(i);
    auto [j, fresh2] = intern(g.inverse());
    if (fresh2) work.push(j);
  }
  while (!work.empty()) {
    int i = work.front();
    work.pop();
    for (size_t j = 0; j < elems.size(); ++j) {
      for (auto p : {elems[i].compose(elems[j]), elems[j].compose(elems[i])}) {
        auto [k, fresh] = intern(p);
        if (fresh) {
          work.push(k);
          auto [k2, fresh2] = intern(p.inverse());
          if (fresh2) work.push(k2);
        }
      }
    }
  }
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  std::vector<int> inv(n);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    inv[i] = index.at(elems[i].inverse());
    labels[i] = elems[i].to_string();
    for (int j = 0; j < n; ++j) {
      mul[i][j] = index.at(elems[i].compose(elems[j]));
    }
  }
  auto s = from_table(std::move(mul), std::move(inv), std::move(labels),
                      /*trusted=*/true);
  s.elements_ = std::move(elems);
  return s;
}

void FiniteInverseSemigroup::validate_table(bool trusted) {
  if (!trusted) {
    for (int a = 0; a < n_; ++a) {
      for (int b = 0; b < n_; ++b) {
        const int ab = mul_[a][b];
        for (int c = 0; c < n_; ++c) {
          if (mul_[ab][c] != mul_[a][mul_[b][c]]) {
            throw ValidationError("multiplication not associative at (" +
                                  std::to_string(a) + "," + std::to_string(b) +
                                  "," + std::to_string(c) + ")");
          }
        }
      }
    }
  }
  for (int a = 0; a < n_; ++a) {
    if (mul_[a][a] != a) continue;
    for (int b = a + 1; b < n_; ++b) {
      if (mul_[b][b] != b) continue;
      if (mul_[a][b] != mul_[b][a]) {
        throw ValidationError("idempotents " + std::to_string(a) + " and " +
                              std::to_string(b) + " do not commute");
      }
    }
  }
}

void FiniteInverseSemigroup::validate(bool /*trusted*/) {
  for (int a = 0; a < n_; ++a) {
    const int t = inv_[a];
    if (t < 0 || t >= n_ || mul_[mul_[a][t]][a] != a || mul_[mul_[t][a]][t] != t) {
      throw ValidationError("inverse axiom fails for element " + std::to_string(a));
    }
  }
}

void FiniteInverseSemigroup::finalize() {
  d_.resize(n_);
  r_.resize(n_);
  for (int a = 0; a < n_; ++a) {
    d_[a] = mul_[inv_[a]][a];
    r_[a] = mul_[a][inv_[a]];
    if (mul_[a][a] == a) idempotents_.push_back(a);
  }
  for (int z : idempotents_) {
    bool is_zero = true;
    for (int a = 0; a < n_ && is_zero; ++a) {
      is_zero = mul_[z][a] == z && mul_[a][z] == z;
    }
    if (is_zero) {
      zero_ = z;
      break;
    }
  }
  // Sanity for the order characterization we rely on: s = t*d(s) agrees with
  // "s = t*e for some idempotent e".
  for (int s = 0; s < n_; ++s) {
    for (int t = 0; t < n_; ++t) {
      bool via_e = false;
      for (int e : idempotents_) {
        if (mul_[t][e] == s) {
          via_e = true;
          break;
        }
      }
      if (via_e != leq(s, t)) {
        throw ValidationError("natural order characterizations disagree at (" +
                              std::to_string(s) + "," + std::to_string(t) + ")");
      }
    }
  }

  // Green's relations. L by equal d, R by equal r, H their meet, D via
  // L-then-R composition, J by equality of principal two-sided ideals.
  auto classify = [&](auto key) {
    std::map<decltype(key(0)), int> seen;
    std::vector<int> cls(n_);
    for (int a = 0; a < n_; ++a) {
      auto k = key(a);
      auto it = seen.find(k);
      if (it == seen.end()) {
        it = seen.emplace(k, static_cast<int>(seen.size())).first;
      }
      cls[a] = it->second;
    }
    return cls;
  };
  green_.l_class = classify([&](int a) { return d_[a]; });
  green_.r_class = classify([&](int a) { return r_[a]; });
  green_.h_class = classify([&](int a) { return std::pair(d_[a], r_[a]); });
  // s D t iff some a has d(a) = d(s) and r(a) = r(t)
  {
    std::vector<std::vector<char>> link(n_, std::vector<char>(n_, 0));
    for (int a = 0; a < n_; ++a) link[d_[a]][r_[a]] = 1;
    std::vector<int> cls(n_, -1);
    int next = 0;
    for (int s = 0; s < n_; ++s) {
      if (cls[s] >= 0) continue;
      cls[s] = next;
      for (int t = s + 1; t < n_; ++t) {
        if (cls[t] < 0 && link[d_[s]][r_[t]] && link[d_[t]][r_[s]]) {
          cls[t] = next;
        }
      }
      ++next;
    }
    green_.d_class = cls;
  }
  green_.j_class = classify([&](int a) {
    std::set<int> ideal;
    ideal.insert(a);
    for (int x = 0; x < n_; ++x) {
      ideal.insert(mul_[x][a]);
      ideal.insert(mul_[a][x]);
      for (int y = 0; y < n_; ++y) {
        ideal.insert(mul_[mul_[x][a]][y]);
      }
    }
    return std::vector<int>(ideal.begin(), ideal.end());
  });
  auto members = [&](const std::vector<int>& cls) {
    int k = *std::max_element(cls.begin(), cls.end()) + 1;
    std::vector<std::vector<int>> out(k);
    for (int a = 0; a < n_; ++a) out[cls[a]].push_back(a);
    return out;
  };
  green_.l_classes = members(green_.l_class);
  green_.r_classes = members(green_.r_class);
  green_.h_classes = members(green_.h_class);
  green_.d_classes = members(green_.d_class);
  green_.j_classes = members(green_.j_class);

  // sigma: a ~ b iff they share a lower bound
  {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int c = 0; c < n_; ++c) {
      // c is a common lower bound of everything above it
      int root = -1;
      for (int a = 0; a < n_; ++a) {
        if (leq(c, a)) {
          if (root < 0) {
            root = find(a);
          } else {
            parent[find(a)] = root;
          }
        }
      }
    }
    std::map<int, int> remap;
    sigma_class_.resize(n_);
    for (int a = 0; a < n_; ++a) {
      int rt = find(a);
      auto it = remap.find(rt);
      if (it == remap.end()) {
        it = remap.emplace(rt, static_cast<int>(remap.size())).first;
      }
      sigma_class_[a] = it->second;
    }
    const int k = static_cast<int>(remap.size());
    std::vector<std::vector<int>> gmul(k, std::vector<int>(k, -1));
    std::vector<std::string> glabels(k);
    for (int a = 0; a < n_; ++a) {
      if (glabels[sigma_class_[a]].empty()) {
        glabels[sigma_class_[a]] = "[" + labels_[a] + "]";
      }
      for (int b = 0; b < n_; ++b) {
        int& cell = gmul[sigma_class_[a]][sigma_class_[b]];
        const int prod = sigma_class_[mul_[a][b]];
        if (cell < 0) {
          cell = prod;
        } else if (cell != prod) {
          throw ValidationError("sigma is not a congruence (internal error)");
        }
      }
    }
    sigma_group_ = GroupTable::from_mul(std::move(gmul), std::move(glabels));
  }
}

std::vector<int> FiniteInverseSemigroup::up_closure(const std::vector<int>& a) const {
  std::vector<int> out;
  for (int s = 0; s < n_; ++s) {
    for (int x : a) {
      if (leq(x, s)) {
        out.push_back(s);
        break;
      }
    }
  }
  return out;
}

std::vector<int> FiniteInverseSemigroup::product_sets(const std::vector<int>& a,
                                                      const std::vector<int>& b) const {
  std::set<int> out;
  for (int x : a) {
    for (int y : b) {
      out.insert(mul_[x][y]);
    }
  }
  return {out.begin(), out.end()};
}

std::vector<int> FiniteInverseSemigroup::inverse_set(const std::vector<int>& a) const {
  std::vector<int> out;
  out.reserve(a.size());
  for (int x : a) out.push_back(inv_[x]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> FiniteInverseSemigroup::all_elements() const {
  std::vector<int> out(n_);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

GroupTable FiniteInverseSemigroup::maximal_subgroup(int e,
                                                    std::vector<int>* embedding) const {
  if (!is_idempotent(e)) {
    throw ValidationError("maximal subgroup requires an idempotent, got " +
                          labels_[e]);
  }
  std::vector<int> carrier;
  for (int a = 0; a < n_; ++a) {
    if (d_[a] == e && r_[a] == e) carrier.push_back(a);
  }
  const int k = static_cast<int>(carrier.size());
  std::vector<int> local(n_, -1);
  for (int i = 0; i < k; ++i) local[carrier[i]] = i;
  std::vector<std::vector<int>> gmul(k, std::vector<int>(k));
  std::vector<std::string> glabels(k);
  for (int i = 0; i < k; ++i) {
    glabels[i] = labels_[carrier[i]];
    for (int j = 0; j < k; ++j) {
      const int p = local[mul_[carrier[i]][carrier[j]]];
      if (p < 0) {
        throw ValidationError("H-class of idempotent is not closed (internal)");
      }
      gmul[i][j] = p;
    }
  }
  if (embedding) *embedding = carrier;
  return GroupTable::from_mul(std::move(gmul), std::move(glabels));
}

FiniteInverseSemigroup FiniteInverseSemigroup::subsemigroup(
    const std::vector<int>& carrier) const {
  const int k = static_cast<int>(carrier.size());
  std::vector<int> local(n_, -1);
  for (int i = 0; i < k; ++i) local[carrier[i]] = i;
  std::vector<std::vector<int>> smul(k, std::vector<int>(k));
  std::vector<int> sinv(k);
  std::vector<std::string> slabels(k);
  for (int i = 0; i < k; ++i) {
    slabels[i] = labels_[carrier[i]];
    sinv[i] = local[inv_[carrier[i]]];
    if (sinv[i] < 0) {
      throw ValidationError("carrier not closed under inverse");
    }
    for (int j = 0; j < k; ++j) {
      smul[i][j] = local[mul_[carrier[i]][carrier[j]]];
      if (smul[i][j] < 0) {
        throw ValidationError("carrier not closed under product");
      }
    }
  }
  return from_table(std::move(smul), std::move(sinv), std::move(slabels),
                    /*trusted=*/true);
}

int FiniteInverseSemigroup::index_of(const PartialPerm& p) const {
  for (size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] == p) return static_cast<int>(i);
  }
  return -1;
}

int FiniteInverseSemigroup::index_of_label(const std::string& label) const {
  for (int i = 0; i < n_; ++i) {
    if (labels_[i] == label) return i;
  }
  return -1;
}

}  // namespace groupoidal
