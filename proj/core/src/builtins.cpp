#include "groupoidal/builtins.hpp"

#include <algorithm>
#include <numeric>

#include "groupoidal/errors.hpp"

namespace groupoidal {

FiniteInverseSemigroup inverse_symmetric(int n) {
  if (n < 1) {
    throw ValidationError("inverse_symmetric requires n >= 1");
  }
  std::vector<PartialPerm> gens;
  if (n == 1) {
    gens.push_back(PartialPerm::identity(1));
    gens.push_back(PartialPerm(1));  // empty map
  } else {
    std::vector<int> cycle(n);
    for (int x = 1; x <= n; ++x) cycle[x - 1] = (x % n) + 1;
    gens.push_back(PartialPerm::from_images(cycle));
    std::vector<int> swap01 = PartialPerm::identity(n).images();
    std::swap(swap01[0], swap01[1]);
    gens.push_back(PartialPerm::from_images(swap01));
    std::vector<int> tail;
    for (int x = 2; x <= n; ++x) tail.push_back(x);
    gens.push_back(PartialPerm::partial_identity(n, tail));
  }
  return FiniteInverseSemigroup::from_generators(gens);
}

FiniteInverseSemigroup chain_semilattice(int n) {
  if (n < 1) {
    throw ValidationError("chain requires n >= 1");
  }
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  std::vector<int> inv(n);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    inv[i] = i;
    labels[i] = "c" + std::to_string(i);
    for (int j = 0; j < n; ++j) {
      mul[i][j] = std::max(i, j);
    }
  }
  return FiniteInverseSemigroup::from_table(std::move(mul), std::move(inv),
                                            std::move(labels), /*trusted=*/true);
}

FiniteInverseSemigroup brandt(const GroupTable& g, int n) {
  if (n < 1) {
    throw ValidationError("brandt requires n >= 1");
  }
  const int m = g.size;
  const int total = n * m * n + 1;  // triples plus zero
  const int zero = total - 1;
  auto idx = [&](int i, int a, int j) { return (i * m + a) * n + j; };
  std::vector<std::vector<int>> mul(total, std::vector<int>(total, zero));
  std::vector<int> inv(total);
  std::vector<std::string> labels(total);
  inv[zero] = zero;
  labels[zero] = "0";
  for (int i = 0; i < n; ++i) {
    for (int a = 0; a < m; ++a) {
      for (int j = 0; j < n; ++j) {
        inv[idx(i, a, j)] = idx(j, g.inv[a], i);
        labels[idx(i, a, j)] = "(" + std::to_string(i + 1) + "," + g.labels[a] +
                               "," + std::to_string(j + 1) + ")";
        for (int k = 0; k < n; ++k) {
          for (int b = 0; b < m; ++b) {
            for (int l = 0; l < n; ++l) {
              if (j == k) {
                mul[idx(i, a, j)][idx(k, b, l)] = idx(i, g.mul[a][b], l);
              }
            }
          }
        }
      }
    }
  }
  return FiniteInverseSemigroup::from_table(std::move(mul), std::move(inv),
                                            std::move(labels));
}

GroupTable cyclic_group(int n) {
  if (n < 1) {
    throw ValidationError("cyclic group requires n >= 1");
  }
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = "r" + std::to_string(i);
    for (int j = 0; j < n; ++j) {
      mul[i][j] = (i + j) % n;
    }
  }
  return GroupTable::from_mul(std::move(mul), std::move(labels));
}

std::vector<std::vector<int>> symmetric_group_permutations(int n) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return perms;
}

GroupTable symmetric_group(int n) {
  if (n < 1 || n > 4) {
    throw ValidationError("symmetric_group supports 1 <= n <= 4");
  }
  auto perms = symmetric_group_permutations(n);
  const int k = static_cast<int>(perms.size());
  auto compose = [&](const std::vector<int>& f, const std::vector<int>& g) {
    std::vector<int> h(n);
    for (int x = 0; x < n; ++x) h[x] = f[g[x]];
    return h;
  };
  auto find = [&](const std::vector<int>& q) {
    return static_cast<int>(std::find(perms.begin(), perms.end(), q) -
                            perms.begin());
  };
  std::vector<std::vector<int>> mul(k, std::vector<int>(k));
  std::vector<std::string> labels(k);
  for (int i = 0; i < k; ++i) {
    std::string lab = "(";
    for (int x = 0; x < n; ++x) lab += std::to_string(perms[i][x] + 1);
    labels[i] = lab + ")";
    for (int j = 0; j < k; ++j) {
      mul[i][j] = find(compose(perms[i], perms[j]));
    }
  }
  return GroupTable::from_mul(std::move(mul), std::move(labels));
}

FiniteInverseSemigroup group_as_semigroup(const GroupTable& g) {
  return FiniteInverseSemigroup::from_table(g.mul, g.inv, g.labels,
                                            /*trusted=*/true);
}

FiniteInverseSemigroup adjoin_identity(const FiniteInverseSemigroup& s) {
  const int n = s.size();
  std::vector<std::vector<int>> mul(n + 1, std::vector<int>(n + 1));
  std::vector<int> inv(n + 1);
  std::vector<std::string> labels(n + 1);
  for (int i = 0; i < n; ++i) {
    inv[i] = s.inv(i);
    labels[i] = s.label(i);
    mul[i][n] = i;
    mul[n][i] = i;
    for (int j = 0; j < n; ++j) {
      mul[i][j] = s.mul(i, j);
    }
  }
  mul[n][n] = n;
  inv[n] = n;
  labels[n] = "1+";
  return FiniteInverseSemigroup::from_table(std::move(mul), std::move(inv),
                                            std::move(labels), /*trusted=*/true);
}

}  // namespace groupoidal
