#include "groupoidal/reps.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "groupoidal/builtins.hpp"
#include "groupoidal/errors.hpp"

namespace groupoidal {

using detail::set_contains;

// ---------------------------------------------------- transversals, ideals

Transversal transversal_of_lclass(const FiniteInverseSemigroup& s, int e) {
  if (!s.is_idempotent(e)) {
    throw ValidationError("transversal requires an idempotent");
  }
  std::map<int, int> by_r;  // r-value -> minimum element
  for (int x = 0; x < s.size(); ++x) {
    if (s.d(x) != e) continue;
    auto it = by_r.find(s.r(x));
    if (it == by_r.end() || x < it->second) by_r[s.r(x)] = x;
  }
  Transversal t;
  t.e = e;
  for (auto& [r, x] : by_r) t.members.push_back(x);
  std::sort(t.members.begin(), t.members.end());
  return t;
}

std::pair<int, int> transversal_factorize(const FiniteInverseSemigroup& s,
                                          const Transversal& t, int x) {
  if (s.d(x) != t.e) {
    throw ValidationError("element is not in the L-class of the transversal");
  }
  for (size_t i = 0; i < t.members.size(); ++i) {
    const int ti = t.members[i];
    if (s.r(ti) != s.r(x)) continue;
    const int g = s.mul(s.inv(ti), x);
    if (s.mul(ti, g) != x || s.d(g) != t.e || s.r(g) != t.e) {
      throw ValidationError("transversal factorization failed (internal)");
    }
    return {static_cast<int>(i), g};
  }
  throw ValidationError("no transversal member in the H-class (internal)");
}

std::vector<int> ideal_strictly_below(const FiniteInverseSemigroup& s, int e) {
  if (!s.is_idempotent(e)) {
    throw ValidationError("ideal_strictly_below requires an idempotent");
  }
  const int je = s.green().j_class[e];
  std::set<int> ses;
  for (int a = 0; a < s.size(); ++a) {
    for (int b = 0; b < s.size(); ++b) {
      ses.insert(s.mul(s.mul(a, e), b));
    }
  }
  std::vector<int> out;
  for (int x : ses) {
    if (s.green().j_class[x] != je) out.push_back(x);
  }
  return out;
}

ReesQuotient rees_quotient(const FiniteInverseSemigroup& s,
                           const std::vector<int>& ideal) {
  std::vector<int> old_to_new(s.size(), -1);
  if (ideal.empty()) {
    std::iota(old_to_new.begin(), old_to_new.end(), 0);
    return ReesQuotient{s, std::move(old_to_new)};
  }
  for (int x : ideal) {
    for (int a = 0; a < s.size(); ++a) {
      if (!set_contains(ideal, s.mul(a, x)) || !set_contains(ideal, s.mul(x, a))) {
        throw ValidationError("set is not a two-sided ideal");
      }
    }
  }
  std::vector<int> kept;
  for (int a = 0; a < s.size(); ++a) {
    if (!set_contains(ideal, a)) kept.push_back(a);
  }
  const int n = static_cast<int>(kept.size()) + 1;
  const int zero = n - 1;
  for (size_t i = 0; i < kept.size(); ++i) old_to_new[kept[i]] = static_cast<int>(i);
  for (int x : ideal) old_to_new[x] = zero;
  std::vector<std::vector<int>> mul(n, std::vector<int>(n, zero));
  std::vector<std::string> labels(n);
  labels[zero] = "0";
  for (size_t i = 0; i < kept.size(); ++i) {
    labels[i] = s.label(kept[i]);
    for (size_t j = 0; j < kept.size(); ++j) {
      mul[i][j] = old_to_new[s.mul(kept[i], kept[j])];
    }
  }
  auto q = FiniteInverseSemigroup::from_table(std::move(mul), std::nullopt,
                                              std::move(labels));
  return ReesQuotient{std::move(q), std::move(old_to_new)};
}

bool is_primitive(const FiniteInverseSemigroup& s, int e) {
  if (!s.zero()) {
    throw ValidationError("primitivity needs a zero");
  }
  if (!s.is_idempotent(e)) {
    throw ValidationError("primitivity is about idempotents");
  }
  if (e == *s.zero()) return false;
  for (int f : s.idempotents()) {
    if (f != e && f != *s.zero() && s.lt(f, e)) return false;
  }
  return true;
}

// ------------------------------------------------------------- reductions

MatrixRep<Fp> reduce_rep_mod(const MatrixRep<Rational>& m, uint32_t p) {
  if (!is_prime(p)) {
    throw ValidationError(std::to_string(p) + " is not prime");
  }
  MatrixRep<Fp> out;
  out.sgp = m.sgp;
  out.dim = m.dim;
  out.contracted = m.contracted;
  out.name = m.name + " mod " + std::to_string(p);
  out.induced_from = m.induced_from;
  for (const auto& mat : m.mats) {
    Matrix<Fp> red(m.dim, m.dim);
    for (int i = 0; i < m.dim; ++i) {
      for (int j = 0; j < m.dim; ++j) {
        red.at(i, j) = reduce_mod(mat.at(i, j), p);
      }
    }
    out.mats.push_back(std::move(red));
  }
  verify_matrix_rep(out);
  return out;
}

// ------------------------------------------------------------ simplicity

namespace {

uint32_t rep_modulus(const MatrixRep<Fp>& m) {
  for (const auto& mat : m.mats) {
    for (int i = 0; i < mat.rows(); ++i) {
      for (int j = 0; j < mat.cols(); ++j) {
        if (mat.at(i, j).modulus() != 0) return mat.at(i, j).modulus();
      }
    }
  }
  throw ValidationError("rep carries no modulus");
}

// submodule generated by v
RowSpace<Fp> spin(const std::vector<Matrix<Fp>>& mats, std::vector<Fp> v) {
  const int dim = static_cast<int>(v.size());
  RowSpace<Fp> space(dim);
  std::vector<std::vector<Fp>> work;
  if (space.add(v)) work.push_back(std::move(v));
  while (!work.empty()) {
    auto w = std::move(work.back());
    work.pop_back();
    for (const auto& m : mats) {
      auto u = m.apply(w);
      auto residual = space.reduce(u);
      bool zero = true;
      for (const auto& c : residual) {
        if (!is_zero(c)) {
          zero = false;
          break;
        }
      }
      if (!zero && space.add(u)) work.push_back(std::move(u));
      if (space.dim() == dim) return space;
    }
  }
  return space;
}

}  // namespace

SimplicityResult is_simple_module(const MatrixRep<Fp>& m, long vector_cap) {
  const uint32_t p = rep_modulus(m);
  SimplicityResult out;
  if (m.dim == 0) {
    return out;  // the zero module is not simple
  }
  double logcount = m.dim * std::log2(static_cast<double>(p));
  const bool exhaustive =
      logcount <= 40 && std::pow(static_cast<double>(p), m.dim) <= vector_cap;
  out.exhaustive = exhaustive;
  auto check = [&](std::vector<Fp> v) -> bool {
    bool nonzero = false;
    for (const auto& c : v) {
      if (!is_zero(c)) nonzero = true;
    }
    if (!nonzero) return true;
    auto space = spin(m.mats, std::move(v));
    if (space.dim() < m.dim) {
      out.witness = space.rows();
      return false;
    }
    return true;
  };
  if (exhaustive) {
    // all vectors with leading coefficient 1: one per projective class
    std::vector<int> digits(m.dim, 0);
    while (true) {
      int lead = -1;
      for (int i = 0; i < m.dim; ++i) {
        if (digits[i] != 0) {
          lead = i;
          break;
        }
      }
      if (lead >= 0 && digits[lead] == 1) {
        std::vector<Fp> v;
        v.reserve(m.dim);
        for (int d : digits) v.emplace_back(d, p);
        if (!check(std::move(v))) return out;
      }
      int k = m.dim - 1;
      while (k >= 0 && digits[k] == static_cast<int>(p) - 1) {
        digits[k] = 0;
        --k;
      }
      if (k < 0) break;
      ++digits[k];
    }
  } else {
    for (int i = 0; i < m.dim; ++i) {
      std::vector<Fp> v(m.dim, Fp(0, p));
      v[i] = Fp(1, p);
      if (!check(std::move(v))) return out;
    }
    // deterministic LCG sample
    uint64_t state = 0x9e3779b97f4a7c15ull;
    auto next = [&] {
      state = state * 6364136223846793005ull + 1442695040888963407ull;
      return static_cast<long long>((state >> 33) % p);
    };
    for (int trial = 0; trial < 256; ++trial) {
      std::vector<Fp> v;
      v.reserve(m.dim);
      for (int i = 0; i < m.dim; ++i) v.emplace_back(next(), p);
      if (!check(std::move(v))) return out;
    }
  }
  out.simple = true;
  return out;
}

// ------------------------------------------------- group irreducible lists

namespace {

// greedy small generating set of a group
std::vector<int> group_generators(const GroupTable& g) {
  std::vector<int> gens;
  std::set<int> closed = {g.identity};
  auto close_with = [&](int x) {
    std::set<int> have = closed;
    have.insert(x);
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<int> cur(have.begin(), have.end());
      for (int a : cur) {
        for (int b : cur) {
          if (have.insert(g.mul[a][b]).second) grew = true;
        }
      }
    }
    return have;
  };
  for (int x = 0; x < g.size; ++x) {
    if (!closed.count(x)) {
      gens.push_back(x);
      closed = close_with(x);
      if (static_cast<int>(closed.size()) == g.size) break;
    }
  }
  return gens;
}

// all homomorphisms G -> Z_m (additively), for abelian G with exponent m
std::vector<std::vector<int>> abelian_characters(const GroupTable& g) {
  const int m = g.exponent();
  auto gens = group_generators(g);
  std::vector<std::vector<int>> out;
  std::vector<int> choice(gens.size(), 0);
  auto try_extend = [&]() -> std::optional<std::vector<int>> {
    std::vector<int> val(g.size, -1);
    val[g.identity] = 0;
    bool grew = true;
    while (grew) {
      grew = false;
      for (int x = 0; x < g.size; ++x) {
        if (val[x] < 0) continue;
        for (size_t i = 0; i < gens.size(); ++i) {
          const int y = g.mul[x][gens[i]];
          const int v = (val[x] + choice[i]) % m;
          if (val[y] < 0) {
            val[y] = v;
            grew = true;
          } else if (val[y] != v) {
            return std::nullopt;
          }
        }
      }
    }
    for (int x = 0; x < g.size; ++x) {
      if (val[x] < 0) return std::nullopt;
      for (int y = 0; y < g.size; ++y) {
        if (val[g.mul[x][y]] != (val[x] + val[y]) % m) return std::nullopt;
      }
    }
    return val;
  };
  // odometer over generator images; chi(gen)^ord(gen) = 1 constrains steps
  std::vector<int> step(gens.size());
  std::vector<int> limit(gens.size());
  for (size_t i = 0; i < gens.size(); ++i) {
    const int ord = g.order_of(gens[i]);
    step[i] = m / ord;
    limit[i] = ord;
  }
  std::vector<int> counter(gens.size(), 0);
  while (true) {
    for (size_t i = 0; i < gens.size(); ++i) choice[i] = counter[i] * step[i];
    if (auto val = try_extend()) out.push_back(std::move(*val));
    size_t k = 0;
    while (k < gens.size() && counter[k] + 1 == limit[k]) {
      counter[k] = 0;
      ++k;
    }
    if (k == gens.size()) break;
    ++counter[k];
  }
  if (static_cast<int>(out.size()) != g.size) {
    throw ValidationError("character count mismatch for abelian group");
  }
  std::sort(out.begin(), out.end());
  return out;
}

// cyclotomic polynomial as rational coefficients, low degree first
std::vector<Rational> cyclotomic(int n) {
  // x^n - 1 divided by all lower cyclotomics of divisors
  std::vector<Rational> f(n + 1, Rational(0));
  f[0] = Rational(-1);
  f[n] = Rational(1);
  auto divide = [](std::vector<Rational> num, const std::vector<Rational>& den) {
    std::vector<Rational> q(num.size() - den.size() + 1, Rational(0));
    for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
      const Rational c = num[k + den.size() - 1] / den.back();
      q[k] = c;
      for (size_t j = 0; j < den.size(); ++j) {
        num[k + j] -= c * den[j];
      }
    }
    return q;
  };
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) {
      f = divide(std::move(f), cyclotomic(d));
    }
  }
  return f;
}

template <class F>
Matrix<F> companion(const std::vector<Rational>& poly) {
  const int deg = static_cast<int>(poly.size()) - 1;
  Matrix<F> c(deg, deg);
  for (int i = 1; i < deg; ++i) c.at(i, i - 1) = F(1);
  for (int i = 0; i < deg; ++i) {
    const Rational coeff = -poly[i] / poly[deg];
    const BigInt num = rational_num(coeff);
    const BigInt den = rational_den(coeff);
    if (den != 1) throw ValidationError("cyclotomic is not monic integer");
    c.at(i, deg - 1) = F(static_cast<long long>(num));
  }
  return c;
}

int permutation_sign(const std::vector<int>& p) {
  int sign = 1;
  for (size_t i = 0; i < p.size(); ++i) {
    for (size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] > p[j]) sign = -sign;
    }
  }
  return sign;
}

// matrix of the permutation action on the basis e_i - e_{i+1} of the sum-zero
// subspace of k^n
template <class F>
Matrix<F> standard_rep_matrix(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  const int d = n - 1;
  Matrix<F> m(d, d);
  auto add_difference = [&](int col, int from, int to, int scale) {
    // e_from - e_to as a combination of b_t = e_t - e_{t+1}
    if (from == to) return;
    const int lo = std::min(from, to), hi = std::max(from, to);
    const int sgn = from < to ? 1 : -1;
    for (int t = lo; t < hi; ++t) {
      m.at(t, col) += F(scale * sgn);
    }
  };
  for (int i = 0; i < d; ++i) {
    add_difference(i, perm[i], perm[i + 1], 1);
  }
  return m;
}

template <class F>
std::vector<GroupRep<F>> symmetric_irreps(int n, const GroupTable& table) {
  auto perms = symmetric_group_permutations(n);
  std::vector<GroupRep<F>> out;
  auto push = [&](const std::string& name, int dim,
                  auto&& matrix_of_perm) {
    GroupRep<F> rep;
    rep.group = &table;
    rep.dim = dim;
    rep.name = name;
    for (const auto& p : perms) rep.mats.push_back(matrix_of_perm(p));
    verify_group_rep(rep);
    out.push_back(std::move(rep));
  };
  push("trivial", 1, [](const std::vector<int>&) {
    return Matrix<F>{{F(1)}};
  });
  if (n >= 2) {
    push("sign", 1, [](const std::vector<int>& p) {
      return Matrix<F>{{F(permutation_sign(p))}};
    });
  }
  if (n >= 3) {
    push("standard", n - 1, [](const std::vector<int>& p) {
      return standard_rep_matrix<F>(p);
    });
  }
  if (n >= 4) {
    push("standard*sign", n - 1, [](const std::vector<int>& p) {
      auto m = standard_rep_matrix<F>(p);
      if (permutation_sign(p) < 0) {
        Matrix<F> neg(m.rows(), m.cols());
        neg = neg - m;
        return neg;
      }
      return m;
    });
    // the 2-dim rep through the quotient S_4 -> S_3 on the three pairings
    const std::vector<std::array<int, 4>> pairings = {
        {0, 1, 2, 3},  // {01}{23}: partner array
    };
    auto partner = [](int pairing, int x) {
      static const int table[3][4] = {{1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
      return table[pairing][x];
    };
    auto quotient_perm = [&](const std::vector<int>& p) {
      std::vector<int> q(3);
      for (int i = 0; i < 3; ++i) {
        const int a = p[0], b = p[partner(i, 0)];
        // which pairing puts a with b?
        for (int j = 0; j < 3; ++j) {
          if (partner(j, a) == b) {
            q[i] = j;
            break;
          }
        }
      }
      return q;
    };
    push("pairings", 2, [&](const std::vector<int>& p) {
      return standard_rep_matrix<F>(quotient_perm(p));
    });
    (void)pairings;
  }
  return out;
}

template <class F>
GroupIrreducibles<F> transport_irreps(const GroupTable& g, int n) {
  auto ref = symmetric_group(n);
  auto iso = find_group_isomorphism(g, ref);
  if (!iso) {
    throw ValidationError("group is not the expected symmetric group (internal)");
  }
  auto base = symmetric_irreps<F>(n, ref);
  GroupIrreducibles<F> out;
  long sum = 0;
  for (auto& rep : base) {
    GroupRep<F> moved;
    moved.group = &g;
    moved.dim = rep.dim;
    moved.name = rep.name;
    moved.mats.resize(g.size);
    for (int x = 0; x < g.size; ++x) moved.mats[x] = rep.mats[(*iso)[x]];
    // keep the reference table alive for verification purposes
    verify_group_rep(moved);
    sum += static_cast<long>(moved.dim) * moved.dim;
    out.reps.push_back(std::move(moved));
  }
  out.split = sum == g.size;
  return out;
}

}  // namespace

GroupIrreducibles<Rational> group_irreducibles_q(const GroupTable& g) {
  GroupIrreducibles<Rational> out;
  if (g.size == 1) {
    GroupRep<Rational> triv{&g, 1, {Matrix<Rational>{{Rational(1)}}}, "trivial", {}};
    out.reps.push_back(std::move(triv));
    out.split = true;
    return out;
  }
  if (g.is_abelian()) {
    const int m = g.exponent();
    if (m <= 2) {
      for (const auto& chi : abelian_characters(g)) {
        GroupRep<Rational> rep;
        rep.group = &g;
        rep.dim = 1;
        rep.name = "chi";
        for (int x = 0; x < g.size; ++x) {
          rep.name += std::to_string(chi[x]);
        }
        for (int x = 0; x < g.size; ++x) {
          rep.mats.push_back(Matrix<Rational>{{Rational(chi[x] == 0 ? 1 : -1)}});
        }
        verify_group_rep(rep);
        out.reps.push_back(std::move(rep));
      }
      out.split = true;
      return out;
    }
    // cyclic: one irreducible per divisor, by cyclotomic companion matrices
    int generator = -1;
    for (int x = 0; x < g.size; ++x) {
      if (g.order_of(x) == g.size) {
        generator = x;
        break;
      }
    }
    if (generator < 0) {
      throw ValidationError(
          "no rational closed form for a non-cyclic abelian group of exponent > 2");
    }
    std::vector<int> power_of(g.size, -1);
    int acc = g.identity;
    for (int k = 0; k < g.size; ++k) {
      power_of[acc] = k;
      acc = g.mul[acc][generator];
    }
    long sum = 0;
    for (int d = 1; d <= g.size; ++d) {
      if (g.size % d != 0) continue;
      auto comp = companion<Rational>(cyclotomic(d));
      GroupRep<Rational> rep;
      rep.group = &g;
      rep.dim = comp.rows();
      rep.name = "cyclotomic" + std::to_string(d);
      std::vector<Matrix<Rational>> powers(g.size);
      Matrix<Rational> cur = Matrix<Rational>::identity(rep.dim);
      for (int k = 0; k < g.size; ++k) {
        powers[k] = cur;
        cur = cur * comp;
      }
      for (int x = 0; x < g.size; ++x) rep.mats.push_back(powers[power_of[x]]);
      verify_group_rep(rep);
      sum += static_cast<long>(rep.dim) * rep.dim;
      out.reps.push_back(std::move(rep));
    }
    out.split = sum == g.size;
    return out;
  }
  if (groups_isomorphic(g, symmetric_group(3))) {
    return transport_irreps<Rational>(g, 3);
  }
  if (g.size == 24 && groups_isomorphic(g, symmetric_group(4))) {
    return transport_irreps<Rational>(g, 4);
  }
  throw ValidationError("no rational closed form for group of order " +
                        std::to_string(g.size));
}

namespace {

uint32_t find_root_of_unity(uint32_t p, int m) {
  if ((p - 1) % m != 0) {
    throw ValidationError("GF(" + std::to_string(p) + ") lacks " +
                          std::to_string(m) + "-th roots of unity");
  }
  // primitive root by brute force
  auto powmod = [&](uint64_t base, uint64_t exp) {
    uint64_t r = 1;
    base %= p;
    while (exp) {
      if (exp & 1) r = r * base % p;
      base = base * base % p;
      exp >>= 1;
    }
    return r;
  };
  std::vector<uint32_t> prime_factors;
  uint32_t q = p - 1;
  for (uint32_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      prime_factors.push_back(d);
      while (q % d == 0) q /= d;
    }
  }
  if (q > 1) prime_factors.push_back(q);
  for (uint32_t cand = 2; cand < p; ++cand) {
    bool primitive = true;
    for (uint32_t f : prime_factors) {
      if (powmod(cand, (p - 1) / f) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      return static_cast<uint32_t>(powmod(cand, (p - 1) / m));
    }
  }
  throw ValidationError("no primitive root found (internal)");
}

// Modules over GF(p) given by the action of every element; used for the
// regular-module fallback.
struct FpModule {
  std::vector<Matrix<Fp>> mats;
  int dim = 0;
  uint32_t p = 0;
};

FpModule submodule_on(const FpModule& m, const std::vector<std::vector<Fp>>& basis) {
  FpModule out;
  out.dim = static_cast<int>(basis.size());
  out.p = m.p;
  auto basis_matrix = from_columns(basis);
  for (const auto& mat : m.mats) {
    Matrix<Fp> small(out.dim, out.dim);
    for (int j = 0; j < out.dim; ++j) {
      auto w = mat.apply(basis[j]);
      auto coords = solve(basis_matrix, w);
      if (!coords) {
        throw ValidationError("subspace is not invariant (internal)");
      }
      for (int i = 0; i < out.dim; ++i) small.at(i, j) = (*coords)[i];
    }
    out.mats.push_back(std::move(small));
  }
  return out;
}

FpModule quotient_module(const FpModule& m, const RowSpace<Fp>& w) {
  std::vector<int> free_cols;
  {
    std::vector<bool> is_pivot(m.dim, false);
    for (int pcol : w.pivots()) is_pivot[pcol] = true;
    for (int j = 0; j < m.dim; ++j) {
      if (!is_pivot[j]) free_cols.push_back(j);
    }
  }
  FpModule out;
  out.dim = static_cast<int>(free_cols.size());
  out.p = m.p;
  for (const auto& mat : m.mats) {
    Matrix<Fp> small(out.dim, out.dim);
    for (int j = 0; j < out.dim; ++j) {
      std::vector<Fp> v(m.dim, Fp(0, m.p));
      v[free_cols[j]] = Fp(1, m.p);
      auto residual = w.reduce(mat.apply(v));
      for (int i = 0; i < out.dim; ++i) small.at(i, j) = residual[free_cols[i]];
    }
    out.mats.push_back(std::move(small));
  }
  return out;
}

RowSpace<Fp> spin_vec(const FpModule& m, std::vector<Fp> v) {
  RowSpace<Fp> space(m.dim);
  std::vector<std::vector<Fp>> work;
  if (space.add(v)) work.push_back(std::move(v));
  while (!work.empty() && space.dim() < m.dim) {
    auto wv = std::move(work.back());
    work.pop_back();
    for (const auto& mat : m.mats) {
      auto u = mat.apply(wv);
      if (space.add(u)) {
        work.push_back(std::move(u));
        if (space.dim() == m.dim) break;
      }
    }
  }
  return space;
}

// Endomorphisms of the module (commutant of a generating set of matrices).
std::vector<Matrix<Fp>> module_endomorphisms(const FpModule& m,
                                             const std::vector<int>& gens) {
  const int d = m.dim;
  std::vector<std::vector<Fp>> rows;
  for (int gi : gens) {
    const auto& a = m.mats[gi];
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        std::vector<Fp> row(d * d, Fp(0, m.p));
        for (int k = 0; k < d; ++k) {
          row[k * d + j] += a.at(i, k);
          row[i * d + k] -= a.at(k, j);
        }
        rows.push_back(std::move(row));
      }
    }
  }
  Matrix<Fp> sys(static_cast<int>(rows.size()), d * d);
  for (size_t i = 0; i < rows.size(); ++i) {
    for (int j = 0; j < d * d; ++j) sys.at(static_cast<int>(i), j) = rows[i][j];
  }
  std::vector<Matrix<Fp>> out;
  for (const auto& v : kernel_basis(sys)) {
    Matrix<Fp> x(d, d);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) x.at(i, j) = v[i * d + j];
    }
    out.push_back(std::move(x));
  }
  return out;
}

// Splits a semisimple module into composition factors. Non-scalar
// endomorphisms drive the splitting, so the outcome does not depend on
// lucky vector choices.
void decompose_semisimple(const FpModule& m, const std::vector<int>& gens,
                          std::vector<FpModule>& factors) {
  if (m.dim == 0) return;
  auto endos = module_endomorphisms(m, gens);
  if (endos.size() <= 1) {
    factors.push_back(m);  // End = k: simple in the semisimple setting
    return;
  }
  // candidate endomorphisms: the basis plus pairwise products, which stay in
  // the commutant and are more likely to have eigenvalues in GF(p)
  std::vector<Matrix<Fp>> candidates = endos;
  for (size_t i = 0; i < endos.size(); ++i) {
    for (size_t j = 0; j < endos.size(); ++j) {
      candidates.push_back(endos[i] * endos[j]);
    }
  }
  for (const auto& phi : candidates) {
    bool scalar = true;
    const Fp diag = phi.at(0, 0);
    for (int i = 0; i < m.dim && scalar; ++i) {
      for (int j = 0; j < m.dim && scalar; ++j) {
        scalar = (i == j) ? (phi.at(i, j) == diag) : is_zero(phi.at(i, j));
      }
    }
    if (scalar) continue;
    for (uint32_t lam = 0; lam < m.p; ++lam) {
      Matrix<Fp> shifted = phi;
      for (int i = 0; i < m.dim; ++i) {
        shifted.at(i, i) -= Fp(lam, m.p);
      }
      auto kb = kernel_basis(shifted);
      if (kb.empty() || static_cast<int>(kb.size()) == m.dim) continue;
      RowSpace<Fp> w(m.dim);
      for (auto& v : kb) w.add(v);
      decompose_semisimple(submodule_on(m, w.rows()), gens, factors);
      decompose_semisimple(quotient_module(m, w), gens, factors);
      return;
    }
  }
  throw ValidationError("endomorphisms found but no eigen split (internal)");
}

}  // namespace

GroupIrreducibles<Fp> group_irreducibles_p(const GroupTable& g, uint32_t p) {
  if (!is_prime(p)) {
    throw ValidationError(std::to_string(p) + " is not prime");
  }
  if (g.size % p == 0) {
    throw ValidationError("field characteristic divides the group order");
  }
  GroupIrreducibles<Fp> out;
  if (g.size == 1) {
    GroupRep<Fp> triv{&g, 1, {Matrix<Fp>{{Fp(1, p)}}}, "trivial", {}};
    out.reps.push_back(std::move(triv));
    out.split = true;
    return out;
  }
  if (g.is_abelian()) {
    const int m = g.exponent();
    const uint32_t zeta = find_root_of_unity(p, m);
    std::vector<Fp> zeta_pow(m);
    Fp acc(1, p);
    for (int k = 0; k < m; ++k) {
      zeta_pow[k] = acc;
      acc = acc * Fp(zeta, p);
    }
    for (const auto& chi : abelian_characters(g)) {
      GroupRep<Fp> rep;
      rep.group = &g;
      rep.dim = 1;
      rep.name = "chi";
      for (int x = 0; x < g.size; ++x) rep.name += std::to_string(chi[x]);
      for (int x = 0; x < g.size; ++x) {
        rep.mats.push_back(Matrix<Fp>{{zeta_pow[chi[x]]}});
      }
      verify_group_rep(rep);
      out.reps.push_back(std::move(rep));
    }
    out.split = true;
    return out;
  }
  if (groups_isomorphic(g, symmetric_group(3))) {
    return transport_irreps<Fp>(g, 3);
  }
  if (g.size == 24 && groups_isomorphic(g, symmetric_group(4))) {
    return transport_irreps<Fp>(g, 4);
  }
  // spin-and-split of the regular module
  if ((p - 1) % g.exponent() != 0) {
    throw ValidationError("need p = 1 mod exponent for the regular-module split");
  }
  FpModule regular;
  regular.dim = g.size;
  regular.p = p;
  for (int a = 0; a < g.size; ++a) {
    Matrix<Fp> mat(g.size, g.size, Fp(0, p));
    for (int x = 0; x < g.size; ++x) mat.at(g.mul[a][x], x) = Fp(1, p);
    regular.mats.push_back(std::move(mat));
  }
  auto gens = group_generators(g);
  std::vector<FpModule> factors;
  decompose_semisimple(regular, gens, factors);
  // dedupe by trace vector
  std::set<std::vector<long long>> seen;
  long sum = 0;
  for (const auto& f : factors) {
    std::vector<long long> tr;
    for (const auto& mat : f.mats) {
      Fp t = mat.trace();
      tr.push_back(Fp(t.value(), p).value());
    }
    if (!seen.insert(tr).second) continue;
    GroupRep<Fp> rep;
    rep.group = &g;
    rep.dim = f.dim;
    rep.name = "factor" + std::to_string(out.reps.size());
    rep.mats = f.mats;
    verify_group_rep(rep);
    sum += static_cast<long>(f.dim) * f.dim;
    out.reps.push_back(std::move(rep));
  }
  out.split = sum == g.size;
  return out;
}

// -------------------------------------------------- semigroup irreducibles

namespace {

std::vector<int> dclass_idempotents(const FiniteInverseSemigroup& s) {
  // minimum idempotent per D-class, ordered by that idempotent
  std::map<int, int> min_by_class;
  for (int e : s.idempotents()) {
    const int c = s.green().d_class[e];
    auto it = min_by_class.find(c);
    if (it == min_by_class.end() || e < it->second) min_by_class[c] = e;
  }
  std::vector<int> out;
  for (auto& [c, e] : min_by_class) out.push_back(e);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

RationalIrreducibles irreducible_representations_q(
    const FiniteInverseSemigroup& s, const std::vector<uint32_t>& verify_primes,
    long max_dim) {
  RationalIrreducibles out;
  out.chosen_idempotents = dclass_idempotents(s);
  bool all_split = true;
  // keep every group table alive for the verification below
  std::vector<std::shared_ptr<GroupTable>> tables;
  for (int e : out.chosen_idempotents) {
    auto ge = std::make_shared<GroupTable>(s.maximal_subgroup(e));
    tables.push_back(ge);
    auto irr = group_irreducibles_q(*ge);
    all_split = all_split && irr.split;
    for (auto& n : irr.reps) {
      n.group = ge.get();
      auto ind = induce(s, e, n, max_dim);
      out.reps.push_back(std::move(ind));
    }
  }
  // pairwise distinct trace vectors
  std::vector<std::vector<Rational>> traces;
  for (const auto& rep : out.reps) traces.push_back(trace_vector(rep));
  for (size_t i = 0; i < traces.size(); ++i) {
    for (size_t j = i + 1; j < traces.size(); ++j) {
      if (traces[i] == traces[j]) {
        throw ValidationError("induced representations share a trace vector");
      }
    }
  }
  long sum = 0;
  for (const auto& rep : out.reps) sum += static_cast<long>(rep.dim) * rep.dim;
  out.split_certified = all_split && sum == s.size();
  for (uint32_t p : verify_primes) {
    bool usable = is_prime(p);
    for (int e : out.chosen_idempotents) {
      if (usable && s.maximal_subgroup(e).size % p == 0) usable = false;
    }
    if (!usable) continue;
    bool all_simple = true;
    for (const auto& rep : out.reps) {
      auto red = reduce_rep_mod(rep, p);
      if (!is_simple_module(red).simple) all_simple = false;
    }
    if (all_simple) out.verified_primes.push_back(p);
  }
  return out;
}

ModularIrreducibles irreducible_representations_p(const FiniteInverseSemigroup& s,
                                                  uint32_t p, long max_dim) {
  ModularIrreducibles out;
  out.chosen_idempotents = dclass_idempotents(s);
  bool all_split = true;
  std::vector<std::shared_ptr<GroupTable>> tables;
  for (int e : out.chosen_idempotents) {
    auto ge = std::make_shared<GroupTable>(s.maximal_subgroup(e));
    tables.push_back(ge);
    auto irr = group_irreducibles_p(*ge, p);
    all_split = all_split && irr.split;
    for (auto& n : irr.reps) {
      n.group = ge.get();
      out.reps.push_back(induce(s, e, n, max_dim));
    }
  }
  long sum = 0;
  for (const auto& rep : out.reps) sum += static_cast<long>(rep.dim) * rep.dim;
  out.split_certified = all_split && sum == s.size();
  return out;
}

}  // namespace groupoidal
