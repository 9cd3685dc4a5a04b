#ifndef GROUPOIDAL_REPS_HPP_
#define GROUPOIDAL_REPS_HPP_

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "groupoidal/exact.hpp"
#include "groupoidal/matrix.hpp"
#include "groupoidal/semigroup.hpp"

namespace groupoidal {

// ---- transversals and ideals -------------------------------------------

// One element (the minimum index) per H-class of the L-class of e. The
// right G_e-action on L_e is free with the H-classes as orbits, so every
// x in L_e factors uniquely as x = t * g with t in the transversal.
struct Transversal {
  int e = -1;
  std::vector<int> members;
};
Transversal transversal_of_lclass(const FiniteInverseSemigroup& s, int e);

// (position of t in members, global index of g in G_e) with x = t * g.
std::pair<int, int> transversal_factorize(const FiniteInverseSemigroup& s,
                                          const Transversal& t, int x);

// I_e = SeS minus J_e: everything strictly J-below e.
std::vector<int> ideal_strictly_below(const FiniteInverseSemigroup& s, int e);

// Rees quotient by a two-sided ideal: the ideal collapses to a zero.
// old_to_new maps S onto the quotient; an empty ideal returns S itself.
struct ReesQuotient {
  FiniteInverseSemigroup quotient;
  std::vector<int> old_to_new;
};
ReesQuotient rees_quotient(const FiniteInverseSemigroup& s,
                           const std::vector<int>& ideal);

// Nonzero idempotent with nothing strictly between it and zero. S must have
// a zero for the notion to apply.
bool is_primitive(const FiniteInverseSemigroup& s, int e);

// ---- representations -----------------------------------------------------

template <class F>
struct GroupRep {
  const GroupTable* group = nullptr;
  int dim = 0;
  std::vector<Matrix<F>> mats;
  std::string name;
  // set when the rep owns its group table (e.g. a restriction)
  std::shared_ptr<const GroupTable> owned_group;

  void own_group(GroupTable g) {
    owned_group = std::make_shared<const GroupTable>(std::move(g));
    group = owned_group.get();
  }
};

template <class F>
struct MatrixRep {
  const FiniteInverseSemigroup* sgp = nullptr;
  int dim = 0;
  std::vector<Matrix<F>> mats;
  bool contracted = false;  // the zero of S maps to the zero matrix
  std::string name;
  int induced_from = -1;  // idempotent e when built by induction
};

template <class F>
void verify_group_rep(const GroupRep<F>& n) {
  const auto& g = *n.group;
  if (!(n.mats[g.identity] == Matrix<F>::identity(n.dim))) {
    throw ValidationError("group rep does not send the identity to I");
  }
  for (int a = 0; a < g.size; ++a) {
    for (int b = 0; b < g.size; ++b) {
      if (!(n.mats[a] * n.mats[b] == n.mats[g.mul[a][b]])) {
        throw ValidationError("group rep is not multiplicative at (" +
                              g.labels[a] + "," + g.labels[b] + ")");
      }
    }
  }
}

template <class F>
void verify_matrix_rep(const MatrixRep<F>& m) {
  const auto& s = *m.sgp;
  for (int a = 0; a < s.size(); ++a) {
    for (int b = 0; b < s.size(); ++b) {
      if (!(m.mats[a] * m.mats[b] == m.mats[s.mul(a, b)])) {
        throw ValidationError("rep is not multiplicative at (" + s.label(a) +
                              "," + s.label(b) + ")");
      }
    }
  }
  if (m.contracted) {
    if (!s.zero() || !m.mats[*s.zero()].is_zero_matrix()) {
      throw ValidationError("contracted rep must kill the zero");
    }
  }
}

// Ind_e(N) = kL_e tensor_{kG_e} N realized on the basis T x basis(N):
// s sends t (x) n to t' (x) g n when st = t' g stays in L_e, and to 0
// otherwise. Elements strictly J-below e act as zero, so this is the
// k_0[S/I_e]-module of the construction.
template <class F>
MatrixRep<F> induce(const FiniteInverseSemigroup& s, int e, const GroupRep<F>& n,
                    long max_dim = 4096) {
  const auto t = transversal_of_lclass(s, e);
  const long dim = static_cast<long>(t.members.size()) * n.dim;
  if (dim > max_dim) {
    throw CapExceededError("induced dimension " + std::to_string(dim) +
                           " exceeds cap");
  }
  std::vector<int> embed;
  auto ge = s.maximal_subgroup(e, &embed);
  std::vector<int> local(s.size(), -1);
  for (size_t i = 0; i < embed.size(); ++i) local[embed[i]] = static_cast<int>(i);

  MatrixRep<F> m;
  m.sgp = &s;
  m.dim = static_cast<int>(dim);
  m.induced_from = e;
  m.name = "Ind[" + s.label(e) + "](" + n.name + ")";
  const int nt = static_cast<int>(t.members.size());
  for (int a = 0; a < s.size(); ++a) {
    Matrix<F> mat(m.dim, m.dim);
    for (int j = 0; j < nt; ++j) {
      const int at = s.mul(a, t.members[j]);
      if (s.d(at) != e) continue;  // fell out of L_e: zero block
      auto [i, g] = transversal_factorize(s, t, at);
      const auto& block = n.mats[local[g]];
      for (int bi = 0; bi < n.dim; ++bi) {
        for (int bj = 0; bj < n.dim; ++bj) {
          mat.at(i * n.dim + bi, j * n.dim + bj) = block.at(bi, bj);
        }
      }
    }
    m.mats.push_back(std::move(mat));
  }
  m.contracted = s.zero().has_value() && m.mats[*s.zero()].is_zero_matrix();
  verify_matrix_rep(m);
  return m;
}

// Res_e(M): the G_e-representation on the column space of M(e).
template <class F>
GroupRep<F> restrict_rep(const FiniteInverseSemigroup& s, const MatrixRep<F>& m,
                         int e) {
  std::vector<int> embed;
  auto ge = s.maximal_subgroup(e, &embed);
  RowSpace<F> image(m.dim);
  for (int j = 0; j < m.dim; ++j) image.add(m.mats[e].col(j));
  std::vector<std::vector<F>> basis = image.rows();
  auto basis_matrix = from_columns(basis);
  GroupRep<F> out;
  out.dim = image.dim();
  out.name = "Res[" + s.label(e) + "](" + m.name + ")";
  for (size_t gi = 0; gi < embed.size(); ++gi) {
    Matrix<F> mat(out.dim, out.dim);
    for (int bj = 0; bj < out.dim; ++bj) {
      auto w = m.mats[embed[gi]].apply(basis[bj]);
      auto coords = solve(basis_matrix, w);
      if (!coords) {
        throw ValidationError("restriction image is not invariant (internal)");
      }
      for (int bi = 0; bi < out.dim; ++bi) mat.at(bi, bj) = (*coords)[bi];
    }
    out.mats.push_back(std::move(mat));
  }
  out.own_group(std::move(ge));
  if (out.dim > 0) verify_group_rep(out);
  return out;
}

template <class F>
std::vector<F> trace_vector(const MatrixRep<F>& m) {
  std::vector<F> out;
  out.reserve(m.mats.size());
  for (const auto& mat : m.mats) out.push_back(mat.trace());
  return out;
}

// Largest submodule annihilated by e: the stable core of ker M(e) under the
// whole action, by fixpoint refinement.
template <class F>
std::vector<std::vector<F>> largest_submodule_annihilated_by(
    const FiniteInverseSemigroup& s, const MatrixRep<F>& m, int e) {
  std::vector<std::vector<F>> basis = kernel_basis(m.mats[e]);
  while (!basis.empty()) {
    RowSpace<F> w(m.dim);
    for (const auto& v : basis) w.add(v);
    const int k = static_cast<int>(basis.size());
    // rows: residuals of M(a) b_i against W, unknowns: coefficients c_i
    std::vector<std::vector<F>> rows;
    for (int a = 0; a < s.size(); ++a) {
      std::vector<std::vector<F>> residuals;
      bool all_zero = true;
      for (const auto& b : basis) {
        auto res = w.reduce(m.mats[a].apply(b));
        for (const auto& c : res) {
          if (!is_zero(c)) all_zero = false;
        }
        residuals.push_back(std::move(res));
      }
      if (all_zero) continue;
      for (int coord = 0; coord < m.dim; ++coord) {
        std::vector<F> row(k, F(0));
        bool nonzero = false;
        for (int i = 0; i < k; ++i) {
          row[i] = residuals[i][coord];
          if (!is_zero(row[i])) nonzero = true;
        }
        if (nonzero) rows.push_back(std::move(row));
      }
    }
    if (rows.empty()) break;  // stable
    Matrix<F> constraint(static_cast<int>(rows.size()), k);
    for (size_t i = 0; i < rows.size(); ++i) {
      for (int j = 0; j < k; ++j) constraint.at(static_cast<int>(i), j) = rows[i][j];
    }
    auto coeffs = kernel_basis(constraint);
    std::vector<std::vector<F>> next;
    for (const auto& c : coeffs) {
      std::vector<F> v(m.dim, F(0));
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < m.dim; ++j) v[j] += c[i] * basis[i][j];
      }
      next.push_back(std::move(v));
    }
    if (next.size() == basis.size()) {
      basis = std::move(next);
      break;
    }
    basis = std::move(next);
  }
  return basis;
}

// Invertible P with P N1(g) = N2(g) P for all g, searched through the
// solution space of the intertwining equations. Intended for dim <= 3.
template <class F>
std::optional<Matrix<F>> intertwiner(const GroupRep<F>& n1, const GroupRep<F>& n2) {
  if (n1.dim != n2.dim || n1.group->size != n2.group->size) return std::nullopt;
  const int d = n1.dim;
  if (d == 0) return Matrix<F>(0, 0);
  std::vector<std::vector<F>> rows;
  for (int g = 0; g < n1.group->size; ++g) {
    // N2(g) P - P N1(g) = 0, unknowns P[k][l] at index k*d+l
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        std::vector<F> row(d * d, F(0));
        for (int k = 0; k < d; ++k) {
          row[k * d + j] += n2.mats[g].at(i, k);
          row[i * d + k] -= n1.mats[g].at(k, j);
        }
        rows.push_back(std::move(row));
      }
    }
  }
  Matrix<F> sys(static_cast<int>(rows.size()), d * d);
  for (size_t i = 0; i < rows.size(); ++i) {
    for (int j = 0; j < d * d; ++j) sys.at(static_cast<int>(i), j) = rows[i][j];
  }
  auto space = kernel_basis(sys);
  auto materialize = [&](const std::vector<F>& v) {
    Matrix<F> p(d, d);
    for (int k = 0; k < d; ++k) {
      for (int l = 0; l < d; ++l) p.at(k, l) = v[k * d + l];
    }
    return p;
  };
  for (const auto& v : space) {
    auto p = materialize(v);
    if (inverse_matrix(p)) return p;
  }
  for (size_t i = 0; i < space.size(); ++i) {
    for (size_t j = i + 1; j < space.size(); ++j) {
      std::vector<F> v(d * d);
      for (int k = 0; k < d * d; ++k) v[k] = space[i][k] + space[j][k];
      auto p = materialize(v);
      if (inverse_matrix(p)) return p;
    }
  }
  return std::nullopt;
}

// The idempotent images form a commuting family of idempotent matrices of
// size at most 2^dim.
template <class F>
bool semilattice_bound_check(const MatrixRep<F>& m) {
  const auto& s = *m.sgp;
  std::vector<Matrix<F>> images;
  for (int e : s.idempotents()) {
    const auto& me = m.mats[e];
    if (!(me * me == me)) return false;
    for (int f : s.idempotents()) {
      if (!(m.mats[e] * m.mats[f] == m.mats[f] * m.mats[e])) return false;
    }
    bool dup = false;
    for (const auto& seen : images) {
      if (seen == me) {
        dup = true;
        break;
      }
    }
    if (!dup) images.push_back(me);
  }
  if (m.dim >= 20) return true;  // the bound cannot bind at desk scale
  return images.size() <= (1ull << m.dim);
}

// ---- field-specific pipelines -------------------------------------------

MatrixRep<Fp> reduce_rep_mod(const MatrixRep<Rational>& m, uint32_t p);

// Spinning-based simplicity check over GF(p). Exhausts all vectors up to
// scalar when p^dim <= vector_cap, otherwise uses every standard basis
// vector plus a fixed-seed sample. On failure the witness spans a proper
// invariant subspace.
struct SimplicityResult {
  bool simple = false;
  bool exhaustive = false;
  std::vector<std::vector<Fp>> witness;
};
SimplicityResult is_simple_module(const MatrixRep<Fp>& m, long vector_cap = 100000);

template <class F>
struct GroupIrreducibles {
  std::vector<GroupRep<F>> reps;
  bool split = false;  // sum of dim^2 equals |G|
};

// Complete irreducible lists for the groups arising at desk scale: closed
// forms for cyclic and exponent-2 abelian groups and for S_2, S_3, S_4;
// other groups over GF(p) fall back to a spin-and-split decomposition of
// the regular module (p = 1 mod exponent, p coprime to |G|).
GroupIrreducibles<Rational> group_irreducibles_q(const GroupTable& g);
GroupIrreducibles<Fp> group_irreducibles_p(const GroupTable& g, uint32_t p);

// One idempotent per D-class, induced irreducibles of its maximal subgroup.
struct RationalIrreducibles {
  std::vector<MatrixRep<Rational>> reps;
  std::vector<int> chosen_idempotents;
  bool split_certified = false;       // all groups split and sum dim^2 = |S|
  std::vector<uint32_t> verified_primes;  // spinning passed for every rep
};
RationalIrreducibles irreducible_representations_q(
    const FiniteInverseSemigroup& s, const std::vector<uint32_t>& verify_primes = {5, 7},
    long max_dim = 4096);

struct ModularIrreducibles {
  std::vector<MatrixRep<Fp>> reps;
  std::vector<int> chosen_idempotents;
  bool split_certified = false;
};
ModularIrreducibles irreducible_representations_p(const FiniteInverseSemigroup& s,
                                                  uint32_t p, long max_dim = 4096);

}  // namespace groupoidal

#endif  // GROUPOIDAL_REPS_HPP_
