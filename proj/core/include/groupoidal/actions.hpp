#ifndef GROUPOIDAL_ACTIONS_HPP_
#define GROUPOIDAL_ACTIONS_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "groupoidal/order.hpp"
#include "groupoidal/semigroup.hpp"

namespace groupoidal {

// A transitive action of S by partial bijections on a finite point set.
// Validated on construction: (A1) defined idempotent moves fix their point,
// (A2) (st).x exists iff s.(t.x) exists, with equality; effective; transitive.
class TransitiveAction {
 public:
  TransitiveAction(const FiniteInverseSemigroup& s,
                   std::vector<std::vector<int>> act,
                   std::vector<std::string> point_labels);

  const FiniteInverseSemigroup& semigroup() const { return *s_; }
  int points() const { return npoints_; }
  // -1 when s.x is undefined.
  int act(int s, int x) const { return act_[s][x]; }
  bool defined(int s, int x) const { return act_[s][x] >= 0; }
  const std::string& point_label(int x) const { return point_labels_[x]; }

  // {s : s.x = x}; always a closed inverse subsemigroup.
  std::vector<int> stabilizer(int x) const;

 private:
  const FiniteInverseSemigroup* s_;
  int npoints_;
  std::vector<std::vector<int>> act_;
  std::vector<std::string> point_labels_;
};

// Left Schutzenberger action of S on the L-class of the idempotent e:
// a.x = ax whenever d(ax) = e.
TransitiveAction schutzenberger_action(const FiniteInverseSemigroup& s, int e);

// Action of S on the left cosets of a closed inverse subsemigroup H:
// a.(sH)up = (asH)up whenever d(as) in H. point_carriers, if non-null,
// receives the coset carrier behind each point.
TransitiveAction coset_space_action(const FiniteInverseSemigroup& s,
                                    const std::vector<int>& h,
                                    std::vector<std::vector<int>>* point_carriers = nullptr);

// --- morphisms ---

bool is_morphism(const TransitiveAction& x, const TransitiveAction& y,
                 const std::vector<int>& map);
bool is_strong_morphism(const TransitiveAction& x, const TransitiveAction& y,
                        const std::vector<int>& map);

// The unique morphism with map[x0] = y0, present iff S_x0 subseteq S_y0.
std::optional<std::vector<int>> build_morphism(const TransitiveAction& x, int x0,
                                               const TransitiveAction& y, int y0);
// Additionally requires E(S_x0) = E(S_y0).
std::optional<std::vector<int>> build_strong_morphism(const TransitiveAction& x,
                                                      int x0,
                                                      const TransitiveAction& y,
                                                      int y0);

// Equivalence with the coset-space action on S/S_x, verified pointwise in
// both directions.
struct CosetEquivalence {
  TransitiveAction coset_action;
  std::vector<int> to_cosets;  // bijective strong morphism
};
CosetEquivalence equivalent_to_coset_action(const TransitiveAction& x, int x0);

// Conjugating witness between the two stabilizers, if the actions are
// equivalent (Proposition: equivalent iff stabilizers conjugate).
std::optional<int> actions_equivalent(const TransitiveAction& x,
                                      const TransitiveAction& y);

bool is_universal(const TransitiveAction& x);
bool is_fundamental(const TransitiveAction& x);

// The universal action covering Y, with the strong morphism onto Y.
struct Cover {
  TransitiveAction total;
  int base_point;
  std::vector<int> morphism;  // total -> Y, strong
};
Cover universal_cover(const TransitiveAction& y, int y0);

// The fundamental action strongly covered by Y, with the morphism from Y.
struct Quotient {
  TransitiveAction quotient;
  int base_point;
  std::vector<int> morphism;  // Y -> quotient, strong
};
Quotient fundamental_quotient(const TransitiveAction& y, int y0);

// Strong congruences on a universal action X with base point x0, in
// bijection with the subgroups of G_F = bar(F)/sigma.
struct StrongCongruence {
  std::vector<int> block_of;           // partition of X
  std::vector<int> subgroup;           // subgroup of G_F (element indices)
  std::vector<int> stabilizer_carrier; // the closed inverse subsemigroup H
};
struct StrongCongruenceLattice {
  GroupTable local_group;  // G_F
  std::vector<StrongCongruence> congruences;
};
StrongCongruenceLattice strong_congruences(const TransitiveAction& x, int x0);

// --- action graphs (Serre-style, with the involution by inverses) ---

struct ActionGraph {
  struct Edge {
    int from;
    int label;  // element index
    int to;
  };
  int vertices = 0;
  std::vector<Edge> edges;  // sorted by (from, label)
  std::vector<std::string> vertex_labels;
};

ActionGraph action_graph(const TransitiveAction& x);

// vertex_map must be label preserving: every edge maps to an edge.
bool is_label_preserving(const ActionGraph& gx, const ActionGraph& gy,
                         const std::vector<int>& vertex_map);
// Injective (resp. bijective) on every star.
bool check_immersion(const ActionGraph& gx, const ActionGraph& gy,
                     const std::vector<int>& vertex_map);
bool check_cover(const ActionGraph& gx, const ActionGraph& gy,
                 const std::vector<int>& vertex_map);

}  // namespace groupoidal

#endif  // GROUPOIDAL_ACTIONS_HPP_
