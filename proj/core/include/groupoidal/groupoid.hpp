#ifndef GROUPOIDAL_GROUPOID_HPP_
#define GROUPOIDAL_GROUPOID_HPP_

#include <string>
#include <vector>

#include "groupoidal/actions.hpp"
#include "groupoidal/cosets.hpp"
#include "groupoidal/semigroup.hpp"

namespace groupoidal {

// A finite groupoid with arrows indexed densely. Composition comp(a, b) is
// defined exactly when src(a) == dst(b); identities are a subset of arrows.
struct FiniteGroupoid {
  int narrows = 0;
  std::vector<int> identity_arrows;        // sorted arrow indices
  std::vector<int> src, dst;               // identity positions per arrow
  std::vector<int> inv;                    // arrow index
  std::vector<std::vector<int>> comp;      // comp[a][b] or -1
  std::vector<std::string> labels;         // per arrow
  std::vector<std::string> identity_labels;

  int identities() const { return static_cast<int>(identity_arrows.size()); }
};

// Exhaustive groupoid axioms; throws on failure.
void validate_groupoid(const FiniteGroupoid& g);

// The restricted product: arrows are all elements, s: d(s) -> r(s), and
// s . t = st exactly when d(s) = r(t).
FiniteGroupoid restricted_product_groupoid(const FiniteInverseSemigroup& s);

// Paterson's groupoid: the restricted-product groupoid of L(S).
struct PatersonGroupoid {
  CosetSemigroup ls;
  FiniteInverseSemigroup ls_table;
  FiniteGroupoid groupoid;
};
PatersonGroupoid paterson_groupoid(const FiniteInverseSemigroup& s,
                                   std::size_t max_cosets = 100000);

// Checks that iota: s -> s-up is a groupoid isomorphism from the
// restricted-product groupoid of S onto the Paterson groupoid.
bool paterson_iso_certificate(const FiniteInverseSemigroup& s,
                              const PatersonGroupoid& pg);

// Partition of the identities into connected components (joined by arrows).
std::vector<std::vector<int>> connected_components(const FiniteGroupoid& g);

// The group of arrows H -> H. arrow_of, when non-null, receives the arrow
// index behind each group element.
GroupTable local_group(const FiniteGroupoid& g, int identity_pos,
                       std::vector<int>* arrow_of = nullptr);

// Theta of the local-group description: arrows A at the identity H map to
// sigma-classes of bar(E(H)). All four certificate properties are verified
// (well-defined, injective, surjective, multiplicative); throws otherwise.
struct LocalGroupCertificate {
  GroupTable local;        // arrows at H under composition
  GroupTable quotient;     // bar(E(H)) / sigma
  std::vector<int> theta;  // local element -> quotient element
};
LocalGroupCertificate local_group_certificate(const PatersonGroupoid& pg,
                                              int identity_pos);

// Paterson coordinates [P, a] of a directed coset: P = (A A^-1)up and a
// representative with r(a) in P.
struct PatersonCoordinate {
  std::vector<int> p;  // closed directed inverse subsemigroup
  int rep = -1;
};
PatersonCoordinate paterson_coordinates(const FiniteInverseSemigroup& s,
                                        const Coset& a);
// Do (p, a) and (p, b) name the same right coset, i.e. pa = pb for some p?
bool coordinates_identified(const FiniteInverseSemigroup& s,
                            const std::vector<int>& p, int a, int b);

// Basis sets U_{s; s1..sn} of the groupoid topology over L(S). The excluded
// elements run over antichains strictly below s; sets are deduplicated.
struct TopologyBasisSet {
  int s;
  std::vector<int> excluded;
  std::vector<int> members;  // indices into L(S)
};
std::vector<TopologyBasisSet> topology_basis(const CosetSemigroup& ls);

// Deterministic DOT output; identities as boxes, arrows labeled.
std::string export_dot(const FiniteGroupoid& g);
std::string export_dot(const ActionGraph& g,
                       const FiniteInverseSemigroup& s);

}  // namespace groupoidal

#endif  // GROUPOIDAL_GROUPOID_HPP_
