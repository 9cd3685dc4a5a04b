#ifndef GROUPOIDAL_BUILTINS_HPP_
#define GROUPOIDAL_BUILTINS_HPP_

#include <string>

#include "groupoidal/semigroup.hpp"

namespace groupoidal {

// Symmetric inverse monoid I_n, built by closing a small generating set of
// partial perms. |I_n| = sum_k C(n,k)^2 k!.
FiniteInverseSemigroup inverse_symmetric(int n);

// Chain semilattice c0 > c1 > ... > c(n-1) with meet as product.
FiniteInverseSemigroup chain_semilattice(int n);

// Brandt semigroup B(G, n): elements (i, g, j) plus a zero.
FiniteInverseSemigroup brandt(const GroupTable& g, int n);

GroupTable cyclic_group(int n);
GroupTable symmetric_group(int n);  // n <= 4
// The permutations behind symmetric_group(n), in the same element order.
std::vector<std::vector<int>> symmetric_group_permutations(int n);

// Any group is an inverse semigroup.
FiniteInverseSemigroup group_as_semigroup(const GroupTable& g);

// S with a new identity adjoined on top.
FiniteInverseSemigroup adjoin_identity(const FiniteInverseSemigroup& s);

}  // namespace groupoidal

#endif  // GROUPOIDAL_BUILTINS_HPP_
