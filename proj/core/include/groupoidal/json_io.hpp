#ifndef GROUPOIDAL_JSON_IO_HPP_
#define GROUPOIDAL_JSON_IO_HPP_

#include <string>

#include "groupoidal/actions.hpp"
#include "groupoidal/cosets.hpp"
#include "groupoidal/groupoid.hpp"
#include "groupoidal/reps.hpp"
#include "groupoidal/semigroup.hpp"

namespace groupoidal {

// Parses either the table schema {"size", "mul", "inv"?, "labels"?} or a
// generator schema {"degree"?, "generators": ["[2,0]", ...]}.
FiniteInverseSemigroup semigroup_from_json(const std::string& text);

// {"size": n, "mul": [[...]], "inv": [...], "labels": [...]}
std::string semigroup_to_json(const FiniteInverseSemigroup& s);

// Canonical form used for cache keys: the table schema with sorted keys.
std::string semigroup_canonical_json(const FiniteInverseSemigroup& s);

std::string analyze_report_json(const FiniteInverseSemigroup& s);
std::string cosets_report_json(const FiniteInverseSemigroup& s,
                               const CosetSemigroup& ks, const CosetSemigroup& ls);
std::string groupoid_report_json(const PatersonGroupoid& pg);
std::string actions_report_json(const FiniteInverseSemigroup& s);
std::string reps_report_json(const FiniteInverseSemigroup& s,
                             const RationalIrreducibles& irr,
                             const std::vector<uint32_t>& requested_primes);
std::string reps_report_json(const FiniteInverseSemigroup& s,
                             const ModularIrreducibles& irr, uint32_t p);
std::string action_dump_json(const TransitiveAction& x);
std::string error_json(const std::string& kind, const std::string& message);

}  // namespace groupoidal

#endif  // GROUPOIDAL_JSON_IO_HPP_
