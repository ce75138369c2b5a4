#pragma once

#include <string>
#include <vector>

#include "disub/chi.hpp"
#include "disub/digraph.hpp"
#include "disub/pattern.hpp"

namespace disub {

// A subdivision of F in D: an injective branch-vertex map and one directed
// path per pattern arc, pairwise internally disjoint.
struct SubdivisionCert {
    std::vector<int> branch; // pattern vertex -> host vertex
    std::vector<Path> paths; // pattern arc index -> host path
};

struct Violation {
    std::string rule; // one of the rule names below
    std::string detail;
};

// Rule names reported by the verifier.
inline constexpr const char *kRuleBranchDistinct = "branch-distinct";
inline constexpr const char *kRuleEndpoints = "endpoints";
inline constexpr const char *kRuleArcExistence = "arc-existence";
inline constexpr const char *kRuleLengthCongruence = "length-congruence";
inline constexpr const char *kRuleInternalDisjoint = "internal-disjointness";
inline constexpr const char *kRuleMalformed = "malformed";

// Re-checks every property of a subdivision certificate against D, F and the
// constraints. Empty result means accept; otherwise the complete list of
// violations (not fail-fast).
std::vector<Violation> verify_subdivision(const Digraph &d, const PatternDigraph &f,
                                          const ConstraintMap &c, const SubdivisionCert &cert);

// Certificate text format (bit-exact):
//   s subdivision <v(F)> <a(F)>
//   b <f-vertex> <d-vertex>          (one per pattern vertex, ascending)
//   p <u> <v> : <v0> <v1> ... <vk>   (one per pattern arc, arc-index order)
std::string encode_cert(const SubdivisionCert &cert, const PatternDigraph &f);
SubdivisionCert decode_cert(const std::string &text, const PatternDigraph &f, const Digraph &d);

// Chi certificate text: coloring as `v <vertex> <color>` lines, clique as a
// single `clique <v1> ... <vt>` line.
std::string encode_chi_certificate(const ChiCertificate &cert);

} // namespace disub
