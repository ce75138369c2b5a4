#pragma once

#include <string>
#include <vector>

#include "disub/digraph.hpp"

namespace disub {

// The pattern digraph F whose subdivision is sought. Arcs are indexed
// 0..a(F)-1 in lexicographic (u, v) order.
struct PatternDigraph {
    Digraph F;

    int arc_index(int u, int v) const;
    std::vector<std::pair<int, int>> arcs() const { return F.arcs(); }
};

// Residue/modulus constraint on one subdivision path length.
// q = 1 encodes "no constraint"; r is normalized into [0, q).
struct ArcConstraint {
    int r = 0;
    int q = 1;
};

// One constraint per arc of F, parallel to the arc index.
struct ConstraintMap {
    std::vector<ArcConstraint> per_arc;
};

// Constraint text format: one line `c <u> <v> <r> <q>` per arc of F,
// each arc exactly once; q >= 1; r is reduced mod q at parse time.
ConstraintMap parse_constraints(const std::string &text, const PatternDigraph &f);
std::string format_constraints(const ConstraintMap &c, const PatternDigraph &f);

} // namespace disub
