#pragma once

#include <vector>

#include "disub/certificate.hpp"
#include "disub/chi.hpp"
#include "disub/digraph.hpp"
#include "disub/pattern.hpp"

namespace disub {

// Strict threads the worst-case bound recursion and requires the top-level
// threshold certified up front; BestEffort proceeds while every sub-step
// certifies and reports the first failing step otherwise.
enum class FinderMode { Strict, BestEffort };

// Arc indices of F sorted by non-increasing modulus, ties by arc index. The
// first element is peeled first (attached outermost); large moduli go first
// so they are multiplied by fewer factors of 8 in the bound recursion.
std::vector<int> arc_elimination_order(const PatternDigraph &f, const ConstraintMap &c);

// The bound N: base v(F), then N = 8*N' + 4*(q_f - 1) folding the order
// from the deepest arc outwards.
long long required_chi_bound(const PatternDigraph &f, const ConstraintMap &c,
                             const std::vector<int> &order);

// Per-level thresholds: budgets[0] = N, budgets[k+1] the child budget under
// budgets[k]. Size order.size() + 1; the last entry is v(F).
std::vector<long long> budget_chain(const PatternDigraph &f, const ConstraintMap &c,
                                    const std::vector<int> &order);

// Arc-free base case: maps the pattern vertices to the v(F) smallest host ids.
SubdivisionCert base_case_embed(const Digraph &d, const PatternDigraph &f);

// The main recursion: peel one arc, find a connect witness, an outparity
// witness inside it, recurse in Y, then attach a congruence-correct path.
SubdivisionCert find_subdivision(const Digraph &d, const PatternDigraph &f,
                                 const ConstraintMap &c, FinderMode mode,
                                 const ChiOracleConfig &cfg);

} // namespace disub
