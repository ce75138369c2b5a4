#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "disub/digraph.hpp"

namespace disub {

enum class Engine { Exact, Clique, Auto };

struct ChiOracleConfig {
    Engine engine = Engine::Auto;
    int exact_vertex_limit = 24; // Auto falls back to the clique engine above this
};

// Partition of the vertices into k acyclic-inducing classes.
struct Coloring {
    std::vector<int> assignment; // vertex -> color in 0..k-1
    int k = 0;
};

// A certified bound on the dichromatic number.
//
// Upper carries a witnessing coloring. LowerClique carries a set of `bound`
// vertices pairwise joined by digons. ExactRefutation records that the exact
// engine refuted every (bound-1)-coloring; Trivial covers thresholds <= 1.
struct ChiCertificate {
    enum class Kind { Upper, LowerClique, ExactRefutation, Trivial };
    Kind kind = Kind::Trivial;
    int bound = 0;
    Coloring coloring;       // Kind::Upper
    std::vector<int> clique; // Kind::LowerClique, sorted ascending
};

bool is_valid_coloring(const Digraph &d, const Coloring &c);

// Exact decision: a k-coloring into acyclic classes, or nullopt if none
// exists. Complete search (SCC decomposition, digon-degree branching order,
// first vertex pinned to color 0, partial-class cycle pruning).
std::optional<Coloring> dichromatic_decision(const Digraph &d, int k);

// Exact dichromatic number with a witnessing coloring. Throws
// EngineLimitError when n exceeds cfg.exact_vertex_limit.
std::pair<int, Coloring> dichromatic_number(const Digraph &d, const ChiOracleConfig &cfg = {});

// Max over strongly connected components of the exact dichromatic number.
int chi_via_scc(const Digraph &d, const ChiOracleConfig &cfg = {});

// A set of t vertices pairwise joined by digons (greedy plus bounded
// backtracking), or nullopt if the search fails. Sound, not complete.
std::optional<std::vector<int>> digon_clique_lower_bound(const Digraph &d, int t);

// Largest digon clique the greedy heuristic finds; used as a cheap
// lower-bound probe when exact computation is out of reach.
std::vector<int> greedy_digon_clique(const Digraph &d);

enum class CertStatus { Certified, Refuted, Unknown };

// `Refuted` is definitive (exact engine found a (t-1)-coloring);
// `Unknown` means "not certified", never "false".
struct CertifyResult {
    CertStatus status = CertStatus::Unknown;
    std::optional<ChiCertificate> certificate;
};

// Certifies chi(D[X]) >= t. X is given in d's ids; any clique certificate is
// returned in d's ids as well.
CertifyResult certify_at_least(const Digraph &d, const std::vector<int> &x, int t,
                               const ChiOracleConfig &cfg);

} // namespace disub
