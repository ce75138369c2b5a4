#pragma once

#include <cstdint>

#include "disub/certificate.hpp"
#include "disub/digraph.hpp"
#include "disub/finder.hpp"
#include "disub/io.hpp"

namespace disub {

// splitmix64: the documented PRNG contract for all generators. Identical
// seeds produce identical instances on every platform.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1) with 53 bits of precision
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

// The bidirection of G: every edge replaced by a digon. chi_vec = chi(G).
Digraph bidirect(const UndirectedGraph &g);

// All n(n-1) arcs; dichromatic number n.
Digraph complete_bidirected(int n);

// Each unordered pair oriented one way uniformly; n(n-1)/2 arcs, no digons.
Digraph random_tournament(int n, std::uint64_t seed);

// Each ordered pair included independently with probability p.
Digraph random_digraph(int n, double p, std::uint64_t seed);

struct UndirectedPipelineResult {
    PatternDigraph oriented_pattern; // each pattern edge oriented small -> large
    Digraph host;                    // bidirect(G)
    SubdivisionCert cert;            // directed certificate; forget directions to read it
};

// Thomassen's theorem as a corollary: orient F, bidirect G, run the finder,
// then ignore directions.
UndirectedPipelineResult undirected_subdivision_pipeline(const UndirectedGraph &g,
                                                         const UndirectedGraph &f_un,
                                                         const ConstraintMap &c, FinderMode mode,
                                                         const ChiOracleConfig &cfg);

} // namespace disub
