#pragma once

#include <map>
#include <vector>

#include "disub/chi.hpp"
#include "disub/digraph.hpp"

namespace disub {

struct HalfSplit {
    int index = 0;            // layer index i
    std::vector<int> layer;   // L_i, certified chi >= ceil(t/2)
    ChiCertificate cert;
};

// Smallest layer index i (from v, in the given direction) whose layer
// certifies chi(D[L_i]) >= ceil(t/2). D must be strongly connected.
HalfSplit half_layering_split(const Digraph &d, int v, Direction dir, int t,
                              const ChiOracleConfig &cfg);

// A strongly connected X with chi(D[X]) certified >= ceil(t/2), a root
// x0 in X, and for every x in X a directed x -> x0 path meeting X exactly
// in {x, x0}.
struct ConnectWitness {
    std::vector<int> X;
    int x0 = 0;
    std::map<int, Path> connectors; // x -> path from x to x0
    ChiCertificate cert;
    int threshold = 0; // ceil(t/2)
};

ConnectWitness connect_core(const Digraph &d, int t, const ChiOracleConfig &cfg);

// A directed cycle of length >= k (k >= 2). Throws if none is found, which
// under a sound chi >= k certificate indicates engine misuse or a bug.
Cycle long_cycle(const Digraph &d, int k, const ChiOracleConfig &cfg);

// Z subseteq S, strongly connected, certified chi(D[Z]) >= t, and
// removal-minimal: deleting any single vertex breaks certification.
std::vector<int> minimal_high_chi_subset(const Digraph &d, const std::vector<int> &s, int t,
                                         const ChiOracleConfig &cfg);

// A directed path of length exactly q-1 inside D[S] ending at a vertex of Z,
// with all other vertices in S \ Z.
Path tail_path(const Digraph &d, const std::vector<int> &s, const std::vector<int> &z, int q,
               const ChiOracleConfig &cfg);

// The full witness of the outparity lemma: from x0, every y in Y is
// reachable by a directed path of every length in the interval
// [I_start, I_start + q - 1] that meets Y only in y.
struct OutparityWitness {
    int x0 = 0;
    int i = 0, j = 0;
    std::vector<int> S, Z;
    int r2 = 0;
    Path P; // length q-1, ends at r2, other vertices outside Z
    std::vector<int> Y;
    long long I_start = 0;
    int q = 1;
    ChiCertificate cert; // chi(D[Y]) >= threshold
    int threshold = 0;
};

// D must be strongly connected; q >= 1; chi(D) >= max(t, 2(q-1)) certified
// by the caller. Thresholds below 1 are clamped to 1.
OutparityWitness outparity_witness(const Digraph &d, int x0, int q, int t,
                                   const ChiOracleConfig &cfg);

// Reconstructs the promised path of length `len` from x0 to y. `d` must be
// the digraph the witness was computed on.
Path witness_path(const OutparityWitness &w, const Digraph &d, int y, long long len);

} // namespace disub
