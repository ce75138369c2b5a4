#pragma once

// Brute-force reference implementations used only by tests. Kept dumb on
// purpose: they enumerate, the library searches.

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "disub/digraph.hpp"
#include "disub/generators.hpp"
#include "disub/io.hpp"

namespace oracle {

// Minimum number of classes over ALL set partitions of V(D) such that every
// class induces an acyclic subdigraph.
inline int partition_chi(const disub::Digraph &d) {
    const int n = d.n();
    if (n == 0)
        return 1;
    std::vector<int> rgs(n, 0);
    int best = n;
    std::function<void(int, int)> rec = [&](int idx, int max_used) {
        if (max_used + 1 >= best)
            return; // already no better than the best found
        if (idx == n) {
            std::vector<std::vector<int>> classes(max_used + 1);
            for (int v = 0; v < n; ++v)
                classes[rgs[v]].push_back(v);
            for (const auto &cls : classes)
                if (!disub::is_acyclic(disub::induced_subdigraph(d, cls).graph))
                    return;
            best = max_used + 1;
            return;
        }
        for (int c = 0; c <= std::min(max_used + 1, n - 1); ++c) {
            rgs[idx] = c;
            rec(idx + 1, std::max(max_used, c));
        }
    };
    rgs[0] = 0;
    rec(1, 0);
    return best;
}

// All simple directed x -> y paths (as vertex sequences).
inline std::vector<disub::Path> all_simple_paths(const disub::Digraph &d, int x, int y) {
    std::vector<disub::Path> result;
    std::vector<char> used(d.n(), 0);
    disub::Path cur{x};
    used[x] = 1;
    std::function<void(int)> rec = [&](int v) {
        if (v == y) {
            result.push_back(cur);
            return;
        }
        for (int w : d.out(v)) {
            if (used[w])
                continue;
            used[w] = 1;
            cur.push_back(w);
            rec(w);
            cur.pop_back();
            used[w] = 0;
        }
    };
    rec(x);
    return result;
}

inline std::optional<int> min_path_length(const disub::Digraph &d, int x, int y) {
    auto paths = all_simple_paths(d, x, y);
    if (paths.empty())
        return std::nullopt;
    std::size_t best = paths.front().size();
    for (const auto &p : paths)
        best = std::min(best, p.size());
    return static_cast<int>(best) - 1;
}

// Length of a longest simple directed cycle; 0 if acyclic.
inline int max_cycle_length(const disub::Digraph &d) {
    int best = 0;
    std::vector<char> used(d.n(), 0);
    std::function<void(int, int, int)> rec = [&](int start, int v, int len) {
        if (len > 0 && d.has_arc(v, start))
            best = std::max(best, len + 1);
        for (int w : d.out(v)) {
            if (w <= start || used[w])
                continue;
            used[w] = 1;
            rec(start, w, len + 1);
            used[w] = 0;
        }
    };
    for (int s = 0; s < d.n(); ++s) {
        std::fill(used.begin(), used.end(), 0);
        used[s] = 1;
        rec(s, s, 0);
    }
    return best;
}

// Chromatic number of an undirected graph by partition enumeration.
inline int undirected_chi(const disub::UndirectedGraph &g) {
    if (g.n == 0)
        return 1;
    std::vector<std::vector<char>> adj(g.n, std::vector<char>(g.n, 0));
    for (auto [u, v] : g.edges)
        adj[u][v] = adj[v][u] = 1;
    std::vector<int> color(g.n, -1);
    std::function<bool(int, int)> feasible = [&](int idx, int k) {
        if (idx == g.n)
            return true;
        for (int c = 0; c < k; ++c) {
            bool ok = true;
            for (int u = 0; u < idx; ++u)
                if (color[u] == c && adj[u][idx]) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            color[idx] = c;
            if (feasible(idx + 1, k))
                return true;
            color[idx] = -1;
        }
        return false;
    };
    for (int k = 1;; ++k) {
        std::fill(color.begin(), color.end(), -1);
        if (feasible(0, k))
            return k;
    }
}

// Random digraph that is strongly connected; rejection-sampled.
inline disub::Digraph random_strongly_connected(int n, double p, disub::SplitMix64 &rng) {
    for (;;) {
        disub::Digraph d = disub::random_digraph(n, p, rng.next());
        if (disub::is_strongly_connected(d))
            return d;
    }
}

// All digraphs on n vertices (arc subsets); n <= 3 is intended.
inline std::vector<disub::Digraph> all_digraphs(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v)
                slots.emplace_back(u, v);
    std::vector<disub::Digraph> result;
    for (std::uint64_t mask = 0; mask < (1ULL << slots.size()); ++mask) {
        std::vector<std::pair<int, int>> arcs;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (mask & (1ULL << i))
                arcs.push_back(slots[i]);
        result.emplace_back(n, arcs);
    }
    return result;
}

} // namespace oracle
