#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace disub {

// A directed path v0, ..., vk of distinct vertices; consecutive pairs are
// arcs of the host digraph. A single vertex is a valid (length-0) path.
using Path = std::vector<int>;

// A directed cycle v0, ..., v_{k-1}, with the arc (v_{k-1}, v0) closing it.
using Cycle = std::vector<int>;

enum class Direction { Out, In };

// Immutable simple digraph on vertices 0..n-1. No loops, no duplicate arcs;
// opposite arcs (a digon) are allowed. Adjacency lists are kept sorted.
class Digraph {
public:
    Digraph() = default;
    Digraph(int n, const std::vector<std::pair<int, int>> &arcs);

    int n() const { return n_; }
    int arc_count() const { return m_; }
    const std::vector<int> &out(int v) const { return out_[v]; }
    const std::vector<int> &in(int v) const { return in_[v]; }
    bool has_arc(int u, int v) const;
    bool has_digon(int u, int v) const { return has_arc(u, v) && has_arc(v, u); }

    // All arcs in lexicographic (u, v) order.
    std::vector<std::pair<int, int>> arcs() const;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> out_, in_;
};

// An induced subdigraph together with the map back to the parent's ids.
struct Induced {
    Digraph graph;
    std::vector<int> to_parent; // local id -> parent id, ascending

    std::vector<int> lift(const std::vector<int> &local) const;
    // Local id of a parent vertex; -1 if not in the subdigraph.
    int local_id(int parent) const;
};

// D[X]. X must contain valid, distinct vertex ids.
Induced induced_subdigraph(const Digraph &d, const std::vector<int> &x);

// Partition of V(D) into strongly connected components; each component
// sorted ascending, components ordered by smallest member.
std::vector<std::vector<int>> strongly_connected_components(const Digraph &d);

bool is_strongly_connected(const Digraph &d);

struct Layers {
    std::vector<std::vector<int>> layers; // layers[i] = vertices at distance exactly i
    std::vector<int> unreachable;
};

// BFS layers from (direction Out) or to (direction In) v.
Layers bfs_layers(const Digraph &d, int v, Direction dir);

// Shortest directed x->y path; deterministic (smallest-id predecessor).
// nullopt if y is unreachable from x.
std::optional<Path> shortest_path(const Digraph &d, int x, int y);

// Same, restricted to the vertex set `allowed` (sorted ascending).
std::optional<Path> shortest_path_within(const Digraph &d, const std::vector<int> &allowed,
                                         int x, int y);

// Shortest path from x to the nearest vertex of `targets` (ties: smallest
// target id), restricted to `allowed` if nonempty is given.
std::optional<Path> shortest_path_to_set(const Digraph &d, int x, const std::vector<int> &targets,
                                         const std::vector<int> *allowed = nullptr);

// Shortest path from any vertex of `sources` to the nearest vertex of
// `targets`, restricted to `allowed` if given.
std::optional<Path> shortest_path_between_sets(const Digraph &d, const std::vector<int> &sources,
                                               const std::vector<int> &targets,
                                               const std::vector<int> *allowed = nullptr);

bool is_acyclic(const Digraph &d);

// True iff `p` is a directed path in d (distinct vertices, consecutive arcs).
bool is_path_in(const Digraph &d, const Path &p);

// Turns a directed walk into a directed path with the same endpoints by
// jumping to the last occurrence of each repeated vertex.
Path shortcut_walk(const std::vector<int> &walk);

} // namespace disub
