#include "disub/digraph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <unordered_map>

#include "disub/errors.hpp"

namespace disub {

Digraph::Digraph(int n, const std::vector<std::pair<int, int>> &arcs)
    : n_(n), m_(static_cast<int>(arcs.size())), out_(n), in_(n) {
    if (n < 0)
        throw std::invalid_argument("negative vertex count");
    for (auto [u, v] : arcs) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("arc endpoint out of range");
        if (u == v)
            throw std::invalid_argument("loop arc");
        out_[u].push_back(v);
        in_[v].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
        std::sort(out_[v].begin(), out_[v].end());
        std::sort(in_[v].begin(), in_[v].end());
        if (std::adjacent_find(out_[v].begin(), out_[v].end()) != out_[v].end())
            throw std::invalid_argument("duplicate arc");
    }
}

bool Digraph::has_arc(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        return false;
    return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
    std::vector<std::pair<int, int>> result;
    result.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : out_[u])
            result.emplace_back(u, v);
    return result;
}

std::vector<int> Induced::lift(const std::vector<int> &local) const {
    std::vector<int> result;
    result.reserve(local.size());
    for (int v : local)
        result.push_back(to_parent.at(v));
    return result;
}

int Induced::local_id(int parent) const {
    auto it = std::lower_bound(to_parent.begin(), to_parent.end(), parent);
    if (it == to_parent.end() || *it != parent)
        return -1;
    return static_cast<int>(it - to_parent.begin());
}

Induced induced_subdigraph(const Digraph &d, const std::vector<int> &x) {
    std::vector<int> ids = x;
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
        throw std::invalid_argument("duplicate vertex in induced set");
    if (!ids.empty() && (ids.front() < 0 || ids.back() >= d.n()))
        throw std::invalid_argument("invalid vertex in induced set");
    std::vector<int> local(d.n(), -1);
    for (std::size_t i = 0; i < ids.size(); ++i)
        local[ids[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> arcs;
    for (int u : ids)
        for (int v : d.out(u))
            if (local[v] >= 0)
                arcs.emplace_back(local[u], local[v]);
    Induced result;
    result.graph = Digraph(static_cast<int>(ids.size()), arcs);
    result.to_parent = std::move(ids);
    return result;
}

namespace {

// Tarjan with explicit stack (hosts can be a few hundred vertices deep).
struct SccState {
    const Digraph &d;
    std::vector<int> index, low, stack, on_stack;
    int next_index = 0;
    std::vector<std::vector<int>> comps;

    explicit SccState(const Digraph &d_)
        : d(d_), index(d_.n(), -1), low(d_.n(), 0), on_stack(d_.n(), 0) {}

    void run(int root) {
        struct Frame {
            int v;
            std::size_t next_arc;
        };
        std::vector<Frame> frames{{root, 0}};
        enter(root);
        while (!frames.empty()) {
            Frame &f = frames.back();
            if (f.next_arc < d.out(f.v).size()) {
                int w = d.out(f.v)[f.next_arc++];
                if (index[w] < 0) {
                    enter(w);
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                if (low[f.v] == index[f.v]) {
                    std::vector<int> comp;
                    int w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        comp.push_back(w);
                    } while (w != f.v);
                    std::sort(comp.begin(), comp.end());
                    comps.push_back(std::move(comp));
                }
                int v = f.v;
                frames.pop_back();
                if (!frames.empty())
                    low[frames.back().v] = std::min(low[frames.back().v], low[v]);
            }
        }
    }

    void enter(int v) {
        index[v] = low[v] = next_index++;
        stack.push_back(v);
        on_stack[v] = 1;
    }
};

} // namespace

std::vector<std::vector<int>> strongly_connected_components(const Digraph &d) {
    SccState state(d);
    for (int v = 0; v < d.n(); ++v)
        if (state.index[v] < 0)
            state.run(v);
    std::sort(state.comps.begin(), state.comps.end(),
              [](const auto &a, const auto &b) { return a.front() < b.front(); });
    return state.comps;
}

bool is_strongly_connected(const Digraph &d) {
    if (d.n() <= 1)
        return true;
    return strongly_connected_components(d).size() == 1;
}

namespace {

// BFS distances from v following out- or in-arcs; -1 for unreachable.
std::vector<int> bfs_distances(const Digraph &d, int v, Direction dir,
                               const std::vector<char> *allowed = nullptr) {
    std::vector<int> dist(d.n(), -1);
    if (allowed && !(*allowed)[v])
        return dist;
    std::queue<int> q;
    dist[v] = 0;
    q.push(v);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        const auto &next = dir == Direction::Out ? d.out(u) : d.in(u);
        for (int w : next) {
            if (dist[w] >= 0 || (allowed && !(*allowed)[w]))
                continue;
            dist[w] = dist[u] + 1;
            q.push(w);
        }
    }
    return dist;
}

std::vector<char> mask_of(const Digraph &d, const std::vector<int> &set) {
    std::vector<char> mask(d.n(), 0);
    for (int v : set)
        mask[v] = 1;
    return mask;
}

// Walks back from y to a dist-0 vertex, always taking the smallest-id
// predecessor on a shortest path.
Path reconstruct(const Digraph &d, const std::vector<int> &dist, int y,
                 const std::vector<char> *allowed) {
    Path rev{y};
    int cur = y;
    while (dist[cur] > 0) {
        int best = -1;
        for (int u : d.in(cur)) {
            if (allowed && !(*allowed)[u])
                continue;
            if (dist[u] == dist[cur] - 1) {
                best = u;
                break; // in() is sorted ascending
            }
        }
        rev.push_back(best);
        cur = best;
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
}

std::vector<int> multi_source_distances(const Digraph &d, const std::vector<int> &sources,
                                        const std::vector<char> *allowed) {
    std::vector<int> dist(d.n(), -1);
    std::queue<int> q;
    for (int s : sources) {
        if (allowed && !(*allowed)[s])
            continue;
        if (dist[s] < 0) {
            dist[s] = 0;
            q.push(s);
        }
    }
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : d.out(u)) {
            if (dist[w] >= 0 || (allowed && !(*allowed)[w]))
                continue;
            dist[w] = dist[u] + 1;
            q.push(w);
        }
    }
    return dist;
}

std::optional<Path> path_to_nearest(const Digraph &d, const std::vector<int> &dist,
                                    const std::vector<int> &targets,
                                    const std::vector<char> *allowed) {
    int best = -1;
    for (int t : targets)
        if (dist[t] >= 0 && (best < 0 || dist[t] < dist[best]))
            best = t; // targets ascending, so ties keep the smaller id
    if (best < 0)
        return std::nullopt;
    return reconstruct(d, dist, best, allowed);
}

} // namespace

Layers bfs_layers(const Digraph &d, int v, Direction dir) {
    if (v < 0 || v >= d.n())
        throw std::invalid_argument("bfs_layers: invalid vertex");
    std::vector<int> dist = bfs_distances(d, v, dir);
    Layers result;
    for (int u = 0; u < d.n(); ++u) {
        if (dist[u] < 0) {
            result.unreachable.push_back(u);
            continue;
        }
        if (static_cast<int>(result.layers.size()) <= dist[u])
            result.layers.resize(dist[u] + 1);
        result.layers[dist[u]].push_back(u);
    }
    return result;
}

std::optional<Path> shortest_path(const Digraph &d, int x, int y) {
    if (x < 0 || x >= d.n() || y < 0 || y >= d.n())
        throw std::invalid_argument("shortest_path: invalid vertex");
    std::vector<int> dist = bfs_distances(d, x, Direction::Out);
    if (dist[y] < 0)
        return std::nullopt;
    return reconstruct(d, dist, y, nullptr);
}

std::optional<Path> shortest_path_within(const Digraph &d, const std::vector<int> &allowed,
                                         int x, int y) {
    std::vector<char> mask = mask_of(d, allowed);
    if (!mask[x] || !mask[y])
        throw std::invalid_argument("shortest_path_within: endpoint outside allowed set");
    std::vector<int> dist = bfs_distances(d, x, Direction::Out, &mask);
    if (dist[y] < 0)
        return std::nullopt;
    return reconstruct(d, dist, y, &mask);
}

std::optional<Path> shortest_path_to_set(const Digraph &d, int x, const std::vector<int> &targets,
                                         const std::vector<int> *allowed) {
    std::vector<char> mask;
    const std::vector<char> *maskp = nullptr;
    if (allowed) {
        mask = mask_of(d, *allowed);
        maskp = &mask;
    }
    std::vector<int> dist = bfs_distances(d, x, Direction::Out, maskp);
    return path_to_nearest(d, dist, targets, maskp);
}

std::optional<Path> shortest_path_between_sets(const Digraph &d, const std::vector<int> &sources,
                                               const std::vector<int> &targets,
                                               const std::vector<int> *allowed) {
    std::vector<char> mask;
    const std::vector<char> *maskp = nullptr;
    if (allowed) {
        mask = mask_of(d, *allowed);
        maskp = &mask;
    }
    std::vector<int> dist = multi_source_distances(d, sources, maskp);
    return path_to_nearest(d, dist, targets, maskp);
}

bool is_acyclic(const Digraph &d) {
    std::vector<int> indeg(d.n(), 0);
    for (int v = 0; v < d.n(); ++v)
        for (int w : d.out(v))
            ++indeg[w];
    std::queue<int> q;
    for (int v = 0; v < d.n(); ++v)
        if (indeg[v] == 0)
            q.push(v);
    int seen = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        ++seen;
        for (int w : d.out(v))
            if (--indeg[w] == 0)
                q.push(w);
    }
    return seen == d.n();
}

bool is_path_in(const Digraph &d, const Path &p) {
    if (p.empty())
        return false;
    std::vector<int> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    if (sorted.front() < 0 || sorted.back() >= d.n())
        return false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (!d.has_arc(p[i], p[i + 1]))
            return false;
    return true;
}

Path shortcut_walk(const std::vector<int> &walk) {
    std::unordered_map<int, std::size_t> last;
    for (std::size_t i = 0; i < walk.size(); ++i)
        last[walk[i]] = i;
    Path path;
    std::size_t i = 0;
    while (i < walk.size()) {
        path.push_back(walk[i]);
        i = last[walk[i]] + 1;
    }
    return path;
}

} // namespace disub
