#include "disub/lemmas.hpp"

#include <algorithm>
#include <cassert>

#include "disub/errors.hpp"

namespace disub {

namespace {

int ceil_half(int t) { return (t + 1) / 2; }

ChiCertificate lift_cert(const ChiCertificate &cert, const Induced &sub) {
    ChiCertificate lifted = cert;
    if (lifted.kind == ChiCertificate::Kind::LowerClique)
        lifted.clique = sub.lift(lifted.clique);
    return lifted;
}

// First SCC of D[candidates] (ordered by smallest member) that certifies
// chi >= t; returns the component and its certificate in d's ids.
std::optional<std::pair<std::vector<int>, ChiCertificate>>
pick_certified_scc(const Digraph &d, const std::vector<int> &candidates, int t,
                   const ChiOracleConfig &cfg) {
    Induced sub = induced_subdigraph(d, candidates);
    for (const auto &comp : strongly_connected_components(sub.graph)) {
        std::vector<int> parent_comp = sub.lift(comp);
        CertifyResult res = certify_at_least(d, parent_comp, t, cfg);
        if (res.status == CertStatus::Certified)
            return std::make_pair(std::move(parent_comp), std::move(*res.certificate));
    }
    return std::nullopt;
}

} // namespace

HalfSplit half_layering_split(const Digraph &d, int v, Direction dir, int t,
                              const ChiOracleConfig &cfg) {
    if (!is_strongly_connected(d))
        throw std::invalid_argument("half_layering_split: digraph is not strongly connected");
    Layers layers = bfs_layers(d, v, dir);
    int need = ceil_half(t);
    for (std::size_t i = 0; i < layers.layers.size(); ++i) {
        CertifyResult res = certify_at_least(d, layers.layers[i], need, cfg);
        if (res.status == CertStatus::Certified)
            return HalfSplit{static_cast<int>(i), layers.layers[i], std::move(*res.certificate)};
    }
    throw CertificationFailure("half_layering_split",
                               "no layer certified at threshold " + std::to_string(need));
}

ConnectWitness connect_core(const Digraph &d, int t, const ChiOracleConfig &cfg) {
    // restrict to a component carrying the whole bound
    std::vector<int> all(d.n());
    for (int v = 0; v < d.n(); ++v)
        all[v] = v;
    auto core = pick_certified_scc(d, all, t, cfg);
    if (!core)
        throw CertificationFailure("connect_core",
                                   "no strongly connected component certified at threshold " +
                                       std::to_string(t));
    Induced sub = induced_subdigraph(d, core->first);
    const Digraph &ds = sub.graph;

    // v = smallest id in the component = local 0
    HalfSplit split = half_layering_split(ds, 0, Direction::In, t, cfg);
    auto xcomp = pick_certified_scc(ds, split.layer, ceil_half(t), cfg);
    if (!xcomp)
        throw CertificationFailure("connect_core", "no SCC of layer " +
                                                       std::to_string(split.index) +
                                                       " certified at threshold " +
                                                       std::to_string(ceil_half(t)));
    const std::vector<int> &x_local = xcomp->first;

    // shortest path from v into X; meets X only at its endpoint x0
    auto p_vx = shortest_path_to_set(ds, 0, x_local);
    assert(p_vx);
    int x0_local = p_vx->back();

    ConnectWitness witness;
    witness.X = sub.lift(x_local);
    witness.x0 = sub.to_parent[x0_local];
    witness.cert = lift_cert(xcomp->second, sub);
    witness.threshold = ceil_half(t);

    for (int x : x_local) {
        Path connector;
        if (x == x0_local) {
            connector = {x};
        } else {
            // shortest x -> v path (length = layer index, meets X only at x),
            // then the fixed v -> x0 path; short-cut the walk to a path
            auto p_xv = shortest_path(ds, x, 0);
            assert(p_xv);
            std::vector<int> walk = *p_xv;
            walk.insert(walk.end(), p_vx->begin() + 1, p_vx->end());
            connector = shortcut_walk(walk);
        }
        witness.connectors[sub.to_parent[x]] = sub.lift(connector);
    }
    return witness;
}

namespace {

// DFS for a simple cycle of length >= k through the smallest possible start
// vertex; neighbors explored in ascending order.
struct CycleSearch {
    const Digraph &d;
    int k;
    int start = 0;
    std::vector<char> on_path;
    Path path;

    CycleSearch(const Digraph &d_, int k_) : d(d_), k(k_), on_path(d_.n(), 0) {}

    bool dfs(int u) {
        if (static_cast<int>(path.size()) >= k && d.has_arc(u, start))
            return true;
        for (int w : d.out(u)) {
            if (w < start || on_path[w])
                continue;
            on_path[w] = 1;
            path.push_back(w);
            if (dfs(w))
                return true;
            path.pop_back();
            on_path[w] = 0;
        }
        return false;
    }

    std::optional<Cycle> run() {
        for (start = 0; start < d.n(); ++start) {
            std::fill(on_path.begin(), on_path.end(), 0);
            on_path[start] = 1;
            path = {start};
            if (dfs(start))
                return path;
        }
        return std::nullopt;
    }
};

} // namespace

Cycle long_cycle(const Digraph &d, int k, const ChiOracleConfig &) {
    if (k < 2)
        throw std::invalid_argument("long_cycle: k must be >= 2");
    CycleSearch search(d, k);
    if (auto cycle = search.run())
        return *cycle;
    throw CertificationFailure("long_cycle", "no directed cycle of length >= " +
                                                 std::to_string(k) +
                                                 " found; chi certificate was unsound");
}

std::vector<int> minimal_high_chi_subset(const Digraph &d, const std::vector<int> &s, int t,
                                         const ChiOracleConfig &cfg) {
    if (certify_at_least(d, s, t, cfg).status != CertStatus::Certified)
        throw CertificationFailure("minimal_high_chi_subset",
                                   "input set not certified at threshold " + std::to_string(t));
    std::vector<int> z = s;
    std::sort(z.begin(), z.end());
    bool changed = true;
    while (changed) {
        changed = false;
        // (a) restrict to a certified strongly connected component
        auto comp = pick_certified_scc(d, z, t, cfg);
        if (!comp)
            throw CertificationFailure("minimal_high_chi_subset",
                                       "no SCC certified at threshold " + std::to_string(t));
        if (comp->first.size() != z.size()) {
            z = comp->first;
            changed = true;
        }
        // (b) single-vertex removals in ascending id order
        std::vector<int> snapshot = z;
        for (int v : snapshot) {
            if (z.size() <= 1)
                break;
            std::vector<int> trimmed;
            trimmed.reserve(z.size() - 1);
            for (int u : z)
                if (u != v)
                    trimmed.push_back(u);
            if (certify_at_least(d, trimmed, t, cfg).status == CertStatus::Certified) {
                z = std::move(trimmed);
                changed = true;
            }
        }
    }
    return z;
}

Path tail_path(const Digraph &d, const std::vector<int> &s, const std::vector<int> &z, int q,
               const ChiOracleConfig &cfg) {
    if (q < 1)
        throw std::invalid_argument("tail_path: q must be >= 1");
    std::vector<int> zs = z;
    std::sort(zs.begin(), zs.end());
    if (q == 1)
        return {zs.front()};

    std::vector<int> ss = s;
    std::sort(ss.begin(), ss.end());
    std::vector<int> rest; // S \ Z
    std::set_difference(ss.begin(), ss.end(), zs.begin(), zs.end(), std::back_inserter(rest));
    if (certify_at_least(d, rest, q - 1, cfg).status != CertStatus::Certified)
        throw CertificationFailure("tail_path", "chi(D[S \\ Z]) >= " + std::to_string(q - 1) +
                                                    " not certified");

    if (q == 2) {
        // one arc from S \ Z into Z; exists by strong connectivity of D[S]
        for (int u : rest)
            for (int w : d.out(u))
                if (std::binary_search(zs.begin(), zs.end(), w))
                    return {u, w};
        throw CertificationFailure("tail_path", "no arc from S \\ Z into Z");
    }

    // q >= 3: long cycle in D[S \ Z], then a shortest connection into Z
    Induced sub = induced_subdigraph(d, rest);
    Cycle cycle_local = long_cycle(sub.graph, q - 1, cfg);
    std::vector<int> cycle = sub.lift(cycle_local);
    std::vector<int> sources = cycle;
    std::sort(sources.begin(), sources.end());
    auto r = shortest_path_between_sets(d, sources, zs, &ss);
    if (!r)
        throw CertificationFailure("tail_path", "no path from the cycle into Z inside D[S]");
    int r1 = r->front();

    // segment of the cycle of length q-2 ending at r1, then R; the suffix of
    // length exactly q-1 of this walk is the desired path
    std::size_t pos = std::find(cycle.begin(), cycle.end(), r1) - cycle.begin();
    std::size_t len = cycle.size(); // >= q-1, so the segment never wraps onto itself
    std::vector<int> walk;
    for (int back = q - 2; back >= 0; --back)
        walk.push_back(cycle[(pos + len - static_cast<std::size_t>(back)) % len]);
    walk.insert(walk.end(), r->begin() + 1, r->end());
    Path p(walk.end() - q, walk.end());
    assert(is_path_in(d, p));
    return p;
}

OutparityWitness outparity_witness(const Digraph &d, int x0, int q, int t,
                                   const ChiOracleConfig &cfg) {
    if (q < 1)
        throw std::invalid_argument("outparity_witness: q must be >= 1");
    if (!is_strongly_connected(d))
        throw std::invalid_argument("outparity_witness: digraph is not strongly connected");

    HalfSplit split = half_layering_split(d, x0, Direction::Out, t, cfg);
    int t_layer = ceil_half(t);
    auto scomp = pick_certified_scc(d, split.layer, t_layer, cfg);
    if (!scomp)
        throw CertificationFailure("outparity_witness",
                                   "no SCC of layer " + std::to_string(split.index) +
                                       " certified at threshold " + std::to_string(t_layer));

    OutparityWitness w;
    w.x0 = x0;
    w.q = q;
    w.i = split.index;
    w.S = scomp->first;

    int t_z_raw = t_layer - (q - 1);
    int t_z = std::max(t_z_raw, 1);
    w.Z = minimal_high_chi_subset(d, w.S, t_z, cfg);
    try {
        w.P = tail_path(d, w.S, w.Z, q, cfg);
    } catch (const CertificationFailure &) {
        if (t_z_raw >= 1)
            throw;
        // zero-slack boundary chi(D) = 2(q-1): the guaranteed lower bound on
        // chi(D[Y]) is nonpositive, so an empty Y is a valid witness
        w.Z.clear();
        w.P.clear();
        w.r2 = -1;
        w.j = 0;
        w.Y.clear();
        w.cert = ChiCertificate{ChiCertificate::Kind::Trivial, 0, {}, {}};
        w.threshold = 0;
        w.I_start = w.i;
        return w;
    }
    w.r2 = w.P.back();

    Induced dz = induced_subdigraph(d, w.Z);
    HalfSplit inner = half_layering_split(dz.graph, dz.local_id(w.r2), Direction::Out, t_z, cfg);
    w.j = inner.index;
    w.Y = dz.lift(inner.layer);
    w.cert = lift_cert(inner.cert, dz);
    w.threshold = ceil_half(t_z);
    w.I_start = static_cast<long long>(w.i) + w.j;
    return w;
}

Path witness_path(const OutparityWitness &w, const Digraph &d, int y, long long len) {
    if (!std::binary_search(w.Y.begin(), w.Y.end(), y))
        throw std::invalid_argument("witness_path: y is not in Y");
    if (len < w.I_start || len >= w.I_start + w.q)
        throw std::invalid_argument("witness_path: length outside the interval I");

    long long alpha = len - w.I_start;
    int p_alpha = w.P[w.P.size() - 1 - alpha];

    auto p1 = shortest_path(d, w.x0, p_alpha);
    assert(p1 && static_cast<int>(p1->size()) - 1 == w.i);
    auto p2 = shortest_path_within(d, w.Z, w.r2, y);
    assert(p2 && static_cast<int>(p2->size()) - 1 == w.j);

    Path qpath = *p1;
    qpath.insert(qpath.end(), w.P.end() - alpha, w.P.end()); // segment p(alpha) -> r2
    qpath.insert(qpath.end(), p2->begin() + 1, p2->end());
    assert(static_cast<long long>(qpath.size()) - 1 == len);
    assert(is_path_in(d, qpath));
    return qpath;
}

} // namespace disub
