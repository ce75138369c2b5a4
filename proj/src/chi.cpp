#include "disub/chi.hpp"

#include <algorithm>
#include <numeric>

#include "disub/errors.hpp"

namespace disub {

bool is_valid_coloring(const Digraph &d, const Coloring &c) {
    if (static_cast<int>(c.assignment.size()) != d.n())
        return false;
    for (int v = 0; v < d.n(); ++v)
        if (c.assignment[v] < 0 || c.assignment[v] >= std::max(c.k, 1))
            return false;
    for (int color = 0; color < c.k; ++color) {
        std::vector<int> cls;
        for (int v = 0; v < d.n(); ++v)
            if (c.assignment[v] == color)
                cls.push_back(v);
        if (!is_acyclic(induced_subdigraph(d, cls).graph))
            return false;
    }
    return true;
}

namespace {

// Branch and bound over one strongly connected digraph.
struct DecisionSearch {
    const Digraph &d;
    int k;
    std::vector<int> order; // branching order: digon-degree descending, id ascending
    std::vector<int> color; // -1 = unassigned

    DecisionSearch(const Digraph &d_, int k_) : d(d_), k(k_), color(d_.n(), -1) {
        std::vector<int> digon_deg(d.n(), 0);
        for (int v = 0; v < d.n(); ++v)
            for (int w : d.out(v))
                if (w > v && d.has_arc(w, v)) {
                    ++digon_deg[v];
                    ++digon_deg[w];
                }
        order.resize(d.n());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (digon_deg[a] != digon_deg[b])
                return digon_deg[a] > digon_deg[b];
            return a < b;
        });
    }

    // Does class c stay acyclic after adding v? Kahn over the class subgraph.
    bool class_stays_acyclic(int c, int v) const {
        std::vector<int> cls{v};
        for (int u = 0; u < d.n(); ++u)
            if (color[u] == c)
                cls.push_back(u);
        std::sort(cls.begin(), cls.end());
        std::vector<int> pos(d.n(), -1), indeg(cls.size(), 0);
        for (std::size_t i = 0; i < cls.size(); ++i)
            pos[cls[i]] = static_cast<int>(i);
        for (int u : cls)
            for (int w : d.out(u))
                if (pos[w] >= 0)
                    ++indeg[pos[w]];
        std::vector<int> ready;
        for (std::size_t i = 0; i < cls.size(); ++i)
            if (indeg[i] == 0)
                ready.push_back(static_cast<int>(i));
        std::size_t seen = 0;
        while (!ready.empty()) {
            int i = ready.back();
            ready.pop_back();
            ++seen;
            for (int w : d.out(cls[i]))
                if (pos[w] >= 0 && --indeg[pos[w]] == 0)
                    ready.push_back(pos[w]);
        }
        return seen == cls.size();
    }

    bool extend(std::size_t idx, int max_used) {
        if (idx == order.size())
            return true;
        int v = order[idx];
        int top = std::min(max_used + 1, k - 1);
        for (int c = 0; c <= top; ++c) {
            if (!class_stays_acyclic(c, v))
                continue;
            color[v] = c;
            if (extend(idx + 1, std::max(max_used, c)))
                return true;
            color[v] = -1;
        }
        return false;
    }

    std::optional<std::vector<int>> run() {
        if (d.n() == 0)
            return std::vector<int>{};
        // pin the first vertex to color 0 (symmetry breaking)
        color[order[0]] = 0;
        if (!extend(1, 0))
            return std::nullopt;
        return color;
    }
};

} // namespace

std::optional<Coloring> dichromatic_decision(const Digraph &d, int k) {
    if (k < 1)
        throw std::invalid_argument("dichromatic_decision: k must be >= 1");
    Coloring result;
    result.k = k;
    result.assignment.assign(d.n(), 0);
    // Lemma: a cycle lives inside one strongly connected component, so
    // per-component colorings combine freely.
    for (const auto &comp : strongly_connected_components(d)) {
        Induced sub = induced_subdigraph(d, comp);
        DecisionSearch search(sub.graph, k);
        auto colors = search.run();
        if (!colors)
            return std::nullopt;
        for (std::size_t i = 0; i < comp.size(); ++i)
            result.assignment[sub.to_parent[i]] = (*colors)[i];
    }
    return result;
}

std::pair<int, Coloring> dichromatic_number(const Digraph &d, const ChiOracleConfig &cfg) {
    if (d.n() > cfg.exact_vertex_limit)
        throw EngineLimitError("exact engine limited to " +
                               std::to_string(cfg.exact_vertex_limit) + " vertices, instance has " +
                               std::to_string(d.n()));
    if (d.n() == 0)
        return {1, Coloring{{}, 1}};
    for (int k = 1;; ++k) {
        if (auto c = dichromatic_decision(d, k))
            return {k, *c};
    }
}

int chi_via_scc(const Digraph &d, const ChiOracleConfig &cfg) {
    int best = d.n() == 0 ? 1 : 0;
    for (const auto &comp : strongly_connected_components(d)) {
        Induced sub = induced_subdigraph(d, comp);
        best = std::max(best, dichromatic_number(sub.graph, cfg).first);
    }
    return std::max(best, 1);
}

namespace {

struct DigonGraph {
    int n;
    std::vector<std::vector<char>> adj;
    std::vector<int> deg;

    explicit DigonGraph(const Digraph &d)
        : n(d.n()), adj(d.n(), std::vector<char>(d.n(), 0)), deg(d.n(), 0) {
        for (int v = 0; v < n; ++v)
            for (int w : d.out(v))
                if (w > v && d.has_arc(w, v)) {
                    adj[v][w] = adj[w][v] = 1;
                    ++deg[v];
                    ++deg[w];
                }
    }
};

std::vector<int> greedy_clique(const DigonGraph &g) {
    std::vector<int> order(g.n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.deg[a] != g.deg[b])
            return g.deg[a] > g.deg[b];
        return a < b;
    });
    std::vector<int> clique;
    for (int v : order) {
        bool ok = true;
        for (int u : clique)
            if (!g.adj[u][v]) {
                ok = false;
                break;
            }
        if (ok)
            clique.push_back(v);
    }
    std::sort(clique.begin(), clique.end());
    return clique;
}

// Bounded backtracking for a clique of size exactly t. Candidates are kept
// in ascending id order, so the first clique found is deterministic.
bool clique_backtrack(const DigonGraph &g, int t, std::vector<int> &clique,
                      const std::vector<int> &cands, long long &budget) {
    if (static_cast<int>(clique.size()) == t)
        return true;
    if (static_cast<int>(clique.size() + cands.size()) < t)
        return false;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        if (--budget <= 0)
            return false;
        int v = cands[i];
        std::vector<int> next;
        for (std::size_t j = i + 1; j < cands.size(); ++j)
            if (g.adj[v][cands[j]])
                next.push_back(cands[j]);
        clique.push_back(v);
        if (clique_backtrack(g, t, clique, next, budget))
            return true;
        clique.pop_back();
    }
    return false;
}

} // namespace

std::vector<int> greedy_digon_clique(const Digraph &d) {
    if (d.n() == 0)
        return {};
    return greedy_clique(DigonGraph(d));
}

std::optional<std::vector<int>> digon_clique_lower_bound(const Digraph &d, int t) {
    if (t < 1)
        throw std::invalid_argument("digon_clique_lower_bound: t must be >= 1");
    if (t > d.n())
        return std::nullopt;
    DigonGraph g(d);
    std::vector<int> clique = greedy_clique(g);
    if (static_cast<int>(clique.size()) >= t) {
        clique.resize(t);
        return clique;
    }
    std::vector<int> cands(d.n());
    std::iota(cands.begin(), cands.end(), 0);
    clique.clear();
    long long budget = 200000;
    if (clique_backtrack(g, t, clique, cands, budget)) {
        std::sort(clique.begin(), clique.end());
        return clique;
    }
    return std::nullopt;
}

CertifyResult certify_at_least(const Digraph &d, const std::vector<int> &x, int t,
                               const ChiOracleConfig &cfg) {
    if (t <= 0)
        return {CertStatus::Certified, ChiCertificate{ChiCertificate::Kind::Trivial, t, {}, {}}};
    if (x.empty())
        return {CertStatus::Refuted, std::nullopt};
    if (t == 1)
        return {CertStatus::Certified, ChiCertificate{ChiCertificate::Kind::Trivial, 1, {}, {}}};

    Induced sub = induced_subdigraph(d, x);
    Engine engine = cfg.engine;
    if (engine == Engine::Auto)
        engine = sub.graph.n() <= cfg.exact_vertex_limit ? Engine::Exact : Engine::Clique;

    if (engine == Engine::Exact) {
        if (sub.graph.n() > cfg.exact_vertex_limit)
            throw EngineLimitError("certify_at_least: instance exceeds exact engine limit");
        if (dichromatic_decision(sub.graph, t - 1))
            return {CertStatus::Refuted, std::nullopt};
        return {CertStatus::Certified,
                ChiCertificate{ChiCertificate::Kind::ExactRefutation, t, {}, {}}};
    }

    if (auto clique = digon_clique_lower_bound(sub.graph, t)) {
        ChiCertificate cert{ChiCertificate::Kind::LowerClique, t, {}, sub.lift(*clique)};
        return {CertStatus::Certified, std::move(cert)};
    }
    return {CertStatus::Unknown, std::nullopt};
}

} // namespace disub
