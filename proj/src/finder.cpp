#include "disub/finder.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "disub/errors.hpp"
#include "disub/lemmas.hpp"

namespace disub {

std::vector<int> arc_elimination_order(const PatternDigraph &f, const ConstraintMap &c) {
    std::vector<int> order(f.F.arc_count());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return c.per_arc[a].q > c.per_arc[b].q; });
    return order;
}

std::vector<long long> budget_chain(const PatternDigraph &f, const ConstraintMap &c,
                                    const std::vector<int> &order) {
    std::vector<long long> budgets(order.size() + 1);
    budgets.back() = f.F.n();
    for (std::size_t k = order.size(); k-- > 0;)
        budgets[k] = 8 * budgets[k + 1] + 4 * (c.per_arc[order[k]].q - 1);
    return budgets;
}

long long required_chi_bound(const PatternDigraph &f, const ConstraintMap &c,
                             const std::vector<int> &order) {
    return budget_chain(f, c, order).front();
}

SubdivisionCert base_case_embed(const Digraph &d, const PatternDigraph &f) {
    if (d.n() < f.F.n())
        throw CertificationFailure("base_case_embed",
                                   "host has " + std::to_string(d.n()) +
                                       " vertices, pattern needs " + std::to_string(f.F.n()));
    SubdivisionCert cert;
    cert.branch.resize(f.F.n());
    std::iota(cert.branch.begin(), cert.branch.end(), 0);
    cert.paths.assign(f.F.arc_count(), {});
    return cert;
}

namespace {

struct FinderCtx {
    const PatternDigraph &f;
    const ConstraintMap &c;
    std::vector<int> order;
    std::vector<long long> budgets; // strict-mode thresholds per level
    FinderMode mode;
    ChiOracleConfig cfg;
};

// Best lower bound on chi(d) the configured engine can vouch for.
long long probe_chi_lower(const Digraph &d, const ChiOracleConfig &cfg) {
    bool exact = cfg.engine == Engine::Exact ||
                 (cfg.engine == Engine::Auto && d.n() <= cfg.exact_vertex_limit);
    if (exact && d.n() <= cfg.exact_vertex_limit)
        return chi_via_scc(d, cfg);
    return static_cast<long long>(greedy_digon_clique(d).size());
}

int clamp_threshold(long long t) {
    return static_cast<int>(std::max<long long>(t, 1));
}

// Returns the certificate in d's local ids; level indexes ctx.order.
SubdivisionCert find_rec(const Digraph &d, std::size_t level, const FinderCtx &ctx) {
    if (level == ctx.order.size())
        return base_case_embed(d, ctx.f);

    int f_arc = ctx.order[level];
    auto [fu, fv] = ctx.f.arcs()[f_arc];
    const ArcConstraint rq = ctx.c.per_arc[f_arc];

    long long budget = ctx.mode == FinderMode::Strict ? ctx.budgets[level]
                                                      : probe_chi_lower(d, ctx.cfg);
    int t = clamp_threshold(budget);

    ConnectWitness cw = connect_core(d, t, ctx.cfg);
    Induced dx = induced_subdigraph(d, cw.X);
    OutparityWitness w =
        outparity_witness(dx.graph, dx.local_id(cw.x0), rq.q, cw.threshold, ctx.cfg);

    std::vector<int> y_parent = dx.lift(w.Y);
    Induced dy = induced_subdigraph(d, y_parent);
    SubdivisionCert child = find_rec(dy.graph, level + 1, ctx);

    // lift everything the child placed into this level's ids
    SubdivisionCert cert;
    cert.branch = dy.lift(child.branch);
    cert.paths.assign(ctx.f.F.arc_count(), {});
    for (int e = 0; e < ctx.f.F.arc_count(); ++e)
        if (!child.paths[e].empty())
            cert.paths[e] = dy.lift(child.paths[e]);

    int y1 = cert.branch[fu];
    int y2 = cert.branch[fv];
    const Path &p0 = cw.connectors.at(y1);
    long long p0_len = static_cast<long long>(p0.size()) - 1;

    // the unique length in I with len(P0) + l == r (mod q)
    long long l = w.I_start;
    while ((l + p0_len) % rq.q != rq.r)
        ++l;
    assert(l < w.I_start + rq.q);

    Path q_local = witness_path(w, dx.graph, dx.local_id(y2), l);
    Path q_path = dx.lift(q_local);

    Path attached = p0; // y1 ... x0
    attached.insert(attached.end(), q_path.begin() + 1, q_path.end());
    cert.paths[f_arc] = std::move(attached);
    return cert;
}

} // namespace

SubdivisionCert find_subdivision(const Digraph &d, const PatternDigraph &f,
                                 const ConstraintMap &c, FinderMode mode,
                                 const ChiOracleConfig &cfg) {
    FinderCtx ctx{f, c, arc_elimination_order(f, c), {}, mode, cfg};
    ctx.budgets = budget_chain(f, c, ctx.order);

    if (mode == FinderMode::Strict) {
        std::vector<int> all(d.n());
        std::iota(all.begin(), all.end(), 0);
        if (ctx.budgets[0] > d.n() ||
            certify_at_least(d, all, static_cast<int>(ctx.budgets[0]), cfg).status !=
                CertStatus::Certified)
            throw CertificationFailure("find_subdivision",
                                       "strict precondition: chi(D) >= " +
                                           std::to_string(ctx.budgets[0]) + " not certified");
    }
    return find_rec(d, 0, ctx);
}

} // namespace disub
