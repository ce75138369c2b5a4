#include "disub/certificate.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "disub/errors.hpp"

namespace disub {

namespace {

std::string vertex_list(const std::vector<int> &vs) {
    std::ostringstream out;
    for (std::size_t i = 0; i < vs.size(); ++i)
        out << (i ? " " : "") << vs[i];
    return out.str();
}

} // namespace

std::vector<Violation> verify_subdivision(const Digraph &d, const PatternDigraph &f,
                                          const ConstraintMap &c, const SubdivisionCert &cert) {
    std::vector<Violation> violations;
    auto arcs = f.arcs();
    const int vf = f.F.n();
    const int af = static_cast<int>(arcs.size());

    if (static_cast<int>(cert.branch.size()) != vf ||
        static_cast<int>(cert.paths.size()) != af) {
        violations.push_back({kRuleMalformed, "certificate shape does not match the pattern"});
        return violations;
    }

    // rule 1: branch vertices valid and pairwise distinct
    for (int fv = 0; fv < vf; ++fv)
        if (cert.branch[fv] < 0 || cert.branch[fv] >= d.n())
            violations.push_back({kRuleMalformed,
                                  "branch vertex of pattern vertex " + std::to_string(fv) +
                                      " out of range"});
    for (int a = 0; a < vf; ++a)
        for (int b = a + 1; b < vf; ++b)
            if (cert.branch[a] == cert.branch[b])
                violations.push_back({kRuleBranchDistinct,
                                      "pattern vertices " + std::to_string(a) + " and " +
                                          std::to_string(b) + " share branch vertex " +
                                          std::to_string(cert.branch[a])});

    for (int e = 0; e < af; ++e) {
        auto [u, v] = arcs[e];
        const Path &p = cert.paths[e];
        std::string arc_name = "(" + std::to_string(u) + "," + std::to_string(v) + ")";
        if (p.empty()) {
            violations.push_back({kRuleMalformed, "empty path for arc " + arc_name});
            continue;
        }
        bool ids_ok = true;
        for (int w : p)
            if (w < 0 || w >= d.n()) {
                violations.push_back({kRuleMalformed,
                                      "path vertex out of range on arc " + arc_name});
                ids_ok = false;
                break;
            }
        if (!ids_ok)
            continue;

        // rule 2: endpoints are the designated branch vertices
        if (u < vf && p.front() != cert.branch[u])
            violations.push_back({kRuleEndpoints, "path for arc " + arc_name +
                                                      " does not start at its branch vertex"});
        if (v < vf && p.back() != cert.branch[v])
            violations.push_back({kRuleEndpoints, "path for arc " + arc_name +
                                                      " does not end at its branch vertex"});

        // rule 3: consecutive pairs are arcs of D, in the right direction
        for (std::size_t i = 0; i + 1 < p.size(); ++i)
            if (!d.has_arc(p[i], p[i + 1]))
                violations.push_back({kRuleArcExistence,
                                      "missing arc (" + std::to_string(p[i]) + "," +
                                          std::to_string(p[i + 1]) + ") on path for arc " +
                                          arc_name});
        std::vector<int> sorted = p;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            violations.push_back({kRuleMalformed,
                                  "repeated vertex inside the path for arc " + arc_name});

        // rule 4: positive length and the congruence
        long long len = static_cast<long long>(p.size()) - 1;
        if (len < 1)
            violations.push_back({kRuleLengthCongruence,
                                  "path for arc " + arc_name + " has length 0"});
        else if (len % c.per_arc[e].q != c.per_arc[e].r)
            violations.push_back({kRuleLengthCongruence,
                                  "path for arc " + arc_name + " has length " +
                                      std::to_string(len) + ", expected " +
                                      std::to_string(c.per_arc[e].r) + " mod " +
                                      std::to_string(c.per_arc[e].q)});
    }

    // rule 5: internal disjointness, including against branch vertices
    std::map<int, std::vector<std::string>> internal_users;
    for (int e = 0; e < af; ++e) {
        const Path &p = cert.paths[e];
        auto [u, v] = arcs[e];
        std::string arc_name = "(" + std::to_string(u) + "," + std::to_string(v) + ")";
        for (std::size_t i = 1; i + 1 < p.size(); ++i)
            internal_users[p[i]].push_back(arc_name);
    }
    std::vector<int> branch_sorted = cert.branch;
    std::sort(branch_sorted.begin(), branch_sorted.end());
    for (const auto &[vertex, users] : internal_users) {
        if (users.size() > 1)
            violations.push_back({kRuleInternalDisjoint,
                                  "vertex " + std::to_string(vertex) +
                                      " is internal to paths for arcs " + users[0] + " and " +
                                      users[1]});
        if (std::binary_search(branch_sorted.begin(), branch_sorted.end(), vertex))
            violations.push_back({kRuleInternalDisjoint,
                                  "branch vertex " + std::to_string(vertex) +
                                      " is internal to the path for arc " + users[0]});
    }
    return violations;
}

std::string encode_cert(const SubdivisionCert &cert, const PatternDigraph &f) {
    std::ostringstream out;
    auto arcs = f.arcs();
    out << "s subdivision " << f.F.n() << " " << arcs.size() << "\n";
    for (int fv = 0; fv < f.F.n(); ++fv)
        out << "b " << fv << " " << cert.branch[fv] << "\n";
    for (std::size_t e = 0; e < arcs.size(); ++e)
        out << "p " << arcs[e].first << " " << arcs[e].second << " : "
            << vertex_list(cert.paths[e]) << "\n";
    return out.str();
}

SubdivisionCert decode_cert(const std::string &text, const PatternDigraph &f, const Digraph &d) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    auto next_line = [&](std::string &out) {
        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty() || line[0] == '#')
                continue;
            out = line;
            return true;
        }
        return false;
    };

    if (!next_line(line))
        throw ParseError(line_no, "missing header");
    {
        std::istringstream head(line);
        std::string s, kind;
        long long vf, af;
        if (!(head >> s >> kind >> vf >> af) || s != "s" || kind != "subdivision")
            throw ParseError(line_no, "expected `s subdivision <vF> <aF>`");
        if (vf != f.F.n() || af != f.F.arc_count())
            throw ParseError(line_no, "header does not match the pattern");
    }

    SubdivisionCert cert;
    cert.branch.assign(f.F.n(), -1);
    cert.paths.assign(f.F.arc_count(), {});
    std::vector<char> branch_seen(f.F.n(), 0), path_seen(f.F.arc_count(), 0);

    while (next_line(line)) {
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "b") {
            long long fv, dv;
            std::string trailing;
            if (!(ls >> fv >> dv) || (ls >> trailing))
                throw ParseError(line_no, "expected `b <f-vertex> <d-vertex>`");
            if (fv < 0 || fv >= f.F.n())
                throw ParseError(line_no, "pattern vertex out of range");
            if (dv < 0 || dv >= d.n())
                throw ParseError(line_no, "host vertex out of range");
            if (branch_seen[fv])
                throw ParseError(line_no, "duplicate branch line");
            branch_seen[fv] = 1;
            cert.branch[fv] = static_cast<int>(dv);
        } else if (tag == "p") {
            long long u, v;
            std::string colon;
            if (!(ls >> u >> v >> colon) || colon != ":")
                throw ParseError(line_no, "expected `p <u> <v> : <v0> ...`");
            int idx = f.arc_index(static_cast<int>(u), static_cast<int>(v));
            if (idx < 0)
                throw ParseError(line_no, "path for an arc not in the pattern");
            if (path_seen[idx])
                throw ParseError(line_no, "duplicate path line");
            path_seen[idx] = 1;
            Path p;
            long long w;
            while (ls >> w) {
                if (w < 0 || w >= d.n())
                    throw ParseError(line_no, "path vertex out of range");
                p.push_back(static_cast<int>(w));
            }
            if (p.empty())
                throw ParseError(line_no, "empty path line");
            cert.paths[idx] = std::move(p);
        } else {
            throw ParseError(line_no, "unknown line tag `" + tag + "`");
        }
    }
    for (int fv = 0; fv < f.F.n(); ++fv)
        if (!branch_seen[fv])
            throw ParseError(line_no, "missing branch line for pattern vertex " +
                                          std::to_string(fv));
    for (int e = 0; e < f.F.arc_count(); ++e)
        if (!path_seen[e])
            throw ParseError(line_no, "missing path line for pattern arc " + std::to_string(e));
    return cert;
}

std::string encode_chi_certificate(const ChiCertificate &cert) {
    std::ostringstream out;
    switch (cert.kind) {
    case ChiCertificate::Kind::Upper:
        for (std::size_t v = 0; v < cert.coloring.assignment.size(); ++v)
            out << "v " << v << " " << cert.coloring.assignment[v] << "\n";
        break;
    case ChiCertificate::Kind::LowerClique:
        out << "clique " << vertex_list(cert.clique) << "\n";
        break;
    case ChiCertificate::Kind::ExactRefutation:
        out << "exact >= " << cert.bound << "\n";
        break;
    case ChiCertificate::Kind::Trivial:
        out << "trivial >= " << cert.bound << "\n";
        break;
    }
    return out.str();
}

} // namespace disub
