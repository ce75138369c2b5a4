#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "disub/certificate.hpp"
#include "disub/chi.hpp"
#include "disub/errors.hpp"
#include "disub/finder.hpp"
#include "disub/generators.hpp"
#include "disub/io.hpp"
#include "disub/lemmas.hpp"
#include "disub/pattern.hpp"

using namespace disub;

namespace {

constexpr int kExitVerifierReject = 1;
constexpr int kExitCertFailure = 2;
constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;

Engine parse_engine(const std::string &name) {
    if (name == "exact")
        return Engine::Exact;
    if (name == "clique")
        return Engine::Clique;
    return Engine::Auto;
}

ChiOracleConfig make_config(const std::string &engine, int limit) {
    ChiOracleConfig cfg;
    cfg.engine = parse_engine(engine);
    if (limit > 0) {
        cfg.exact_vertex_limit = limit;
    } else if (const char *env = std::getenv("DISUB_EXACT_LIMIT")) {
        int v = std::atoi(env);
        if (v > 0)
            cfg.exact_vertex_limit = v;
    }
    return cfg;
}

int run_chi(const std::string &file, const ChiOracleConfig &cfg) {
    Digraph d = parse_digraph(read_file(file));
    Engine engine = cfg.engine;
    if (engine == Engine::Auto)
        engine = d.n() <= cfg.exact_vertex_limit ? Engine::Exact : Engine::Clique;
    if (engine == Engine::Exact) {
        auto [k, coloring] = dichromatic_number(d, cfg);
        std::cout << "chi = " << k << "\n";
        std::cout << encode_chi_certificate(
            ChiCertificate{ChiCertificate::Kind::Upper, k, coloring, {}});
    } else {
        std::vector<int> clique = greedy_digon_clique(d);
        int k = std::max<int>(1, static_cast<int>(clique.size()));
        std::cout << "chi >= " << k << "\n";
        if (!clique.empty())
            std::cout << encode_chi_certificate(
                ChiCertificate{ChiCertificate::Kind::LowerClique, k, {}, clique});
    }
    return 0;
}

int run_find(const std::string &host_file, const std::string &pattern_file,
             const std::string &constraint_file, const std::string &mode,
             const ChiOracleConfig &cfg) {
    Digraph d = parse_digraph(read_file(host_file));
    PatternDigraph f{parse_digraph(read_file(pattern_file))};
    ConstraintMap c = parse_constraints(read_file(constraint_file), f);
    FinderMode fm = mode == "strict" ? FinderMode::Strict : FinderMode::BestEffort;
    SubdivisionCert cert = find_subdivision(d, f, c, fm, cfg);
    std::cout << encode_cert(cert, f);
    return 0;
}

int run_verify(const std::string &host_file, const std::string &pattern_file,
               const std::string &constraint_file, const std::string &cert_file) {
    Digraph d = parse_digraph(read_file(host_file));
    PatternDigraph f{parse_digraph(read_file(pattern_file))};
    ConstraintMap c = parse_constraints(read_file(constraint_file), f);
    SubdivisionCert cert = decode_cert(read_file(cert_file), f, d);
    auto violations = verify_subdivision(d, f, c, cert);
    if (violations.empty()) {
        std::cout << "accepted\n";
        return 0;
    }
    for (const auto &v : violations)
        std::cout << "violation " << v.rule << " : " << v.detail << "\n";
    return kExitVerifierReject;
}

int run_bound(const std::string &pattern_file, const std::string &constraint_file) {
    PatternDigraph f{parse_digraph(read_file(pattern_file))};
    ConstraintMap c = parse_constraints(read_file(constraint_file), f);
    auto order = arc_elimination_order(f, c);
    std::cout << "N = " << required_chi_bound(f, c, order) << "\n";
    std::cout << "order:";
    auto arcs = f.arcs();
    for (int e : order)
        std::cout << " " << arcs[e].first << "->" << arcs[e].second;
    std::cout << "\n";
    return 0;
}

int run_lemma_connect(const std::string &host_file, int t, const ChiOracleConfig &cfg) {
    Digraph d = parse_digraph(read_file(host_file));
    ConnectWitness w = connect_core(d, t, cfg);
    std::cout << "x0 " << w.x0 << "\n";
    std::cout << "X";
    for (int v : w.X)
        std::cout << " " << v;
    std::cout << "\n";
    for (const auto &[x, path] : w.connectors) {
        std::cout << "connector " << x << " :";
        for (int v : path)
            std::cout << " " << v;
        std::cout << "\n";
    }
    std::cout << encode_chi_certificate(w.cert);
    return 0;
}

int run_lemma_outparity(const std::string &host_file, int x0, int q, int t,
                        const ChiOracleConfig &cfg) {
    Digraph d = parse_digraph(read_file(host_file));
    OutparityWitness w = outparity_witness(d, x0, q, t, cfg);
    auto print_set = [](const char *name, const std::vector<int> &set) {
        std::cout << name;
        for (int v : set)
            std::cout << " " << v;
        std::cout << "\n";
    };
    std::cout << "x0 " << w.x0 << "\n";
    std::cout << "i " << w.i << "\n";
    std::cout << "j " << w.j << "\n";
    print_set("S", w.S);
    print_set("Z", w.Z);
    std::cout << "r2 " << w.r2 << "\n";
    print_set("P :", w.P);
    print_set("Y", w.Y);
    std::cout << "I " << w.I_start << " " << (w.I_start + w.q - 1) << "\n";
    std::cout << encode_chi_certificate(w.cert);
    return 0;
}

int run_experiment(const std::string &pattern_file, const std::string &constraint_file, int nmin,
                   int nmax, const ChiOracleConfig &cfg) {
    PatternDigraph f{parse_digraph(read_file(pattern_file))};
    ConstraintMap c = parse_constraints(read_file(constraint_file), f);
    auto order = arc_elimination_order(f, c);
    long long bound = required_chi_bound(f, c, order);
    std::cout << "# strict bound N = " << bound << "\n";
    int smallest = -1;
    for (int n = std::max(nmin, 1); n <= nmax; ++n) {
        Digraph d = complete_bidirected(n);
        std::cout << "n=" << n << " ";
        try {
            SubdivisionCert cert = find_subdivision(d, f, c, FinderMode::BestEffort, cfg);
            bool ok = verify_subdivision(d, f, c, cert).empty();
            std::cout << (ok ? "success" : "fail:verifier") << "\n";
            if (ok && smallest < 0)
                smallest = n;
        } catch (const CertificationFailure &e) {
            std::cout << "fail:" << e.step << "\n";
        }
    }
    if (smallest >= 0)
        std::cout << "smallest_success = " << smallest << "\n";
    else
        std::cout << "smallest_success = none\n";
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"congruence-constrained digraph subdivisions"};
    app.require_subcommand(1);

    std::string engine = "auto";
    int limit = 0;

    // chi
    auto *chi = app.add_subcommand("chi", "dichromatic number of a digraph");
    std::string chi_file;
    chi->add_option("digraph", chi_file, "digraph file")->required();
    chi->add_option("--engine", engine, "exact|clique|auto");
    chi->add_option("--limit", limit, "exact engine vertex limit");

    // find
    auto *find = app.add_subcommand("find", "find a constrained subdivision");
    std::string find_d, find_f, find_c, mode = "best-effort";
    find->add_option("-D", find_d, "host digraph file")->required();
    find->add_option("-F", find_f, "pattern digraph file")->required();
    find->add_option("-C", find_c, "constraint file")->required();
    find->add_option("--mode", mode, "strict|best-effort");
    find->add_option("--engine", engine, "exact|clique|auto");
    find->add_option("--limit", limit, "exact engine vertex limit");

    // verify
    auto *verify = app.add_subcommand("verify", "verify a subdivision certificate");
    std::string ver_d, ver_f, ver_c, ver_cert;
    verify->add_option("-D", ver_d, "host digraph file")->required();
    verify->add_option("-F", ver_f, "pattern digraph file")->required();
    verify->add_option("-C", ver_c, "constraint file")->required();
    verify->add_option("certificate", ver_cert, "certificate file")->required();

    // gen
    auto *gen = app.add_subcommand("gen", "instance generators");
    gen->require_subcommand(1);
    auto *gen_kbi = gen->add_subcommand("kbi", "complete bidirected digraph");
    int gen_n = 0;
    gen_kbi->add_option("n", gen_n, "vertex count")->required();
    auto *gen_tour = gen->add_subcommand("tournament", "random tournament");
    int tour_n = 0;
    std::uint64_t seed = 0;
    gen_tour->add_option("n", tour_n, "vertex count")->required();
    gen_tour->add_option("--seed", seed, "64-bit seed");
    auto *gen_rand = gen->add_subcommand("random", "random digraph");
    int rand_n = 0;
    double rand_p = 0.5;
    gen_rand->add_option("n", rand_n, "vertex count")->required();
    gen_rand->add_option("p", rand_p, "arc probability")->required();
    gen_rand->add_option("--seed", seed, "64-bit seed");
    auto *gen_bi = gen->add_subcommand("bidirect", "bidirection of an undirected graph");
    std::string gen_graph;
    gen_bi->add_option("graph", gen_graph, "undirected graph file")->required();

    // bound
    auto *bound = app.add_subcommand("bound", "required dichromatic bound N");
    std::string bound_f, bound_c;
    bound->add_option("-F", bound_f, "pattern digraph file")->required();
    bound->add_option("-C", bound_c, "constraint file")->required();

    // lemma
    auto *lemma = app.add_subcommand("lemma", "lemma debug witnesses");
    lemma->require_subcommand(1);
    auto *lem_connect = lemma->add_subcommand("connect", "connect-core witness");
    std::string lem_d;
    int lem_t = 1, lem_q = 2, lem_x0 = 0;
    lem_connect->add_option("-D", lem_d, "digraph file")->required();
    lem_connect->add_option("-t", lem_t, "certified threshold");
    lem_connect->add_option("--engine", engine, "exact|clique|auto");
    lem_connect->add_option("--limit", limit, "exact engine vertex limit");
    auto *lem_out = lemma->add_subcommand("outparity", "outparity witness");
    lem_out->add_option("-D", lem_d, "digraph file")->required();
    lem_out->add_option("--x0", lem_x0, "root vertex");
    lem_out->add_option("-q", lem_q, "modulus");
    lem_out->add_option("-t", lem_t, "certified threshold");
    lem_out->add_option("--engine", engine, "exact|clique|auto");
    lem_out->add_option("--limit", limit, "exact engine vertex limit");

    // experiment
    auto *exp = app.add_subcommand("experiment", "best-effort sweep on complete bidirected hosts");
    std::string exp_f, exp_c;
    int nmin = 1, nmax = 10;
    exp->add_option("-F", exp_f, "pattern digraph file")->required();
    exp->add_option("-C", exp_c, "constraint file")->required();
    exp->add_option("--nmin", nmin, "smallest host size");
    exp->add_option("--nmax", nmax, "largest host size")->required();
    exp->add_option("--engine", engine, "exact|clique|auto");
    exp->add_option("--limit", limit, "exact engine vertex limit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        ChiOracleConfig cfg = make_config(engine, limit);
        if (chi->parsed())
            return run_chi(chi_file, cfg);
        if (find->parsed())
            return run_find(find_d, find_f, find_c, mode, cfg);
        if (verify->parsed())
            return run_verify(ver_d, ver_f, ver_c, ver_cert);
        if (bound->parsed())
            return run_bound(bound_f, bound_c);
        if (gen->parsed()) {
            if (gen_kbi->parsed())
                std::cout << format_digraph(complete_bidirected(gen_n));
            else if (gen_tour->parsed())
                std::cout << format_digraph(random_tournament(tour_n, seed));
            else if (gen_rand->parsed())
                std::cout << format_digraph(random_digraph(rand_n, rand_p, seed));
            else if (gen_bi->parsed())
                std::cout << format_digraph(bidirect(parse_undirected(read_file(gen_graph))));
            return 0;
        }
        if (lemma->parsed()) {
            if (lem_connect->parsed())
                return run_lemma_connect(lem_d, lem_t, cfg);
            return run_lemma_outparity(lem_d, lem_x0, lem_q, lem_t, cfg);
        }
        if (exp->parsed())
            return run_experiment(exp_f, exp_c, nmin, nmax, cfg);
    } catch (const ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const CertificationFailure &e) {
        std::cerr << "certification failure: " << e.what() << "\n";
        return kExitCertFailure;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
