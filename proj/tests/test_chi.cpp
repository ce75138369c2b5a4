#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "disub/chi.hpp"
#include "disub/errors.hpp"
#include "disub/generators.hpp"
#include "oracles.hpp"

using namespace disub;

TEST_CASE("dichromatic decision on small cases") {
    Digraph c3(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(!dichromatic_decision(c3, 1));
    auto two = dichromatic_decision(c3, 2);
    REQUIRE(two);
    CHECK(is_valid_coloring(c3, *two));
    CHECK(!dichromatic_decision(complete_bidirected(4), 3));
    CHECK(dichromatic_decision(complete_bidirected(4), 4));
}

TEST_CASE("dichromatic number basics") {
    Digraph acyclic(4, {{0, 1}, {0, 2}, {1, 3}});
    CHECK(dichromatic_number(acyclic).first == 1);
    for (int n = 2; n <= 6; ++n)
        CHECK(dichromatic_number(complete_bidirected(n)).first == n);

    ChiOracleConfig tight;
    tight.exact_vertex_limit = 4;
    CHECK_THROWS_AS(dichromatic_number(complete_bidirected(6), tight), EngineLimitError);
}

TEST_CASE("dichromatic number equals partition enumeration on 200 random digraphs") {
    SplitMix64 rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng.next() % 6);
        Digraph d = random_digraph(n, 0.5, rng.next());
        auto [k, coloring] = dichromatic_number(d);
        CHECK(k == oracle::partition_chi(d));
        CHECK(is_valid_coloring(d, coloring));
    }
}

TEST_CASE("chi_via_scc examples and cross-check") {
    Digraph mix(7, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 6}});
    CHECK(chi_via_scc(mix) == 2);
    Digraph digons(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}});
    CHECK(chi_via_scc(digons) == 2);

    SplitMix64 rng(22);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + static_cast<int>(rng.next() % 8);
        Digraph d = random_digraph(n, 0.4, rng.next());
        CHECK(chi_via_scc(d) == dichromatic_number(d).first);
    }
}

TEST_CASE("digon clique lower bound") {
    auto full = digon_clique_lower_bound(complete_bidirected(8), 8);
    REQUIRE(full);
    CHECK(*full == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7});

    Digraph c3(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(!digon_clique_lower_bound(c3, 2));

    // digon graph of the bidirected C5 is C5 itself: clique number 2
    UndirectedGraph c5{5, {{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}}};
    Digraph bc5 = bidirect(c5);
    auto pair = digon_clique_lower_bound(bc5, 2);
    REQUIRE(pair);
    CHECK(bc5.has_digon((*pair)[0], (*pair)[1]));
    CHECK(!digon_clique_lower_bound(bc5, 3));
}

TEST_CASE("lower bound soundness on random digraphs") {
    SplitMix64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng.next() % 7);
        Digraph d = random_digraph(n, 0.5, rng.next());
        for (int t = 1; t <= n; ++t) {
            auto clique = digon_clique_lower_bound(d, t);
            if (!clique)
                continue;
            CHECK(static_cast<int>(clique->size()) == t);
            for (std::size_t a = 0; a < clique->size(); ++a)
                for (std::size_t b = a + 1; b < clique->size(); ++b)
                    CHECK(d.has_digon((*clique)[a], (*clique)[b]));
            CHECK(dichromatic_number(d).first >= t);
        }
    }
}

TEST_CASE("certify_at_least") {
    ChiOracleConfig exact;
    exact.engine = Engine::Exact;
    ChiOracleConfig clique;
    clique.engine = Engine::Clique;

    Digraph d = random_digraph(6, 0.5, 7);
    std::vector<int> all{0, 1, 2, 3, 4, 5};
    CHECK(certify_at_least(d, all, 1, exact).status == CertStatus::Certified);
    CHECK(certify_at_least(d, all, 0, exact).status == CertStatus::Certified);
    CHECK(certify_at_least(d, {}, 1, exact).status == CertStatus::Refuted);

    Digraph k20 = complete_bidirected(20);
    std::vector<int> v20(20);
    for (int i = 0; i < 20; ++i)
        v20[i] = i;
    auto res = certify_at_least(k20, v20, 20, clique);
    REQUIRE(res.status == CertStatus::Certified);
    REQUIRE(res.certificate);
    CHECK(res.certificate->kind == ChiCertificate::Kind::LowerClique);
    CHECK(res.certificate->clique.size() == 20);

    // exact verdicts match the brute-force oracle
    SplitMix64 rng(24);
    for (int trial = 0; trial < 40; ++trial) {
        Digraph r = random_digraph(6, 0.5, rng.next());
        int chi = oracle::partition_chi(r);
        for (int t = 1; t <= 6; ++t) {
            auto verdict = certify_at_least(r, {0, 1, 2, 3, 4, 5}, t, exact);
            CHECK(verdict.status ==
                  (chi >= t ? CertStatus::Certified : CertStatus::Refuted));
        }
    }
}

TEST_CASE("subadditivity over vertex bipartitions") {
    SplitMix64 rng(25);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng.next() % 7);
        Digraph d = random_digraph(n, 0.5, rng.next());
        std::vector<int> a, b;
        for (int v = 0; v < n; ++v)
            (rng.next() & 1 ? a : b).push_back(v);
        int chi_a = a.empty() ? 0 : dichromatic_number(induced_subdigraph(d, a).graph).first;
        int chi_b = b.empty() ? 0 : dichromatic_number(induced_subdigraph(d, b).graph).first;
        CHECK(dichromatic_number(d).first <= chi_a + chi_b);
    }
}

TEST_CASE("coloring classes are acyclic for every returned coloring") {
    SplitMix64 rng(26);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(rng.next() % 8);
        Digraph d = random_digraph(n, 0.45, rng.next());
        auto [k, coloring] = dichromatic_number(d);
        CHECK(coloring.k == k);
        CHECK(is_valid_coloring(d, coloring));
    }
}
