#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "sgt/signed_graph.hpp"

using namespace sgt;
using testutil::cycle_graph;
using testutil::make;
using testutil::path_graph;
using testutil::random_graph;
using testutil::random_subset;

TEST_CASE("construction normalizes, sorts and validates edges") {
    SignedGraph g = make(4, {{1, 0, -1}, {2, 3, +1}, {0, 2, +1}});
    CHECK(g.order() == 4);
    CHECK(g.size() == 3);
    CHECK(g.edges()[0] == SignedEdge{0, 1, -1});
    CHECK(g.edges()[1] == SignedEdge{0, 2, +1});
    CHECK(g.edges()[2] == SignedEdge{2, 3, +1});
    CHECK(g.sign(0, 1) == -1);
    CHECK(g.sign(1, 0) == -1);
    CHECK(g.sign(0, 3) == 0);
    CHECK(g.adjacent(2, 3));
    CHECK_FALSE(g.adjacent(1, 3));
    CHECK(g.degrees() == std::vector<int>{2, 1, 2, 1});
    CHECK(g.negative_edge_count() == 1);

    CHECK_THROWS_AS(make(3, {{0, 1, +1}, {1, 0, -1}}), std::invalid_argument);
    CHECK_THROWS_AS(make(3, {{1, 1, +1}}), std::invalid_argument);
    CHECK_THROWS_AS(make(3, {{0, 3, +1}}), std::invalid_argument);
    CHECK_THROWS_AS(make(3, {{0, 1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(SignedGraph(-1), std::invalid_argument);
    CHECK(SignedGraph(0).order() == 0);
    CHECK_THROWS_AS(g.sign(0, 4), std::out_of_range);
}

TEST_CASE("switching flips exactly the cut edges and is an involution") {
    SignedGraph g = make(3, {{0, 1, +1}, {0, 2, +1}, {1, 2, -1}});
    SignedGraph s = switched(g, {0});
    CHECK(s.sign(0, 1) == -1);
    CHECK(s.sign(0, 2) == -1);
    CHECK(s.sign(1, 2) == -1);  // both endpoints outside the set: unchanged
    CHECK(switched(s, {0}) == g);
    CHECK(switched(g, {}) == g);
    CHECK(switched(g, {0, 1, 2}) == g);  // full set cuts nothing
    CHECK_THROWS_AS(switched(g, {3}), std::out_of_range);

    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 50; ++trial) {
        SignedGraph h = random_graph(rng, 7);
        std::vector<int> u = random_subset(rng, 7);
        CHECK(switched(switched(h, u), u) == h);
    }
}

TEST_CASE("negated and underlying") {
    SignedGraph g = make(4, {{0, 1, +1}, {1, 2, -1}, {2, 3, +1}});
    CHECK(negated(g).negative_edge_count() == 2);
    CHECK(negated(negated(g)) == g);
    SignedGraph u = underlying(g);
    CHECK(u.negative_edge_count() == 0);
    CHECK(u.size() == g.size());
    CHECK(u.sign(1, 2) == +1);
}

TEST_CASE("connectivity and component labels") {
    CHECK(is_connected(path_graph(5)));
    CHECK(component_count(path_graph(5)) == 1);
    CHECK(is_connected(SignedGraph(1)));

    SignedGraph two = make(6, {{0, 1, +1}, {0, 2, -1}, {1, 2, +1},
                               {3, 4, +1}, {3, 5, +1}, {4, 5, +1}});
    CHECK_FALSE(is_connected(two));
    CHECK(component_count(two) == 2);
    CHECK(component_labels(two) == std::vector<int>{0, 0, 0, 1, 1, 1});

    SignedGraph empty3(3);
    CHECK(component_count(empty3) == 3);
    CHECK(component_labels(empty3) == std::vector<int>{0, 1, 2});
}

TEST_CASE("balance matches the sign of every cycle") {
    CHECK(is_balanced(cycle_graph(3, +1)));
    CHECK_FALSE(is_balanced(make(3, {{0, 1, +1}, {0, 2, +1}, {1, 2, -1}})));
    CHECK(is_balanced(make(3, {{0, 1, -1}, {0, 2, -1}, {1, 2, +1}})));
    CHECK(is_balanced(cycle_graph(4, -1)));       // even all-negative cycle
    CHECK_FALSE(is_balanced(cycle_graph(5, -1)));  // odd all-negative cycle
    CHECK_FALSE(is_balanced(
        make(4, {{0, 1, +1}, {1, 2, +1}, {2, 3, +1}, {0, 3, -1}})));
    CHECK(is_balanced(path_graph(6, -1)));  // forests are always balanced

    // Disconnected graphs are balanced iff every component is.
    SignedGraph mixed = make(6, {{0, 1, +1}, {0, 2, +1}, {1, 2, -1},
                                 {3, 4, +1}, {3, 5, +1}, {4, 5, +1}});
    CHECK_FALSE(is_balanced(mixed));

    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 200; ++trial) {
        SignedGraph g = random_graph(rng, 7);
        CHECK(is_balanced(g) == (frustration_index(g) == 0));
    }
}

TEST_CASE("cycle sign signature: fixed forest, cotree cycle signs") {
    SignedGraph g = make(3, {{0, 1, +1}, {0, 2, +1}, {1, 2, -1}});
    CycleSignSignature sig = cycle_sign_signature(g);
    CHECK(sig.forest_edges ==
          std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
    CHECK(sig.cotree_edges == std::vector<std::pair<int, int>>{{1, 2}});
    CHECK(sig.signs == std::vector<int>{-1});

    // Switching never changes any cycle sign, hence never the signature.
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        SignedGraph h = random_graph(rng, 8);
        std::vector<int> u = random_subset(rng, 8);
        CHECK(cycle_sign_signature(h) == cycle_sign_signature(switched(h, u)));
    }
}

TEST_CASE("switching equivalence agrees with brute force over all order-4 "
          "signings") {
    // For every underlying graph on 4 vertices, canonicalize each signing by
    // minimizing its negative-edge bitmask over all 16 switch sets; two
    // signings are switching equivalent iff the minima coincide.
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) pairs.emplace_back(u, v);

    for (int mask = 0; mask < (1 << 6); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (int b = 0; b < 6; ++b)
            if (mask >> b & 1) edges.push_back(pairs[b]);
        const int m = static_cast<int>(edges.size());

        // flip[s] = which edge positions have exactly one endpoint in s.
        std::vector<unsigned> flip(16, 0);
        for (unsigned s = 0; s < 16; ++s)
            for (int i = 0; i < m; ++i)
                if (((s >> edges[i].first & 1) ^ (s >> edges[i].second & 1)))
                    flip[s] |= 1u << i;

        auto build = [&](unsigned negbits) {
            std::vector<SignedEdge> se;
            for (int i = 0; i < m; ++i)
                se.push_back({edges[i].first, edges[i].second,
                              (negbits >> i & 1) ? -1 : +1});
            return SignedGraph(4, std::move(se));
        };
        auto brute_canon = [&](unsigned negbits) {
            unsigned best = ~0u;
            for (unsigned s = 0; s < 16; ++s)
                best = std::min(best, negbits ^ flip[s]);
            return best;
        };

        std::vector<unsigned> canon(1u << m);
        std::vector<SignedGraph> graphs;
        for (unsigned sgn = 0; sgn < (1u << m); ++sgn) {
            canon[sgn] = brute_canon(sgn);
            graphs.push_back(build(sgn));
        }
        for (unsigned a = 0; a < (1u << m); ++a)
            for (unsigned b = a; b < (1u << m); ++b) {
                bool expect = canon[a] == canon[b];
                REQUIRE(switching_equivalent(graphs[a], graphs[b]) == expect);
            }
    }
}

TEST_CASE("switching equivalence requires a common underlying graph") {
    CHECK_THROWS_AS(switching_equivalent(path_graph(3), cycle_graph(3)),
                    UnderlyingMismatch);
    CHECK_THROWS_AS(switching_equivalent(path_graph(3), path_graph(4)),
                    UnderlyingMismatch);
}

TEST_CASE("frustration index on known graphs") {
    CHECK(frustration_index(cycle_graph(4, +1)) == 0);
    CHECK(frustration_index(make(3, {{0, 1, +1}, {0, 2, +1}, {1, 2, -1}})) ==
          1);
    CHECK(frustration_index(cycle_graph(5, -1)) == 1);

    // All-negative K4: the best bipartition of K4 cuts 4 of 6 edges.
    SignedGraph k4neg = testutil::complete_multipartite({1, 1, 1, 1}, -1);
    CHECK(frustration_index(k4neg) == 2);

    // All-negative K5: max cut of K5 is 6, leaving 4 frustrated edges.
    SignedGraph k5neg = testutil::complete_multipartite({1, 1, 1, 1, 1}, -1);
    CHECK(frustration_index(k5neg) == 4);

    // Additive over components.
    SignedGraph two = make(6, {{0, 1, -1}, {0, 2, +1}, {1, 2, +1},
                               {3, 4, -1}, {3, 5, +1}, {4, 5, +1}});
    CHECK(frustration_index(two) == 2);

    // Balanced graphs short-circuit at any order; the exact search and the
    // certificate are capped at order 30.
    CHECK(frustration_index(path_graph(31)) == 0);
    CHECK_THROWS_AS(frustration_index(cycle_graph(31, -1)), SizeLimit);
    CHECK_THROWS_AS(frustration_certificate(path_graph(31)), SizeLimit);
}

TEST_CASE("frustration index equals fewest edge deletions to reach balance") {
    std::mt19937_64 rng(4);
    int done = 0;
    while (done < 25) {
        SignedGraph g = random_graph(rng, 6, 0.55);
        const int m = g.size();
        if (m > 12) continue;
        ++done;
        int best = m;
        for (unsigned del = 0; del < (1u << m); ++del) {
            std::vector<SignedEdge> kept;
            for (int i = 0; i < m; ++i)
                if (!(del >> i & 1)) kept.push_back(g.edges()[i]);
            if (is_balanced(SignedGraph(6, std::move(kept))))
                best = std::min(best, __builtin_popcount(del));
        }
        CHECK(frustration_index(g) == best);
    }
}

TEST_CASE("frustration certificate is attained and consistent") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        SignedGraph g = random_graph(rng, 8);
        FrustrationCertificate cert = frustration_certificate(g);
        CHECK(cert.eps == frustration_index(g));
        CHECK(switched(g, cert.switch_set) == cert.minimized);
        CHECK(cert.minimized.negative_edge_count() == cert.eps);
        CHECK(underlying(cert.minimized) == underlying(g));
        CHECK(is_balanced(g) == (cert.eps == 0));
    }
}

TEST_CASE("induced subgraphs relabel in ascending order") {
    SignedGraph g = make(5, {{0, 1, -1}, {0, 3, +1}, {1, 3, +1},
                             {2, 4, +1}, {3, 4, -1}});
    SignedGraph h = induced(g, {0, 1, 3});
    CHECK(h.order() == 3);
    CHECK(h.sign(0, 1) == -1);  // old (0,1)
    CHECK(h.sign(0, 2) == +1);  // old (0,3)
    CHECK(h.sign(1, 2) == +1);  // old (1,3)

    CHECK(induced(g, {2}).order() == 1);
    CHECK(induced(g, {2}).size() == 0);
    CHECK_THROWS_AS(induced(g, {0, 5}), std::out_of_range);
    CHECK(induced(g, {1, 1}).order() == 1);  // duplicates collapse
}
