#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "sgt/constructions.hpp"
#include "sgt/enumerate.hpp"
#include "sgt/exact.hpp"
#include "sgt/spectral.hpp"
#include "sgt/subgraphs.hpp"
#include "sgt/verify.hpp"

using namespace sgt;
using testutil::complete_multipartite;
using testutil::make;
using testutil::near;

namespace {

bool some_maximizer_matches(const std::vector<WitnessRecord>& ws,
                            const SignedGraph& target) {
    return std::any_of(ws.begin(), ws.end(), [&](const WitnessRecord& w) {
        return same_class_up_to_relabeling(w.graph, target);
    });
}

}  // namespace

TEST_CASE("closed-form polynomials match the quotient characteristic "
          "polynomials") {
    for (int n : {7, 9, 15, 30}) {
        QuotientMatrix q1 = equitable_quotient(gamma1(n), gamma1_partition(n));
        QuotientMatrix q2 = equitable_quotient(gamma2(n), gamma2_partition(n));
        QuotientMatrix q3 = equitable_quotient(gamma3(n), gamma3_partition(n));
        CHECK(char_poly(q1.b) == poly_g(n));
        CHECK(char_poly(q2.b) == poly_h(n));
        CHECK(char_poly(q3.b) == poly_f(n));
    }
    // f is the advertised product (x+1) * cubic.
    for (int n : {7, 12}) {
        IntPolynomial cubic =
            make_poly({3 * n - 7, -(n + 1), 3 - n, 1});
        CHECK(poly_f(n) == poly_mul(make_poly({1, 1}), cubic));
        CHECK(evaluate_int(poly_f(n), BigInt(n - 2)) == BigInt(1 - n));
    }
}

TEST_CASE("quotient polynomial range check") {
    Lemma22Report rep = verify_lemma22(7, 12);
    CHECK(rep.n_min == 7);
    CHECK(rep.n_max == 12);
    CHECK(rep.all_pass);
    REQUIRE(rep.rows.size() == 6);
    for (size_t i = 0; i < rep.rows.size(); ++i) {
        const QuotientPolyCheck& row = rep.rows[i];
        CHECK(row.n == 7 + int(i));
        CHECK(row.q1_matches_g);
        CHECK(row.q2_matches_h);
        CHECK(row.q3_matches_f);
        CHECK(row.f_shift_identity);
        CHECK(row.all_pass);
        CHECK(row.margin_gamma1 > 1e-6);
        CHECK(row.margin_gamma2 > 1e-6);
        CHECK(row.margin_gamma3 > 1e-6);
        CHECK(row.gamma1_below);
        CHECK(row.gamma2_below);
        CHECK(row.gamma3_above);
        CHECK(near(row.margin_gamma1, (row.n - 2) - row.lambda1_gamma1));
        CHECK(near(row.margin_gamma3, row.lambda1_gamma3 - (row.n - 2)));
        CHECK(near(row.lambda1_gamma1, lambda1(gamma1(row.n))));
        CHECK(near(row.lambda1_gamma3, lambda1(gamma3(row.n))));
        CHECK(!row.probes.empty());
        for (const ProbeCheck& p : row.probes) {
            CHECK(p.pass);
            CHECK(p.expected_sign == p.actual_sign);
        }
    }
    CHECK(render_text(rep).find("overall: OK") != std::string::npos);

    CHECK_THROWS_AS(verify_lemma22(6, 8), std::invalid_argument);
    CHECK_THROWS_AS(verify_lemma22(9, 7), std::invalid_argument);
    CHECK_THROWS_AS(verify_lemma22(7, 61), std::invalid_argument);
}

TEST_CASE("naive full scan at orders three and four") {
    NaiveScanResult r3 = naive_max_rho(3);
    CHECK(r3.n == 3);
    CHECK(r3.labeled_graphs == 27);  // 3^3
    CHECK(r3.unbalanced_five_clique_free == 4);
    CHECK(near(r3.max_rho, 2.0));
    CHECK(near(r3.max_lambda1, 1.0));
    CHECK_FALSE(is_balanced(r3.rho_argmax));
    CHECK(near(spectral_radius(r3.rho_argmax), 2.0));
    CHECK(near(lambda1(r3.lambda1_argmax), 1.0));

    NaiveScanResult r4 = naive_max_rho(4);
    CHECK(r4.labeled_graphs == 729);  // 3^6
    CHECK(near(r4.max_rho, 3.0));  // fully negative complete graph
    CHECK(same_class_up_to_relabeling(
        r4.rho_argmax, complete_multipartite({1, 1, 1, 1}, -1)));

    CHECK_THROWS_AS(naive_max_rho(2), SizeLimit);
    CHECK_THROWS_AS(naive_max_rho(7), SizeLimit);
}

TEST_CASE("order-five sweep agrees with the naive oracle and finds the "
          "known maximizer") {
    TheoremReport r = verify_theorem(5, EnumerationMode::Exhaustive);
    NaiveScanResult naive = naive_max_rho(5);

    CHECK(r.n == 5);
    CHECK(r.mode == EnumerationMode::Exhaustive);
    CHECK(near(r.max_rho, naive.max_rho));
    CHECK(near(r.max_lambda1, naive.max_lambda1));

    // The maximizer is the fully negative near-complete graph: one edge
    // short of complete, every edge negative. Its radius is the index of
    // the underlying graph, 1 + sqrt(7) (from the equitable quotient
    // [[2, 2], [3, 0]] of the clique/non-edge partition).
    SignedGraph k5_minus_e = make(5, {{0, 1, -1},
                                      {0, 2, -1},
                                      {0, 3, -1},
                                      {0, 4, -1},
                                      {1, 2, -1},
                                      {1, 3, -1},
                                      {1, 4, -1},
                                      {2, 3, -1},
                                      {2, 4, -1}});
    CHECK(near(r.max_rho, 1.0 + std::sqrt(7.0)));
    CHECK(near(r.max_rho,
               largest_real_root(char_poly(underlying(k5_minus_e))).value));
    CHECK(r.rho_maximizer_distinct == 1);
    REQUIRE(!r.rho_maximizers.empty());
    CHECK(some_maximizer_matches(r.rho_maximizers, k5_minus_e));
    CHECK_FALSE(r.rho_maximizers.front().matches_reference);

    // Reference data describes gamma3(5).
    CHECK(near(r.rho_reference, spectral_radius(gamma3(5))));
    CHECK(near(r.lambda1_reference, lambda1(gamma3(5))));
    CHECK(r.reference_canonical == to_string(canonical_form(gamma3(5))));
    CHECK(r.reference_exact_gap <= 1e-9);
    CHECK(r.keep_threshold <=
          std::min(r.rho_reference, r.lambda1_reference));

    // The radius reading is falsified at this order, honestly.
    CHECK_FALSE(r.radius_reading_verified);
    CHECK(r.counterexample_distinct >= 1);
    CHECK(r.counterexample_classes >= r.counterexample_distinct);
    REQUIRE(!r.counterexamples.empty());
    for (const WitnessRecord& w : r.counterexamples) {
        CHECK_FALSE(w.matches_reference);
        CHECK(w.rho >= r.rho_reference - 1e-9);
        CHECK_FALSE(is_balanced(w.graph));
        CHECK_FALSE(contains_unbalanced_clique(w.graph, 5).has_value());
        CHECK(to_string(w.canon) != r.reference_canonical);
        CHECK(near(w.rho, spectral_radius(w.graph)));
        CHECK(near(w.lambda1, lambda1(w.graph)));
    }
    CHECK_THROWS_AS(require_verified(r), CounterexampleFound);
    try {
        require_verified(r);
    } catch (const CounterexampleFound& e) {
        CHECK(e.graph.order() == 5);
        CHECK_FALSE(is_balanced(e.graph));
    }

    // Exhaustive accounting: every labeled signed graph on five vertices.
    CHECK(r.stats.labeled_signed_graphs_covered == 59049);  // 3^10
    CHECK(r.stats.underlying_graphs == 1024);               // 2^10
    CHECK(r.stats.underlying_labeled == r.stats.underlying_graphs);
    CHECK(r.stats.classes_total == r.stats.classes_labeled);
    CHECK(r.stats.eigensolves > 0);
    CHECK(render_text(r).find("FALSIFIED") != std::string::npos);

    // Consistency of the index-reading bookkeeping.
    CHECK(r.index_reading_verified ==
          (r.lambda1_counterexample_classes == 0));
    CHECK(r.max_lambda1 >= r.lambda1_reference - 1e-9);

    CHECK_THROWS_AS(verify_theorem(4, EnumerationMode::Exhaustive),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_theorem(7, EnumerationMode::Exhaustive),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_theorem(9, EnumerationMode::Pruned),
                    std::invalid_argument);
}

TEST_CASE("order-six sweeps: naive oracle, and pruned equals exhaustive") {
    TheoremReport ex = verify_theorem(6, EnumerationMode::Exhaustive);
    NaiveScanResult naive = naive_max_rho(6);
    CHECK(near(ex.max_rho, naive.max_rho));
    CHECK(near(ex.max_lambda1, naive.max_lambda1));
    CHECK(ex.stats.labeled_signed_graphs_covered == 14348907);  // 3^15

    TheoremReport pr = verify_theorem(6, EnumerationMode::Pruned);
    CHECK(pr.pruned_max_missing == 4);  // n - 2
    CHECK(near(pr.max_rho, ex.max_rho));
    CHECK(near(pr.max_lambda1, ex.max_lambda1));
    CHECK(pr.radius_reading_verified == ex.radius_reading_verified);
    CHECK(pr.index_reading_verified == ex.index_reading_verified);
    CHECK(pr.counterexample_distinct == ex.counterexample_distinct);
    CHECK(pr.rho_maximizer_distinct == ex.rho_maximizer_distinct);

    auto canon_set = [](const std::vector<WitnessRecord>& ws) {
        std::set<std::string> s;
        for (const auto& w : ws) s.insert(to_string(w.canon));
        return s;
    };
    CHECK(canon_set(pr.rho_maximizers) == canon_set(ex.rho_maximizers));
    CHECK(canon_set(pr.counterexamples) == canon_set(ex.counterexamples));

    // Pruned mode deduplicates by isomorphism class; the labeled totals
    // still count the whole near-complete region.
    CHECK(pr.stats.underlying_graphs < ex.stats.underlying_graphs);
    CHECK(pr.stats.underlying_labeled > pr.stats.underlying_graphs);
}

TEST_CASE("order-seven pruned sweep finds the fully negative "
          "four-partite maximizer") {
    TheoremReport r = verify_theorem(7, EnumerationMode::Pruned);
    CHECK(r.n == 7);
    CHECK(r.pruned_max_missing == 5);

    SignedGraph turan7 = complete_multipartite({2, 2, 2, 1}, -1);
    CHECK_FALSE(is_balanced(turan7));
    CHECK_FALSE(contains_unbalanced_clique(turan7, 5).has_value());
    CHECK(near(r.max_rho, spectral_radius(turan7)));
    CHECK(near(r.max_rho,
               largest_real_root(char_poly(underlying(turan7))).value));
    CHECK(some_maximizer_matches(r.rho_maximizers, turan7));

    CHECK_FALSE(r.radius_reading_verified);
    CHECK(r.counterexample_distinct >= 1);
    CHECK(r.max_lambda1 >= r.lambda1_reference - 1e-9);

    // Dedup bookkeeping against the orbit table.
    auto orbits = complement_orbit_reps(7, 5);
    std::uint64_t labeled = 0;
    for (const auto& o : orbits) labeled += o.orbit_size;
    CHECK(r.stats.underlying_graphs == orbits.size());
    CHECK(r.stats.underlying_labeled == labeled);
}

TEST_CASE("sweep reports are deterministic across job counts and reruns") {
    TheoremReport a = verify_theorem(5, EnumerationMode::Exhaustive, 1);
    TheoremReport b = verify_theorem(5, EnumerationMode::Exhaustive, 3);
    TheoremReport c = verify_theorem(5, EnumerationMode::Exhaustive, 3);
    CHECK(a.jobs == 1);
    CHECK(b.jobs == 3);
    std::string pa = to_json(a).at("payload").dump();
    std::string pb = to_json(b).at("payload").dump();
    std::string pc = to_json(c).at("payload").dump();
    CHECK(pa == pb);
    CHECK(pb == pc);
}

TEST_CASE("structural checks on extremal witnesses") {
    for (int n : {5, 7, 12}) {
        ExtremalClaimsReport rep = verify_extremal_claims(gamma3(n));
        CHECK(rep.n == n);
        CHECK(rep.precondition_unbalanced);
        CHECK(rep.connected);
        CHECK(rep.frustration == 1);
        CHECK(rep.frustration_is_one);
        CHECK(rep.missing_edges == n - 4);
        CHECK(rep.missing_edges_within);
        CHECK(rep.negative_edge_on_negative_triangle);
        CHECK(rep.negative_edge.first >= 0);
        CHECK(rep.triangle_apex >= 0);
        CHECK(rep.all_pass);
    }

    ExtremalClaimsReport balanced = verify_extremal_claims(complete_balanced(7));
    CHECK_FALSE(balanced.precondition_unbalanced);
    CHECK_FALSE(balanced.all_pass);

    SignedGraph disconnected = make(5, {{0, 1, -1}, {0, 2, 1}, {1, 2, 1}});
    ExtremalClaimsReport dis = verify_extremal_claims(disconnected);
    CHECK(dis.precondition_unbalanced);
    CHECK_FALSE(dis.connected);
    CHECK_FALSE(dis.all_pass);

    SignedGraph k5me = complete_multipartite({2, 1, 1, 1}, -1);
    ExtremalClaimsReport far = verify_extremal_claims(k5me);
    CHECK(far.frustration == 3);
    CHECK_FALSE(far.frustration_is_one);
    CHECK_FALSE(far.all_pass);
}

TEST_CASE("stochastic search is seeded, feasible, and never below the "
          "warm start") {
    SearchReport r1 = extremal_search(9, 5, 600, 1);
    SearchReport r2 = extremal_search(9, 5, 600, 1);
    CHECK(r1.n == 9);
    CHECK(r1.k == 5);
    CHECK(r1.iterations == 600);
    CHECK(r1.seed == 1);
    CHECK(r1.best_rho == r2.best_rho);
    CHECK(r1.best.edges() == r2.best.edges());
    CHECK(r1.accepted == r2.accepted);
    CHECK(r1.repairs == r2.repairs);

    CHECK(r1.feasible);
    CHECK(r1.best_rho >= spectral_radius(gamma3(9)) - 1e-9);
    CHECK(near(r1.best_rho, spectral_radius(r1.best)));
    CHECK_FALSE(is_balanced(r1.best));
    CHECK_FALSE(contains_unbalanced_clique(r1.best, 5).has_value());

    SearchReport r6 = extremal_search(10, 6, 200, 42);
    CHECK(r6.feasible);
    CHECK_FALSE(contains_unbalanced_clique(r6.best, 6).has_value());

    CHECK_THROWS_AS(extremal_search(9, 4, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(extremal_search(4, 5, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(extremal_search(25, 5, 10, 1), SizeLimit);
}

TEST_CASE("report serialization layout") {
    Lemma22Report rep22 = verify_lemma22(7, 8);
    nlohmann::json j22 = to_json(rep22);
    CHECK(j22.at("schema_version") == 1);
    CHECK(j22.at("report_type") == "lemma22");
    CHECK(j22.at("payload").at("all_pass") == true);
    CHECK(j22.at("meta").contains("elapsed_seconds"));

    TheoremReport rth = verify_theorem(5, EnumerationMode::Exhaustive);
    nlohmann::json jth = to_json(rth);
    CHECK(jth.at("report_type") == "theorem");
    CHECK(jth.at("payload").at("n") == 5);
    CHECK(jth.at("payload").at("radius_reading").at("verified") == false);
    CHECK(!jth.at("payload").at("radius_reading").at("counterexamples").empty());

    ExtremalClaimsReport rec = verify_extremal_claims(gamma3(6));
    nlohmann::json jec = to_json(rec);
    CHECK(jec.at("report_type") == "extremal-claims");
    CHECK(jec.at("payload").at("all_pass") == true);

    SearchReport rs = extremal_search(9, 5, 50, 3);
    nlohmann::json js = to_json(rs);
    CHECK(js.at("report_type") == "search");
    CHECK(js.at("payload").at("best_rho").get<double>() > 0.0);

    nlohmann::json jg = graph_json(gamma5());
    CHECK(jg.at("n") == 4);
    CHECK(jg.at("edges").size() == 6);

    CHECK(render_text(rec).find("overall: OK") != std::string::npos);
    CHECK(render_text(rs).size() > 0);
}
