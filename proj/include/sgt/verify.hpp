#pragma once

// Verification engine: sweeps the space of unbalanced signed graphs with no
// unbalanced complete five-vertex subgraph at a fixed small order, tracks the
// spectral maxima, and compares the maximizers against the reference family
// gamma3. Also: quotient-polynomial identity checks across a range of orders,
// post-hoc structural checks on extremal witnesses, a naive full-scan oracle,
// and a seeded stochastic search for larger forbidden cliques.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "sgt/canonical.hpp"
#include "sgt/exact.hpp"
#include "sgt/signed_graph.hpp"

namespace sgt {

enum class EnumerationMode { Exhaustive, Pruned };

std::string to_string(EnumerationMode m);

// Thrown by require_verified when a sweep found a graph that beats the
// reference family without containing an unbalanced five-clique.
struct CounterexampleFound : std::runtime_error {
    CounterexampleFound(std::string msg, SignedGraph g);
    SignedGraph graph;
};

// One switching class worth reporting: its forest-positive representative,
// its spectral data, and whether it is the reference class up to relabeling
// and switching.
struct WitnessRecord {
    SignedGraph graph;
    double rho = 0.0;
    double lambda1 = 0.0;
    CanonicalForm canon;
    bool matches_reference = false;
};

// Aggregate counters for one sweep. "classes" are switching classes of
// underlying graphs actually visited; "labeled" totals weight each visited
// underlying graph by the size of its isomorphism class (deduplicated modes
// only; in exhaustive mode the two coincide).
struct SweepStats {
    std::uint64_t underlying_graphs = 0;
    std::uint64_t underlying_labeled = 0;
    std::uint64_t underlying_skipped_by_index_gate = 0;
    std::uint64_t classes_total = 0;
    std::uint64_t classes_labeled = 0;
    std::uint64_t labeled_signed_graphs_covered = 0;
    std::uint64_t unbalanced_classes_enumerated = 0;
    std::uint64_t five_clique_free_classes = 0;
    std::uint64_t eigensolves = 0;

    SweepStats& operator+=(const SweepStats& o);
};

// Result of verify_theorem: both readings of the extremal statement.
// The radius reading asks that no unbalanced five-clique-free graph has
// spectral radius at or above the reference value except the reference class;
// the index reading asks the same with lambda_1 in place of rho.
struct TheoremReport {
    int n = 0;
    EnumerationMode mode = EnumerationMode::Exhaustive;
    int jobs = 1;
    int pruned_max_missing = -1;  // complement-size cap, pruned mode only

    double rho_reference = 0.0;      // spectral radius of gamma3(n)
    double lambda1_reference = 0.0;  // index of gamma3(n)
    double reference_exact_gap = 0.0;  // |float index - exact root| of gamma3
    std::string reference_canonical;

    double max_rho = 0.0;
    std::vector<WitnessRecord> rho_maximizers;  // deduplicated, capped
    std::uint64_t rho_maximizer_classes = 0;    // before dedup/cap
    std::uint64_t rho_maximizer_distinct = 0;   // after dedup
    bool rho_maximizers_match_reference = false;

    std::vector<WitnessRecord> counterexamples;  // deduplicated, capped
    std::uint64_t counterexample_classes = 0;    // before dedup/cap
    std::uint64_t counterexample_distinct = 0;   // after dedup
    bool radius_reading_verified = false;        // no counterexamples

    double max_lambda1 = 0.0;
    std::vector<WitnessRecord> lambda1_maximizers;
    std::uint64_t lambda1_maximizer_classes = 0;
    std::uint64_t lambda1_maximizer_distinct = 0;
    std::uint64_t lambda1_counterexample_classes = 0;
    bool index_reading_verified = false;

    double tolerance = 1e-9;
    double keep_threshold = 0.0;  // candidates at or above this rho are kept
    int witness_cap = 0;

    SweepStats stats;
    double elapsed_seconds = 0.0;
};

// Sweeps order n. Exhaustive mode visits every underlying graph on n labeled
// vertices (n <= 6); pruned mode visits one representative per isomorphism
// class of near-complete underlying graphs (at most n-2 missing edges,
// 5 <= n <= 8), which is exhaustive for the region where maximizers and
// counterexamples can live: any rho above n-2 forces at least
// binomial(n,2)-(n-2) edges, and gamma3 itself sits inside the region.
// jobs <= 0 means: use SG_JOBS, else the hardware thread count.
TheoremReport verify_theorem(int n, EnumerationMode mode, int jobs = 0);

// Throws CounterexampleFound if the report's counterexample list is
// non-empty; returns normally otherwise.
void require_verified(const TheoremReport& report);

// ---- naive oracle -----------------------------------------------------------

// Full scan of all 3^binomial(n,2) labeled signed graphs at order n <= 6,
// with none of the engine's class/dedup/gating machinery: per labeled graph,
// balance via bipartition-parity union-find, the five-clique filter, and a
// dense eigensolve. Used to cross-check verify_theorem.
struct NaiveScanResult {
    int n = 0;
    std::uint64_t labeled_graphs = 0;
    std::uint64_t unbalanced_five_clique_free = 0;
    double max_rho = 0.0;
    double max_lambda1 = 0.0;
    SignedGraph rho_argmax;
    SignedGraph lambda1_argmax;
};
NaiveScanResult naive_max_rho(int n);

// ---- quotient polynomial identities -----------------------------------------

// Exact and floating checks, per order n, of the quotient characteristic
// polynomials of the three reference families against their closed forms,
// the shifted evaluation identity, the sign pattern at the probe points, and
// the position of each family's index relative to n-2.
struct ProbeCheck {
    std::string poly;   // "g" or "h"
    std::string point;  // e.g. "-6/5" or "n-2"
    int expected_sign = 0;
    int actual_sign = 0;
    bool pass = false;
};

struct QuotientPolyCheck {
    int n = 0;
    bool q1_matches_g = false;
    bool q2_matches_h = false;
    bool q3_matches_f = false;
    bool f_shift_identity = false;  // f(n-2) == 1-n, exact
    std::vector<ProbeCheck> probes;
    double lambda1_gamma1 = 0.0;
    double lambda1_gamma2 = 0.0;
    double lambda1_gamma3 = 0.0;
    double margin_gamma1 = 0.0;  // (n-2) - lambda1(gamma1)
    double margin_gamma2 = 0.0;  // (n-2) - lambda1(gamma2)
    double margin_gamma3 = 0.0;  // lambda1(gamma3) - (n-2)
    bool gamma1_below = false;
    bool gamma2_below = false;
    bool gamma3_above = false;
    bool all_pass = false;
};

struct Lemma22Report {
    int n_min = 0;
    int n_max = 0;
    std::vector<QuotientPolyCheck> rows;
    bool all_pass = false;
    double elapsed_seconds = 0.0;
};

// Requires 7 <= n_min <= n_max <= 60.
Lemma22Report verify_lemma22(int n_min, int n_max);

// Closed-form degree-5 (g, h) and degree-4 (f) comparison polynomials with
// the order n substituted, ascending coefficients:
//   g = x^5 + (6-n)x^4 + (11-4n)x^3 - (6+n)x^2 + (8n-32)x + (6n-20)
//   h = x^5 + (7-n)x^4 + (18-5n)x^3 - (4+2n)x^2 + (11n-55)x + (9n-39)
//   f = (x+1) (x^3 + (3-n)x^2 - (n+1)x + (3n-7))
IntPolynomial poly_g(int n);
IntPolynomial poly_h(int n);
IntPolynomial poly_f(int n);

// ---- extremal witness properties ---------------------------------------------

// Structural checks on a sweep maximizer: connected; frustration index
// exactly 1; at most n-3 missing edges; and in the frustration-minimizing
// switching, the unique negative edge lies on a negative triangle.
struct ExtremalClaimsReport {
    int n = 0;
    bool precondition_unbalanced = false;
    bool connected = false;
    int frustration = 0;
    bool frustration_is_one = false;
    int missing_edges = 0;
    bool missing_edges_within = false;  // <= n-3
    bool negative_edge_on_negative_triangle = false;
    std::pair<int, int> negative_edge{-1, -1};  // in the minimized switching
    int triangle_apex = -1;
    bool all_pass = false;
};
ExtremalClaimsReport verify_extremal_claims(const SignedGraph& witness);

// ---- stochastic search --------------------------------------------------------

// Seeded stochastic local search for large-radius unbalanced graphs with no
// unbalanced complete k-subgraph (k >= 5, n >= k). Moves: toggle an edge,
// flip an edge sign, switch at a vertex; greedy repair restores feasibility;
// strictly improving moves are kept. Warm-started from gamma3(n), which is
// feasible for every k >= 5. Deterministic for a fixed seed. No optimality
// claim.
struct SearchReport {
    int n = 0;
    int k = 0;
    std::uint64_t iterations = 0;
    std::uint64_t seed = 0;
    double best_rho = 0.0;
    SignedGraph best;
    std::uint64_t accepted = 0;
    std::uint64_t repairs = 0;
    bool feasible = false;
    double elapsed_seconds = 0.0;
};
SearchReport extremal_search(int n, int k, std::uint64_t iterations,
                             std::uint64_t seed);

// ---- rendering ----------------------------------------------------------------

// JSON layout: {"schema_version": 1, "report_type": ..., "payload": {...},
// "meta": {"elapsed_seconds": ...}}. Everything under "payload" is
// deterministic for fixed inputs; volatile data lives under "meta".
nlohmann::json to_json(const TheoremReport& r);
nlohmann::json to_json(const Lemma22Report& r);
nlohmann::json to_json(const ExtremalClaimsReport& r);
nlohmann::json to_json(const SearchReport& r);
nlohmann::json graph_json(const SignedGraph& g);

std::string render_text(const TheoremReport& r);
std::string render_text(const Lemma22Report& r);
std::string render_text(const ExtremalClaimsReport& r);
std::string render_text(const SearchReport& r);

}  // namespace sgt
