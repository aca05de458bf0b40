#include "sgt/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "sgt/constructions.hpp"
#include "sgt/enumerate.hpp"
#include "sgt/spectral.hpp"
#include "sgt/subgraphs.hpp"

namespace sgt {

namespace {

constexpr double kTol = 1e-9;          // reporting tolerance
constexpr double kKeepMargin = 5e-9;   // candidate retention slack
constexpr double kGateMargin = 1e-6;   // underlying-graph skip slack
constexpr int kWitnessCap = 25;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    if (const char* env = std::getenv("SG_JOBS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v <= 1024)
            return static_cast<int>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::string edge_summary(const SignedGraph& g) {
    std::ostringstream out;
    out << "n=" << g.order() << " edges:";
    for (const auto& e : g.edges())
        out << ' ' << e.u << '-' << e.v << (e.sign < 0 ? "(-)" : "(+)");
    return out.str();
}

}  // namespace

std::string to_string(EnumerationMode m) {
    return m == EnumerationMode::Exhaustive ? "exhaustive" : "pruned";
}

CounterexampleFound::CounterexampleFound(std::string msg, SignedGraph g)
    : std::runtime_error(std::move(msg)), graph(std::move(g)) {}

SweepStats& SweepStats::operator+=(const SweepStats& o) {
    underlying_graphs += o.underlying_graphs;
    underlying_labeled += o.underlying_labeled;
    underlying_skipped_by_index_gate += o.underlying_skipped_by_index_gate;
    classes_total += o.classes_total;
    classes_labeled += o.classes_labeled;
    labeled_signed_graphs_covered += o.labeled_signed_graphs_covered;
    unbalanced_classes_enumerated += o.unbalanced_classes_enumerated;
    five_clique_free_classes += o.five_clique_free_classes;
    eigensolves += o.eigensolves;
    return *this;
}

namespace {

struct WorkUnit {
    std::uint64_t mask = 0;
    std::uint64_t multiplicity = 1;
};

struct RawCandidate {
    double rho = 0.0;
    double lambda1 = 0.0;
    SignedGraph graph;
};

struct WorkerOut {
    SweepStats stats;
    std::vector<RawCandidate> candidates;
    double max_rho = -1e300;
    double max_lambda1 = -1e300;
};

// Evaluates the switching classes of units [lo, hi). A whole underlying graph
// is skipped when even its all-positive index cannot reach `gate`: the index
// of the underlying graph bounds the spectral radius of every signing of it
// (for the negated signing as well), so nothing retainable is lost.
WorkerOut sweep_range(int n, const std::vector<WorkUnit>& units, size_t lo,
                      size_t hi, double keep, double gate,
                      const std::vector<FiveCliqueEntry>& cliques) {
    WorkerOut out;
    std::vector<FiveCliqueEntry> present;
    for (size_t idx = lo; idx < hi; ++idx) {
        const WorkUnit& unit = units[idx];
        UnderlyingContext ctx = build_underlying_context(n, unit.mask);
        const int cot = ctx.cotree_size();
        const std::uint64_t classes = std::uint64_t(1) << cot;

        out.stats.underlying_graphs += 1;
        out.stats.underlying_labeled += unit.multiplicity;
        out.stats.classes_total += classes;
        out.stats.classes_labeled += unit.multiplicity * classes;
        out.stats.labeled_signed_graphs_covered +=
            unit.multiplicity << ctx.m;

        if (cot == 0) continue;  // forest: its one class is balanced

        out.stats.eigensolves += 1;
        double underlying_index = mask_spectrum(n, unit.mask, 0).index();
        if (underlying_index < gate) {
            out.stats.underlying_skipped_by_index_gate += 1;
            continue;
        }

        present.clear();
        for (const auto& c : cliques)
            if ((unit.mask & c.pairs) == c.pairs) present.push_back(c);

        for (std::uint64_t cmask = 1; cmask < classes; ++cmask) {
            out.stats.unbalanced_classes_enumerated += 1;
            std::uint64_t sign_mask = class_sign_mask(ctx, cmask);
            if (has_unbalanced_k5(unit.mask, sign_mask, present)) continue;
            out.stats.five_clique_free_classes += 1;

            Spectrum sp = mask_spectrum(n, unit.mask, sign_mask);
            out.stats.eigensolves += 1;
            double rho = sp.radius();
            double l1 = sp.index();
            out.max_rho = std::max(out.max_rho, rho);
            out.max_lambda1 = std::max(out.max_lambda1, l1);
            if (rho >= keep)
                out.candidates.push_back(
                    {rho, l1, graph_from_masks(n, unit.mask, sign_mask)});
        }
    }
    return out;
}

struct DedupOut {
    std::vector<WitnessRecord> stored;
    std::uint64_t raw = 0;
    std::uint64_t distinct = 0;
    bool all_match_reference = true;
};

using CanonOf = std::function<const CanonicalForm&(const RawCandidate*)>;

DedupOut dedup_candidates(const std::vector<const RawCandidate*>& picked,
                          const CanonOf& canon_of,
                          const CanonicalForm& reference, int cap) {
    DedupOut out;
    out.raw = picked.size();
    std::map<CanonicalForm, bool> seen;
    for (const RawCandidate* c : picked) {
        const CanonicalForm& canon = canon_of(c);
        auto [it, inserted] = seen.try_emplace(canon, true);
        if (!inserted) continue;
        bool matches = canon == reference;
        out.all_match_reference = out.all_match_reference && matches;
        if (static_cast<int>(out.stored.size()) < cap) {
            WitnessRecord w;
            w.graph = c->graph;
            w.rho = c->rho;
            w.lambda1 = c->lambda1;
            w.canon = canon;
            w.matches_reference = matches;
            out.stored.push_back(std::move(w));
        }
    }
    out.distinct = seen.size();
    return out;
}

}  // namespace

TheoremReport verify_theorem(int n, EnumerationMode mode, int jobs) {
    auto start = Clock::now();
    if (mode == EnumerationMode::Exhaustive) {
        if (n < 5 || n > 6)
            throw std::invalid_argument(
                "verify_theorem: exhaustive mode needs 5 <= n <= 6");
    } else {
        if (n < 5 || n > 8)
            throw std::invalid_argument(
                "verify_theorem: pruned mode needs 5 <= n <= 8");
    }

    TheoremReport r;
    r.n = n;
    r.mode = mode;
    r.jobs = resolve_jobs(jobs);
    r.tolerance = kTol;
    r.witness_cap = kWitnessCap;

    // Reference family and its exact-eigenvalue cross-check.
    SignedGraph g3 = gamma3(n);
    Spectrum s3 = eigenvalues(g3);
    r.rho_reference = s3.radius();
    r.lambda1_reference = s3.index();
    RealRoot top = largest_real_root(char_poly(g3));
    r.reference_exact_gap = std::abs(r.lambda1_reference - top.value);
    CanonicalForm ref_canon = canonical_form(g3);
    r.reference_canonical = to_string(ref_canon);

    const double keep =
        std::min(r.rho_reference, r.lambda1_reference) - kKeepMargin;
    const double gate = keep - kGateMargin;
    r.keep_threshold = keep;

    // Work units.
    std::vector<WorkUnit> units;
    if (mode == EnumerationMode::Exhaustive) {
        const int e = n * (n - 1) / 2;
        units.reserve(std::uint64_t(1) << e);
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << e); ++mask)
            units.push_back({mask, 1});
    } else {
        r.pruned_max_missing = n - 2;
        const std::uint64_t full = complete_mask(n);
        for (const auto& orbit : complement_orbit_reps(n, n - 2))
            units.push_back({full & ~orbit.complement, orbit.orbit_size});
    }

    const auto& cliques = five_clique_table(n);  // warm before threads

    // Sharded sweep with a deterministic merge: contiguous unit ranges, one
    // per worker, results concatenated in range order. Candidate retention
    // uses the fixed threshold `keep`, so shards are independent and the
    // merged result does not depend on the worker count.
    const int workers =
        static_cast<int>(std::min<std::uint64_t>(r.jobs, units.size()));
    std::vector<WorkerOut> outs(std::max(workers, 1));
    if (workers <= 1) {
        outs[0] = sweep_range(n, units, 0, units.size(), keep, gate, cliques);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) {
            size_t lo = units.size() * w / workers;
            size_t hi = units.size() * (w + 1) / workers;
            pool.emplace_back([&, w, lo, hi] {
                outs[w] = sweep_range(n, units, lo, hi, keep, gate, cliques);
            });
        }
        for (auto& t : pool) t.join();
    }

    std::vector<RawCandidate> candidates;
    double max_rho = -1e300, max_lambda1 = -1e300;
    for (auto& o : outs) {
        r.stats += o.stats;
        max_rho = std::max(max_rho, o.max_rho);
        max_lambda1 = std::max(max_lambda1, o.max_lambda1);
        for (auto& c : o.candidates) candidates.push_back(std::move(c));
    }
    r.max_rho = max_rho;
    r.max_lambda1 = max_lambda1;

    // Canonical forms are the expensive part of the post-processing; compute
    // each candidate's form once, on demand.
    std::map<const RawCandidate*, CanonicalForm> canon_memo;
    CanonOf canon_of = [&](const RawCandidate* c) -> const CanonicalForm& {
        auto it = canon_memo.find(c);
        if (it == canon_memo.end())
            it = canon_memo.emplace(c, canonical_form(c->graph)).first;
        return it->second;
    };

    // Radius reading: maximizers and counterexamples.
    std::vector<const RawCandidate*> picked;
    for (const auto& c : candidates)
        if (c.rho >= max_rho - kTol) picked.push_back(&c);
    DedupOut rho_max = dedup_candidates(picked, canon_of, ref_canon,
                                        kWitnessCap);
    r.rho_maximizers = std::move(rho_max.stored);
    r.rho_maximizer_classes = rho_max.raw;
    r.rho_maximizer_distinct = rho_max.distinct;
    r.rho_maximizers_match_reference =
        rho_max.all_match_reference &&
        std::abs(max_rho - r.rho_reference) <= kTol;

    picked.clear();
    for (const auto& c : candidates)
        if (c.rho >= r.rho_reference - kTol &&
            !(canon_of(&c) == ref_canon))
            picked.push_back(&c);
    DedupOut cex = dedup_candidates(picked, canon_of, ref_canon, kWitnessCap);
    r.counterexamples = std::move(cex.stored);
    r.counterexample_classes = cex.raw;
    r.counterexample_distinct = cex.distinct;
    r.radius_reading_verified = cex.raw == 0;

    // Index reading.
    picked.clear();
    for (const auto& c : candidates)
        if (c.lambda1 >= max_lambda1 - kTol) picked.push_back(&c);
    DedupOut l1_max = dedup_candidates(picked, canon_of, ref_canon,
                                       kWitnessCap);
    r.lambda1_maximizers = std::move(l1_max.stored);
    r.lambda1_maximizer_classes = l1_max.raw;
    r.lambda1_maximizer_distinct = l1_max.distinct;

    std::uint64_t l1_offenders = 0;
    for (const auto& c : candidates)
        if (c.lambda1 >= r.lambda1_reference - kTol &&
            !(canon_of(&c) == ref_canon))
            ++l1_offenders;
    r.lambda1_counterexample_classes = l1_offenders;
    r.index_reading_verified = l1_offenders == 0;

    r.elapsed_seconds = seconds_since(start);
    return r;
}

void require_verified(const TheoremReport& report) {
    if (report.counterexample_classes == 0) return;
    std::ostringstream msg;
    msg << "order " << report.n << ": " << report.counterexample_classes
        << " switching class(es) reach rho >= " << std::setprecision(12)
        << report.rho_reference << " - 1e-9 without an unbalanced five-clique"
        << " and are not the reference class";
    const SignedGraph& g = report.counterexamples.empty()
                               ? SignedGraph{}
                               : report.counterexamples.front().graph;
    throw CounterexampleFound(msg.str(), g);
}

NaiveScanResult naive_max_rho(int n) {
    if (n < 3 || n > 6)
        throw SizeLimit("naive_max_rho: n must be between 3 and 6");
    NaiveScanResult res;
    res.n = n;

    const int e = n * (n - 1) / 2;
    const auto& cliques = five_clique_table(n);

    std::vector<int> edge_bits;
    std::vector<std::pair<int, int>> edge_pairs;
    std::vector<int> parent(n), rank_(n), parity(n);

    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << e); ++mask) {
        edge_bits.clear();
        edge_pairs.clear();
        int bit = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++bit)
                if (mask >> bit & 1) {
                    edge_bits.push_back(bit);
                    edge_pairs.push_back({u, v});
                }
        const int m = static_cast<int>(edge_bits.size());

        for (std::uint64_t sub = 0; sub < (std::uint64_t(1) << m); ++sub) {
            res.labeled_graphs += 1;

            // Balance via union-find with parity: join endpoints with the
            // edge's sign parity; an odd cycle of negativity is imbalance.
            for (int v = 0; v < n; ++v) {
                parent[v] = v;
                rank_[v] = 0;
                parity[v] = 0;
            }
            auto find = [&](int x) {
                int p = 0;
                while (parent[x] != x) {
                    p ^= parity[x];
                    x = parent[x];
                }
                return std::pair(x, p);
            };
            bool balanced = true;
            for (int i = 0; i < m && balanced; ++i) {
                auto [ru, pu] = find(edge_pairs[i].first);
                auto [rv, pv] = find(edge_pairs[i].second);
                int w = (sub >> i & 1) ? 1 : 0;  // 1 == negative edge
                if (ru == rv) {
                    balanced = (pu ^ pv ^ w) == 0;
                } else {
                    if (rank_[ru] < rank_[rv]) {
                        std::swap(ru, rv);
                        std::swap(pu, pv);
                    }
                    parent[rv] = ru;
                    parity[rv] = pu ^ pv ^ w;
                    if (rank_[ru] == rank_[rv]) ++rank_[ru];
                }
            }
            if (balanced) continue;

            std::uint64_t sign_mask = 0;
            for (int i = 0; i < m; ++i)
                if (sub >> i & 1) sign_mask |= std::uint64_t(1) << edge_bits[i];
            if (has_unbalanced_k5(mask, sign_mask, cliques)) continue;

            res.unbalanced_five_clique_free += 1;
            Spectrum sp = mask_spectrum(n, mask, sign_mask);
            if (sp.radius() > res.max_rho) {
                res.max_rho = sp.radius();
                res.rho_argmax = graph_from_masks(n, mask, sign_mask);
            }
            if (sp.index() > res.max_lambda1) {
                res.max_lambda1 = sp.index();
                res.lambda1_argmax = graph_from_masks(n, mask, sign_mask);
            }
        }
    }
    return res;
}

IntPolynomial poly_g(int n) {
    return make_poly({6LL * n - 20, 8LL * n - 32, -(6LL + n), 11LL - 4 * n,
                      6LL - n, 1});
}

IntPolynomial poly_h(int n) {
    return make_poly({9LL * n - 39, 11LL * n - 55, -(4LL + 2 * n),
                      18LL - 5 * n, 7LL - n, 1});
}

IntPolynomial poly_f(int n) {
    return poly_mul(make_poly({1, 1}),
                    make_poly({3LL * n - 7, -(1LL + n), 3LL - n, 1}));
}

namespace {

ProbeCheck run_probe(const IntPolynomial& p, const std::string& poly_name,
                     const std::string& point_name, const BigRat& x,
                     int expected) {
    ProbeCheck pc;
    pc.poly = poly_name;
    pc.point = point_name;
    pc.expected_sign = expected;
    pc.actual_sign = sign_at(p, x);
    pc.pass = pc.actual_sign == expected;
    return pc;
}

}  // namespace

Lemma22Report verify_lemma22(int n_min, int n_max) {
    auto start = Clock::now();
    if (n_min < 7 || n_min > n_max || n_max > 60)
        throw std::invalid_argument(
            "verify_lemma22: need 7 <= n_min <= n_max <= 60");

    Lemma22Report rep;
    rep.n_min = n_min;
    rep.n_max = n_max;
    rep.all_pass = true;

    for (int n = n_min; n <= n_max; ++n) {
        QuotientPolyCheck row;
        row.n = n;

        SignedGraph g1 = gamma1(n), g2 = gamma2(n), g3 = gamma3(n);
        QuotientMatrix q1 = equitable_quotient(g1, gamma1_partition(n));
        QuotientMatrix q2 = equitable_quotient(g2, gamma2_partition(n));
        QuotientMatrix q3 = equitable_quotient(g3, gamma3_partition(n));

        IntPolynomial g = poly_g(n), h = poly_h(n), f = poly_f(n);
        row.q1_matches_g = char_poly(q1.b) == g;
        row.q2_matches_h = char_poly(q2.b) == h;
        row.q3_matches_f = char_poly(q3.b) == f;
        row.f_shift_identity =
            evaluate_int(f, BigInt(n) - 2) == BigInt(1) - n;

        for (auto* entry : {&g, &h}) {
            const std::string name = entry == &g ? "g" : "h";
            row.probes.push_back(
                run_probe(*entry, name, "-2", BigRat(-2), +1));
            row.probes.push_back(
                run_probe(*entry, name, "-6/5", BigRat(-6, 5), -1));
            row.probes.push_back(run_probe(*entry, name, "0", BigRat(0), +1));
            row.probes.push_back(
                run_probe(*entry, name, "n-3", BigRat(n - 3), -1));
            row.probes.push_back(
                run_probe(*entry, name, "n-2", BigRat(n - 2), +1));
        }

        row.lambda1_gamma1 = lambda1(g1);
        row.lambda1_gamma2 = lambda1(g2);
        row.lambda1_gamma3 = lambda1(g3);
        row.margin_gamma1 = (n - 2.0) - row.lambda1_gamma1;
        row.margin_gamma2 = (n - 2.0) - row.lambda1_gamma2;
        row.margin_gamma3 = row.lambda1_gamma3 - (n - 2.0);
        row.gamma1_below = row.margin_gamma1 >= 1e-6;
        row.gamma2_below = row.margin_gamma2 >= 1e-6;
        row.gamma3_above = row.margin_gamma3 >= 1e-6;

        row.all_pass = row.q1_matches_g && row.q2_matches_h &&
                       row.q3_matches_f && row.f_shift_identity &&
                       row.gamma1_below && row.gamma2_below &&
                       row.gamma3_above &&
                       std::all_of(row.probes.begin(), row.probes.end(),
                                   [](const ProbeCheck& p) { return p.pass; });
        rep.all_pass = rep.all_pass && row.all_pass;
        rep.rows.push_back(std::move(row));
    }
    rep.elapsed_seconds = seconds_since(start);
    return rep;
}

ExtremalClaimsReport verify_extremal_claims(const SignedGraph& witness) {
    ExtremalClaimsReport r;
    const int n = witness.order();
    r.n = n;
    r.precondition_unbalanced = !is_balanced(witness);
    r.connected = is_connected(witness);

    FrustrationCertificate cert = frustration_certificate(witness);
    r.frustration = cert.eps;
    r.frustration_is_one = cert.eps == 1;
    r.missing_edges = n * (n - 1) / 2 - witness.size();
    r.missing_edges_within = r.missing_edges <= n - 3;

    if (cert.eps == 1) {
        for (const auto& e : cert.minimized.edges()) {
            if (e.sign > 0) continue;
            r.negative_edge = {e.u, e.v};
            // All other edges of the minimized form are positive, so any
            // common neighbor closes a negative triangle through this edge.
            for (int w = 0; w < n; ++w) {
                if (w == e.u || w == e.v) continue;
                if (cert.minimized.adjacent(e.u, w) &&
                    cert.minimized.adjacent(e.v, w)) {
                    int s = cert.minimized.sign(e.u, w) *
                            cert.minimized.sign(e.v, w);
                    if (s > 0) {
                        r.negative_edge_on_negative_triangle = true;
                        r.triangle_apex = w;
                        break;
                    }
                }
            }
            break;
        }
    }

    r.all_pass = r.precondition_unbalanced && r.connected &&
                 r.frustration_is_one && r.missing_edges_within &&
                 r.negative_edge_on_negative_triangle;
    return r;
}

namespace {

bool search_feasible(const SignedGraph& g, int k) {
    return !is_balanced(g) && !contains_unbalanced_clique(g, k).has_value();
}

// Flips the sign of one cycle-closing edge, making the graph unbalanced.
// Returns false when the graph is a forest.
bool force_unbalanced(SignedGraph& g) {
    CycleSignSignature sig = cycle_sign_signature(g);
    if (sig.cotree_edges.empty()) return false;
    auto [u, v] = sig.cotree_edges.front();
    std::vector<SignedEdge> edges = g.edges();
    for (auto& e : edges)
        if (e.u == u && e.v == v) e.sign = -e.sign;
    g = SignedGraph(g.order(), std::move(edges));
    return true;
}

}  // namespace

SearchReport extremal_search(int n, int k, std::uint64_t iterations,
                             std::uint64_t seed) {
    auto start = Clock::now();
    if (k < 5) throw std::invalid_argument("extremal_search: k must be >= 5");
    if (n < k) throw std::invalid_argument("extremal_search: n must be >= k");
    if (n > 24) throw SizeLimit("extremal_search: n must be at most 24");

    SearchReport rep;
    rep.n = n;
    rep.k = k;
    rep.iterations = iterations;
    rep.seed = seed;

    std::mt19937_64 rng(seed);
    auto pick = [&rng](std::uint64_t bound) {
        return static_cast<int>(rng() % bound);
    };

    SignedGraph current = gamma3(n);  // feasible warm start for every k >= 5
    double current_rho = spectral_radius(current);
    rep.best = current;
    rep.best_rho = current_rho;

    for (std::uint64_t it = 0; it < iterations; ++it) {
        std::vector<SignedEdge> edges = current.edges();
        int move = pick(3);
        if (move == 0) {
            // Toggle a random vertex pair.
            int u = pick(n), v = pick(n);
            if (u == v) continue;
            if (u > v) std::swap(u, v);
            auto it2 = std::find_if(edges.begin(), edges.end(),
                                    [&](const SignedEdge& e) {
                                        return e.u == u && e.v == v;
                                    });
            if (it2 != edges.end())
                edges.erase(it2);
            else
                edges.push_back({u, v, pick(2) ? -1 : +1});
        } else if (move == 1) {
            if (edges.empty()) continue;
            edges[pick(edges.size())].sign *= -1;
        } else {
            int v = pick(n);
            for (auto& e : edges)
                if (e.u == v || e.v == v) e.sign = -e.sign;
        }
        SignedGraph candidate(n, std::move(edges));

        // Greedy repair: delete one edge of each unbalanced k-clique until
        // none remains, then restore imbalance if the graph went balanced.
        bool ok = true;
        for (int guard = 0; guard < 3 * n * n; ++guard) {
            auto witness = contains_unbalanced_clique(candidate, k);
            if (!witness) break;
            rep.repairs += 1;
            std::vector<SignedEdge> es = candidate.edges();
            int a = witness->vertices[0], b = witness->vertices[1];
            es.erase(std::find_if(es.begin(), es.end(),
                                  [&](const SignedEdge& e) {
                                      return e.u == a && e.v == b;
                                  }));
            candidate = SignedGraph(n, std::move(es));
        }
        if (is_balanced(candidate)) ok = force_unbalanced(candidate);
        if (!ok || !search_feasible(candidate, k)) continue;

        double rho = spectral_radius(candidate);
        bool accept = rho > current_rho + 1e-12;
        if (!accept && rho > current_rho - 0.02)
            accept = pick(10) == 0;  // rare sideways/backward step
        if (accept) {
            current = std::move(candidate);
            current_rho = rho;
            rep.accepted += 1;
            if (rho > rep.best_rho) {
                rep.best_rho = rho;
                rep.best = current;
            }
        }
    }

    rep.feasible = search_feasible(rep.best, k);
    rep.elapsed_seconds = seconds_since(start);
    return rep;
}

// ---- rendering -----------------------------------------------------------

nlohmann::json graph_json(const SignedGraph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : g.edges())
        edges.push_back(nlohmann::json::array({e.u, e.v, e.sign}));
    return {{"n", g.order()}, {"edges", std::move(edges)}};
}

namespace {

nlohmann::json witness_json(const WitnessRecord& w) {
    return {{"rho", w.rho},
            {"lambda1", w.lambda1},
            {"canonical", to_string(w.canon)},
            {"matches_reference", w.matches_reference},
            {"graph", graph_json(w.graph)}};
}

nlohmann::json wrap(const char* type, nlohmann::json payload,
                    double elapsed_seconds) {
    return {{"schema_version", 1},
            {"report_type", type},
            {"payload", std::move(payload)},
            {"meta", {{"elapsed_seconds", elapsed_seconds}}}};
}

}  // namespace

nlohmann::json to_json(const TheoremReport& r) {
    nlohmann::json rho_max = nlohmann::json::array();
    for (const auto& w : r.rho_maximizers) rho_max.push_back(witness_json(w));
    nlohmann::json cex = nlohmann::json::array();
    for (const auto& w : r.counterexamples) cex.push_back(witness_json(w));
    nlohmann::json l1_max = nlohmann::json::array();
    for (const auto& w : r.lambda1_maximizers)
        l1_max.push_back(witness_json(w));

    nlohmann::json payload = {
        {"n", r.n},
        {"mode", to_string(r.mode)},
        {"pruned_max_missing", r.pruned_max_missing},
        {"reference",
         {{"rho", r.rho_reference},
          {"lambda1", r.lambda1_reference},
          {"exact_root_gap", r.reference_exact_gap},
          {"canonical", r.reference_canonical}}},
        {"radius_reading",
         {{"max", r.max_rho},
          {"maximizer_classes", r.rho_maximizer_classes},
          {"maximizer_distinct", r.rho_maximizer_distinct},
          {"maximizers", std::move(rho_max)},
          {"maximizers_match_reference", r.rho_maximizers_match_reference},
          {"counterexample_classes", r.counterexample_classes},
          {"counterexample_distinct", r.counterexample_distinct},
          {"counterexamples", std::move(cex)},
          {"verified", r.radius_reading_verified}}},
        {"index_reading",
         {{"max", r.max_lambda1},
          {"maximizer_classes", r.lambda1_maximizer_classes},
          {"maximizer_distinct", r.lambda1_maximizer_distinct},
          {"maximizers", std::move(l1_max)},
          {"counterexample_classes", r.lambda1_counterexample_classes},
          {"verified", r.index_reading_verified}}},
        {"thresholds",
         {{"tolerance", r.tolerance},
          {"keep_threshold", r.keep_threshold},
          {"witness_cap", r.witness_cap}}},
        {"stats",
         {{"underlying_graphs", r.stats.underlying_graphs},
          {"underlying_labeled", r.stats.underlying_labeled},
          {"underlying_skipped_by_index_gate",
           r.stats.underlying_skipped_by_index_gate},
          {"classes_total", r.stats.classes_total},
          {"classes_labeled", r.stats.classes_labeled},
          {"labeled_signed_graphs_covered",
           r.stats.labeled_signed_graphs_covered},
          {"unbalanced_classes_enumerated",
           r.stats.unbalanced_classes_enumerated},
          {"five_clique_free_classes", r.stats.five_clique_free_classes},
          {"eigensolves", r.stats.eigensolves}}}};
    return wrap("theorem", std::move(payload), r.elapsed_seconds);
}

nlohmann::json to_json(const Lemma22Report& r) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : r.rows) {
        nlohmann::json probes = nlohmann::json::array();
        for (const auto& p : row.probes)
            probes.push_back({{"poly", p.poly},
                              {"point", p.point},
                              {"expected_sign", p.expected_sign},
                              {"actual_sign", p.actual_sign},
                              {"pass", p.pass}});
        rows.push_back({{"n", row.n},
                        {"q1_matches_g", row.q1_matches_g},
                        {"q2_matches_h", row.q2_matches_h},
                        {"q3_matches_f", row.q3_matches_f},
                        {"f_shift_identity", row.f_shift_identity},
                        {"probes", std::move(probes)},
                        {"lambda1_gamma1", row.lambda1_gamma1},
                        {"lambda1_gamma2", row.lambda1_gamma2},
                        {"lambda1_gamma3", row.lambda1_gamma3},
                        {"margin_gamma1", row.margin_gamma1},
                        {"margin_gamma2", row.margin_gamma2},
                        {"margin_gamma3", row.margin_gamma3},
                        {"gamma1_below", row.gamma1_below},
                        {"gamma2_below", row.gamma2_below},
                        {"gamma3_above", row.gamma3_above},
                        {"all_pass", row.all_pass}});
    }
    nlohmann::json payload = {{"n_min", r.n_min},
                              {"n_max", r.n_max},
                              {"rows", std::move(rows)},
                              {"all_pass", r.all_pass}};
    return wrap("lemma22", std::move(payload), r.elapsed_seconds);
}

nlohmann::json to_json(const ExtremalClaimsReport& r) {
    nlohmann::json payload = {
        {"n", r.n},
        {"precondition_unbalanced", r.precondition_unbalanced},
        {"connected", r.connected},
        {"frustration", r.frustration},
        {"frustration_is_one", r.frustration_is_one},
        {"missing_edges", r.missing_edges},
        {"missing_edges_within", r.missing_edges_within},
        {"negative_edge_on_negative_triangle",
         r.negative_edge_on_negative_triangle},
        {"negative_edge",
         nlohmann::json::array({r.negative_edge.first, r.negative_edge.second})},
        {"triangle_apex", r.triangle_apex},
        {"all_pass", r.all_pass}};
    return wrap("extremal-claims", std::move(payload), 0.0);
}

nlohmann::json to_json(const SearchReport& r) {
    nlohmann::json payload = {{"n", r.n},
                              {"k", r.k},
                              {"iterations", r.iterations},
                              {"seed", r.seed},
                              {"best_rho", r.best_rho},
                              {"best", graph_json(r.best)},
                              {"accepted", r.accepted},
                              {"repairs", r.repairs},
                              {"feasible", r.feasible}};
    return wrap("search", std::move(payload), r.elapsed_seconds);
}

namespace {

const char* yesno(bool b) { return b ? "yes" : "no"; }
const char* okfail(bool b) { return b ? "OK" : "FAILED"; }

}  // namespace

std::string render_text(const TheoremReport& r) {
    std::ostringstream out;
    out << std::setprecision(12);
    out << "sweep: n=" << r.n << " mode=" << to_string(r.mode)
        << " jobs=" << r.jobs << "\n";
    if (r.pruned_max_missing >= 0)
        out << "  pruned to underlying graphs with at most "
            << r.pruned_max_missing << " missing edges\n";
    out << "reference class: rho=" << r.rho_reference
        << " lambda1=" << r.lambda1_reference
        << " exact-root gap=" << r.reference_exact_gap << "\n"
        << "  " << r.reference_canonical << "\n";
    out << "radius reading: max rho=" << r.max_rho << " ("
        << r.rho_maximizer_classes << " class(es), "
        << r.rho_maximizer_distinct
        << " distinct); matches reference: "
        << yesno(r.rho_maximizers_match_reference) << "\n";
    out << "  counterexamples: " << r.counterexample_classes << " class(es), "
        << r.counterexample_distinct << " distinct -> "
        << (r.radius_reading_verified ? "VERIFIED" : "FALSIFIED") << "\n";
    for (const auto& w : r.counterexamples)
        out << "    rho=" << w.rho << " lambda1=" << w.lambda1 << " "
            << edge_summary(w.graph) << "\n";
    out << "index reading: max lambda1=" << r.max_lambda1 << " ("
        << r.lambda1_maximizer_classes << " class(es), "
        << r.lambda1_maximizer_distinct << " distinct); counterexamples: "
        << r.lambda1_counterexample_classes << " -> "
        << (r.index_reading_verified ? "VERIFIED" : "FALSIFIED") << "\n";
    out << "stats: underlying=" << r.stats.underlying_graphs << " (labeled "
        << r.stats.underlying_labeled << ", gate-skipped "
        << r.stats.underlying_skipped_by_index_gate << ")"
        << " classes=" << r.stats.classes_total << " (labeled "
        << r.stats.classes_labeled << ")"
        << " covered=" << r.stats.labeled_signed_graphs_covered
        << " unbalanced=" << r.stats.unbalanced_classes_enumerated
        << " five-clique-free=" << r.stats.five_clique_free_classes
        << " eigensolves=" << r.stats.eigensolves << "\n";
    out << "elapsed: " << std::setprecision(3) << r.elapsed_seconds << "s\n";
    return out.str();
}

std::string render_text(const Lemma22Report& r) {
    std::ostringstream out;
    out << std::setprecision(12);
    out << "quotient polynomial checks for n=" << r.n_min << ".." << r.n_max
        << "\n";
    for (const auto& row : r.rows) {
        out << "n=" << row.n << ": q1=" << okfail(row.q1_matches_g)
            << " q2=" << okfail(row.q2_matches_h)
            << " q3=" << okfail(row.q3_matches_f)
            << " shift=" << okfail(row.f_shift_identity) << " probes=";
        int bad = 0;
        for (const auto& p : row.probes) bad += p.pass ? 0 : 1;
        out << (bad == 0 ? "OK" : ("FAILED x" + std::to_string(bad)));
        out << " lambda1(margins): gamma1=" << row.lambda1_gamma1 << " (+"
            << row.margin_gamma1 << ")"
            << " gamma2=" << row.lambda1_gamma2 << " (+" << row.margin_gamma2
            << ")"
            << " gamma3=" << row.lambda1_gamma3 << " (+" << row.margin_gamma3
            << ") => " << okfail(row.all_pass) << "\n";
    }
    out << "overall: " << okfail(r.all_pass) << " (elapsed "
        << std::setprecision(3) << r.elapsed_seconds << "s)\n";
    return out.str();
}

std::string render_text(const ExtremalClaimsReport& r) {
    std::ostringstream out;
    out << "extremal witness checks (n=" << r.n << ")\n"
        << "  unbalanced:          " << yesno(r.precondition_unbalanced)
        << "\n"
        << "  connected:           " << yesno(r.connected) << "\n"
        << "  frustration index:   " << r.frustration
        << (r.frustration_is_one ? " (= 1)" : " (!= 1)") << "\n"
        << "  missing edges:       " << r.missing_edges << " (<= n-3: "
        << yesno(r.missing_edges_within) << ")\n"
        << "  negative edge on a negative triangle: "
        << yesno(r.negative_edge_on_negative_triangle);
    if (r.negative_edge_on_negative_triangle)
        out << "  [edge " << r.negative_edge.first << "-"
            << r.negative_edge.second << ", apex " << r.triangle_apex << "]";
    out << "\n  overall: " << okfail(r.all_pass) << "\n";
    return out.str();
}

std::string render_text(const SearchReport& r) {
    std::ostringstream out;
    out << std::setprecision(12);
    out << "stochastic search: n=" << r.n << " k=" << r.k
        << " iterations=" << r.iterations << " seed=" << r.seed << "\n"
        << "best rho=" << r.best_rho << " (accepted " << r.accepted
        << " moves, " << r.repairs << " repairs, feasible "
        << yesno(r.feasible) << ")\n"
        << "best graph: " << edge_summary(r.best) << "\n"
        << "elapsed: " << std::setprecision(3) << r.elapsed_seconds << "s\n";
    return out.str();
}

}  // namespace sgt
