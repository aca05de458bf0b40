#include "sgt/enumerate.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <queue>
#include <unordered_set>

#include "sgt/canonical.hpp"

namespace sgt {

std::uint64_t enumerate_switching_classes(
    int n, const SignedGraph& g,
    const std::function<void(const SignedGraph&)>& sink) {
    if (g.order() != n)
        throw std::invalid_argument(
            "enumerate_switching_classes: graph order does not match n");
    CycleSignSignature sig = cycle_sign_signature(g);
    const int c = static_cast<int>(sig.cotree_edges.size());
    if (c > 62)
        throw SizeLimit("enumerate_switching_classes: too many classes (2^" +
                        std::to_string(c) + ")");

    std::vector<SignedEdge> base;
    base.reserve(g.edges().size());
    for (const auto& e : g.edges()) base.push_back({e.u, e.v, +1});

    // Positions of the cotree edges inside the sorted edge list.
    std::vector<size_t> cotree_pos;
    cotree_pos.reserve(sig.cotree_edges.size());
    for (const auto& [u, v] : sig.cotree_edges) {
        auto it = std::lower_bound(
            base.begin(), base.end(), SignedEdge{u, v, +1},
            [](const SignedEdge& a, const SignedEdge& b) {
                return std::pair(a.u, a.v) < std::pair(b.u, b.v);
            });
        cotree_pos.push_back(static_cast<size_t>(it - base.begin()));
    }

    const std::uint64_t total = std::uint64_t(1) << c;
    for (std::uint64_t cmask = 0; cmask < total; ++cmask) {
        std::vector<SignedEdge> edges = base;
        for (int i = 0; i < c; ++i)
            if (cmask >> i & 1) edges[cotree_pos[i]].sign = -1;
        sink(SignedGraph(n, std::move(edges)));
    }
    return total;
}

UnderlyingContext build_underlying_context(int n, std::uint64_t mask) {
    UnderlyingContext ctx;
    ctx.n = n;
    ctx.mask = mask;

    // Decode edges in ascending pair-bit (= lexicographic) order.
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (v, edge index)
    int bit = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v, ++bit) {
            if (!(mask >> bit & 1)) continue;
            int idx = static_cast<int>(ctx.edges.size());
            ctx.edges.push_back({u, v});
            ctx.edge_bits.push_back(bit);
            adj[u].push_back({v, idx});
            adj[v].push_back({u, idx});
        }
    }
    ctx.m = static_cast<int>(ctx.edges.size());
    ctx.in_forest.assign(ctx.m, 0);

    // BFS forest: roots at the lowest unvisited vertex, neighbors ascending.
    // Matches the forest used by cycle_sign_signature.
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    for (int r = 0; r < n; ++r) {
        if (seen[r]) continue;
        ++ctx.components;
        seen[r] = 1;
        q.push(r);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (auto [v, idx] : adj[u]) {
                if (seen[v]) continue;
                seen[v] = 1;
                ctx.in_forest[idx] = 1;
                q.push(v);
            }
        }
    }
    for (int i = 0; i < ctx.m; ++i)
        if (!ctx.in_forest[i]) ctx.cotree_bits.push_back(ctx.edge_bits[i]);
    return ctx;
}

std::uint64_t class_sign_mask(const UnderlyingContext& ctx,
                              std::uint64_t cotree_mask) {
    std::uint64_t sign = 0;
    for (size_t i = 0; i < ctx.cotree_bits.size(); ++i)
        if (cotree_mask >> i & 1) sign |= std::uint64_t(1) << ctx.cotree_bits[i];
    return sign;
}

SignedGraph graph_from_masks(int n, std::uint64_t underlying,
                             std::uint64_t sign_mask) {
    std::vector<SignedEdge> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (underlying >> bit & 1)
                edges.push_back({u, v, (sign_mask >> bit & 1) ? -1 : +1});
    return SignedGraph(n, std::move(edges));
}

Spectrum mask_spectrum(int n, std::uint64_t underlying,
                       std::uint64_t sign_mask) {
    SymMatrix a(n);
    int bit = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v, ++bit) {
            if (!(underlying >> bit & 1)) continue;
            double s = (sign_mask >> bit & 1) ? -1.0 : 1.0;
            a.at(u, v) = s;
            a.at(v, u) = s;
        }
    }
    return Spectrum{jacobi_eigenvalues(std::move(a))};
}

namespace {

std::vector<FiveCliqueEntry> build_five_clique_table(int n) {
    std::vector<FiveCliqueEntry> table;
    if (n < 5) return table;
    std::array<int, 5> v{};
    for (v[0] = 0; v[0] < n; ++v[0])
        for (v[1] = v[0] + 1; v[1] < n; ++v[1])
            for (v[2] = v[1] + 1; v[2] < n; ++v[2])
                for (v[3] = v[2] + 1; v[3] < n; ++v[3])
                    for (v[4] = v[3] + 1; v[4] < n; ++v[4]) {
                        FiveCliqueEntry e;
                        for (int i = 0; i < 5; ++i)
                            for (int j = i + 1; j < 5; ++j)
                                e.pairs |= std::uint64_t(1)
                                           << pair_bit(n, v[i], v[j]);
                        // Balance of a signed complete graph is decided by the
                        // triangles through one anchor vertex (here v[0]).
                        int t = 0;
                        for (int i = 1; i < 5; ++i)
                            for (int j = i + 1; j < 5; ++j, ++t) {
                                e.triple[t][0] = static_cast<std::uint8_t>(
                                    pair_bit(n, v[0], v[i]));
                                e.triple[t][1] = static_cast<std::uint8_t>(
                                    pair_bit(n, v[0], v[j]));
                                e.triple[t][2] = static_cast<std::uint8_t>(
                                    pair_bit(n, v[i], v[j]));
                            }
                        table.push_back(e);
                    }
    return table;
}

}  // namespace

const std::vector<FiveCliqueEntry>& five_clique_table(int n) {
    if (n < 0 || n > 11)
        throw SizeLimit("five_clique_table: n must be at most 11");
    static std::array<std::vector<FiveCliqueEntry>, 12> cache;
    static std::array<std::once_flag, 12> flags;
    std::call_once(flags[n], [n] { cache[n] = build_five_clique_table(n); });
    return cache[n];
}

bool has_unbalanced_k5(std::uint64_t underlying, std::uint64_t sign_mask,
                       const std::vector<FiveCliqueEntry>& cliques) {
    for (const auto& c : cliques) {
        if ((underlying & c.pairs) != c.pairs) continue;
        for (const auto& t : c.triple) {
            std::uint64_t parity =
                (sign_mask >> t[0]) ^ (sign_mask >> t[1]) ^ (sign_mask >> t[2]);
            if (parity & 1) return true;
        }
    }
    return false;
}

std::uint64_t complete_mask(int n) {
    if (n < 0 || n > 11) throw SizeLimit("complete_mask: n must be at most 11");
    int e = n * (n - 1) / 2;
    return e == 0 ? 0 : (~std::uint64_t(0) >> (64 - e));
}

std::vector<ComplementOrbit> complement_orbit_reps(int n, int max_missing) {
    if (n < 1 || n > 9)
        throw SizeLimit("complement_orbit_reps: n must be at most 9");
    const int e = n * (n - 1) / 2;
    if (max_missing < 0 || max_missing > e)
        throw std::invalid_argument(
            "complement_orbit_reps: max_missing out of range");

    const auto& perms = all_permutations(n);
    std::vector<ComplementOrbit> reps;
    std::unordered_set<std::uint64_t> visited;

    // Ascending by missing-edge count, then by bitmask: enumerate all
    // h-subsets of the edge slots with the standard combination walk.
    for (int h = 0; h <= max_missing; ++h) {
        std::vector<int> pick(h);
        for (int i = 0; i < h; ++i) pick[i] = i;
        while (true) {
            std::uint64_t mask = 0;
            for (int i = 0; i < h; ++i) mask |= std::uint64_t(1) << pick[i];
            if (!visited.count(mask)) {
                std::uint64_t size = 0;
                for (const auto& p : perms)
                    if (visited.insert(permute_mask(n, mask, p)).second) ++size;
                reps.push_back({mask, size});
            }
            if (h == 0) break;
            int i = h - 1;
            while (i >= 0 && pick[i] == e - h + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < h; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return reps;
}

}  // namespace sgt
