#include "sgt/subgraphs.hpp"

#include <algorithm>

namespace sgt {

namespace {

struct BitGraph {
    int n = 0;
    std::vector<uint64_t> adj;  // adj[v] = neighbor bitmask

    explicit BitGraph(const SignedGraph& g) : n(g.order()), adj(g.order(), 0) {
        if (n > 64) throw SizeLimit("clique search supports n <= 64");
        for (const auto& e : g.edges()) {
            adj[e.u] |= uint64_t(1) << e.v;
            adj[e.v] |= uint64_t(1) << e.u;
        }
    }
};

int popcount(uint64_t x) { return __builtin_popcountll(x); }

// Depth-first k-clique enumeration in ascending vertex order; the first hit
// is the lexicographically least sorted k-tuple. Returns true to stop.
template <class F>
bool for_each_k_clique(const BitGraph& bg, int k, std::vector<int>& chosen,
                       uint64_t cand, F&& visit) {
    if (static_cast<int>(chosen.size()) == k) return visit(chosen);
    int need = k - static_cast<int>(chosen.size());
    uint64_t rest = cand;
    while (rest) {
        if (popcount(rest) < need) return false;
        int v = __builtin_ctzll(rest);
        rest &= rest - 1;
        chosen.push_back(v);
        if (for_each_k_clique(bg, k, chosen, rest & bg.adj[v], visit))
            return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

bool clique_is_balanced(const SignedGraph& g, const std::vector<int>& verts) {
    // On a complete signed graph, balance == existence of s with
    // sign(uv) = s_u s_v; anchor s at the first vertex and check all pairs.
    const int k = static_cast<int>(verts.size());
    if (k <= 2) return true;
    std::vector<int> s(k);
    s[0] = +1;
    for (int i = 1; i < k; ++i) s[i] = g.sign(verts[0], verts[i]);
    for (int i = 1; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.sign(verts[i], verts[j]) != s[i] * s[j]) return false;
    return true;
}

std::optional<CliqueWitness> contains_unbalanced_clique(const SignedGraph& g,
                                                        int k) {
    if (k < 3) throw std::invalid_argument(
        "unbalanced cliques need k >= 3 (smaller cliques are balanced)");
    if (k > g.order()) return std::nullopt;
    BitGraph bg(g);
    uint64_t all = g.order() == 64 ? ~uint64_t(0)
                                   : (uint64_t(1) << g.order()) - 1;
    std::vector<int> chosen;
    std::optional<CliqueWitness> found;
    for_each_k_clique(bg, k, chosen, all, [&](const std::vector<int>& vs) {
        if (!clique_is_balanced(g, vs)) {
            found = CliqueWitness{vs, false};
            return true;
        }
        return false;
    });
    return found;
}

namespace {

void max_clique_expand(const BitGraph& bg, uint64_t cand, int size,
                       int& best) {
    best = std::max(best, size);
    while (cand) {
        if (size + popcount(cand) <= best) return;
        int v = __builtin_ctzll(cand);
        cand &= cand - 1;
        max_clique_expand(bg, cand & bg.adj[v], size + 1, best);
    }
}

// Balanced-clique search: extend only with sign-consistent vertices, so every
// visited state is a balanced clique.
void balanced_expand(const SignedGraph& g, const BitGraph& bg,
                     std::vector<int>& chosen, std::vector<int>& s,
                     uint64_t cand, int& best) {
    best = std::max(best, static_cast<int>(chosen.size()));
    while (cand) {
        if (static_cast<int>(chosen.size()) + popcount(cand) <= best) return;
        int v = __builtin_ctzll(cand);
        cand &= cand - 1;
        int sv = chosen.empty() ? +1 : s[0] * g.sign(chosen[0], v);
        bool ok = true;
        for (size_t i = 1; i < chosen.size(); ++i)
            if (g.sign(chosen[i], v) != s[i] * sv) {
                ok = false;
                break;
            }
        if (!ok) continue;
        chosen.push_back(v);
        s.push_back(sv);
        balanced_expand(g, bg, chosen, s, cand & bg.adj[v], best);
        chosen.pop_back();
        s.pop_back();
    }
}

}  // namespace

int clique_number(const SignedGraph& g) {
    if (g.order() == 0) return 0;
    BitGraph bg(g);
    uint64_t all = g.order() == 64 ? ~uint64_t(0)
                                   : (uint64_t(1) << g.order()) - 1;
    int best = 0;
    max_clique_expand(bg, all, 0, best);
    return best;
}

int balanced_clique_number(const SignedGraph& g) {
    if (g.order() == 0) return 0;
    BitGraph bg(g);
    uint64_t all = g.order() == 64 ? ~uint64_t(0)
                                   : (uint64_t(1) << g.order()) - 1;
    std::vector<int> chosen, s;
    int best = 0;
    balanced_expand(g, bg, chosen, s, all, best);
    return best;
}

}  // namespace sgt
