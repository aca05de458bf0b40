#include "sgt/signed_graph.hpp"

#include <algorithm>
#include <queue>

namespace sgt {

int SignedGraph::check_order(int n) {
    if (n < 0) throw std::invalid_argument("vertex count must be >= 0");
    return n;
}

SignedGraph::SignedGraph(int n, std::vector<SignedEdge> edges)
    : n_(check_order(n)), edges_(std::move(edges)) {
    for (auto& e : edges_) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n_)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("self-loop not allowed");
        if (e.sign != 1 && e.sign != -1)
            throw std::invalid_argument("edge sign must be +1 or -1");
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const SignedEdge& a, const SignedEdge& b) {
                  return std::pair(a.u, a.v) < std::pair(b.u, b.v);
              });
    for (size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v)
            throw std::invalid_argument("duplicate edge");
    adj_.assign(n_, {});
    for (const auto& e : edges_) {
        adj_[e.u].emplace_back(e.v, e.sign);
        adj_[e.v].emplace_back(e.u, e.sign);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

int SignedGraph::sign(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::out_of_range("vertex out of range");
    if (u == v) return 0;
    const auto& nb = adj_[u];
    auto it = std::lower_bound(nb.begin(), nb.end(), std::pair(v, -1));
    if (it != nb.end() && it->first == v) return it->second;
    return 0;
}

std::vector<int> SignedGraph::degrees() const {
    std::vector<int> d(n_, 0);
    for (const auto& e : edges_) {
        ++d[e.u];
        ++d[e.v];
    }
    return d;
}

int SignedGraph::negative_edge_count() const {
    int k = 0;
    for (const auto& e : edges_) k += (e.sign < 0);
    return k;
}

namespace {

std::vector<char> subset_mask(int n, const std::vector<int>& u) {
    std::vector<char> in(n, 0);
    for (int v : u) {
        if (v < 0 || v >= n) throw std::out_of_range("vertex out of range");
        in[v] = 1;
    }
    return in;
}

}  // namespace

SignedGraph switched(const SignedGraph& g, const std::vector<int>& u) {
    auto in = subset_mask(g.order(), u);
    auto edges = g.edges();
    for (auto& e : edges)
        if (in[e.u] != in[e.v]) e.sign = -e.sign;
    return SignedGraph(g.order(), std::move(edges));
}

SignedGraph negated(const SignedGraph& g) {
    auto edges = g.edges();
    for (auto& e : edges) e.sign = -e.sign;
    return SignedGraph(g.order(), std::move(edges));
}

SignedGraph underlying(const SignedGraph& g) {
    auto edges = g.edges();
    for (auto& e : edges) e.sign = +1;
    return SignedGraph(g.order(), std::move(edges));
}

std::vector<int> component_labels(const SignedGraph& g) {
    const int n = g.order();
    std::vector<int> comp(n, -1);
    int c = 0;
    for (int r = 0; r < n; ++r) {
        if (comp[r] >= 0) continue;
        comp[r] = c;
        std::queue<int> q;
        q.push(r);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (auto [w, s] : g.neighbors()[v]) {
                (void)s;
                if (comp[w] < 0) {
                    comp[w] = c;
                    q.push(w);
                }
            }
        }
        ++c;
    }
    return comp;
}

int component_count(const SignedGraph& g) {
    auto comp = component_labels(g);
    return comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
}

bool is_connected(const SignedGraph& g) { return component_count(g) <= 1; }

CycleSignSignature cycle_sign_signature(const SignedGraph& g) {
    const int n = g.order();
    std::vector<int> vs(n, 0);  // cumulative path sign from the BFS root
    std::vector<char> seen(n, 0);
    CycleSignSignature sig;
    // Mark forest edges while BFS'ing with ascending neighbor order.
    std::vector<std::pair<int, int>> forest;
    for (int r = 0; r < n; ++r) {
        if (seen[r]) continue;
        seen[r] = 1;
        vs[r] = +1;
        std::queue<int> q;
        q.push(r);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (auto [w, s] : g.neighbors()[v]) {
                if (!seen[w]) {
                    seen[w] = 1;
                    vs[w] = vs[v] * s;
                    forest.emplace_back(std::min(v, w), std::max(v, w));
                    q.push(w);
                }
            }
        }
    }
    std::sort(forest.begin(), forest.end());
    sig.forest_edges = forest;
    for (const auto& e : g.edges()) {
        if (std::binary_search(forest.begin(), forest.end(),
                               std::pair(e.u, e.v)))
            continue;
        sig.cotree_edges.emplace_back(e.u, e.v);
        sig.signs.push_back(e.sign * vs[e.u] * vs[e.v]);
    }
    return sig;
}

bool is_balanced(const SignedGraph& g) {
    auto sig = cycle_sign_signature(g);
    return std::all_of(sig.signs.begin(), sig.signs.end(),
                       [](int s) { return s > 0; });
}

bool switching_equivalent(const SignedGraph& a, const SignedGraph& b) {
    if (a.order() != b.order())
        throw UnderlyingMismatch("graphs have different orders");
    if (a.size() != b.size())
        throw UnderlyingMismatch("graphs have different edge sets");
    for (size_t i = 0; i < a.edges().size(); ++i) {
        const auto& ea = a.edges()[i];
        const auto& eb = b.edges()[i];
        if (ea.u != eb.u || ea.v != eb.v)
            throw UnderlyingMismatch("graphs have different edge sets");
    }
    return cycle_sign_signature(a) == cycle_sign_signature(b);
}

FrustrationCertificate frustration_certificate(const SignedGraph& g) {
    const int n = g.order();
    if (n > 30) throw SizeLimit("frustration index is exact only for n <= 30");
    auto comp = component_labels(g);
    int c = n ? 1 + *std::max_element(comp.begin(), comp.end()) : 0;
    std::vector<std::vector<int>> members(c);
    for (int v = 0; v < n; ++v) members[comp[v]].push_back(v);

    std::vector<int> s(n, +1), best_s(n, +1);
    int total = 0;
    for (int ci = 0; ci < c; ++ci) {
        const auto& vs = members[ci];
        const int k = static_cast<int>(vs.size());
        // Edges inside this component (every edge has both ends here).
        std::vector<SignedEdge> es;
        for (const auto& e : g.edges())
            if (comp[e.u] == ci) es.push_back(e);
        for (int v : vs) s[v] = +1;
        int cur = 0;
        for (const auto& e : es) cur += (e.sign < 0);
        int best = cur;
        for (int v : vs) best_s[v] = +1;
        if (k >= 2 && best > 0) {
            // Gray-code walk over sign assignments of vs[1..k-1].
            const uint64_t steps = uint64_t(1) << (k - 1);
            for (uint64_t i = 1; i < steps; ++i) {
                int bit = __builtin_ctzll(i);
                int w = vs[1 + bit];
                s[w] = -s[w];
                for (auto [x, sgn] : g.neighbors()[w])
                    cur += (sgn * s[w] * s[x] < 0) ? +1 : -1;
                if (cur < best) {
                    best = cur;
                    for (int v : vs) best_s[v] = s[v];
                    if (best == 0) break;
                }
            }
        }
        total += best;
    }
    FrustrationCertificate cert;
    cert.eps = total;
    for (int v = 0; v < n; ++v)
        if (best_s[v] < 0) cert.switch_set.push_back(v);
    cert.minimized = switched(g, cert.switch_set);
    return cert;
}

int frustration_index(const SignedGraph& g) {
    if (is_balanced(g)) return 0;
    return frustration_certificate(g).eps;
}

SignedGraph induced(const SignedGraph& g, const std::vector<int>& verts) {
    auto vs = verts;
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    std::vector<int> remap(g.order(), -1);
    for (size_t i = 0; i < vs.size(); ++i) {
        if (vs[i] < 0 || vs[i] >= g.order())
            throw std::out_of_range("vertex out of range");
        remap[vs[i]] = static_cast<int>(i);
    }
    std::vector<SignedEdge> edges;
    for (const auto& e : g.edges())
        if (remap[e.u] >= 0 && remap[e.v] >= 0)
            edges.push_back({remap[e.u], remap[e.v], e.sign});
    return SignedGraph(static_cast<int>(vs.size()), std::move(edges));
}

}  // namespace sgt
