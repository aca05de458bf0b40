#include "sgt/canonical.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace sgt {

int pair_bit(int n, int u, int v) {
    // Lexicographic (u,v) pair order: all pairs (0,*), then (1,*), ...
    return u * n - u * (u + 1) / 2 + (v - u - 1);
}

uint64_t underlying_mask(const SignedGraph& g) {
    if (g.order() > 11)
        throw SizeLimit("edge bitmasks support n <= 11");
    uint64_t mask = 0;
    for (const auto& e : g.edges())
        mask |= uint64_t(1) << pair_bit(g.order(), e.u, e.v);
    return mask;
}

const std::vector<std::vector<int>>& all_permutations(int n) {
    if (n < 0 || n > 9) throw SizeLimit("permutation tables support n <= 9");
    static std::array<std::vector<std::vector<int>>, 10> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto& entry = cache[n];
    if (entry.empty()) {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        do {
            entry.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
    }
    return entry;
}

uint64_t permute_mask(int n, uint64_t mask, const std::vector<int>& perm) {
    uint64_t out = 0;
    while (mask) {
        int bit = __builtin_ctzll(mask);
        mask &= mask - 1;
        // Invert pair_bit: find (u, v) for this bit index.
        int u = 0, base = 0;
        while (base + (n - u - 1) <= bit) {
            base += n - u - 1;
            ++u;
        }
        int v = u + 1 + (bit - base);
        int pu = perm[u], pv = perm[v];
        if (pu > pv) std::swap(pu, pv);
        out |= uint64_t(1) << pair_bit(n, pu, pv);
    }
    return out;
}

uint64_t canonical_underlying_mask(int n, uint64_t mask) {
    uint64_t best = ~uint64_t(0);
    for (const auto& perm : all_permutations(n))
        best = std::min(best, permute_mask(n, mask, perm));
    return best;
}

namespace {

SignedGraph permuted(const SignedGraph& g, const std::vector<int>& perm) {
    std::vector<SignedEdge> edges;
    edges.reserve(g.edges().size());
    for (const auto& e : g.edges()) {
        int u = perm[e.u], v = perm[e.v];
        if (u > v) std::swap(u, v);
        edges.push_back({u, v, e.sign});
    }
    return SignedGraph(g.order(), std::move(edges));
}

uint32_t signature_bits(const SignedGraph& g, int* cotree_size) {
    auto sig = cycle_sign_signature(g);
    if (sig.signs.size() > 32)
        throw SizeLimit("signature bitmasks support cotree size <= 32");
    uint32_t bits = 0;
    for (size_t i = 0; i < sig.signs.size(); ++i)
        if (sig.signs[i] < 0) bits |= uint32_t(1) << i;
    if (cotree_size) *cotree_size = static_cast<int>(sig.signs.size());
    return bits;
}

}  // namespace

CanonicalForm canonical_form(const SignedGraph& g) {
    const int n = g.order();
    CanonicalForm f;
    f.n = n;
    if (n == 0) return f;
    uint64_t mask = underlying_mask(g);
    uint64_t best_mask = ~uint64_t(0);
    std::vector<const std::vector<int>*> argmin;
    for (const auto& perm : all_permutations(n)) {
        uint64_t pm = permute_mask(n, mask, perm);
        if (pm < best_mask) {
            best_mask = pm;
            argmin.clear();
        }
        if (pm == best_mask) argmin.push_back(&perm);
    }
    f.mask = best_mask;
    bool have = false;
    for (const auto* perm : argmin) {
        int cs = 0;
        uint32_t sig = signature_bits(permuted(g, *perm), &cs);
        if (!have || sig < f.sig) {
            f.sig = sig;
            f.cotree_size = cs;
            have = true;
        }
    }
    return f;
}

SignedGraph canonical_representative(const CanonicalForm& f) {
    std::vector<SignedEdge> edges;
    uint64_t mask = f.mask;
    while (mask) {
        int bit = __builtin_ctzll(mask);
        mask &= mask - 1;
        int u = 0, base = 0;
        while (base + (f.n - u - 1) <= bit) {
            base += f.n - u - 1;
            ++u;
        }
        int v = u + 1 + (bit - base);
        edges.push_back({u, v, +1});
    }
    SignedGraph g(f.n, std::move(edges));
    // Flip the cotree edges flagged negative in the signature.
    auto sig = cycle_sign_signature(g);
    std::vector<SignedEdge> signed_edges = g.edges();
    for (size_t i = 0; i < sig.cotree_edges.size(); ++i) {
        if (!(f.sig & (uint32_t(1) << i))) continue;
        auto [u, v] = sig.cotree_edges[i];
        for (auto& e : signed_edges)
            if (e.u == u && e.v == v) e.sign = -1;
    }
    return SignedGraph(f.n, std::move(signed_edges));
}

std::string to_string(const CanonicalForm& f) {
    std::ostringstream out;
    out << "n=" << f.n << " mask=0x" << std::hex << f.mask << std::dec
        << " sig=0x" << std::hex << f.sig << std::dec << "/" << f.cotree_size;
    return out.str();
}

bool same_class_up_to_relabeling(const SignedGraph& a, const SignedGraph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace sgt
