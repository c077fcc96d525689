#pragma once

// Shared graph builders and brute-force oracles. The oracles are deliberately
// independent of the library search paths: plain subset enumeration and
// permutation checks only.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ramsey/alpha.hpp"
#include "ramsey/canon.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/graph6.hpp"

namespace th {

using ramsey::Graph;
using ramsey::VertexSet;

inline Graph path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph cycle(int n) {
    Graph g = path(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

inline Graph complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline Graph edgeless(int n) { return Graph(n); }

inline Graph star(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

inline Graph circulant(int n, std::initializer_list<int> dists) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int d : dists) g.add_edge(i, (i + d) % n);
    return g;
}

inline Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);                // spokes
    }
    return g;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) g.add_edge(i, j);
    return g;
}

inline Graph random_triangle_free(std::mt19937_64& rng, int n, double p) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    for (auto [i, j] : pairs)
        if (coin(rng) && !g.neighbours(i).intersects(g.neighbours(j))) g.add_edge(i, j);
    return g;
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

// --- brute-force oracles ---

inline bool independent_in(const Graph& g, std::uint64_t s) {
    for (int v : ramsey::vertices_of(VertexSet(s)))
        if (g.adj_bits(v) & s) return false;
    return true;
}

inline int alpha_brute(const Graph& g, VertexSet subset) {
    int best = 0;
    // iterate all submasks of subset.bits (including empty)
    std::uint64_t sub = subset.bits;
    while (true) {
        if (independent_in(g, sub)) best = std::max(best, std::popcount(sub));
        if (sub == 0) break;
        sub = (sub - 1) & subset.bits;
    }
    return best;
}

inline std::vector<VertexSet> independent_sets_brute(const Graph& g, int min_size) {
    std::vector<VertexSet> out;
    std::uint64_t full = g.vertices().bits;
    std::uint64_t sub = full;
    while (true) {
        if (std::popcount(sub) >= min_size && independent_in(g, sub)) out.push_back(VertexSet(sub));
        if (sub == 0) break;
        sub = (sub - 1) & full;
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<VertexSet> maximal_independent_sets_brute(const Graph& g) {
    std::vector<VertexSet> out;
    for (VertexSet s : independent_sets_brute(g, 0)) {
        bool maximal = true;
        for (int v = 0; v < g.order() && maximal; ++v)
            if (!s.contains(v) && independent_in(g, s.bits | (std::uint64_t{1} << v))) maximal = false;
        if (maximal) out.push_back(s);
    }
    return out;
}

inline bool isomorphic_brute(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> perm(std::size_t(a.order()));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (ramsey::relabel(a, perm) == b) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Canonical-form set of all graphs obtained by attaching one vertex to every
// subset, keeping those that are Ramsey of the requested type.
inline std::set<std::string> extensions_brute(const Graph& g, int t,
                                              std::optional<int> max_edges = {}) {
    std::set<std::string> out;
    const int n = g.order();
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        Graph h(n + 1);
        for (int v = 0; v < n; ++v)
            for (int u : ramsey::vertices_of(g.neighbours(v)))
                if (u < v) h.add_edge(u, v);
        for (int v : ramsey::vertices_of(VertexSet(s))) h.add_edge(v, n);
        if (max_edges && h.edge_count() > *max_edges) continue;
        if (ramsey::is_ramsey(h, 3, t)) out.insert(ramsey::canonical_form(h).bytes);
    }
    return out;
}

}  // namespace th
