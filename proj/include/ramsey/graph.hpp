#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace ramsey {

constexpr int kMaxOrder = 64;  // one machine word per adjacency row

// Subset of the vertices of some graph of order <= 64.
struct VertexSet {
    std::uint64_t bits = 0;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t b) : bits(b) {}

    static constexpr VertexSet full(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

    constexpr bool contains(int v) const { return (bits >> v) & 1; }
    constexpr VertexSet& add(int v) { bits |= std::uint64_t{1} << v; return *this; }
    constexpr VertexSet& remove(int v) { bits &= ~(std::uint64_t{1} << v); return *this; }
    constexpr int size() const { return std::popcount(bits); }
    constexpr bool empty() const { return bits == 0; }
    constexpr bool subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits & o.bits) != 0; }
    constexpr int lowest() const { return std::countr_zero(bits); }

    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits & b.bits); }
    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits | b.bits); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits & ~b.bits); }
    friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits == b.bits; }
    friend constexpr bool operator<(VertexSet a, VertexSet b) { return a.bits < b.bits; }
};

// for (int v : vertices_of(set)) ...
struct VertexRange {
    std::uint64_t bits;
    struct iterator {
        std::uint64_t rest;
        int operator*() const { return std::countr_zero(rest); }
        iterator& operator++() { rest &= rest - 1; return *this; }
        bool operator!=(const iterator& o) const { return rest != o.rest; }
    };
    iterator begin() const { return {bits}; }
    iterator end() const { return {0}; }
};
inline VertexRange vertices_of(VertexSet s) { return {s.bits}; }

// Undirected simple graph, order <= 64, one adjacency bitmask per vertex.
class Graph {
public:
    Graph() = default;
    explicit Graph(int order);

    int order() const { return int(adj_.size()); }
    VertexSet vertices() const { return VertexSet::full(order()); }
    VertexSet neighbours(int v) const { return VertexSet(adj_[v]); }
    std::uint64_t adj_bits(int v) const { return adj_[v]; }

    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1; }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    int degree(int v) const { return std::popcount(adj_[v]); }
    int edge_count() const;
    int max_degree() const;
    int min_degree() const;

    // symmetry, irreflexivity, no bits at or above order()
    bool valid() const;

    bool operator==(const Graph& o) const = default;

private:
    std::vector<std::uint64_t> adj_;
};

Graph relabel(const Graph& g, std::span<const int> perm);  // perm[old] = new label

bool is_triangle_free(const Graph& g);

// Induced subgraph on V \ ({v} u N(v)); mapping[new index] = original vertex.
struct DualNeighbourhood {
    Graph graph;
    std::vector<int> mapping;
};
DualNeighbourhood dual_neighbourhood(const Graph& g, int v);

// Sum over neighbours w of v of (refdeg - deg(w)). Requires refdeg >= max degree.
int epsilon(const Graph& g, int v, int refdeg);

struct DegreeProfile {
    std::map<int, int> counts;  // degree -> number of vertices
    int deficiency = 0;         // sum over v of (refdeg - deg(v))
};
DegreeProfile degree_profile(const Graph& g, int refdeg);

bool has_clique(const Graph& g, int size);

// R(3,t) for t = 1..9; these are the established values the degree-window
// arguments rely on.
int ramsey_number_3t(int t);

}  // namespace ramsey
