#include "ramsey/graph.hpp"

#include <stdexcept>

namespace ramsey {

Graph::Graph(int order) {
    if (order < 0 || order > kMaxOrder)
        throw std::invalid_argument("graph order must be in [0, 64]");
    adj_.assign(std::size_t(order), 0);
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("self-loop");
    adj_[std::size_t(u)] |= std::uint64_t{1} << v;
    adj_[std::size_t(v)] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
    adj_[std::size_t(u)] &= ~(std::uint64_t{1} << v);
    adj_[std::size_t(v)] &= ~(std::uint64_t{1} << u);
}

int Graph::edge_count() const {
    int total = 0;
    for (std::uint64_t row : adj_) total += std::popcount(row);
    return total / 2;
}

int Graph::max_degree() const {
    int d = 0;
    for (std::uint64_t row : adj_) d = std::max(d, std::popcount(row));
    return d;
}

int Graph::min_degree() const {
    if (adj_.empty()) return 0;
    int d = kMaxOrder + 1;
    for (std::uint64_t row : adj_) d = std::min(d, std::popcount(row));
    return d;
}

bool Graph::valid() const {
    const int n = order();
    const std::uint64_t mask = VertexSet::full(n).bits;
    for (int v = 0; v < n; ++v) {
        if (adj_[std::size_t(v)] & ~mask) return false;
        if ((adj_[std::size_t(v)] >> v) & 1) return false;
        for (int u : vertices_of(VertexSet(adj_[std::size_t(v)])))
            if (!has_edge(u, v)) return false;
    }
    return true;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
    Graph out(g.order());
    for (int v = 0; v < g.order(); ++v)
        for (int u : vertices_of(g.neighbours(v)))
            if (u < v) out.add_edge(perm[std::size_t(u)], perm[std::size_t(v)]);
    return out;
}

bool is_triangle_free(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        for (int u : vertices_of(g.neighbours(v))) {
            if (u >= v) break;
            if (g.neighbours(u).intersects(g.neighbours(v))) return false;
        }
    return true;
}

DualNeighbourhood dual_neighbourhood(const Graph& g, int v) {
    VertexSet keep = g.vertices() - g.neighbours(v);
    keep.remove(v);
    DualNeighbourhood out;
    for (int u : vertices_of(keep)) out.mapping.push_back(u);
    out.graph = Graph(int(out.mapping.size()));
    for (std::size_t i = 0; i < out.mapping.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (g.has_edge(out.mapping[j], out.mapping[i])) out.graph.add_edge(int(j), int(i));
    return out;
}

int epsilon(const Graph& g, int v, int refdeg) {
    if (refdeg < g.max_degree())
        throw std::invalid_argument("epsilon: reference degree below max degree");
    int total = 0;
    for (int w : vertices_of(g.neighbours(v))) total += refdeg - g.degree(w);
    return total;
}

DegreeProfile degree_profile(const Graph& g, int refdeg) {
    if (refdeg < g.max_degree())
        throw std::invalid_argument("degree_profile: reference degree below max degree");
    DegreeProfile p;
    for (int v = 0; v < g.order(); ++v) {
        ++p.counts[g.degree(v)];
        p.deficiency += refdeg - g.degree(v);
    }
    return p;
}

namespace {

bool clique_search(const Graph& g, VertexSet cand, int need) {
    if (need == 0) return true;
    if (cand.size() < need) return false;
    for (int v : vertices_of(cand)) {
        if (clique_search(g, cand & g.neighbours(v), need - 1)) return true;
        cand.remove(v);
        if (cand.size() < need) return false;
    }
    return false;
}

}  // namespace

bool has_clique(const Graph& g, int size) {
    if (size <= 0) return true;
    if (size == 1) return g.order() >= 1;
    if (size == 2) return g.edge_count() >= 1;
    if (size == 3) return !is_triangle_free(g);
    return clique_search(g, g.vertices(), size);
}

int ramsey_number_3t(int t) {
    static constexpr int table[] = {0, 1, 3, 6, 9, 14, 18, 23, 28, 36};
    if (t < 1 || t > 9) throw std::out_of_range("R(3,t) known here only for t <= 9");
    return table[t];
}

}  // namespace ramsey
