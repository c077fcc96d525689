#include "ramsey/alpha.hpp"

#include <stdexcept>

namespace ramsey {

AlphaSolver::AlphaSolver(const Graph& g, int flat_threshold) : g_(&g) {
    use_flat_ = g.order() <= flat_threshold;
    if (use_flat_) flat_.assign(std::size_t(1) << g.order(), 0xFF);
}

int AlphaSolver::lookup(std::uint64_t subset) const {
    if (use_flat_) {
        std::uint8_t v = flat_[subset];
        return v == 0xFF ? -1 : int(v);
    }
    auto it = map_.find(subset);
    return it == map_.end() ? -1 : int(it->second);
}

void AlphaSolver::store(std::uint64_t subset, int value) {
    if (use_flat_)
        flat_[subset] = std::uint8_t(value);
    else
        map_.emplace(subset, std::uint8_t(value));
}

// Minimum-index vertex of maximum degree within the subset.
int AlphaSolver::branch_vertex(std::uint64_t subset) const {
    int best = -1, best_deg = -1;
    for (int v : vertices_of(VertexSet(subset))) {
        int d = std::popcount(g_->adj_bits(v) & subset);
        if (d > best_deg) {
            best_deg = d;
            best = v;
        }
    }
    return best;
}

int AlphaSolver::alpha_rec(std::uint64_t subset) {
    if (subset == 0) return 0;
    if (int memo = lookup(subset); memo >= 0) return memo;

    int u = branch_vertex(subset);
    int result;
    if ((g_->adj_bits(u) & subset) == 0) {
        // branch vertex isolated within subset => subset independent
        result = std::popcount(subset);
    } else {
        std::uint64_t without_u = subset & ~(std::uint64_t{1} << u);
        int skip = alpha_rec(without_u);
        int take = 1 + alpha_rec(without_u & ~g_->adj_bits(u));
        result = std::max(skip, take);
    }
    store(subset, result);
    return result;
}

int AlphaSolver::alpha(VertexSet subset) { return alpha_rec(subset.bits); }

bool AlphaSolver::search_rec(std::uint64_t subset, int k) {
    if (k <= 0) return true;
    if (std::popcount(subset) < k) return false;
    if (int memo = lookup(subset); memo >= 0) return memo >= k;

    int u = branch_vertex(subset);
    if ((g_->adj_bits(u) & subset) == 0) return std::popcount(subset) >= k;
    std::uint64_t without_u = subset & ~(std::uint64_t{1} << u);
    return search_rec(without_u & ~g_->adj_bits(u), k - 1) || search_rec(without_u, k);
}

bool AlphaSolver::has_independent_set(VertexSet subset, int k) {
    return search_rec(subset.bits, k);
}

int independence_number(const Graph& g, VertexSet subset) {
    AlphaSolver solver(g);
    return solver.alpha(subset);
}

bool has_independent_set(const Graph& g, VertexSet subset, int k) {
    AlphaSolver solver(g);
    return solver.has_independent_set(subset, k);
}

bool is_ramsey(const Graph& g, int s, int t) {
    if (s < 1 || t < 1) throw std::invalid_argument("is_ramsey: s, t must be >= 1");
    if (has_clique(g, s)) return false;
    return !has_independent_set(g, g.vertices(), t);
}

}  // namespace ramsey
