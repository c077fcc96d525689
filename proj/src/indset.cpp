#include "ramsey/indset.hpp"

#include <algorithm>
#include <stdexcept>

namespace ramsey {

namespace {

// Bron-Kerbosch with pivoting, run on the complement (so "neighbours" below
// means non-adjacent vertices).
void bron_kerbosch(const Graph& g, std::uint64_t r, std::uint64_t p, std::uint64_t x,
                   std::vector<VertexSet>& out) {
    if (p == 0 && x == 0) {
        out.push_back(VertexSet(r));
        return;
    }
    int pivot = -1, best = -1;
    for (int u : vertices_of(VertexSet(p | x))) {
        int cnt = std::popcount(p & ~g.adj_bits(u) & ~(std::uint64_t{1} << u));
        if (cnt > best) {
            best = cnt;
            pivot = u;
        }
    }
    std::uint64_t cand = p & (g.adj_bits(pivot) | (std::uint64_t{1} << pivot));
    for (int v : vertices_of(VertexSet(cand))) {
        std::uint64_t nonadj = ~g.adj_bits(v) & ~(std::uint64_t{1} << v);
        bron_kerbosch(g, r | (std::uint64_t{1} << v), p & nonadj, x & nonadj, out);
        p &= ~(std::uint64_t{1} << v);
        x |= std::uint64_t{1} << v;
    }
}

void enum_indep_rec(const Graph& g, int next, std::uint64_t current, std::uint64_t allowed,
                    int min_size, std::vector<VertexSet>& out) {
    if (std::popcount(current) >= min_size) out.push_back(VertexSet(current));
    for (int v = next; v < g.order(); ++v) {
        if (!((allowed >> v) & 1)) continue;
        enum_indep_rec(g, v + 1, current | (std::uint64_t{1} << v),
                       allowed & ~g.adj_bits(v), min_size, out);
    }
}

}  // namespace

std::vector<VertexSet> enumerate_maximal_independent_sets(const Graph& g) {
    std::vector<VertexSet> out;
    if (g.order() == 0) {
        out.push_back(VertexSet());
        return out;
    }
    bron_kerbosch(g, 0, g.vertices().bits, 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexSet> enumerate_independent_sets(const Graph& g, int min_size) {
    std::vector<VertexSet> out;
    enum_indep_rec(g, 0, 0, g.vertices().bits, min_size, out);
    std::sort(out.begin(), out.end());
    return out;
}

int MaximalIsIndex::blocks_after(int i) const {
    if (i < head_size) return int(block_starts.size());
    auto it = std::upper_bound(block_starts.begin(), block_starts.end(), i);
    return int(block_starts.end() - it);
}

void assign_subset_representatives(MaximalIsIndex& index, const std::vector<VertexSet>& all_sets) {
    index.allowed_subsets.assign(index.maximal_sets.size(), {});
    for (VertexSet s : all_sets) {
        for (std::size_t i = 0; i < index.maximal_sets.size(); ++i) {
            if (s.subset_of(index.maximal_sets[i])) {
                index.allowed_subsets[i].push_back(s);
                break;
            }
        }
    }
    // size-major order enables prefix pruning on the edge budget
    for (auto& list : index.allowed_subsets)
        std::sort(list.begin(), list.end(), [](VertexSet a, VertexSet b) {
            return std::pair(a.size(), a.bits) < std::pair(b.size(), b.bits);
        });
}

void order_blocks(MaximalIsIndex& index) {
    const std::size_t nsets = index.maximal_sets.size();
    std::vector<char> taken(nsets, 0);
    std::vector<std::vector<std::size_t>> blocks;  // in selection order

    while (true) {
        std::size_t best_witness = 0, best_count = 0;
        for (std::size_t j = 0; j < index.witness_sets.size(); ++j) {
            std::size_t count = 0;
            for (std::size_t i = 0; i < nsets; ++i)
                if (!taken[i] && index.witness_bv[i].test(j)) ++count;
            if (count > best_count) {
                best_count = count;
                best_witness = j;
            }
        }
        if (best_count < 2) break;
        std::vector<std::size_t> block;
        for (std::size_t i = 0; i < nsets; ++i)
            if (!taken[i] && index.witness_bv[i].test(best_witness)) {
                taken[i] = 1;
                block.push_back(i);
            }
        blocks.push_back(std::move(block));
    }

    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < nsets; ++i)
        if (!taken[i]) order.push_back(i);
    index.head_size = int(order.size());
    index.block_starts.clear();
    // first-selected block goes to the very end
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
        index.block_starts.push_back(int(order.size()));
        order.insert(order.end(), it->begin(), it->end());
    }

    auto permute = [&](auto& vec) {
        auto copy = vec;
        for (std::size_t k = 0; k < order.size(); ++k) vec[k] = std::move(copy[order[k]]);
    };
    permute(index.maximal_sets);
    permute(index.witness_bv);
    if (!index.allowed_subsets.empty()) permute(index.allowed_subsets);
}

MaximalIsIndex build_index(const Graph& core, int tbound, int min_subset_size,
                           AlphaSolver& solver) {
    if (!is_ramsey(core, 3, tbound))
        throw std::invalid_argument("build_index: core is not a Ramsey(3,t) graph");
    (void)solver;

    MaximalIsIndex index;
    index.core = core;
    index.tbound = tbound;
    index.min_subset_size = min_subset_size;
    index.maximal_sets = enumerate_maximal_independent_sets(core);

    for (VertexSet s : enumerate_independent_sets(core, std::max(0, tbound - 1)))
        if (s.size() == tbound - 1) index.witness_sets.push_back(s);

    const std::size_t nsets = index.maximal_sets.size();
    const std::size_t nwit = index.witness_sets.size();
    index.witness_bv.assign(nsets, BitVec(nwit));
    for (std::size_t i = 0; i < nsets; ++i)
        for (std::size_t j = 0; j < nwit; ++j)
            if (!index.witness_sets[j].intersects(index.maximal_sets[i]))
                index.witness_bv[i].set(j);

    assign_subset_representatives(index, enumerate_independent_sets(core, min_subset_size));
    order_blocks(index);

    index.pair_bv.assign(nsets, BitVec(nsets));
    for (std::size_t i = 0; i < nsets; ++i)
        for (std::size_t j = i; j < nsets; ++j)
            if (index.witness_bv[i].and_is_zero(index.witness_bv[j])) {
                index.pair_bv[i].set(j);
                index.pair_bv[j].set(i);
            }
    return index;
}

MaximalIsIndex build_index(const Graph& core, int tbound, int min_subset_size) {
    AlphaSolver solver(core);
    return build_index(core, tbound, min_subset_size, solver);
}

}  // namespace ramsey
