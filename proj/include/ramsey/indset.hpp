#pragma once

#include <vector>

#include "ramsey/alpha.hpp"
#include "ramsey/bitvec.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

// All maximal independent sets (pivoting Bron-Kerbosch), sorted by bitmask.
std::vector<VertexSet> enumerate_maximal_independent_sets(const Graph& g);

// All independent sets of size >= min_size (the empty set included when
// min_size == 0), sorted by bitmask.
std::vector<VertexSet> enumerate_independent_sets(const Graph& g, int min_size);

// Compatibility machinery for gluing onto a core in R(3, tbound):
//  - witness_sets: the independent (tbound-1)-sets of the core;
//  - witness_bv[i] bit j  <=>  witness_sets[j] is disjoint from maximal_sets[i];
//  - pair_bv[i] bit j     <=>  witness_bv[i] AND witness_bv[j] == 0;
//  - allowed_subsets[i]: the independent sets assigned to maximal_sets[i]
//    (each set assigned once, to its bitmask-smallest containing maximal set),
//    sorted by (size, bitmask);
//  - the tail of maximal_sets is grouped into blocks whose members share a
//    witness and are therefore mutually incompatible; block_starts are the
//    ascending offsets of those blocks, head_size the unblocked prefix.
struct MaximalIsIndex {
    Graph core;
    int tbound = 0;
    int min_subset_size = 0;
    std::vector<VertexSet> maximal_sets;
    std::vector<VertexSet> witness_sets;
    std::vector<BitVec> witness_bv;
    std::vector<BitVec> pair_bv;
    std::vector<std::vector<VertexSet>> allowed_subsets;
    std::vector<int> block_starts;
    int head_size = 0;

    int set_count() const { return int(maximal_sets.size()); }
    // Number of blocks strictly after the block containing index i (the whole
    // tail counts for head indices).
    int blocks_after(int i) const;
};

// Requires is_ramsey(core, 3, tbound); throws std::invalid_argument otherwise.
MaximalIsIndex build_index(const Graph& core, int tbound, int min_subset_size,
                           AlphaSolver& solver);
MaximalIsIndex build_index(const Graph& core, int tbound, int min_subset_size = 0);

// Exposed pieces of build_index (also used directly by tests).
void assign_subset_representatives(MaximalIsIndex& index, const std::vector<VertexSet>& all_sets);
void order_blocks(MaximalIsIndex& index);

}  // namespace ramsey
