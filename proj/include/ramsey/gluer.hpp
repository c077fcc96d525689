#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/indset.hpp"

namespace ramsey {

// Produce all graphs in R(3, tbound+1, n+1+d, e <= max_edges) having an apex
// vertex of degree d whose dual neighbourhood is `core`.
struct GluingProblem {
    Graph core;                    // a member of R(3, tbound, n)
    int apex_degree = 0;           // d, 0 <= d <= tbound
    int tbound = 0;                // t of the core; the target is R(3, t+1)
    std::optional<int> max_edges;  // edge cap on the output graphs
    std::optional<int> min_degree; // degree floor on every output vertex
};

struct CompatibleTuple {
    std::vector<int> indices;  // non-decreasing indices into a MaximalIsIndex
};

// Core vertices keep their labels; apex neighbours v_1..v_d become vertices
// n..n+d-1 with neighbourhood sets[i] plus the apex; the apex is vertex n+d.
// Throws if some set is not independent in the core.
Graph construct_glued_graph(const Graph& core, const std::vector<VertexSet>& sets);

// Depth-first over non-decreasing index tuples, filtering by the accumulated
// AND of pair_bv rows; tail-block members are admitted only when enough later
// blocks remain; the |K| >= 3 independence checks run once a pairwise
// consistent d-tuple is found, in ascending-size lexicographic order, and a
// failure at K backjumps to level max(K). Visits each fully compatible
// multiset exactly once.
void search_compatible_maximal_tuples(const MaximalIsIndex& index, int d, AlphaSolver& solver,
                                      const std::function<void(const CompatibleTuple&)>& visit);

// Replace each maximal set of the tuple by its allowed subsets, pruning on
// the total edge budget (sum of |S_i|); every emitted tuple has been
// recompatibility-checked (subsets of compatible sets need not be compatible).
void expand_maximal_solution(const MaximalIsIndex& index, const CompatibleTuple& tuple,
                             long edge_budget, AlphaSolver& solver,
                             const std::function<void(const std::vector<VertexSet>&)>& visit);

// Canonical graph6 line -> canonically labelled graph.
using CanonicalGraphSet = std::map<std::string, Graph>;

CanonicalGraphSet glue(const GluingProblem& problem);

// Same search but handing every (labelled) output graph to a visitor instead
// of canonicalizing; the pair gluer consumes raw extensions this way.
void glue_each(const GluingProblem& problem, const std::function<void(const Graph&)>& visit);

}  // namespace ramsey
