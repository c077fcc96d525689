#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ramsey/extender.hpp"
#include "ramsey/gluer.hpp"

namespace ramsey {

// Degree sequence of the core's vertices measured inside an extension graph.
struct PairKey {
    std::vector<int> degs;
    bool operator==(const PairKey&) const = default;
};

// A census class used in plan files and exclusion lists; exact_edges
// distinguishes e = X stages from e <= X ranges.
struct ClassSpec {
    CensusSpec base;
    bool exact_edges = false;

    bool matches(const Graph& g) const;
    std::string to_string() const;
};
ClassSpec parse_class_spec(const std::string& text);

// Reconstruct d_reg-regular graphs of R(3, target_t, target_n) from two
// one-vertex extensions of a shared core at two nonadjacent apexes with
// disjoint neighbourhoods.
struct PairGlueProblem {
    Graph core;              // G' in R(3, target_t - 2, m)
    int target_t = 0;
    int target_n = 0;        // = m + 2 + 2 * target_degree
    int target_degree = 0;   // d_reg
    CensusSpec extension_spec;  // descriptive; validated against the derived values
};

// Requires `embedding` to be an induced-subgraph map of core into ext.
PairKey pair_key(const Graph& core, const Graph& ext, std::span<const int> embedding);

// The unique partner key: partner[x] = d_reg + deg_core(x) - key[x];
// nullopt when some entry would go negative.
std::optional<PairKey> complement_key(const PairKey& key, const Graph& core, int d_reg);

// Closure of g under single-edge removals whose endpoints both have degree
// >= floor + 1, restricted to graphs that stay Ramsey(3, target_t); DFS with
// canonical-form memoization, every visited graph returned (g included).
CanonicalGraphSet edge_removal_closure(const Graph& g, int floor, int target_t);

// Drops extension graphs with some dual neighbourhood in an already-processed
// core class.
std::vector<Graph> exclusion_filter(const std::vector<Graph>& outputs,
                                    const std::vector<ClassSpec>& processed);
bool has_dual_in_class(const Graph& ext, const std::vector<ClassSpec>& processed);

CanonicalGraphSet pair_glue(const PairGlueProblem& problem,
                            const std::vector<ClassSpec>& exclude = {});

// One directive per line: core <spec> [exclude <spec,...>]
struct PlanLine {
    ClassSpec core_class;
    std::vector<ClassSpec> exclude;
};
std::vector<PlanLine> parse_plan(std::istream& in);

}  // namespace ramsey
