#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ramsey/gluer.hpp"

namespace ramsey {

// Parameters of a census like R(3, t, n, e <= max_edges).
struct CensusSpec {
    int s = 3;
    int t = 0;
    int n = 0;
    std::optional<int> max_edges;
};

// All ways to add one vertex to g in R(3,tbound) staying in R(3,tbound),
// i.e. attach a new vertex to an independent set S with
// independence_number(V \ S) <= tbound - 2, edge-filtered and canonically
// deduplicated. Throws if g is not Ramsey(3,tbound).
CanonicalGraphSet one_point_extensions(const Graph& g, int tbound,
                                       std::optional<int> max_edges = {});

// Non-deduplicating form feeding a visitor with labelled extensions; the
// census driver canonicalizes at the merge sink.
void one_point_extensions_each(const Graph& g, int tbound, std::optional<int> max_edges,
                               const std::function<void(const Graph&)>& visit);

struct CensusResult {
    std::vector<std::pair<int, std::size_t>> level_counts;  // (order, count)
    CanonicalGraphSet graphs;                               // the final level
};

// Bottom-up one-point census from `seeds` (all of order n0 < spec.n, complete
// for the relevant edge range -- the caller's obligation) up to order spec.n.
CensusResult census(const CensusSpec& spec, const std::vector<Graph>& seeds, int workers = 1);

}  // namespace ramsey
