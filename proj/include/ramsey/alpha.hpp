#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

// Memoized independence numbers of one graph's vertex subsets. Orders up to
// `flat_threshold` use a flat 2^n table filled lazily (0xFF = unknown), larger
// orders fall back to a hash map. One solver per worker; never shared.
class AlphaSolver {
public:
    static constexpr int kDefaultFlatThreshold = 27;

    explicit AlphaSolver(const Graph& g, int flat_threshold = kDefaultFlatThreshold);

    const Graph& graph() const { return *g_; }

    // Largest independent set contained in `subset`.
    int alpha(VertexSet subset);

    // True iff `subset` contains an independent set of size k; short-circuits
    // without computing the full independence number.
    bool has_independent_set(VertexSet subset, int k);

private:
    int alpha_rec(std::uint64_t subset);
    bool search_rec(std::uint64_t subset, int k);
    int branch_vertex(std::uint64_t subset) const;
    int lookup(std::uint64_t subset) const;  // -1 if unknown
    void store(std::uint64_t subset, int value);

    const Graph* g_;
    bool use_flat_;
    std::vector<std::uint8_t> flat_;
    std::unordered_map<std::uint64_t, std::uint8_t> map_;
};

int independence_number(const Graph& g, VertexSet subset);
bool has_independent_set(const Graph& g, VertexSet subset, int k);

// No clique of size s and no independent set of size t. Generation elsewhere
// fixes s = 3; verification is general in (s, t).
bool is_ramsey(const Graph& g, int s, int t);

}  // namespace ramsey
