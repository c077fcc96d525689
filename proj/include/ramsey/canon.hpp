#pragma once

#include <string>

#include "ramsey/graph.hpp"

namespace ramsey {

// Canonical byte string: the graph6 encoding of the canonically labelled
// graph. Two graphs are isomorphic iff their forms compare equal.
struct CanonicalForm {
    std::string bytes;
    auto operator<=>(const CanonicalForm&) const = default;
};

CanonicalForm canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);

// The canonical labelling itself: perm[old vertex] = canonical position.
std::vector<int> canonical_labelling(const Graph& g);

}  // namespace ramsey
