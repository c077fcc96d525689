#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "ramsey/graph.hpp"

namespace ramsey {

struct Graph6Error : std::runtime_error {
    enum class Kind { BadHeader, Truncated, Padding, TooLarge };
    Graph6Error(Kind k, const std::string& what) : std::runtime_error(what), kind(k) {}
    Kind kind;
};

// Standard graph6, one line per graph. Orders 0..62 use the single-byte
// header, 63 and 64 the '~' three-byte header. Bit-exact.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view line);

}  // namespace ramsey
