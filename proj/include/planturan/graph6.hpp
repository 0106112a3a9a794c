#pragma once

#include <string>
#include <string_view>

#include "planturan/graph.hpp"

namespace planturan {

class Graph6Error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// graph6: N(n) followed by the upper triangle of the adjacency matrix in
// column order (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed big-endian into
// 6-bit groups, each offset by 63. An optional ">>graph6<<" header and
// trailing newline are accepted on input.
std::string to_graph6(const Graph & g);
Graph from_graph6(std::string_view text);

}
