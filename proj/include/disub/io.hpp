#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "disub/digraph.hpp"

namespace disub {

// Simple undirected graph; edges stored with u < v, sorted, unique.
struct UndirectedGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

// Digraph text format:
//   p digraph <n> <m>
//   a <u> <v>            (m lines, 0 <= u,v < n, u != v, no duplicates)
// '#'-prefixed lines are comments.
Digraph parse_digraph(const std::string &text);
std::string format_digraph(const Digraph &d);

// Undirected variant: header `p graph <n> <m>`, edge lines `e <u> <v>` with u < v.
UndirectedGraph parse_undirected(const std::string &text);
std::string format_undirected(const UndirectedGraph &g);

std::string read_file(const std::string &path);

} // namespace disub
