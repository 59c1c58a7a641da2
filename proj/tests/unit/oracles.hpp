#pragma once

// Brute-force reference implementations used as test oracles. They share no
// code with the library beyond the public graph accessors.

#include <cstddef>
#include <vector>

#include "compgraph/graph.hpp"

namespace oracle {

using compgraph::Color;
using compgraph::ComputationalGraph;
using compgraph::Edge;
using compgraph::Vertex;

ComputationalGraph make(std::size_t n, std::size_t k, std::vector<Edge> edges,
                        std::vector<Color> colors);

// The three isomorphic "Figure 1" graphs: left, then 3 and 4 exchanged, then
// relabeled by [1, 3, 4, 2, 5].
ComputationalGraph figure1_left();
ComputationalGraph figure1_middle();
ComputationalGraph figure1_right();

// The 10-vertex "Figure 2" pair, vertices 2..5 colored 1,
// 6..9 colored 2, input/output colored 3.
ComputationalGraph figure2_left();
ComputationalGraph figure2_right();

// Every vertex reachable from 1 and reaching n, by plain DFS over an edge list.
bool path_condition(std::size_t n, const std::vector<Edge>& edges);

// Tries all n! bijections against the definition directly.
bool isomorphic(const ComputationalGraph& a, const ComputationalGraph& b);

// All permutations p (as image vectors) with p(i) < p(j) for every edge,
// found by filtering all n! permutations.
std::vector<std::vector<Vertex>> linear_extensions(const ComputationalGraph& g);

// Every valid (matrix, coloring) for n = 2..max_vertices with at most
// max_edges edges, generated independently of the library's enumerator.
std::vector<ComputationalGraph> all_valid_graphs(std::size_t max_vertices, std::size_t max_edges,
                                                 std::size_t colors, bool reserved_io);

// Isomorphism classes of all_valid_graphs, counted with `isomorphic` only.
std::size_t count_classes(std::size_t max_vertices, std::size_t max_edges, std::size_t colors,
                          bool reserved_io);

}  // namespace oracle
