#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "compgraph/graph.hpp"

namespace compgraph {

// Two non-isomorphic graphs that receive the same invariant digest.
struct AdversarialPair {
  ComputationalGraph first;
  ComputationalGraph second;
};

// The 10-vertex, 16-edge counterexample. Vertices 2..5 take `color_a`,
// 6..9 take `color_b`; the input and output vertices take
// max(color_a, color_b) + 1, which is also the declared palette size.
AdversarialPair figure2_pair(Color color_a, Color color_b);

// Source -> layer A (m vertices) -> layer B (m vertices) -> sink, with a
// d-regular bipartite middle. `first` uses one circulant (A_u feeds
// B_u..B_{u+d-1} mod m); `second` uses two disjoint circulants on m/2 + m/2
// vertices. Throws kConstructionDegenerate unless 2 <= d <= m/2 with m even,
// or if the two graphs turn out isomorphic. Colors: A = 1, B = 2, source and sink = 3.
AdversarialPair bipartite_adversarial_pair(std::size_t degree, std::size_t size);

// Sorted connected-component sizes of the graph with vertices 1 and n
// removed, edges taken as undirected. An isomorphism invariant.
std::vector<std::size_t> middle_component_sizes(const ComputationalGraph& g);

struct NonIsomorphismCertificate {
  enum class Method { kOracle, kComponentSizes };
  Method method;
  // Component sizes of both middles (filled for either method).
  std::vector<std::size_t> first_components;
  std::vector<std::size_t> second_components;

  std::string describe() const;
};

// Proves the pair non-isomorphic: the exhaustive oracle when n fits its cap,
// otherwise unequal middle component sizes. Throws kConstructionDegenerate
// if neither check separates the graphs.
NonIsomorphismCertificate certify_non_isomorphic(const AdversarialPair& pair);

}  // namespace compgraph
