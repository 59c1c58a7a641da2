#pragma once

#include <cstddef>
#include <optional>

#include "compgraph/graph.hpp"

namespace compgraph {

// Brute-force search is factorial; larger inputs are refused with
// kCapabilityLimit.
inline constexpr std::size_t kOracleMaxVertices = 12;

struct IsoWitness {
  // Set iff the graphs are isomorphic; maps vertices of the first graph to
  // vertices of the second.
  std::optional<Permutation> mapping;

  bool isomorphic() const noexcept { return mapping.has_value(); }
};

// True iff for all i, j: (i, j) in E1 <=> (p(i), p(j)) in E2, and for all i:
// c1(i) = c2(p(i)).
bool verify_witness(const ComputationalGraph& g1, const ComputationalGraph& g2,
                    const Permutation& p);

// Exact decision over all bijections on [n], restricted to candidates that
// agree on (color, in-degree, out-degree). Returns the lexicographically first
// witness. Graphs with different vertex counts are never isomorphic; the
// declared palette size is ignored.
IsoWitness are_isomorphic(const ComputationalGraph& g1, const ComputationalGraph& g2);

}  // namespace compgraph
