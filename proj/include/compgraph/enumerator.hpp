#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "compgraph/graph.hpp"
#include "compgraph/invariant.hpp"

namespace compgraph {

struct EnumerationConfig {
  std::size_t max_vertices = 2;
  std::size_t max_edges = 1;
  // Interior palette size.
  std::size_t colors = 1;
  // Vertex 1 takes color colors+1, vertex n takes colors+2; interior
  // vertices draw from [1, colors].
  bool reserved_io = false;

  // Declared palette size of every generated graph.
  std::size_t palette() const noexcept { return reserved_io ? colors + 2 : colors; }
  // Throws kMalformedInput unless max_vertices >= 2, max_edges >= 1, colors >= 1.
  void check() const;
};

struct EnumerationOptions {
  Backend backend = Backend::kMd5;
  // 1 runs the sequential reference path. More workers hash disjoint runs of
  // adjacency matrices and merge in generation order, so the record stream is
  // identical to the sequential one.
  std::size_t workers = 1;
};

// First-observed representative of one digest class.
struct CanonicalRecord {
  Digest invariant;
  ComputationalGraph graph;
};

struct EnumerationSummary {
  std::map<std::size_t, std::size_t> per_vertex_count;
  std::size_t total = 0;
};

// Bit t is pair t in row-major order; set bit means the edge is present.
// Throws kMalformedInput when bits.size() != n(n-1)/2.
std::vector<Edge> decode_bitvector(std::size_t n, const std::vector<bool>& bits);

// |edges| <= max_edges and every vertex is reachable from 1 and reaches n.
bool passes_prune(std::span<const Edge> edges, std::size_t n, std::size_t max_edges);

// Generates graphs for n = 2..max_vertices, matrices in increasing numeric
// order of their pair bit vector (pair 0 is the least significant bit),
// colorings in lexicographic order, and hands each graph whose digest has not
// been seen before to `sink`.
EnumerationSummary enumerate(const EnumerationConfig& config, const EnumerationOptions& options,
                             const std::function<void(const CanonicalRecord&)>& sink);

std::vector<CanonicalRecord> enumerate_all(const EnumerationConfig& config,
                                           const EnumerationOptions& options = {});

// Visits every (matrix, coloring) that survives pruning, duplicates included,
// in generation order.
void for_each_candidate(const EnumerationConfig& config,
                        const std::function<void(const ComputationalGraph&)>& visit);

struct FalseMerge {
  Digest invariant;
  ComputationalGraph canonical;
  ComputationalGraph offending;
};

struct EnumerationReport {
  EnumerationSummary summary;
  std::size_t graphs_seen = 0;
  std::size_t duplicates_checked = 0;
  // Canonical representative first, then every duplicate in arrival order.
  std::map<Digest, std::vector<ComputationalGraph>> buckets;
  std::optional<FalseMerge> false_merge;

  bool passed() const noexcept { return !false_merge.has_value(); }
};

// Buckets `graphs` by digest in the given order and checks every duplicate
// against its bucket's first member with the isomorphism oracle. Stops at
// the first non-isomorphic duplicate.
EnumerationReport verify_corpus(std::span<const ComputationalGraph> graphs, Backend backend);

// Re-runs the enumeration keeping every candidate, appends `extra` graphs
// after it, and verifies bucket purity. Throws kCapabilityLimit when
// max_vertices (or an extra graph) exceeds the oracle's limit.
EnumerationReport verify_buckets(const EnumerationConfig& config, Backend backend = Backend::kMd5,
                                 std::span<const ComputationalGraph> extra = {});

}  // namespace compgraph
