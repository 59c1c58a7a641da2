#pragma once

#include <string>
#include <string_view>

#include "compgraph/enumerator.hpp"
#include "compgraph/graph.hpp"

namespace compgraph {

// Graph text format: {"n": int, "k": int, "colors": [...], "edges": [[i, j], ...]}.
// "k" may be omitted, in which case it defaults to the largest color used.
// With `normalize`, edges may point either way and are relabeled by
// normalize_dag; otherwise they go through validate unchanged.
ComputationalGraph parse_graph(std::string_view text, bool normalize = false);
ComputationalGraph read_graph_file(const std::string& path, bool normalize = false);

// Single-line JSON, keys in the order n, k, colors, edges.
std::string graph_to_json(const ComputationalGraph& g);
void write_graph_file(const std::string& path, const ComputationalGraph& g);

// {"hash": hex, "n": int, "colors": [...], "edges": [[i, j], ...]}
std::string record_to_json(const CanonicalRecord& record);
// {"summary": {"per_n": {"2": c2, ...}, "total": t}}
std::string summary_to_json(const EnumerationSummary& summary);

}  // namespace compgraph
