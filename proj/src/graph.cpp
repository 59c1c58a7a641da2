#include "compgraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <queue>
#include <string>

namespace compgraph {

namespace {

std::size_t word_count(std::size_t n) { return (pair_count(n) + 63) / 64; }

bool test_bit(std::span<const std::uint64_t> words, std::size_t t) {
  return (words[t / 64] >> (t % 64)) & 1u;
}

void check_sizes(std::size_t n, std::size_t k, std::span<const Color> colors) {
  if (n == 0) throw Error(ErrorKind::kMalformedInput, "graph needs at least one vertex");
  if (k == 0) throw Error(ErrorKind::kMalformedInput, "palette needs at least one color");
  if (colors.size() != n) {
    throw Error(ErrorKind::kMalformedInput,
                "expected " + std::to_string(n) + " colors, got " +
                    std::to_string(colors.size()));
  }
}

void check_colors(std::size_t k, std::span<const Color> colors) {
  for (std::size_t v = 0; v < colors.size(); ++v) {
    if (colors[v] < 1 || colors[v] > k) {
      throw Error(ErrorKind::kColorOutOfRange,
                  "vertex " + std::to_string(v + 1) + " has color " +
                      std::to_string(colors[v]) + " outside [1, " + std::to_string(k) + "]",
                  v + 1);
    }
  }
}

void check_endpoints(std::size_t n, const Edge& e) {
  if (e.from < 1 || e.from > n || e.to < 1 || e.to > n) {
    throw Error(ErrorKind::kMalformedInput,
                "edge (" + std::to_string(e.from) + ", " + std::to_string(e.to) +
                    ") references a vertex outside [1, " + std::to_string(n) + "]");
  }
}

}  // namespace

Permutation::Permutation(std::vector<Vertex> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Vertex v : images_) {
    if (v < 1 || v > images_.size() || seen[v - 1]) {
      throw Error(ErrorKind::kMalformedInput, "mapping is not a bijection on [n]");
    }
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Vertex> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Vertex>(i + 1);
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<Vertex> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[images_[i] - 1] = static_cast<Vertex>(i + 1);
  }
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) {
    throw Error(ErrorKind::kMalformedInput, "cannot compose permutations of different size");
  }
  std::vector<Vertex> out(images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = images_[other.images_[i] - 1];
  return Permutation(std::move(out));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i + 1) return false;
  }
  return true;
}

ComputationalGraph ComputationalGraph::make_dag(std::size_t n, std::size_t k,
                                                std::span<const Edge> edges,
                                                std::span<const Color> colors) {
  check_sizes(n, k, colors);
  std::vector<std::uint64_t> words(word_count(n), 0);
  for (const Edge& e : edges) {
    check_endpoints(n, e);
    if (e.from >= e.to) {
      throw Error(ErrorKind::kEdgeOrderViolation,
                  "edge (" + std::to_string(e.from) + ", " + std::to_string(e.to) +
                      ") does not satisfy i < j",
                  e.from);
    }
    const std::size_t t = pair_index(n, e.from, e.to);
    words[t / 64] |= std::uint64_t{1} << (t % 64);
  }
  check_colors(k, colors);
  return ComputationalGraph(n, k, std::move(words),
                            std::vector<Color>(colors.begin(), colors.end()));
}

bool ComputationalGraph::has_edge(Vertex from, Vertex to) const noexcept {
  if (from < 1 || to > n_ || from >= to) return false;
  return test_bit(words_, pair_index(n_, from, to));
}

std::vector<Edge> ComputationalGraph::edges() const {
  std::vector<Edge> out;
  std::size_t t = 0;
  for (Vertex i = 1; i <= n_; ++i) {
    for (Vertex j = i + 1; j <= n_; ++j, ++t) {
      if (test_bit(words_, t)) out.push_back({i, j});
    }
  }
  return out;
}

std::size_t ComputationalGraph::edge_count() const noexcept {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::size_t ComputationalGraph::out_degree(Vertex v) const { return out_neighbors(v).size(); }
std::size_t ComputationalGraph::in_degree(Vertex v) const { return in_neighbors(v).size(); }

std::vector<Vertex> ComputationalGraph::out_neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (Vertex j = v + 1; j <= n_; ++j) {
    if (has_edge(v, j)) out.push_back(j);
  }
  return out;
}

std::vector<Vertex> ComputationalGraph::in_neighbors(Vertex v) const {
  std::vector<Vertex> in;
  for (Vertex i = 1; i < v; ++i) {
    if (has_edge(i, v)) in.push_back(i);
  }
  return in;
}

std::optional<Vertex> first_off_path_vertex(const ComputationalGraph& g) {
  const std::size_t n = g.vertex_count();
  // Edges point forward, so a single ascending (descending) sweep settles
  // forward (backward) reachability.
  std::vector<bool> from_input(n + 1, false), to_output(n + 1, false);
  from_input[1] = true;
  for (Vertex i = 1; i <= n; ++i) {
    if (!from_input[i]) continue;
    for (Vertex j : g.out_neighbors(i)) from_input[j] = true;
  }
  to_output[n] = true;
  for (Vertex j = static_cast<Vertex>(n); j >= 1; --j) {
    if (!to_output[j]) continue;
    for (Vertex i : g.in_neighbors(j)) to_output[i] = true;
  }
  for (Vertex v = 1; v <= n; ++v) {
    if (!from_input[v] || !to_output[v]) return v;
  }
  return std::nullopt;
}

ComputationalGraph validate(std::size_t n, std::size_t k, std::span<const Edge> edges,
                            std::span<const Color> colors) {
  ComputationalGraph g = ComputationalGraph::make_dag(n, k, edges, colors);
  if (auto v = first_off_path_vertex(g)) {
    throw Error(ErrorKind::kPathConditionViolation,
                "vertex " + std::to_string(*v) + " does not lie on a path from vertex 1 to vertex " +
                    std::to_string(n),
                *v);
  }
  return g;
}

ComputationalGraph apply_permutation(const ComputationalGraph& g, const Permutation& p) {
  const std::size_t n = g.vertex_count();
  if (p.size() != n) {
    throw Error(ErrorKind::kMalformedInput, "permutation size does not match vertex count");
  }
  std::vector<Edge> mapped;
  for (const Edge& e : g.edges()) {
    const Edge image{p(e.from), p(e.to)};
    if (image.from > image.to) {
      throw Error(ErrorKind::kNotLinearExtension,
                  "edge (" + std::to_string(e.from) + ", " + std::to_string(e.to) +
                      ") maps to (" + std::to_string(image.from) + ", " +
                      std::to_string(image.to) + ")",
                  e.from);
    }
    mapped.push_back(image);
  }
  std::vector<Color> colors(n);
  for (Vertex v = 1; v <= n; ++v) colors[p(v) - 1] = g.color(v);
  return ComputationalGraph::make_dag(n, g.color_count(), mapped, colors);
}

void for_each_linear_extension(const ComputationalGraph& g,
                               const std::function<bool(const Permutation&)>& visit) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Vertex>> preds(n + 1);
  for (Vertex v = 1; v <= n; ++v) preds[v] = g.in_neighbors(v);

  std::vector<Vertex> images(n, 0);
  std::vector<bool> used(n + 1, false);
  bool stop = false;

  // Assign p(1), p(2), ... in increasing candidate order. Every predecessor
  // of v has a smaller index and is already assigned when v is reached.
  std::function<void(Vertex)> extend = [&](Vertex v) {
    if (v > n) {
      if (!visit(Permutation(images))) stop = true;
      return;
    }
    for (Vertex target = 1; target <= n && !stop; ++target) {
      if (used[target]) continue;
      bool ok = true;
      for (Vertex u : preds[v]) {
        if (images[u - 1] > target) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      used[target] = true;
      images[v - 1] = target;
      extend(v + 1);
      used[target] = false;
    }
  };
  extend(1);
}

std::vector<Permutation> linear_extensions(const ComputationalGraph& g) {
  std::vector<Permutation> out;
  for_each_linear_extension(g, [&](const Permutation& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

ComputationalGraph normalize_dag(std::size_t n, std::size_t k, std::span<const Edge> edges,
                                 std::span<const Color> colors) {
  check_sizes(n, k, colors);
  std::vector<std::vector<Vertex>> succ(n + 1);
  std::vector<std::size_t> indegree(n + 1, 0);
  for (const Edge& e : edges) {
    check_endpoints(n, e);
    if (e.from == e.to) {
      throw Error(ErrorKind::kCycleDetected,
                  "self-loop at vertex " + std::to_string(e.from), e.from);
    }
    if (std::find(succ[e.from].begin(), succ[e.from].end(), e.to) != succ[e.from].end()) {
      continue;
    }
    succ[e.from].push_back(e.to);
    ++indegree[e.to];
  }

  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (Vertex v = 1; v <= n; ++v) {
    if (indegree[v] == 0) ready.push(v);
  }
  std::vector<Vertex> new_label(n + 1, 0);
  Vertex next = 1;
  while (!ready.empty()) {
    const Vertex v = ready.top();
    ready.pop();
    new_label[v] = next++;
    for (Vertex w : succ[v]) {
      if (--indegree[w] == 0) ready.push(w);
    }
  }
  if (next != n + 1) {
    for (Vertex v = 1; v <= n; ++v) {
      if (new_label[v] == 0) {
        throw Error(ErrorKind::kCycleDetected,
                    "vertex " + std::to_string(v) + " lies on or after a directed cycle", v);
      }
    }
  }

  std::vector<Edge> relabeled;
  relabeled.reserve(edges.size());
  for (Vertex v = 1; v <= n; ++v) {
    for (Vertex w : succ[v]) relabeled.push_back({new_label[v], new_label[w]});
  }
  std::vector<Color> recolored(n);
  for (Vertex v = 1; v <= n; ++v) recolored[new_label[v] - 1] = colors[v - 1];
  return validate(n, k, relabeled, recolored);
}

}  // namespace compgraph
