#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "compgraph/error.hpp"

namespace compgraph {

// Vertices and colors are 1-indexed at every public interface.
using Vertex = std::uint32_t;
using Color = std::uint32_t;

struct Edge {
  Vertex from = 0;
  Vertex to = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Number of vertex pairs (i, j), i < j, on n vertices.
constexpr std::size_t pair_count(std::size_t n) noexcept { return n * (n - 1) / 2; }

// Row-major position of pair (i, j), 1 <= i < j <= n:
// (1,2), (1,3), ..., (1,n), (2,3), ..., (n-1,n).
constexpr std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) noexcept {
  return (i - 1) * n - (i - 1) * i / 2 + (j - i - 1);
}

// A bijection on [n]. Image of vertex v is `(*this)(v)`.
class Permutation {
 public:
  Permutation() = default;
  // Throws kMalformedInput unless `images` is a bijection on [images.size()].
  explicit Permutation(std::vector<Vertex> images);

  static Permutation identity(std::size_t n);

  Vertex operator()(Vertex v) const { return images_[v - 1]; }
  std::size_t size() const noexcept { return images_.size(); }
  std::span<const Vertex> images() const noexcept { return images_; }

  Permutation inverse() const;
  // (this after other)(v) = this(other(v))
  Permutation compose(const Permutation& other) const;
  bool is_identity() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Vertex> images_;
};

// A colored DAG (n, k, E, c) whose edges all satisfy i < j, stored as a
// packed upper-triangular bit matrix in row-major pair order.
//
// Instances are immutable. `make_dag` checks edge order and color range
// only; `validate` additionally enforces the input-to-output path condition.
class ComputationalGraph {
 public:
  static ComputationalGraph make_dag(std::size_t n, std::size_t k,
                                     std::span<const Edge> edges,
                                     std::span<const Color> colors);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t color_count() const noexcept { return k_; }

  bool has_edge(Vertex from, Vertex to) const noexcept;
  Color color(Vertex v) const { return colors_[v - 1]; }
  std::span<const Color> colors() const noexcept { return colors_; }

  // Edges in row-major pair order.
  std::vector<Edge> edges() const;
  std::size_t edge_count() const noexcept;

  std::size_t out_degree(Vertex v) const;
  std::size_t in_degree(Vertex v) const;
  std::vector<Vertex> out_neighbors(Vertex v) const;
  std::vector<Vertex> in_neighbors(Vertex v) const;

  // Raw adjacency bits, bit t of the packed vector is pair t.
  std::span<const std::uint64_t> adjacency_words() const noexcept { return words_; }

  friend bool operator==(const ComputationalGraph&, const ComputationalGraph&) = default;

 private:
  ComputationalGraph(std::size_t n, std::size_t k, std::vector<std::uint64_t> words,
                     std::vector<Color> colors)
      : n_(n), k_(k), words_(std::move(words)), colors_(std::move(colors)) {}

  std::size_t n_ = 0;
  std::size_t k_ = 0;
  std::vector<std::uint64_t> words_;
  std::vector<Color> colors_;
};

// First vertex (ascending) that is not both reachable from vertex 1 and able
// to reach vertex n, if any.
std::optional<Vertex> first_off_path_vertex(const ComputationalGraph& g);

// Full structural validation. Throws kEdgeOrderViolation, kColorOutOfRange,
// kPathConditionViolation (naming the vertex) or kMalformedInput.
ComputationalGraph validate(std::size_t n, std::size_t k, std::span<const Edge> edges,
                            std::span<const Color> colors);

// Relabels g by p: edge (i, j) becomes (p(i), p(j)) and vertex p(i) takes the
// color of i. Throws kNotLinearExtension if any edge would be reversed.
ComputationalGraph apply_permutation(const ComputationalGraph& g, const Permutation& p);

// Visits every permutation p for which apply_permutation(g, p) succeeds,
// in lexicographic order of (p(1), ..., p(n)). Return false from the visitor
// to stop early.
void for_each_linear_extension(const ComputationalGraph& g,
                               const std::function<bool(const Permutation&)>& visit);
std::vector<Permutation> linear_extensions(const ComputationalGraph& g);

// Accepts edges in any orientation, relabels vertices in Kahn order (smallest
// original index first among ready vertices), then validates.
ComputationalGraph normalize_dag(std::size_t n, std::size_t k,
                                 std::span<const Edge> edges,
                                 std::span<const Color> colors);

}  // namespace compgraph
