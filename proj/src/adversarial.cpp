#include "compgraph/adversarial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "compgraph/isomorphism.hpp"

namespace compgraph {

namespace {

// Layered graph: 1 -> A (2..m+1) -> B (m+2..2m+1) -> 2m+2.
// `middle` lists (a, b) with 0-based layer indices.
ComputationalGraph layered(std::size_t m, const std::vector<std::pair<std::size_t, std::size_t>>& middle,
                           Color color_a, Color color_b, Color io_color) {
  const std::size_t n = 2 * m + 2;
  std::vector<Edge> edges;
  auto a_vertex = [](std::size_t a) { return static_cast<Vertex>(2 + a); };
  auto b_vertex = [m](std::size_t b) { return static_cast<Vertex>(2 + m + b); };
  for (std::size_t a = 0; a < m; ++a) edges.push_back({1, a_vertex(a)});
  for (auto [a, b] : middle) edges.push_back({a_vertex(a), b_vertex(b)});
  for (std::size_t b = 0; b < m; ++b) edges.push_back({b_vertex(b), static_cast<Vertex>(n)});

  std::vector<Color> colors(n);
  colors.front() = io_color;
  colors.back() = io_color;
  for (std::size_t a = 0; a < m; ++a) colors[a + 1] = color_a;
  for (std::size_t b = 0; b < m; ++b) colors[m + 1 + b] = color_b;
  const std::size_t k = std::max({color_a, color_b, io_color});
  return validate(n, k, edges, colors);
}

// A_{offset+u} feeds B_{offset+(u+s) mod block} for s in [0, d).
void add_circulant(std::vector<std::pair<std::size_t, std::size_t>>& middle, std::size_t offset,
                   std::size_t block, std::size_t degree) {
  for (std::size_t u = 0; u < block; ++u) {
    for (std::size_t s = 0; s < degree; ++s) {
      middle.emplace_back(offset + u, offset + (u + s) % block);
    }
  }
}

std::string join(const std::vector<std::size_t>& xs) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? ", " : "") << xs[i];
  out << ']';
  return out.str();
}

}  // namespace

AdversarialPair figure2_pair(Color color_a, Color color_b) {
  if (color_a < 1 || color_b < 1) {
    throw Error(ErrorKind::kColorOutOfRange, "colors are 1-indexed");
  }
  const Color io = std::max(color_a, color_b) + 1;
  // 8-cycle through the middle versus two 4-cycles.
  const std::vector<std::pair<std::size_t, std::size_t>> cycle = {
      {0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}, {3, 0}};
  const std::vector<std::pair<std::size_t, std::size_t>> blocks = {
      {0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 3}};
  return {layered(4, cycle, color_a, color_b, io), layered(4, blocks, color_a, color_b, io)};
}

AdversarialPair bipartite_adversarial_pair(std::size_t degree, std::size_t size) {
  if (degree == 0 || size == 0) {
    throw Error(ErrorKind::kMalformedInput, "degree and size must be positive");
  }
  if (degree < 2 || size % 2 != 0 || degree > size / 2) {
    throw Error(ErrorKind::kConstructionDegenerate,
                "cannot split " + std::to_string(size) + " vertices per layer into two " +
                    std::to_string(degree) + "-regular circulant blocks with degree >= 2");
  }
  std::vector<std::pair<std::size_t, std::size_t>> single, split;
  add_circulant(single, 0, size, degree);
  add_circulant(split, 0, size / 2, degree);
  add_circulant(split, size / 2, size / 2, degree);
  AdversarialPair pair{layered(size, single, 1, 2, 3), layered(size, split, 1, 2, 3)};
  certify_non_isomorphic(pair);
  return pair;
}

std::vector<std::size_t> middle_component_sizes(const ComputationalGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 2) return {};
  // Union-find over vertices 2..n-1.
  std::vector<std::size_t> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Edge& e : g.edges()) {
    if (e.from == 1 || e.to == n) continue;
    parent[find(e.from)] = find(e.to);
  }
  std::vector<std::size_t> count(n + 1, 0);
  for (std::size_t v = 2; v < n; ++v) ++count[find(v)];
  std::vector<std::size_t> sizes;
  for (std::size_t c : count) {
    if (c > 0) sizes.push_back(c);
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

NonIsomorphismCertificate certify_non_isomorphic(const AdversarialPair& pair) {
  NonIsomorphismCertificate cert{NonIsomorphismCertificate::Method::kOracle,
                                 middle_component_sizes(pair.first),
                                 middle_component_sizes(pair.second)};
  if (pair.first.vertex_count() <= kOracleMaxVertices) {
    if (are_isomorphic(pair.first, pair.second).isomorphic()) {
      throw Error(ErrorKind::kConstructionDegenerate, "the two graphs are isomorphic");
    }
    return cert;
  }
  if (cert.first_components == cert.second_components) {
    throw Error(ErrorKind::kConstructionDegenerate,
                "middle component sizes coincide; cannot certify non-isomorphism");
  }
  cert.method = NonIsomorphismCertificate::Method::kComponentSizes;
  return cert;
}

std::string NonIsomorphismCertificate::describe() const {
  std::string how = method == Method::kOracle
                        ? "exhaustive permutation search found no isomorphism"
                        : "middle component sizes differ";
  return how + "; middle components " + join(first_components) + " vs " +
         join(second_components);
}

}  // namespace compgraph
