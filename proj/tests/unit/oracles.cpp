#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace oracle {

ComputationalGraph make(std::size_t n, std::size_t k, std::vector<Edge> edges,
                        std::vector<Color> colors) {
  return compgraph::validate(n, k, edges, colors);
}

ComputationalGraph figure1_left() {
  return make(5, 3, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 5}, {4, 5}}, {1, 2, 1, 3, 3});
}

ComputationalGraph figure1_middle() {
  return make(5, 3, {{1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 5}, {4, 5}}, {1, 2, 3, 1, 3});
}

ComputationalGraph figure1_right() {
  return make(5, 3, {{1, 2}, {1, 3}, {1, 4}, {3, 4}, {2, 5}, {4, 5}}, {1, 3, 2, 1, 3});
}

namespace {

ComputationalGraph figure2_with(std::vector<Edge> middle) {
  std::vector<Edge> edges = {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {6, 10}, {7, 10}, {8, 10}, {9, 10}};
  edges.insert(edges.end(), middle.begin(), middle.end());
  return make(10, 3, edges, {3, 1, 1, 1, 1, 2, 2, 2, 2, 3});
}

}  // namespace

ComputationalGraph figure2_left() {
  return figure2_with({{2, 6}, {2, 7}, {3, 7}, {3, 8}, {4, 8}, {4, 9}, {5, 9}, {5, 6}});
}

ComputationalGraph figure2_right() {
  return figure2_with({{2, 6}, {2, 7}, {3, 6}, {3, 7}, {4, 8}, {4, 9}, {5, 8}, {5, 9}});
}

bool path_condition(std::size_t n, const std::vector<Edge>& edges) {
  auto reach = [&](Vertex start, bool forward) {
    std::vector<bool> seen(n + 1, false);
    std::vector<Vertex> stack = {start};
    seen[start] = true;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (const Edge& e : edges) {
        Vertex from = forward ? e.from : e.to;
        Vertex to = forward ? e.to : e.from;
        if (from == v && !seen[to]) {
          seen[to] = true;
          stack.push_back(to);
        }
      }
    }
    return seen;
  };
  const auto fwd = reach(1, true);
  const auto bwd = reach(static_cast<Vertex>(n), false);
  for (std::size_t v = 1; v <= n; ++v) {
    if (!fwd[v] || !bwd[v]) return false;
  }
  return true;
}

bool isomorphic(const ComputationalGraph& a, const ComputationalGraph& b) {
  const std::size_t n = a.vertex_count();
  if (n != b.vertex_count()) return false;
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 1);
  do {
    bool ok = true;
    for (Vertex i = 1; i <= n && ok; ++i) ok = a.color(i) == b.color(p[i - 1]);
    for (Vertex i = 1; i <= n && ok; ++i) {
      for (Vertex j = 1; j <= n && ok; ++j) {
        ok = a.has_edge(i, j) == b.has_edge(p[i - 1], p[j - 1]);
      }
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

std::vector<std::vector<Vertex>> linear_extensions(const ComputationalGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 1);
  const auto edges = g.edges();
  do {
    if (std::all_of(edges.begin(), edges.end(),
                    [&](const Edge& e) { return p[e.from - 1] < p[e.to - 1]; })) {
      out.push_back(p);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<ComputationalGraph> all_valid_graphs(std::size_t max_vertices, std::size_t max_edges,
                                                 std::size_t colors, bool reserved_io) {
  std::vector<ComputationalGraph> out;
  const std::size_t k = reserved_io ? colors + 2 : colors;
  for (std::size_t n = 2; n <= max_vertices; ++n) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex i = 1; i <= n; ++i) {
      for (Vertex j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t t = 0; t < pairs.size(); ++t) {
        if (mask >> t & 1) edges.push_back({pairs[t].first, pairs[t].second});
      }
      if (edges.size() > max_edges || !path_condition(n, edges)) continue;
      std::vector<Color> c(n, 1);
      if (reserved_io) {
        c.front() = static_cast<Color>(colors + 1);
        c.back() = static_cast<Color>(colors + 2);
      }
      const std::size_t lo = reserved_io ? 1 : 0;
      const std::size_t hi = reserved_io ? n - 1 : n;
      while (true) {
        out.push_back(make(n, k, edges, c));
        std::size_t pos = hi;
        while (pos > lo && c[pos - 1] == colors) c[--pos] = 1;
        if (pos == lo) break;
        ++c[pos - 1];
      }
    }
  }
  return out;
}

std::size_t count_classes(std::size_t max_vertices, std::size_t max_edges, std::size_t colors,
                          bool reserved_io) {
  std::vector<ComputationalGraph> reps;
  for (const ComputationalGraph& g : all_valid_graphs(max_vertices, max_edges, colors, reserved_io)) {
    if (std::none_of(reps.begin(), reps.end(),
                     [&](const ComputationalGraph& r) { return isomorphic(r, g); })) {
      reps.push_back(g);
    }
  }
  return reps.size();
}

}  // namespace oracle
