#include "compgraph/isomorphism.hpp"

#include <string>
#include <vector>

namespace compgraph {

bool verify_witness(const ComputationalGraph& g1, const ComputationalGraph& g2,
                    const Permutation& p) {
  const std::size_t n = g1.vertex_count();
  if (g2.vertex_count() != n || p.size() != n) return false;
  for (Vertex i = 1; i <= n; ++i) {
    if (g1.color(i) != g2.color(p(i))) return false;
    for (Vertex j = 1; j <= n; ++j) {
      if (i == j) continue;
      // has_edge is false for reversed pairs, so both orientations are covered.
      if (g1.has_edge(i, j) != g2.has_edge(p(i), p(j))) return false;
    }
  }
  return true;
}

namespace {

struct Profile {
  Color color;
  std::size_t in;
  std::size_t out;
  bool operator==(const Profile&) const = default;
};

class Search {
 public:
  Search(const ComputationalGraph& g1, const ComputationalGraph& g2)
      : g1_(g1), g2_(g2), n_(g1.vertex_count()), images_(n_, 0), used_(n_ + 1, false) {
    candidates_.resize(n_ + 1);
    for (Vertex i = 1; i <= n_; ++i) {
      const Profile pi{g1.color(i), g1.in_degree(i), g1.out_degree(i)};
      for (Vertex j = 1; j <= n_; ++j) {
        const Profile pj{g2.color(j), g2.in_degree(j), g2.out_degree(j)};
        if (pi == pj) candidates_[i].push_back(j);
      }
    }
  }

  std::optional<Permutation> run() {
    for (Vertex i = 1; i <= n_; ++i) {
      if (candidates_[i].empty()) return std::nullopt;
    }
    if (!extend(1)) return std::nullopt;
    return Permutation(images_);
  }

 private:
  // Pairs between v and every already-mapped vertex must agree in both graphs.
  bool consistent(Vertex v, Vertex target) const {
    for (Vertex u = 1; u < v; ++u) {
      const Vertex pu = images_[u - 1];
      if (g1_.has_edge(u, v) != g2_.has_edge(pu, target)) return false;
      if (g2_.has_edge(target, pu)) return false;  // g1 has no edge v -> u since u < v
    }
    return true;
  }

  bool extend(Vertex v) {
    if (v > n_) return true;
    for (Vertex target : candidates_[v]) {
      if (used_[target] || !consistent(v, target)) continue;
      used_[target] = true;
      images_[v - 1] = target;
      if (extend(v + 1)) return true;
      used_[target] = false;
    }
    return false;
  }

  const ComputationalGraph& g1_;
  const ComputationalGraph& g2_;
  std::size_t n_;
  std::vector<std::vector<Vertex>> candidates_;
  std::vector<Vertex> images_;
  std::vector<bool> used_;
};

}  // namespace

IsoWitness are_isomorphic(const ComputationalGraph& g1, const ComputationalGraph& g2) {
  const std::size_t n = g1.vertex_count();
  if (g2.vertex_count() != n) return {};
  if (n > kOracleMaxVertices) {
    throw Error(ErrorKind::kCapabilityLimit,
                "isomorphism oracle is limited to " + std::to_string(kOracleMaxVertices) +
                    " vertices, got " + std::to_string(n));
  }
  auto mapping = Search(g1, g2).run();
  if (mapping && !verify_witness(g1, g2, *mapping)) {
    throw std::logic_error("isomorphism search produced an invalid witness");
  }
  return IsoWitness{std::move(mapping)};
}

}  // namespace compgraph
