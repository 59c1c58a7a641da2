#include <doctest.h>

#include "compgraph/adversarial.hpp"
#include "compgraph/invariant.hpp"
#include "compgraph/isomorphism.hpp"
#include "oracles.hpp"

using namespace compgraph;

TEST_CASE("figure2_pair reproduces the drawn graphs") {
  const AdversarialPair pair = figure2_pair(1, 2);
  CHECK(pair.first == oracle::figure2_left());
  CHECK(pair.second == oracle::figure2_right());
  CHECK(pair.first.vertex_count() == 10);
  CHECK(pair.first.edge_count() == 16);
  CHECK(pair.second.edge_count() == 16);
}

TEST_CASE("figure2_pair collides for any layer colors") {
  for (Color a = 1; a <= 3; ++a) {
    for (Color b = 1; b <= 3; ++b) {
      const AdversarialPair pair = figure2_pair(a, b);
      CHECK(graph_invariant(pair.first, Backend::kMd5) == graph_invariant(pair.second, Backend::kMd5));
      CHECK(concat_digests_equal(pair.first, pair.second));
      CHECK_FALSE(are_isomorphic(pair.first, pair.second).isomorphic());
    }
  }
}

TEST_CASE("degree 2, size 4 is the figure 2 pair") {
  const AdversarialPair family = bipartite_adversarial_pair(2, 4);
  const AdversarialPair figure = figure2_pair(1, 2);
  CHECK(are_isomorphic(family.first, figure.first).isomorphic());
  CHECK(are_isomorphic(family.second, figure.second).isomorphic());
}

TEST_CASE("bipartite family collides and is certified") {
  for (auto [d, m] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 4}, {2, 6}, {3, 6}, {2, 8}, {4, 8}, {3, 10}}) {
    const AdversarialPair pair = bipartite_adversarial_pair(d, m);
    CHECK(pair.first.vertex_count() == 2 * m + 2);
    CHECK(pair.first.edge_count() == 2 * m + d * m);
    CHECK(graph_invariant(pair.first, Backend::kMd5) == graph_invariant(pair.second, Backend::kMd5));
    CHECK(concat_digests_equal(pair.first, pair.second));
    const auto cert = certify_non_isomorphic(pair);
    CHECK(cert.first_components == std::vector<std::size_t>{2 * m});
    CHECK(cert.second_components == std::vector<std::size_t>{m, m});
    CHECK(cert.method == (2 * m + 2 <= kOracleMaxVertices
                              ? NonIsomorphismCertificate::Method::kOracle
                              : NonIsomorphismCertificate::Method::kComponentSizes));
  }
}

TEST_CASE("degenerate parameters are refused") {
  for (auto [d, m] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 3}, {1, 4}, {3, 4}, {3, 5}, {4, 4}}) {
    try {
      bipartite_adversarial_pair(d, m);
      FAIL("expected ConstructionDegenerate");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kConstructionDegenerate);
    }
  }
}

TEST_CASE("middle component sizes") {
  CHECK(middle_component_sizes(oracle::figure1_left()) == std::vector<std::size_t>{1, 2});
  CHECK(middle_component_sizes(oracle::figure2_left()) == std::vector<std::size_t>{8});
  CHECK(middle_component_sizes(oracle::figure2_right()) == std::vector<std::size_t>{4, 4});
}
