#include <doctest.h>

#include <set>

#include "compgraph/enumerator.hpp"
#include "compgraph/isomorphism.hpp"
#include "oracles.hpp"

using namespace compgraph;

namespace {

std::vector<ComputationalGraph> graphs_of(const std::vector<CanonicalRecord>& records) {
  std::vector<ComputationalGraph> out;
  for (const auto& r : records) out.push_back(r.graph);
  return out;
}

}  // namespace

TEST_CASE("decode_bitvector maps bit t to pair t") {
  const auto edges = decode_bitvector(3, {true, false, true});
  REQUIRE(edges.size() == 2);
  CHECK(edges[0] == Edge{1, 2});
  CHECK(edges[1] == Edge{2, 3});
  CHECK_THROWS_AS(decode_bitvector(3, {true}), Error);
}

TEST_CASE("small enumerations") {
  auto records = enumerate_all({2, 1, 1, false});
  REQUIRE(records.size() == 1);
  CHECK(records[0].graph.edges() == std::vector<Edge>{{1, 2}});

  records = enumerate_all({3, 3, 1, false});
  REQUIRE(records.size() == 3);
  CHECK(records[0].graph.edges() == std::vector<Edge>{{1, 2}});
  CHECK(records[1].graph.edges() == std::vector<Edge>{{1, 2}, {2, 3}});
  CHECK(records[2].graph.edges() == std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}});

  CHECK(enumerate_all({3, 3, 2, false}).size() == 20);
}

TEST_CASE("config checks") {
  CHECK_THROWS_AS(EnumerationConfig({1, 1, 1, false}).check(), Error);
  CHECK_THROWS_AS(EnumerationConfig({3, 0, 1, false}).check(), Error);
  CHECK_THROWS_AS(EnumerationConfig({3, 3, 0, false}).check(), Error);
  try {
    EnumerationConfig({12, 3, 1, false}).check();
    FAIL("expected CapabilityLimit");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kCapabilityLimit);
  }
}

TEST_CASE("reserved io colors pin the ends") {
  const EnumerationConfig config{4, 5, 2, true};
  CHECK(config.palette() == 4);
  for (const auto& r : enumerate_all(config)) {
    const auto& g = r.graph;
    CHECK(g.color_count() == 4);
    CHECK(g.color(1) == 3);
    CHECK(g.color(static_cast<Vertex>(g.vertex_count())) == 4);
    for (Vertex v = 2; v < g.vertex_count(); ++v) CHECK(g.color(v) <= 2);
  }
}

TEST_CASE("candidates match an independent generator") {
  for (bool reserved : {false, true}) {
    std::vector<ComputationalGraph> seen;
    for_each_candidate({5, 7, 2, reserved}, [&](const ComputationalGraph& g) { seen.push_back(g); });
    CHECK(seen == oracle::all_valid_graphs(5, 7, 2, reserved));
  }
}

TEST_CASE("generation order is by n, then matrix, then coloring") {
  const auto records = enumerate_all({5, 6, 2, false});
  for (std::size_t i = 1; i < records.size(); ++i) {
    CHECK(records[i - 1].graph.vertex_count() <= records[i].graph.vertex_count());
  }
  std::vector<ComputationalGraph> all;
  for_each_candidate({5, 6, 2, false}, [&](const ComputationalGraph& g) { all.push_back(g); });
  // Each record is the first candidate carrying its digest.
  std::size_t pos = 0;
  for (const auto& r : records) {
    while (pos < all.size() && !(all[pos] == r.graph)) ++pos;
    REQUIRE(pos < all.size());
    for (std::size_t q = 0; q < pos; ++q) {
      if (all[q].vertex_count() == r.graph.vertex_count()) {
        REQUIRE(graph_invariant(all[q], Backend::kMd5) != r.invariant);
      }
    }
  }
}

TEST_CASE("completeness and soundness for n <= 4") {
  for (std::size_t k : {1, 2}) {
    for (std::size_t e : {3, 4, 6}) {
      const auto records = graphs_of(enumerate_all({4, e, k, false}));
      for (std::size_t i = 0; i < records.size(); ++i) {
        for (std::size_t j = i + 1; j < records.size(); ++j) {
          REQUIRE_FALSE(oracle::isomorphic(records[i], records[j]));
        }
      }
      for (const auto& g : oracle::all_valid_graphs(4, e, k, false)) {
        std::size_t matches = 0;
        for (const auto& r : records) matches += oracle::isomorphic(g, r);
        REQUIRE(matches == 1);
      }
    }
  }
}

TEST_CASE("records are pairwise non-isomorphic for n <= 5") {
  const auto records = graphs_of(enumerate_all({5, 9, 1, true}));
  for (std::size_t i = 0; i < records.size(); ++i) {
    for (std::size_t j = i + 1; j < records.size(); ++j) {
      REQUIRE_FALSE(are_isomorphic(records[i], records[j]).isomorphic());
    }
  }
}

TEST_CASE("totals match the oracle-only counter") {
  CHECK(enumerate_all({2, 1, 1, false}).size() == oracle::count_classes(2, 1, 1, false));
  CHECK(enumerate_all({3, 3, 1, false}).size() == oracle::count_classes(3, 3, 1, false));
  CHECK(enumerate_all({3, 3, 2, false}).size() == oracle::count_classes(3, 3, 2, false));
  CHECK(enumerate_all({4, 5, 2, true}).size() == oracle::count_classes(4, 5, 2, true));
}

TEST_CASE("parallel workers reproduce the sequential stream") {
  const EnumerationConfig config{6, 8, 2, true};
  const auto sequential = enumerate_all(config);
  for (std::size_t workers : {2, 3, 8}) {
    const auto parallel = enumerate_all(config, {Backend::kMd5, workers});
    REQUIRE(parallel.size() == sequential.size());
    for (std::size_t i = 0; i < parallel.size(); ++i) {
      CHECK(parallel[i].invariant == sequential[i].invariant);
      CHECK(parallel[i].graph == sequential[i].graph);
    }
  }
}

TEST_CASE("summary counts records per n") {
  std::size_t streamed = 0;
  const auto summary = enumerate({4, 5, 1, false}, {}, [&](const CanonicalRecord&) { ++streamed; });
  CHECK(summary.total == streamed);
  std::size_t sum = 0;
  for (auto [n, c] : summary.per_vertex_count) sum += c;
  CHECK(sum == summary.total);
}

TEST_CASE("verify_buckets passes on the use-case configuration at n <= 4") {
  const auto report = verify_buckets({4, 9, 3, true});
  CHECK(report.passed());
  CHECK(report.buckets.size() == report.summary.total);
}

TEST_CASE("verify_corpus reports the figure 2 pair") {
  const std::vector<ComputationalGraph> pair = {oracle::figure2_left(), oracle::figure2_right()};
  const auto report = verify_corpus(pair, Backend::kMd5);
  REQUIRE_FALSE(report.passed());
  CHECK(report.false_merge->canonical == pair[0]);
  CHECK(report.false_merge->offending == pair[1]);

  const auto seeded = verify_buckets({3, 3, 1, false}, Backend::kMd5, pair);
  CHECK_FALSE(seeded.passed());
}
