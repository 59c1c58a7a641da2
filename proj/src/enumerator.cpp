#include "compgraph/enumerator.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstring>
#include <string>
#include <thread>
#include <unordered_set>

#include "compgraph/detail/refinement.hpp"
#include "compgraph/isomorphism.hpp"

namespace compgraph {

namespace {

// Pair bit vectors are held in one machine word.
constexpr std::size_t kMaxEnumerationVertices = 11;

struct ValueHash {
  std::size_t operator()(const detail::Md5Value& v) const noexcept {
    std::uint64_t h;
    std::memcpy(&h, v.data(), sizeof h);
    return static_cast<std::size_t>(h);
  }
  std::size_t operator()(const detail::ByteString& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint8_t b : v) {
      h ^= b;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// One adjacency matrix that passed pruning, with bitmask neighborhoods
// (bit v-1 stands for vertex v).
struct Matrix {
  std::uint64_t bits = 0;
  detail::Topology topology;
};

std::vector<Edge> edges_of(std::size_t n, std::uint64_t bits) {
  std::vector<Edge> edges;
  std::size_t t = 0;
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex j = i + 1; j <= n; ++j, ++t) {
      if ((bits >> t) & 1u) edges.push_back({i, j});
    }
  }
  return edges;
}

// Forward/backward reachability over bitmasks. Kept separate from
// first_off_path_vertex so the two can be checked against each other.
bool every_vertex_on_path(std::size_t n, std::span<const std::uint32_t> out_mask,
                          std::span<const std::uint32_t> in_mask) {
  std::uint32_t forward = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if ((forward >> i) & 1u) forward |= out_mask[i];
  }
  std::uint32_t backward = std::uint32_t{1} << (n - 1);
  for (std::size_t i = n; i-- > 0;) {
    if ((backward >> i) & 1u) backward |= in_mask[i];
  }
  const std::uint32_t all = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
  return (forward & backward) == all;
}

std::optional<Matrix> prune_matrix(std::size_t n, std::uint64_t bits, std::size_t max_edges) {
  if (static_cast<std::size_t>(std::popcount(bits)) > max_edges) return std::nullopt;
  std::vector<std::uint32_t> out_mask(n, 0), in_mask(n, 0);
  std::size_t t = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++t) {
      if ((bits >> t) & 1u) {
        out_mask[i] |= std::uint32_t{1} << j;
        in_mask[j] |= std::uint32_t{1} << i;
      }
    }
  }
  if (!every_vertex_on_path(n, out_mask, in_mask)) return std::nullopt;
  Matrix m;
  m.bits = bits;
  m.topology.n = n;
  m.topology.out.resize(n);
  m.topology.in.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if ((out_mask[i] >> j) & 1u) m.topology.out[i].push_back(static_cast<std::uint32_t>(j));
      if ((in_mask[i] >> j) & 1u) m.topology.in[i].push_back(static_cast<std::uint32_t>(j));
    }
  }
  return m;
}

std::vector<Matrix> surviving_matrices(std::size_t n, std::size_t max_edges) {
  std::vector<Matrix> out;
  const std::uint64_t limit = std::uint64_t{1} << pair_count(n);
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    if (auto m = prune_matrix(n, bits, max_edges)) out.push_back(std::move(*m));
  }
  return out;
}

// Lexicographic odometer over color vectors, rightmost position fastest.
class Colorings {
 public:
  Colorings(std::size_t n, const EnumerationConfig& config)
      : colors_(n, 1), interior_(config.colors), reserved_(config.reserved_io) {
    if (reserved_) {
      colors_.front() = static_cast<Color>(config.colors + 1);
      colors_.back() = static_cast<Color>(config.colors + 2);
    }
  }

  std::span<const Color> current() const noexcept { return colors_; }

  bool advance() {
    const std::size_t first = reserved_ ? 1 : 0;
    const std::size_t last = reserved_ ? colors_.size() - 1 : colors_.size();
    for (std::size_t pos = last; pos-- > first;) {
      if (colors_[pos] < interior_) {
        ++colors_[pos];
        return true;
      }
      colors_[pos] = 1;
    }
    return false;
  }

 private:
  std::vector<Color> colors_;
  Color interior_;
  bool reserved_;
};

// A graph first seen in its chunk: matrix index plus its coloring.
template <class Value>
struct LocalFirst {
  Value value;
  std::size_t matrix;
  std::vector<Color> colors;
};

template <class Policy>
std::vector<LocalFirst<typename Policy::Value>> hash_chunk(const EnumerationConfig& config,
                                                           std::span<const Matrix> matrices,
                                                           std::size_t base, std::size_t n) {
  using Value = typename Policy::Value;
  detail::Refiner<Policy> refiner;
  std::unordered_set<Value, ValueHash> seen;
  std::vector<LocalFirst<Value>> firsts;
  Value value{};
  for (std::size_t m = 0; m < matrices.size(); ++m) {
    Colorings colorings(n, config);
    do {
      refiner.invariant(matrices[m].topology, colorings.current(), value);
      if (seen.insert(value).second) {
        firsts.push_back({value, base + m,
                          std::vector<Color>(colorings.current().begin(),
                                             colorings.current().end())});
      }
    } while (colorings.advance());
  }
  return firsts;
}

template <class Policy>
void enumerate_with(const EnumerationConfig& config, std::size_t workers,
                    const std::function<void(const CanonicalRecord&)>& sink,
                    EnumerationSummary& summary) {
  using Value = typename Policy::Value;
  // Global across n, like the reference generation loop.
  std::unordered_set<Value, ValueHash> seen;

  for (std::size_t n = 2; n <= config.max_vertices; ++n) {
    const std::vector<Matrix> matrices = surviving_matrices(n, config.max_edges);
    summary.per_vertex_count[n] = 0;

    const std::size_t chunk_count =
        workers <= 1 ? 1 : std::min(matrices.size(), workers * 8);
    std::vector<std::vector<LocalFirst<Value>>> results(std::max<std::size_t>(chunk_count, 1));
    auto run_chunk = [&](std::size_t c) {
      const std::size_t begin = matrices.size() * c / chunk_count;
      const std::size_t end = matrices.size() * (c + 1) / chunk_count;
      results[c] = hash_chunk<Policy>(
          config, std::span<const Matrix>(matrices).subspan(begin, end - begin), begin, n);
    };
    if (chunk_count <= 1) {
      if (!matrices.empty()) run_chunk(0);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < std::min(workers, chunk_count); ++w) {
        pool.emplace_back([&] {
          for (std::size_t c; (c = next.fetch_add(1)) < chunk_count;) run_chunk(c);
        });
      }
      for (std::thread& t : pool) t.join();
    }

    // Chunk-local firsts are in generation order, so merging chunks in order
    // reproduces the sequential first-observed representatives.
    for (auto& chunk : results) {
      for (auto& first : chunk) {
        if (!seen.insert(first.value).second) continue;
        CanonicalRecord record{
            Digest(std::vector<std::uint8_t>(first.value.begin(), first.value.end())),
            ComputationalGraph::make_dag(n, config.palette(),
                                         edges_of(n, matrices[first.matrix].bits),
                                         first.colors)};
        ++summary.per_vertex_count[n];
        ++summary.total;
        sink(record);
      }
      chunk.clear();
      chunk.shrink_to_fit();
    }
  }
}

}  // namespace

void EnumerationConfig::check() const {
  if (max_vertices < 2) throw Error(ErrorKind::kMalformedInput, "max vertices must be at least 2");
  if (max_edges < 1) throw Error(ErrorKind::kMalformedInput, "max edges must be at least 1");
  if (colors < 1) throw Error(ErrorKind::kMalformedInput, "colors must be at least 1");
  if (max_vertices > kMaxEnumerationVertices) {
    throw Error(ErrorKind::kCapabilityLimit,
                "enumeration is limited to " + std::to_string(kMaxEnumerationVertices) +
                    " vertices");
  }
}

std::vector<Edge> decode_bitvector(std::size_t n, const std::vector<bool>& bits) {
  if (bits.size() != pair_count(n)) {
    throw Error(ErrorKind::kMalformedInput,
                "bit vector for " + std::to_string(n) + " vertices must have " +
                    std::to_string(pair_count(n)) + " entries, got " +
                    std::to_string(bits.size()));
  }
  std::vector<Edge> edges;
  std::size_t t = 0;
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex j = i + 1; j <= n; ++j, ++t) {
      if (bits[t]) edges.push_back({i, j});
    }
  }
  return edges;
}

bool passes_prune(std::span<const Edge> edges, std::size_t n, std::size_t max_edges) {
  if (edges.size() > max_edges) return false;
  if (n == 0 || n > 32) {
    throw Error(ErrorKind::kMalformedInput, "prune check supports 1..32 vertices");
  }
  std::vector<std::uint32_t> out_mask(n, 0), in_mask(n, 0);
  for (const Edge& e : edges) {
    if (e.from < 1 || e.to > n || e.from >= e.to) {
      throw Error(ErrorKind::kEdgeOrderViolation, "edges must satisfy 1 <= i < j <= n");
    }
    out_mask[e.from - 1] |= std::uint32_t{1} << (e.to - 1);
    in_mask[e.to - 1] |= std::uint32_t{1} << (e.from - 1);
  }
  return every_vertex_on_path(n, out_mask, in_mask);
}

EnumerationSummary enumerate(const EnumerationConfig& config, const EnumerationOptions& options,
                             const std::function<void(const CanonicalRecord&)>& sink) {
  config.check();
  EnumerationSummary summary;
  if (options.backend == Backend::kMd5) {
    enumerate_with<detail::Md5Policy>(config, options.workers, sink, summary);
  } else {
    enumerate_with<detail::ConcatPolicy>(config, options.workers, sink, summary);
  }
  return summary;
}

std::vector<CanonicalRecord> enumerate_all(const EnumerationConfig& config,
                                           const EnumerationOptions& options) {
  std::vector<CanonicalRecord> records;
  enumerate(config, options, [&](const CanonicalRecord& r) { records.push_back(r); });
  return records;
}

void for_each_candidate(const EnumerationConfig& config,
                        const std::function<void(const ComputationalGraph&)>& visit) {
  config.check();
  for (std::size_t n = 2; n <= config.max_vertices; ++n) {
    for (const Matrix& m : surviving_matrices(n, config.max_edges)) {
      const std::vector<Edge> edges = edges_of(n, m.bits);
      Colorings colorings(n, config);
      do {
        visit(ComputationalGraph::make_dag(n, config.palette(), edges, colorings.current()));
      } while (colorings.advance());
    }
  }
}

EnumerationReport verify_corpus(std::span<const ComputationalGraph> graphs, Backend backend) {
  EnumerationReport report;
  for (const ComputationalGraph& g : graphs) {
    ++report.graphs_seen;
    Digest d = graph_invariant(g, backend);
    auto [it, inserted] = report.buckets.try_emplace(d);
    if (inserted) {
      ++report.summary.per_vertex_count[g.vertex_count()];
      ++report.summary.total;
    } else {
      ++report.duplicates_checked;
      const ComputationalGraph& canonical = it->second.front();
      if (!are_isomorphic(canonical, g).isomorphic()) {
        report.false_merge = FalseMerge{std::move(d), canonical, g};
        it->second.push_back(g);
        return report;
      }
    }
    it->second.push_back(g);
  }
  return report;
}

EnumerationReport verify_buckets(const EnumerationConfig& config, Backend backend,
                                 std::span<const ComputationalGraph> extra) {
  config.check();
  if (config.max_vertices > kOracleMaxVertices) {
    throw Error(ErrorKind::kCapabilityLimit, "verification needs max vertices <= " +
                                                   std::to_string(kOracleMaxVertices));
  }
  for (const ComputationalGraph& g : extra) {
    if (g.vertex_count() > kOracleMaxVertices) {
      throw Error(ErrorKind::kCapabilityLimit, "injected graph exceeds the oracle limit");
    }
  }
  std::vector<ComputationalGraph> corpus;
  for_each_candidate(config, [&](const ComputationalGraph& g) { corpus.push_back(g); });
  corpus.insert(corpus.end(), extra.begin(), extra.end());
  return verify_corpus(corpus, backend);
}

}  // namespace compgraph
