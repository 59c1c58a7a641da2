#include "compgraph/invariant.hpp"

// The one-shot MD5() call is deprecated in OpenSSL 3 in favour of EVP, but it
// avoids per-call context setup on the enumerator's hot path.
#define OPENSSL_SUPPRESS_DEPRECATED
#include <openssl/md5.h>

#include <algorithm>
#include <cstring>
#include <map>
#include <type_traits>

#include "compgraph/detail/refinement.hpp"

namespace compgraph {

namespace detail {

Topology Topology::of(const ComputationalGraph& g) {
  Topology t;
  t.n = g.vertex_count();
  t.out.resize(t.n);
  t.in.resize(t.n);
  for (const Edge& e : g.edges()) {
    t.out[e.from - 1].push_back(e.to - 1);
    t.in[e.to - 1].push_back(e.from - 1);
  }
  return t;
}

void md5(std::span<const std::uint8_t> message, Md5Value& out) {
  MD5(message.data(), message.size(), out.data());
}

}  // namespace detail

namespace {

template <class Value>
Digest to_digest(const Value& v) {
  return Digest(std::vector<std::uint8_t>(v.begin(), v.end()));
}

template <class Value>
Value from_digest(const Digest& d) {
  Value v{};
  if constexpr (std::is_same_v<Value, detail::Md5Value>) {
    if (d.size() != v.size()) {
      throw Error(ErrorKind::kMalformedInput, "md5 digests must be 16 bytes");
    }
    std::memcpy(v.data(), d.bytes().data(), v.size());
  } else {
    v.assign(d.bytes().begin(), d.bytes().end());
  }
  return v;
}

template <class Policy>
std::vector<std::vector<Digest>> trace_with(const ComputationalGraph& g) {
  using Value = typename Policy::Value;
  const detail::Topology t = detail::Topology::of(g);
  detail::Refiner<Policy> refiner;
  std::vector<Value> cur, nxt;
  std::vector<std::vector<Digest>> trace;
  auto snapshot = [&](const std::vector<Value>& h) {
    std::vector<Digest> row;
    row.reserve(h.size());
    for (const Value& v : h) row.push_back(to_digest(v));
    trace.push_back(std::move(row));
  };
  refiner.init(t, g.colors(), cur);
  snapshot(cur);
  for (std::size_t r = 0; r < t.n; ++r) {
    refiner.round(t, cur, nxt);
    std::swap(cur, nxt);
    snapshot(cur);
  }
  return trace;
}

template <class Policy>
std::vector<Digest> round_with(const ComputationalGraph& g, std::span<const Digest> h) {
  using Value = typename Policy::Value;
  std::vector<Value> cur;
  cur.reserve(h.size());
  for (const Digest& d : h) cur.push_back(from_digest<Value>(d));
  std::vector<Value> nxt;
  detail::Refiner<Policy> refiner;
  refiner.round(detail::Topology::of(g), cur, nxt);
  std::vector<Digest> out;
  for (const Value& v : nxt) out.push_back(to_digest(v));
  return out;
}

template <class Policy>
Digest combine_with(std::span<const Digest> h) {
  using Value = typename Policy::Value;
  std::vector<Value> cur;
  for (const Digest& d : h) cur.push_back(from_digest<Value>(d));
  Value out{};
  detail::Refiner<Policy>().finalize(cur, out);
  return to_digest(out);
}

}  // namespace

std::string_view to_string(Backend backend) noexcept {
  return backend == Backend::kMd5 ? "md5" : "concat";
}

Backend parse_backend(std::string_view name) {
  if (name == "md5") return Backend::kMd5;
  if (name == "concat") return Backend::kConcat;
  throw Error(ErrorKind::kMalformedInput, "unknown backend '" + std::string(name) + "'");
}

std::string Digest::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes_.size() * 2);
  for (std::uint8_t b : bytes_) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xf]);
  }
  return out;
}

std::size_t DigestHash::operator()(const Digest& d) const noexcept {
  // FNV-1a; md5 bytes are already uniform but concat digests are not.
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint8_t b : d.bytes()) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

Digest vertex_init_digest(std::size_t out_degree, std::size_t in_degree, Color color,
                          Backend backend) {
  detail::ByteString buf;
  detail::append_le64(buf, out_degree);
  detail::append_le64(buf, in_degree);
  detail::append_le64(buf, color);
  if (backend == Backend::kConcat) return Digest(std::move(buf));
  detail::Md5Value v;
  detail::md5(buf, v);
  return to_digest(v);
}

std::vector<Digest> refine_round(const ComputationalGraph& g, std::span<const Digest> h,
                                 Backend backend) {
  if (h.size() != g.vertex_count()) {
    throw Error(ErrorKind::kMalformedInput, "need exactly one digest per vertex");
  }
  return backend == Backend::kMd5 ? round_with<detail::Md5Policy>(g, h)
                                  : round_with<detail::ConcatPolicy>(g, h);
}

std::vector<std::vector<Digest>> refinement_trace(const ComputationalGraph& g, Backend backend) {
  return backend == Backend::kMd5 ? trace_with<detail::Md5Policy>(g)
                                  : trace_with<detail::ConcatPolicy>(g);
}

Digest combine_vertex_digests(std::span<const Digest> h, Backend backend) {
  return backend == Backend::kMd5 ? combine_with<detail::Md5Policy>(h)
                                  : combine_with<detail::ConcatPolicy>(h);
}

Digest graph_invariant(const ComputationalGraph& g, Backend backend) {
  const detail::Topology t = detail::Topology::of(g);
  if (backend == Backend::kMd5) {
    detail::Md5Value out;
    detail::Refiner<detail::Md5Policy>().invariant(t, g.colors(), out);
    return to_digest(out);
  }
  detail::ByteString out;
  detail::Refiner<detail::ConcatPolicy>().invariant(t, g.colors(), out);
  return Digest(std::move(out));
}

std::vector<std::size_t> concat_partition(std::span<const ComputationalGraph> graphs) {
  // Keys start with a tag so ids from different rounds never meet.
  std::map<std::vector<std::uint64_t>, std::size_t> ids;
  auto intern = [&](std::vector<std::uint64_t>&& key) {
    return ids.try_emplace(std::move(key), ids.size()).first->second;
  };
  auto append_sorted = [](std::vector<std::uint64_t>& key, const std::vector<std::uint32_t>& nbrs,
                          const std::vector<std::size_t>& h) {
    const std::size_t start = key.size() + 1;
    key.push_back(nbrs.size());
    for (std::uint32_t o : nbrs) key.push_back(h[o]);
    std::sort(key.begin() + static_cast<std::ptrdiff_t>(start), key.end());
  };

  std::vector<std::size_t> labels;
  labels.reserve(graphs.size());
  for (const ComputationalGraph& g : graphs) {
    const detail::Topology t = detail::Topology::of(g);
    std::vector<std::size_t> cur(t.n), nxt(t.n);
    for (std::size_t i = 0; i < t.n; ++i) {
      cur[i] = intern({0, t.out[i].size(), t.in[i].size(), g.colors()[i]});
    }
    for (std::size_t r = 1; r <= t.n; ++r) {
      for (std::size_t i = 0; i < t.n; ++i) {
        std::vector<std::uint64_t> key = {r};
        append_sorted(key, t.out[i], cur);
        append_sorted(key, t.in[i], cur);
        key.push_back(cur[i]);
        nxt[i] = intern(std::move(key));
      }
      std::swap(cur, nxt);
    }
    std::vector<std::uint64_t> key = {~std::uint64_t{0}, t.n};
    std::vector<std::size_t> sorted = cur;
    std::sort(sorted.begin(), sorted.end());
    key.insert(key.end(), sorted.begin(), sorted.end());
    labels.push_back(intern(std::move(key)));
  }
  return labels;
}

bool concat_digests_equal(const ComputationalGraph& a, const ComputationalGraph& b) {
  const ComputationalGraph both[] = {a, b};
  const auto labels = concat_partition(both);
  return labels[0] == labels[1];
}

}  // namespace compgraph
