#pragma once

// Backend-generic refinement engine shared by the public hashing API and the
// enumerator's hot loop. Works on 0-indexed adjacency lists.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "compgraph/graph.hpp"

namespace compgraph::detail {

struct Topology {
  std::size_t n = 0;
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::vector<std::uint32_t>> in;

  static Topology of(const ComputationalGraph& g);
};

using Md5Value = std::array<std::uint8_t, 16>;
using ByteString = std::vector<std::uint8_t>;

void md5(std::span<const std::uint8_t> message, Md5Value& out);

inline void append_le64(ByteString& buf, std::uint64_t value) {
  for (int b = 0; b < 8; ++b) buf.push_back(static_cast<std::uint8_t>(value >> (8 * b)));
}

template <class Value>
inline void append_value(ByteString& buf, const Value& v) {
  buf.insert(buf.end(), v.begin(), v.end());
}

struct Md5Policy {
  using Value = Md5Value;
  static void finish(const ByteString& message, Value& out) { md5(message, out); }
};

struct ConcatPolicy {
  using Value = ByteString;
  static void finish(const ByteString& message, Value& out) { out = message; }
};

template <class Policy>
class Refiner {
 public:
  using Value = typename Policy::Value;

  void init(const Topology& t, std::span<const Color> colors, std::vector<Value>& h) {
    h.resize(t.n);
    for (std::size_t i = 0; i < t.n; ++i) {
      buf_.clear();
      append_le64(buf_, t.out[i].size());
      append_le64(buf_, t.in[i].size());
      append_le64(buf_, colors[i]);
      Policy::finish(buf_, h[i]);
    }
  }

  void round(const Topology& t, const std::vector<Value>& h, std::vector<Value>& next) {
    next.resize(t.n);
    for (std::size_t i = 0; i < t.n; ++i) {
      buf_.clear();
      append_sorted(t.out[i], h);
      append_sorted(t.in[i], h);
      append_value(buf_, h[i]);
      Policy::finish(buf_, next[i]);
    }
  }

  void finalize(const std::vector<Value>& h, Value& out) {
    order_.clear();
    for (const Value& v : h) order_.push_back(&v);
    std::sort(order_.begin(), order_.end(), [](const Value* a, const Value* b) { return *a < *b; });
    buf_.clear();
    append_le64(buf_, h.size());
    for (const Value* v : order_) append_value(buf_, *v);
    Policy::finish(buf_, out);
  }

  void invariant(const Topology& t, std::span<const Color> colors, Value& out) {
    init(t, colors, cur_);
    for (std::size_t r = 0; r < t.n; ++r) {
      round(t, cur_, nxt_);
      std::swap(cur_, nxt_);
    }
    finalize(cur_, out);
  }

 private:
  void append_sorted(const std::vector<std::uint32_t>& neighbors, const std::vector<Value>& h) {
    order_.clear();
    for (std::uint32_t o : neighbors) order_.push_back(&h[o]);
    std::sort(order_.begin(), order_.end(), [](const Value* a, const Value* b) { return *a < *b; });
    append_le64(buf_, order_.size());
    for (const Value* v : order_) append_value(buf_, *v);
  }

  ByteString buf_;
  std::vector<const Value*> order_;
  std::vector<Value> cur_, nxt_;
};

}  // namespace compgraph::detail
