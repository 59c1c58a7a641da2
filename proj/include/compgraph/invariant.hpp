#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "compgraph/graph.hpp"

namespace compgraph {

// md5: every digest is 16 bytes.
// concat: digest(x) = x, so digests are the full length-prefixed encodings.
// They are collision-free but grow exponentially with the number of rounds.
enum class Backend { kMd5, kConcat };

std::string_view to_string(Backend backend) noexcept;
// Accepts "md5" or "concat"; throws kMalformedInput otherwise.
Backend parse_backend(std::string_view name);

// Raw digest bytes. Ordering is lexicographic over unsigned bytes.
class Digest {
 public:
  Digest() = default;
  explicit Digest(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {}

  std::span<const std::uint8_t> bytes() const noexcept { return bytes_; }
  std::size_t size() const noexcept { return bytes_.size(); }
  std::string hex() const;

  friend auto operator<=>(const Digest&, const Digest&) = default;
  friend bool operator==(const Digest&, const Digest&) = default;

 private:
  std::vector<std::uint8_t> bytes_;
};

// digest(LE64(out_degree) || LE64(in_degree) || LE64(color))
Digest vertex_init_digest(std::size_t out_degree, std::size_t in_degree, Color color,
                          Backend backend);

// One refinement round. Entry i of the result is
// digest(LE64(|out|) || sorted out-neighbor digests ||
//        LE64(|in|)  || sorted in-neighbor digests || h[i]),
// computed entirely from the pre-round list `h`.
std::vector<Digest> refine_round(const ComputationalGraph& g, std::span<const Digest> h,
                                 Backend backend);

// Initial digests followed by the result of each of the n rounds (n + 1 lists).
std::vector<std::vector<Digest>> refinement_trace(const ComputationalGraph& g, Backend backend);

// digest(LE64(n) || sorted per-vertex digests after n rounds). Equal for
// isomorphic graphs; the declared palette size k does not enter the digest.
Digest graph_invariant(const ComputationalGraph& g, Backend backend);

// digest(LE64(n) || sorted(h)), the final step of graph_invariant.
Digest combine_vertex_digests(std::span<const Digest> h, Backend backend);

// Labels graphs so that two share a label iff their concat-mode digests are
// byte-equal, without building the digests. Each (round, sorted out-neighbor
// ids, sorted in-neighbor ids, own id) tuple is interned to an integer; since
// the concat encoding is injective, equal ids mean equal byte strings.
// Feasible where materialized concat digests are not (they grow exponentially).
std::vector<std::size_t> concat_partition(std::span<const ComputationalGraph> graphs);
bool concat_digests_equal(const ComputationalGraph& a, const ComputationalGraph& b);

struct DigestHash {
  std::size_t operator()(const Digest& d) const noexcept;
};

}  // namespace compgraph
