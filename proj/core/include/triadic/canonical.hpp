#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace triadic {

/// Small undirected simple graph on vertices 0..n-1.
class SmallGraph {
public:
  explicit SmallGraph(std::size_t n = 0) : adjacency_(n, std::vector<bool>(n, false)), neighbours_(n) {}

  /// Adds the edge {a, b}; self loops and repeated edges are ignored.
  void add_edge(std::size_t a, std::size_t b);

  std::size_t size() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_; }
  bool adjacent(std::size_t a, std::size_t b) const { return adjacency_[a][b]; }
  const std::vector<std::size_t>& neighbours(std::size_t v) const { return neighbours_[v]; }

  /// The same graph with vertex v renamed to perm[v].
  SmallGraph permuted(const std::vector<std::size_t>& perm) const;

private:
  std::vector<std::vector<bool>> adjacency_;
  std::vector<std::vector<std::size_t>> neighbours_;
  std::size_t edges_ = 0;
};

/// Components up to this many vertices are canonicalised by exhaustive search
/// over all vertex orderings.
inline constexpr std::size_t kExhaustiveLimit = 10;

/// Isomorphism-invariant byte string: equal for two graphs iff they are
/// isomorphic. Dispatches on size between the two algorithms below, so graphs
/// of equal size always use the same one.
std::string canonical_certificate(const SmallGraph& g);

/// Lexicographically largest upper-triangle adjacency string over every
/// vertex ordering (columns in order, twins pruned). Exponential; for small
/// graphs only.
std::string certificate_exhaustive(const SmallGraph& g);

/// Colour refinement to an equitable partition, then individualisation of the
/// first non-singleton cell with backtracking; certificate is the smallest
/// sorted edge list over all leaves of that search tree.
std::string certificate_refined(const SmallGraph& g);

/// 64-bit FNV-1a of a certificate, as 16 lowercase hex digits.
std::string certificate_hash(std::string_view certificate);

}  // namespace triadic
