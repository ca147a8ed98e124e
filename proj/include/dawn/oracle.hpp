#pragma once

// Reference implementations used to check the solvers. Slow on purpose:
// nothing here shares code with sssp.cpp.

#include <cstdint>
#include <optional>
#include <vector>

#include "dawn/graph.hpp"
#include "dawn/sssp.hpp"

namespace dawn::oracle {

struct BfsTrace {
  std::vector<Distance> distance;  ///< same encoding as SsspResult::distance
  std::uint64_t nodes_visited = 0;  ///< queue pops
  std::uint64_t edges_visited = 0;  ///< adjacency entries examined
  /// Examined edges whose target already had a distance (or was the source).
  std::uint64_t settled_target_checks = 0;
};

/// FIFO-queue BFS over out-edges.
BfsTrace bfs_baseline(const CsrGraph& csr, NodeId source);

inline constexpr std::uint64_t kMaxDenseNodes = 32;

/// n x n walk-count matrix with saturating 64-bit entries.
class DenseCountMatrix {
 public:
  /// Throws DomainError for n > kMaxDenseNodes.
  explicit DenseCountMatrix(std::uint64_t n);

  /// Adjacency indicators of `csr`.
  static DenseCountMatrix adjacency(const CsrGraph& csr);

  std::uint64_t n() const { return n_; }
  std::uint64_t at(std::uint64_t i, std::uint64_t j) const { return counts_[i * n_ + j]; }
  void set(std::uint64_t i, std::uint64_t j, std::uint64_t v) { counts_[i * n_ + j] = v; }

  /// True once any entry has been clamped at UINT64_MAX.
  bool saturated() const { return saturated_; }

  DenseCountMatrix operator*(const DenseCountMatrix& rhs) const;

  friend bool operator==(const DenseCountMatrix&, const DenseCountMatrix&) = default;

 private:
  std::uint64_t n_;
  std::vector<std::uint64_t> counts_;
  bool saturated_ = false;
};

/// A^k by repeated multiplication; entry (i,j) counts length-k walks i -> j.
/// Throws DomainError for k == 0 or k > n.
DenseCountMatrix path_count_power(const DenseCountMatrix& adjacency, std::uint64_t k);

/// Smallest k in [1, n-1] with a nonzero (A^k)[i][j], or nullopt.
/// Throws DomainError for i == j.
std::optional<std::uint64_t> first_hit_distance(const DenseCountMatrix& adjacency,
                                                NodeId i, NodeId j);

}  // namespace dawn::oracle
