#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace dawn {

using NodeId = std::uint32_t;
using EdgeOffset = std::uint64_t;

class CscGraph;

enum class Directedness { directed, undirected };

/// Staging format between the file readers and CsrGraph.
///
/// Undirected lists are expanded to both (u,v) and (v,u) by normalize();
/// every count of edges elsewhere in the library is a count of directed edges.
struct EdgeList {
  std::uint64_t num_nodes = 0;
  std::vector<std::pair<NodeId, NodeId>> edges;
  Directedness directedness = Directedness::directed;

  /// Expands undirected edges, drops self-loops and duplicates, sorts.
  /// Throws BoundsError for ids outside [0, num_nodes).
  void normalize();
};

/// Row-compressed out-adjacency. Immutable after construction.
class CsrGraph {
 public:
  CsrGraph() : row_ptr_(1, 0) {}

  /// Adopts prebuilt arrays after checking every structural invariant
  /// (sorted, duplicate-free, loop-free rows). Throws FormatError otherwise.
  static CsrGraph from_arrays(std::uint64_t n, std::vector<EdgeOffset> row_ptr,
                              std::vector<NodeId> col);

  std::uint64_t n() const { return row_ptr_.size() - 1; }
  std::uint64_t m() const { return col_.size(); }

  std::span<const EdgeOffset> row_ptr() const { return row_ptr_; }
  std::span<const NodeId> col() const { return col_; }

  std::span<const NodeId> out_neighbors(NodeId u) const {
    return {col_.data() + row_ptr_[u], col_.data() + row_ptr_[u + 1]};
  }
  std::uint64_t out_degree(NodeId u) const { return row_ptr_[u + 1] - row_ptr_[u]; }

  friend bool operator==(const CsrGraph&, const CsrGraph&) = default;

 private:
  CsrGraph(std::vector<EdgeOffset> row_ptr, std::vector<NodeId> col)
      : row_ptr_(std::move(row_ptr)), col_(std::move(col)) {}

  std::vector<EdgeOffset> row_ptr_;
  std::vector<NodeId> col_;

  friend CsrGraph build_csr(const EdgeList& el);
  friend CsrGraph transpose(const CscGraph& csc);
};

/// Column-compressed in-adjacency: column v lists every u with an edge u->v.
class CscGraph {
 public:
  CscGraph() : col_ptr_(1, 0) {}

  std::uint64_t n() const { return col_ptr_.size() - 1; }
  std::uint64_t m() const { return row_.size(); }

  std::span<const EdgeOffset> col_ptr() const { return col_ptr_; }
  std::span<const NodeId> row() const { return row_; }

  std::span<const NodeId> in_neighbors(NodeId v) const {
    return {row_.data() + col_ptr_[v], row_.data() + col_ptr_[v + 1]};
  }

  friend bool operator==(const CscGraph&, const CscGraph&) = default;

 private:
  CscGraph(std::vector<EdgeOffset> col_ptr, std::vector<NodeId> row)
      : col_ptr_(std::move(col_ptr)), row_(std::move(row)) {}

  std::vector<EdgeOffset> col_ptr_;
  std::vector<NodeId> row_;

  friend CscGraph transpose(const CsrGraph& csr);
};

/// Counting-sort construction. Rows come out sorted and deduplicated with
/// self-loops removed, whether or not `el` was normalized first.
CsrGraph build_csr(const EdgeList& el);

CscGraph transpose(const CsrGraph& csr);
CsrGraph transpose(const CscGraph& csc);

/// Directed edge list of `csr` in row-major order.
EdgeList to_edge_list(const CsrGraph& csr);

}  // namespace dawn
