#include "dawn/graph.hpp"

#include <algorithm>
#include <string>

#include "dawn/error.hpp"

namespace dawn {

void EdgeList::normalize() {
  for (const auto& [u, v] : edges) {
    if (u >= num_nodes || v >= num_nodes) {
      throw BoundsError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                        ") outside [0," + std::to_string(num_nodes) + ")");
    }
  }
  if (directedness == Directedness::undirected) {
    const auto count = edges.size();
    edges.reserve(2 * count);
    for (std::size_t k = 0; k < count; ++k) {
      edges.emplace_back(edges[k].second, edges[k].first);
    }
  }
  std::erase_if(edges, [](const auto& e) { return e.first == e.second; });
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

CsrGraph CsrGraph::from_arrays(std::uint64_t n, std::vector<EdgeOffset> row_ptr,
                               std::vector<NodeId> col) {
  if (row_ptr.size() != n + 1 || row_ptr.front() != 0 || row_ptr.back() != col.size()) {
    throw FormatError("row_ptr does not frame col");
  }
  for (std::uint64_t u = 0; u < n; ++u) {
    if (row_ptr[u] > row_ptr[u + 1]) {
      throw FormatError("row_ptr decreases at row " + std::to_string(u));
    }
    for (auto k = row_ptr[u]; k < row_ptr[u + 1]; ++k) {
      if (col[k] >= n || col[k] == u || (k > row_ptr[u] && col[k] <= col[k - 1])) {
        throw FormatError("row " + std::to_string(u) + " is not sorted, loop-free and in range");
      }
    }
  }
  return CsrGraph(std::move(row_ptr), std::move(col));
}

CsrGraph build_csr(const EdgeList& el) {
  const auto n = el.num_nodes;
  std::vector<EdgeOffset> count(n + 1, 0);
  for (const auto& [u, v] : el.edges) {
    if (u >= n || v >= n) {
      throw BoundsError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                        ") outside [0," + std::to_string(n) + ")");
    }
    if (u != v) ++count[u + 1];
  }
  for (std::uint64_t u = 0; u < n; ++u) count[u + 1] += count[u];

  std::vector<NodeId> col(count[n]);
  std::vector<EdgeOffset> cursor(count.begin(), count.end() - 1);
  for (const auto& [u, v] : el.edges) {
    if (u != v) col[cursor[u]++] = v;
  }

  // Sort and dedupe each row, compacting in place.
  std::vector<EdgeOffset> row_ptr(n + 1, 0);
  EdgeOffset write = 0;
  for (std::uint64_t u = 0; u < n; ++u) {
    auto first = col.begin() + static_cast<std::ptrdiff_t>(count[u]);
    auto last = col.begin() + static_cast<std::ptrdiff_t>(count[u + 1]);
    std::sort(first, last);
    last = std::unique(first, last);
    for (auto it = first; it != last; ++it) col[write++] = *it;
    row_ptr[u + 1] = write;
  }
  col.resize(write);
  col.shrink_to_fit();
  return CsrGraph(std::move(row_ptr), std::move(col));
}

namespace {

// Counting-sort transpose of a compressed adjacency. Scanning source rows in
// ascending order leaves every output row sorted.
void transpose_arrays(std::span<const EdgeOffset> ptr, std::span<const NodeId> idx,
                      std::vector<EdgeOffset>& out_ptr, std::vector<NodeId>& out_idx) {
  const auto n = ptr.size() - 1;
  out_ptr.assign(n + 1, 0);
  for (auto v : idx) ++out_ptr[v + 1];
  for (std::size_t v = 0; v < n; ++v) out_ptr[v + 1] += out_ptr[v];
  out_idx.resize(idx.size());
  std::vector<EdgeOffset> cursor(out_ptr.begin(), out_ptr.end() - 1);
  for (std::size_t u = 0; u < n; ++u) {
    for (auto k = ptr[u]; k < ptr[u + 1]; ++k) {
      out_idx[cursor[idx[k]]++] = static_cast<NodeId>(u);
    }
  }
}

}  // namespace

CscGraph transpose(const CsrGraph& csr) {
  std::vector<EdgeOffset> col_ptr;
  std::vector<NodeId> row;
  transpose_arrays(csr.row_ptr(), csr.col(), col_ptr, row);
  return CscGraph(std::move(col_ptr), std::move(row));
}

CsrGraph transpose(const CscGraph& csc) {
  std::vector<EdgeOffset> row_ptr;
  std::vector<NodeId> col;
  transpose_arrays(csc.col_ptr(), csc.row(), row_ptr, col);
  return CsrGraph(std::move(row_ptr), std::move(col));
}

EdgeList to_edge_list(const CsrGraph& csr) {
  EdgeList el;
  el.num_nodes = csr.n();
  el.edges.reserve(csr.m());
  for (NodeId u = 0; u < csr.n(); ++u) {
    for (auto v : csr.out_neighbors(u)) el.edges.emplace_back(u, v);
  }
  return el;
}

}  // namespace dawn
