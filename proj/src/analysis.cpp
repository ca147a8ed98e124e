#include "dawn/analysis.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "dawn/error.hpp"

namespace dawn {

WccSummary weakly_connected_components(const CsrGraph& csr) {
  constexpr auto kUnlabeled = std::numeric_limits<std::uint32_t>::max();
  const auto n = csr.n();
  const auto csc = transpose(csr);

  WccSummary out;
  out.component_id.assign(n, kUnlabeled);
  std::vector<NodeId> stack;
  for (NodeId root = 0; root < n; ++root) {
    if (out.component_id[root] != kUnlabeled) continue;
    const auto label = static_cast<std::uint32_t>(out.component_sizes.size());
    ComponentSize size;
    out.component_id[root] = label;
    stack.push_back(root);
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      ++size.nodes;
      // Each directed edge is counted once, from its tail.
      size.edges += csr.out_degree(u);
      auto visit = [&](NodeId v) {
        if (out.component_id[v] == kUnlabeled) {
          out.component_id[v] = label;
          stack.push_back(v);
        }
      };
      for (auto v : csr.out_neighbors(u)) visit(v);
      for (auto v : csc.in_neighbors(u)) visit(v);
    }
    out.s_wcc = std::max(out.s_wcc, size.nodes);
    out.e_wcc = std::max(out.e_wcc, size.edges);
    out.component_sizes.push_back(size);
  }
  return out;
}

std::uint32_t eccentricity(const CsrGraph& csr, NodeId source) {
  if (source >= csr.n()) {
    throw BoundsError("source " + std::to_string(source) + " outside [0," +
                      std::to_string(csr.n()) + ")");
  }
  std::vector<bool> seen(csr.n(), false);
  std::vector<NodeId> frontier{source}, next;
  seen[source] = true;
  std::uint32_t depth = 0;
  while (true) {
    next.clear();
    for (auto u : frontier) {
      for (auto v : csr.out_neighbors(u)) {
        if (!seen[v]) {
          seen[v] = true;
          next.push_back(v);
        }
      }
    }
    if (next.empty()) return depth;
    ++depth;
    frontier.swap(next);
  }
}

MemoryModel memory_model(std::uint64_t n, std::uint64_t m) {
  if (n == 0) throw DomainError("memory model needs at least one node");
  MemoryModel mm;
  mm.n = n;
  mm.m = m;
  mm.dawn_bytes = 4 * m + 3 * n;
  mm.bfs_bytes = 4 * m + 8 * n;
  mm.eta = static_cast<double>(mm.dawn_bytes) / static_cast<double>(mm.bfs_bytes);
  return mm;
}

DegreeStats degree_stats(const CsrGraph& csr) {
  DegreeStats s;
  std::vector<std::uint64_t> in(csr.n(), 0);
  for (NodeId u = 0; u < csr.n(); ++u) {
    s.max_out = std::max(s.max_out, csr.out_degree(u));
    for (auto v : csr.out_neighbors(u)) ++in[v];
  }
  if (!in.empty()) s.max_in = *std::max_element(in.begin(), in.end());
  s.avg = csr.n() == 0 ? 0.0 : static_cast<double>(csr.m()) / static_cast<double>(csr.n());
  return s;
}

}  // namespace dawn
