#pragma once

#include <cstdint>
#include <vector>

#include "dawn/graph.hpp"

namespace dawn {

struct ComponentSize {
  std::uint64_t nodes = 0;
  /// Directed edges with both endpoints inside the component.
  std::uint64_t edges = 0;
};

/// Weakly connected components of a directed graph.
///
/// Labels are dense in [0, component_count()) and numbered in order of each
/// component's smallest node id.
struct WccSummary {
  std::vector<std::uint32_t> component_id;
  std::vector<ComponentSize> component_sizes;
  std::uint64_t s_wcc = 0;  ///< largest node count of any component
  std::uint64_t e_wcc = 0;  ///< largest directed-edge count of any component

  std::uint64_t component_count() const { return component_sizes.size(); }
  std::uint64_t s_wcc_of(NodeId v) const { return component_sizes[component_id[v]].nodes; }
  std::uint64_t e_wcc_of(NodeId v) const { return component_sizes[component_id[v]].edges; }
};

WccSummary weakly_connected_components(const CsrGraph& csr);

/// Largest finite hop distance from `source`; 0 when nothing is reachable.
/// Throws BoundsError for an out-of-range source.
std::uint32_t eccentricity(const CsrGraph& csr, NodeId source);

/// Byte accounting of the two-boolean-array solver against a queue BFS:
/// 4m+3n versus 4m+8n.
struct MemoryModel {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t dawn_bytes = 0;
  std::uint64_t bfs_bytes = 0;
  double eta = 0.0;
};

/// Throws DomainError when n == 0.
MemoryModel memory_model(std::uint64_t n, std::uint64_t m);

struct DegreeStats {
  std::uint64_t max_out = 0;
  std::uint64_t max_in = 0;
  double avg = 0.0;  ///< m / n
};

DegreeStats degree_stats(const CsrGraph& csr);

}  // namespace dawn
