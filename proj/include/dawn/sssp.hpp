#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "dawn/graph.hpp"

namespace dawn {

/// Hop count. 0 doubles as "no path recorded" for every node but the source.
using Distance = std::uint32_t;

enum class Variant { bovm, sovm, automatic };

Variant parse_variant(std::string_view name);
std::string_view to_string(Variant v);

struct SsspResult {
  NodeId source = 0;
  std::vector<Distance> distance;
  std::uint64_t reached = 0;  ///< nodes with a path from source, source excluded
  std::uint64_t iterations = 0;
  std::uint64_t edge_inspections = 0;
  std::uint64_t node_inspections = 0;
  /// Distance writes attempted on nodes that were already settled. Both
  /// solvers filter before writing, so a correct run always reports 0.
  std::uint64_t settled_update_attempts = 0;

  bool is_reached(NodeId v) const { return v != source && distance[v] != 0; }
  std::vector<bool> reached_mask() const;
};

/// Working vectors of one solver run.
///
/// For SOVM `alpha` is the current frontier; for BOVM it is every node
/// settled so far. `beta` collects the nodes settled in the running round.
/// `settled_now` is the compressed index list of `beta`.
struct FrontierState {
  std::vector<std::uint8_t> alpha;
  std::vector<std::uint8_t> beta;
  std::vector<NodeId> frontier;
  std::vector<NodeId> settled_now;
  bool is_converged = false;
  Distance step = 0;

  explicit FrontierState(std::uint64_t n) : alpha(n, 0), beta(n, 0) {}
};

/// Pull-style rounds over the in-adjacency: every unsettled node probes its
/// CSC column and stops at the first in-neighbor already settled.
SsspResult sssp_bovm(const CscGraph& csc, NodeId source);

/// Push-style rounds over the out-adjacency: every frontier node merges its
/// CSR row into the next frontier, skipping settled targets.
SsspResult sssp_sovm(const CsrGraph& csr, NodeId source);

/// `automatic` resolves to SOVM. BOVM needs `csc`; passing nullptr with
/// Variant::bovm throws ConfigError.
SsspResult sssp(const CsrGraph& csr, const CscGraph* csc, NodeId source, Variant variant);

/// One result per entry of `sources`, in the same order, computed by up to
/// `threads` workers. Sources are range-checked before any work starts.
std::vector<SsspResult> msssp(const CsrGraph& csr, std::span<const NodeId> sources,
                              unsigned threads, Variant variant = Variant::sovm,
                              const CscGraph* csc = nullptr);

/// Row-major n x n distance matrix.
struct DistanceMatrix {
  std::uint64_t n = 0;
  std::vector<Distance> data;

  std::span<const Distance> row(NodeId i) const { return {data.data() + i * n, n}; }
  Distance at(NodeId i, NodeId j) const { return data[i * n + j]; }
};

struct ApspTotals {
  std::uint64_t edge_inspections = 0;
  std::uint64_t node_inspections = 0;
  std::uint64_t iterations = 0;
};

inline constexpr std::uint64_t kDefaultDenseApspLimit = 1U << 14;

/// Dense all-pairs matrix via SOVM from every node. Refuses graphs with more
/// than `dense_limit` nodes (CapacityError); use apsp_stream for those.
DistanceMatrix apsp(const CsrGraph& csr, unsigned threads,
                    std::uint64_t dense_limit = kDefaultDenseApspLimit,
                    ApspTotals* totals = nullptr);

/// Runs SOVM from every node and hands each result to `sink`. Calls to
/// `sink` are serialized but arrive in no particular source order.
ApspTotals apsp_stream(const CsrGraph& csr, unsigned threads,
                       const std::function<void(const SsspResult&)>& sink);

}  // namespace dawn
