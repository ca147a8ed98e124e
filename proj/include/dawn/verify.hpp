#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dawn/graph.hpp"
#include "dawn/sssp.hpp"

namespace dawn {

struct VerifyOptions {
  /// Number of sampled sources; unset means every node when n is at most
  /// `exhaustive_limit`, otherwise `exhaustive_limit` sampled sources.
  std::optional<std::uint64_t> sample;
  std::uint64_t seed = 1;
  std::uint64_t exhaustive_limit = 4096;
  /// Test hook applied to each SOVM result before it is checked.
  std::function<void(SsspResult&)> tamper;
};

struct CheckTally {
  std::string name;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
};

struct Counterexample {
  std::string check;
  NodeId source = 0;
  std::optional<NodeId> node;
  std::string detail;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::vector<NodeId> sources;
  std::vector<CheckTally> checks;
  std::optional<Counterexample> first_failure;

  bool ok() const { return !first_failure.has_value(); }
};

/// Cross-checks SOVM, BOVM and the queue BFS oracle from each chosen source
/// and tests the structural properties every correct distance array has:
/// contiguous layers, a predecessor one layer up for every settled node,
/// edge inspections equal to the out-degree sum of the reached set and
/// bounded by the source's component, iterations equal to eccentricity.
VerifyReport verify_graph(const CsrGraph& csr, const VerifyOptions& options = {});

}  // namespace dawn
