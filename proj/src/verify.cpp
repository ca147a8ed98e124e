#include "dawn/verify.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "dawn/analysis.hpp"
#include "dawn/bench.hpp"
#include "dawn/oracle.hpp"

namespace dawn {

namespace {

enum Check : std::size_t {
  kOracleEquality,
  kBovmEquality,
  kLayerContiguity,
  kPredecessorLayer,
  kEdgeAccounting,
  kIterationsEccentricity,
  kNoSettledWrites,
  kCheckCount,
};

constexpr const char* kCheckNames[kCheckCount] = {
    "sovm_equals_oracle_bfs", "bovm_equals_sovm",        "layer_contiguity",
    "predecessor_layer",      "edge_inspection_accounting", "iterations_equal_eccentricity",
    "no_settled_writes",
};

class Recorder {
 public:
  explicit Recorder(VerifyReport& report) : report_(report) {
    for (const auto* name : kCheckNames) report_.checks.push_back({name, 0, 0});
  }

  void pass(Check c) { ++report_.checks[c].passed; }

  void fail(Check c, NodeId source, std::optional<NodeId> node, std::string detail) {
    ++report_.checks[c].failed;
    if (!report_.first_failure) {
      report_.first_failure = Counterexample{kCheckNames[c], source, node, std::move(detail)};
    }
  }

  void expect(bool ok, Check c, NodeId source, std::optional<NodeId> node,
              const std::string& detail) {
    ok ? pass(c) : fail(c, source, node, detail);
  }

 private:
  VerifyReport& report_;
};

std::optional<NodeId> first_mismatch(const std::vector<Distance>& a,
                                     const std::vector<Distance>& b) {
  auto [ia, ib] = std::mismatch(a.begin(), a.end(), b.begin());
  if (ia == a.end()) return std::nullopt;
  return static_cast<NodeId>(ia - a.begin());
}

std::string pair_detail(const char* what, Distance got, Distance want) {
  return std::string(what) + " " + std::to_string(got) + " vs " + std::to_string(want);
}

}  // namespace

VerifyReport verify_graph(const CsrGraph& csr, const VerifyOptions& options) {
  VerifyReport report;
  report.seed = options.seed;
  Recorder rec(report);

  const auto n = csr.n();
  if (options.sample) {
    report.sources = bench::sample_sources(n, std::min(*options.sample, n), options.seed);
  } else if (n <= options.exhaustive_limit) {
    report.sources.resize(n);
    std::iota(report.sources.begin(), report.sources.end(), NodeId{0});
  } else {
    report.sources = bench::sample_sources(n, options.exhaustive_limit, options.seed);
  }

  const auto csc = transpose(csr);
  const auto wcc = weakly_connected_components(csr);

  for (auto s : report.sources) {
    auto sovm = sssp_sovm(csr, s);
    if (options.tamper) options.tamper(sovm);
    const auto bovm = sssp_bovm(csc, s);
    const auto bfs = oracle::bfs_baseline(csr, s);
    const auto& dist = sovm.distance;

    auto bad = first_mismatch(dist, bfs.distance);
    rec.expect(!bad, kOracleEquality, s, bad,
               bad ? pair_detail("distance", dist[*bad], bfs.distance[*bad]) : "");
    bad = first_mismatch(bovm.distance, dist);
    rec.expect(!bad, kBovmEquality, s, bad,
               bad ? pair_detail("distance", bovm.distance[*bad], dist[*bad]) : "");

    // Layers 1..max are all populated.
    Distance max_layer = 0;
    std::vector<std::uint64_t> layer_size(n + 1, 0);
    for (NodeId v = 0; v < n; ++v) {
      if (v == s) continue;
      max_layer = std::max(max_layer, dist[v]);
      if (dist[v] <= n) ++layer_size[dist[v]];
    }
    {
      std::optional<NodeId> gap;
      for (Distance k = 1; k <= max_layer && k <= n; ++k) {
        if (layer_size[k] == 0) {
          // Blame the first node sitting above the gap.
          for (NodeId v = 0; v < n && !gap; ++v) {
            if (v != s && dist[v] > k) gap = v;
          }
          break;
        }
      }
      rec.expect(!gap, kLayerContiguity, s, gap,
                 gap ? "layer below distance " + std::to_string(dist[*gap]) + " is empty" : "");
    }

    // Every settled node has an in-neighbor exactly one layer closer.
    {
      std::optional<NodeId> orphan;
      for (NodeId v = 0; v < n && !orphan; ++v) {
        if (v == s || dist[v] == 0) continue;
        const auto want = dist[v] - 1;
        const auto in = csc.in_neighbors(v);
        const bool found = std::any_of(in.begin(), in.end(), [&](NodeId u) {
          return u == s ? want == 0 : (dist[u] != 0 && dist[u] == want);
        });
        if (!found) orphan = v;
      }
      rec.expect(!orphan, kPredecessorLayer, s, orphan,
                 orphan ? "no in-neighbor at distance " + std::to_string(dist[*orphan] - 1) : "");
    }

    // Edge inspections equal the out-degree sum over the reached set, and
    // stay within the source's weak component.
    {
      std::uint64_t degree_sum = csr.out_degree(s);
      for (NodeId v = 0; v < n; ++v) {
        if (v != s && bfs.distance[v] != 0) degree_sum += csr.out_degree(v);
      }
      const bool ok =
          sovm.edge_inspections == degree_sum && sovm.edge_inspections <= wcc.e_wcc_of(s);
      rec.expect(ok, kEdgeAccounting, s, std::nullopt,
                 "edge_inspections " + std::to_string(sovm.edge_inspections) +
                     ", out-degree sum " + std::to_string(degree_sum) + ", component edges " +
                     std::to_string(wcc.e_wcc_of(s)));
    }

    {
      const auto ecc = eccentricity(csr, s);
      const bool ok = sovm.iterations == ecc && bovm.iterations == ecc;
      rec.expect(ok, kIterationsEccentricity, s, std::nullopt,
                 "sovm " + std::to_string(sovm.iterations) + ", bovm " +
                     std::to_string(bovm.iterations) + ", eccentricity " + std::to_string(ecc));
    }

    rec.expect(sovm.settled_update_attempts == 0 && bovm.settled_update_attempts == 0,
               kNoSettledWrites, s, std::nullopt, "settled target rewritten");
  }
  return report;
}

}  // namespace dawn
