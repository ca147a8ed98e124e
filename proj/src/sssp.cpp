#include "dawn/sssp.hpp"

#include <algorithm>
#include <mutex>
#include <string>

#include "dawn/error.hpp"
#include "parallel.hpp"

namespace dawn {

Variant parse_variant(std::string_view name) {
  if (name == "bovm") return Variant::bovm;
  if (name == "sovm") return Variant::sovm;
  if (name == "auto") return Variant::automatic;
  throw ConfigError("unknown variant '" + std::string(name) + "'");
}

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::bovm:
      return "bovm";
    case Variant::sovm:
      return "sovm";
    case Variant::automatic:
      break;
  }
  return "auto";
}

std::vector<bool> SsspResult::reached_mask() const {
  std::vector<bool> mask(distance.size(), false);
  for (NodeId v = 0; v < distance.size(); ++v) mask[v] = is_reached(v);
  return mask;
}

namespace {

void check_source(std::uint64_t n, NodeId source) {
  if (source >= n) {
    throw BoundsError("source " + std::to_string(source) + " outside [0," + std::to_string(n) +
                      ")");
  }
}

}  // namespace

SsspResult sssp_bovm(const CscGraph& csc, NodeId source) {
  const auto n = csc.n();
  check_source(n, source);

  SsspResult res;
  res.source = source;
  res.distance.assign(n, 0);
  FrontierState st(n);
  st.alpha[source] = 1;

  while (st.step < n) {
    ++st.step;
    st.is_converged = true;
    st.settled_now.clear();
    for (NodeId i = 0; i < n; ++i) {
      if (st.alpha[i]) continue;
      ++res.node_inspections;
      // First in-neighbor inside the settled set proves a path of length step.
      for (auto k : csc.in_neighbors(i)) {
        ++res.edge_inspections;
        if (st.alpha[k] && k != i) {
          st.beta[i] = 1;
          res.distance[i] = st.step;
          st.settled_now.push_back(i);
          st.is_converged = false;
          break;
        }
      }
    }
    // merge(alpha, beta), then clear beta. Done once per round so nodes
    // settled at this step cannot seed further settlements at the same step.
    for (auto i : st.settled_now) {
      st.alpha[i] = 1;
      st.beta[i] = 0;
    }
    if (st.is_converged) break;
    ++res.iterations;
    res.reached += st.settled_now.size();
  }
  return res;
}

SsspResult sssp_sovm(const CsrGraph& csr, NodeId source) {
  const auto n = csr.n();
  check_source(n, source);

  SsspResult res;
  res.source = source;
  res.distance.assign(n, 0);
  FrontierState st(n);
  st.alpha[source] = 1;
  st.frontier.push_back(source);

  while (st.step < n) {
    ++st.step;
    st.is_converged = true;
    st.settled_now.clear();
    for (auto i : st.frontier) {
      ++res.node_inspections;
      for (auto target : csr.out_neighbors(i)) {
        ++res.edge_inspections;
        // Settled targets and the source are filtered, never rewritten.
        if (target == source || res.distance[target] != 0) continue;
        st.beta[target] = 1;
        res.distance[target] = st.step;
        st.settled_now.push_back(target);
        st.is_converged = false;
      }
    }
    for (auto i : st.frontier) st.alpha[i] = 0;
    st.alpha.swap(st.beta);
    st.frontier.swap(st.settled_now);
    if (st.is_converged) break;
    ++res.iterations;
    res.reached += st.frontier.size();
  }
  return res;
}

SsspResult sssp(const CsrGraph& csr, const CscGraph* csc, NodeId source, Variant variant) {
  if (variant == Variant::bovm) {
    if (csc == nullptr) throw ConfigError("BOVM needs the CSC companion of the graph");
    return sssp_bovm(*csc, source);
  }
  return sssp_sovm(csr, source);
}

std::vector<SsspResult> msssp(const CsrGraph& csr, std::span<const NodeId> sources,
                              unsigned threads, Variant variant, const CscGraph* csc) {
  for (auto s : sources) check_source(csr.n(), s);
  if (variant == Variant::bovm && csc == nullptr) {
    throw ConfigError("BOVM needs the CSC companion of the graph");
  }
  std::vector<SsspResult> results(sources.size());
  detail::parallel_for(sources.size(), threads,
                       [&](std::uint64_t k) { results[k] = sssp(csr, csc, sources[k], variant); });
  return results;
}

ApspTotals apsp_stream(const CsrGraph& csr, unsigned threads,
                       const std::function<void(const SsspResult&)>& sink) {
  ApspTotals totals;
  std::mutex sink_mutex;
  detail::parallel_for(csr.n(), threads, [&](std::uint64_t k) {
    auto res = sssp_sovm(csr, static_cast<NodeId>(k));
    std::lock_guard lock(sink_mutex);
    totals.edge_inspections += res.edge_inspections;
    totals.node_inspections += res.node_inspections;
    totals.iterations += res.iterations;
    sink(res);
  });
  return totals;
}

DistanceMatrix apsp(const CsrGraph& csr, unsigned threads, std::uint64_t dense_limit,
                    ApspTotals* totals) {
  if (csr.n() > dense_limit) {
    throw CapacityError("dense APSP refused for n=" + std::to_string(csr.n()) + " (limit " +
                        std::to_string(dense_limit) + "); stream rows instead");
  }
  DistanceMatrix out;
  out.n = csr.n();
  out.data.assign(out.n * out.n, 0);
  auto t = apsp_stream(csr, threads, [&](const SsspResult& r) {
    std::copy(r.distance.begin(), r.distance.end(),
              out.data.begin() + static_cast<std::ptrdiff_t>(r.source * out.n));
  });
  if (totals != nullptr) *totals = t;
  return out;
}

}  // namespace dawn
