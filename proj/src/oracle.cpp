#include "dawn/oracle.hpp"

#include <limits>
#include <queue>
#include <string>

#include "dawn/error.hpp"

namespace dawn::oracle {

BfsTrace bfs_baseline(const CsrGraph& csr, NodeId source) {
  if (source >= csr.n()) {
    throw BoundsError("source " + std::to_string(source) + " outside [0," +
                      std::to_string(csr.n()) + ")");
  }
  BfsTrace t;
  t.distance.assign(csr.n(), 0);
  std::queue<NodeId> queue;
  queue.push(source);
  while (!queue.empty()) {
    const auto i = queue.front();
    queue.pop();
    ++t.nodes_visited;
    for (auto index : csr.out_neighbors(i)) {
      ++t.edges_visited;
      if (index != source && t.distance[index] == 0) {
        t.distance[index] = t.distance[i] + 1;
        queue.push(index);
      } else {
        ++t.settled_target_checks;
      }
    }
  }
  return t;
}

namespace {

constexpr auto kSat = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b, bool& saturated) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    saturated = true;
    return kSat;
  }
  return r;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b, bool& saturated) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    saturated = true;
    return kSat;
  }
  return r;
}

}  // namespace

DenseCountMatrix::DenseCountMatrix(std::uint64_t n) : n_(n) {
  if (n > kMaxDenseNodes) {
    throw DomainError("dense count matrix limited to " + std::to_string(kMaxDenseNodes) +
                      " nodes, got " + std::to_string(n));
  }
  counts_.assign(n * n, 0);
}

DenseCountMatrix DenseCountMatrix::adjacency(const CsrGraph& csr) {
  DenseCountMatrix a(csr.n());
  for (NodeId u = 0; u < csr.n(); ++u) {
    for (auto v : csr.out_neighbors(u)) a.set(u, v, 1);
  }
  return a;
}

DenseCountMatrix DenseCountMatrix::operator*(const DenseCountMatrix& rhs) const {
  if (rhs.n_ != n_) throw DomainError("dimension mismatch");
  DenseCountMatrix out(n_);
  bool sat = saturated_ || rhs.saturated_;
  for (std::uint64_t i = 0; i < n_; ++i) {
    for (std::uint64_t j = 0; j < n_; ++j) {
      std::uint64_t acc = 0;
      for (std::uint64_t l = 0; l < n_; ++l) {
        acc = sat_add(acc, sat_mul(at(i, l), rhs.at(l, j), sat), sat);
      }
      out.set(i, j, acc);
    }
  }
  out.saturated_ = sat;
  return out;
}

DenseCountMatrix path_count_power(const DenseCountMatrix& adjacency, std::uint64_t k) {
  if (k == 0 || k > adjacency.n()) {
    throw DomainError("power k=" + std::to_string(k) + " outside [1," +
                      std::to_string(adjacency.n()) + "]");
  }
  auto power = adjacency;
  for (std::uint64_t step = 1; step < k; ++step) power = power * adjacency;
  return power;
}

std::optional<std::uint64_t> first_hit_distance(const DenseCountMatrix& adjacency, NodeId i,
                                                NodeId j) {
  const auto n = adjacency.n();
  if (i == j) throw DomainError("first-hit distance needs i != j");
  if (i >= n || j >= n) throw BoundsError("node outside the count matrix");

  // row = e_i * A^k, i.e. row i of A^k.
  std::vector<std::uint64_t> row(n), next(n);
  for (std::uint64_t c = 0; c < n; ++c) row[c] = adjacency.at(i, c);
  bool sat = false;
  for (std::uint64_t k = 1; k < n; ++k) {
    if (row[j] > 0) return k;
    for (std::uint64_t c = 0; c < n; ++c) {
      std::uint64_t acc = 0;
      for (std::uint64_t l = 0; l < n; ++l) {
        acc = sat_add(acc, sat_mul(row[l], adjacency.at(l, c), sat), sat);
      }
      next[c] = acc;
    }
    row.swap(next);
  }
  return std::nullopt;
}

}  // namespace dawn::oracle
