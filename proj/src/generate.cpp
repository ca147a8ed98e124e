#include "dawn/generate.hpp"

#include <random>

#include "dawn/error.hpp"

namespace dawn::gen {

CsrGraph erdos_renyi(std::uint64_t n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw DomainError("edge probability outside [0,1]");
  EdgeList el;
  el.num_nodes = n;
  if (p > 0.0 && n > 1) {
    std::mt19937_64 rng(seed);
    // Geometric skips over the n*(n-1) ordered pairs without loops.
    const auto pairs = n * (n - 1);
    std::uint64_t pos = 0;
    auto advance = [&]() -> std::uint64_t {
      if (p >= 1.0) return 0;
      return std::geometric_distribution<std::uint64_t>(p)(rng);
    };
    for (pos = advance(); pos < pairs; pos += 1 + advance()) {
      const auto u = pos / (n - 1);
      auto v = pos % (n - 1);
      if (v >= u) ++v;
      el.edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
    }
  }
  return build_csr(el);
}

CsrGraph random_edges(std::uint64_t n, std::uint64_t m, std::uint64_t seed) {
  EdgeList el;
  el.num_nodes = n;
  if (n > 0) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<NodeId> pick(0, static_cast<NodeId>(n - 1));
    el.edges.reserve(m);
    for (std::uint64_t k = 0; k < m; ++k) el.edges.emplace_back(pick(rng), pick(rng));
  }
  return build_csr(el);
}

CsrGraph directed_path(std::uint64_t n) {
  EdgeList el;
  el.num_nodes = n;
  for (std::uint64_t u = 0; u + 1 < n; ++u) {
    el.edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(u + 1));
  }
  return build_csr(el);
}

CsrGraph directed_cycle(std::uint64_t n) {
  EdgeList el;
  el.num_nodes = n;
  for (std::uint64_t u = 0; u < n && n > 1; ++u) {
    el.edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>((u + 1) % n));
  }
  return build_csr(el);
}

CsrGraph star(std::uint64_t leaves, bool symmetric) {
  EdgeList el;
  el.num_nodes = leaves + 1;
  el.directedness = symmetric ? Directedness::undirected : Directedness::directed;
  for (std::uint64_t v = 1; v <= leaves; ++v) el.edges.emplace_back(0, static_cast<NodeId>(v));
  el.normalize();
  return build_csr(el);
}

CsrGraph complete(std::uint64_t n) {
  EdgeList el;
  el.num_nodes = n;
  for (std::uint64_t u = 0; u < n; ++u) {
    for (std::uint64_t v = 0; v < n; ++v) {
      if (u != v) el.edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
    }
  }
  return build_csr(el);
}

CsrGraph disjoint_union(const CsrGraph& a, const CsrGraph& b) {
  auto el = to_edge_list(a);
  const auto shift = static_cast<NodeId>(a.n());
  el.num_nodes = a.n() + b.n();
  for (NodeId u = 0; u < b.n(); ++u) {
    for (auto v : b.out_neighbors(u)) el.edges.emplace_back(u + shift, v + shift);
  }
  return build_csr(el);
}

CsrGraph symmetrize(const CsrGraph& g) {
  auto el = to_edge_list(g);
  el.directedness = Directedness::undirected;
  el.normalize();
  return build_csr(el);
}

}  // namespace dawn::gen
