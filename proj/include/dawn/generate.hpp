#pragma once

#include <cstdint>

#include "dawn/graph.hpp"

// Synthetic graphs for tests, verification sweeps and smoke benchmarks.
namespace dawn::gen {

/// G(n, p) digraph: every ordered pair (u, v), u != v, independently with
/// probability p.
CsrGraph erdos_renyi(std::uint64_t n, double p, std::uint64_t seed);

/// n nodes and m uniformly drawn ordered pairs (duplicates and loops are
/// dropped, so the result may hold slightly fewer than m edges).
CsrGraph random_edges(std::uint64_t n, std::uint64_t m, std::uint64_t seed);

CsrGraph directed_path(std::uint64_t n);
CsrGraph directed_cycle(std::uint64_t n);
/// Node 0 points at nodes 1..leaves; symmetric adds the reverse edges.
CsrGraph star(std::uint64_t leaves, bool symmetric = false);
CsrGraph complete(std::uint64_t n);
/// Nodes of `b` are shifted past those of `a`.
CsrGraph disjoint_union(const CsrGraph& a, const CsrGraph& b);
/// Every edge of `g` plus its reverse.
CsrGraph symmetrize(const CsrGraph& g);

}  // namespace dawn::gen
