#pragma once

#include <cstdint>
#include <functional>

#include "vmcalc/graph.hpp"

namespace vmcalc {

struct GraphFilter {
  bool connected = false;
  bool prime = false;
  bool bipartite = false;
};

std::uint64_t labeledGraphCount(int n);  // 2^(n choose 2)

// The labeled graph with the given edge-mask, edges ordered (0,1), (0,2),
// ..., (0,n-1), (1,2), ... lexicographically by (i,j) with i < j.
Graph graphFromMask(int n, std::uint64_t mask);

// Cheap necessary condition for primality on n >= 5: no isolated vertex,
// pendant vertex, or twin pair.
bool primePrefilter(const Graph& g);

bool passesFilter(const Graph& g, const GraphFilter& f);

// Visits every labeled graph on n vertices passing the filter, in mask
// order. The visitor may return false to stop early.
void forEachGraph(int n, const GraphFilter& f, const std::function<bool(const Graph&)>& visit);

}  // namespace vmcalc
