#include "vmcalc/enumerate.hpp"

#include <stdexcept>

namespace vmcalc {

std::uint64_t labeledGraphCount(int n) {
  if (n < 0 || n > 10) throw std::invalid_argument("exhaustive enumeration bound exceeded");
  return std::uint64_t(1) << (n * (n - 1) / 2);
}

Graph graphFromMask(int n, std::uint64_t mask) {
  Graph g(n);
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit) {
      if ((mask >> bit) & 1u) g.addEdge(i, j);
    }
  }
  return g;
}

bool primePrefilter(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) <= 1) return false;
  }
  return !hasTwinPair(g);
}

bool passesFilter(const Graph& g, const GraphFilter& f) {
  if (f.connected && !isConnected(g)) return false;
  if (f.bipartite && !isBipartite(g)) return false;
  if (f.prime) {
    if (g.order() >= 5 && !primePrefilter(g)) return false;
    if (!isPrime(g)) return false;
  }
  return true;
}

void forEachGraph(int n, const GraphFilter& f, const std::function<bool(const Graph&)>& visit) {
  const std::uint64_t total = labeledGraphCount(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const Graph g = graphFromMask(n, mask);
    if (!passesFilter(g, f)) continue;
    if (!visit(g)) return;
  }
}

}  // namespace vmcalc
