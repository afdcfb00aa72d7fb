#include "vmcalc/equivalence.hpp"

#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace vmcalc {

namespace {
Orbit closure(const Graph& seed, OrbitGenerator gen) {
  Orbit orbit;
  orbit.seed = seed;
  orbit.generator = gen;
  std::unordered_set<Graph, GraphHash> seen{seed};
  orbit.members.push_back(seed);
  for (std::size_t head = 0; head < orbit.members.size(); ++head) {
    const Graph g = orbit.members[head];
    if (gen == OrbitGenerator::Local) {
      for (int v = 0; v < g.order(); ++v) {
        if (std::popcount(g.neighbors(v)) < 2) continue;  // no-op otherwise
        Graph h = localComplement(g, v);
        if (seen.insert(h).second) orbit.members.push_back(h);
      }
    } else {
      for (int v = 0; v < g.order(); ++v) {
        std::uint32_t nb = g.neighbors(v) & ~((1u << v) | ((1u << v) - 1));
        while (nb) {
          const int w = std::countr_zero(nb);
          nb &= nb - 1;
          Graph h = pivot(g, v, w);
          if (seen.insert(h).second) orbit.members.push_back(h);
        }
      }
    }
  }
  return orbit;
}
}  // namespace

Orbit localOrbit(const Graph& g) { return closure(g, OrbitGenerator::Local); }

Orbit pivotOrbit(const Graph& g) { return closure(g, OrbitGenerator::Pivot); }

bool locallyEquivalent(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return false;
  for (const Graph& m : localOrbit(a).members) {
    if (m == b) return true;
  }
  return false;
}

std::optional<int> isLocallyEquivalentToCycle(const Graph& g) {
  for (const Graph& m : localOrbit(g).members) {
    if (isCycleGraph(m)) return m.order();
  }
  return std::nullopt;
}

bool isPivotEquivalentToEvenCycle(const Graph& g) {
  for (const Graph& m : pivotOrbit(g).members) {
    if (isCycleGraph(m) && m.order() % 2 == 0) return true;
  }
  return false;
}

ReductionPrimality classifyVertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw std::out_of_range("unknown vertex");
  ReductionPrimality r;
  r.primeDelete = isPrime(deleteVertex(g, v));
  r.primeStarDelete = isPrime(deleteVertex(localComplement(g, v), v));
  r.primeContract = isPrime(contractVertex(g, v));
  return r;
}

std::uint32_t nonEssentialVertices(const Graph& g) {
  std::uint32_t out = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (classifyVertex(g, v).primeCount() >= 2) out |= 1u << v;
  }
  return out;
}

std::uint32_t nonPivotalVertices(const Graph& g) {
  std::uint32_t out = 0;
  for (int v = 0; v < g.order(); ++v) {
    const ReductionPrimality r = classifyVertex(g, v);
    if (r.primeDelete || r.primeContract) out |= 1u << v;
  }
  return out;
}

bool checkReductionTriple(const Graph& g, int v, int w) {
  if (v < 0 || v >= g.order() || w < 0 || w >= g.order())
    throw std::out_of_range("unknown vertex");
  const Graph gw = localComplement(g, w);
  const Graph d = deleteVertex(g, v);
  const Graph sd = deleteVertex(localComplement(g, v), v);
  const Graph c = contractVertex(g, v);
  const Graph x1 = deleteVertex(gw, v);
  const Graph x2 = deleteVertex(localComplement(gw, v), v);
  const Graph x3 = contractVertex(gw, v);
  if (v == w) {
    return locallyEquivalent(x1, sd) && locallyEquivalent(x2, d) &&
           locallyEquivalent(x3, c);
  }
  if (g.hasEdge(v, w)) {
    return locallyEquivalent(x1, d) && locallyEquivalent(x2, c) &&
           locallyEquivalent(x3, sd);
  }
  return locallyEquivalent(x1, d) && locallyEquivalent(x2, sd) &&
         locallyEquivalent(x3, c);
}

}  // namespace vmcalc
