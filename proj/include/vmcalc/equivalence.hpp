#pragma once

#include <optional>
#include <vector>

#include "vmcalc/graph.hpp"

namespace vmcalc {

enum class OrbitGenerator { Local, Pivot };

// Closure of a labeled graph under local complementation at every vertex or
// pivoting on every edge. Members share the seed's vertex set; no isomorphism
// quotient is taken.
struct Orbit {
  Graph seed;
  OrbitGenerator generator = OrbitGenerator::Local;
  std::vector<Graph> members;  // BFS order, seed first
};

Orbit localOrbit(const Graph& g);
Orbit pivotOrbit(const Graph& g);

bool locallyEquivalent(const Graph& a, const Graph& b);

// Length of a cycle graph in the local orbit, if any. Orbit members span the
// seed's vertex set, so a cycle member always has length order(G).
std::optional<int> isLocallyEquivalentToCycle(const Graph& g);
bool isPivotEquivalentToEvenCycle(const Graph& g);

struct ReductionPrimality {
  bool primeDelete = false;      // G \ v
  bool primeStarDelete = false;  // G * v \ v
  bool primeContract = false;    // G / v
  int primeCount() const {
    return int(primeDelete) + int(primeStarDelete) + int(primeContract);
  }
};
ReductionPrimality classifyVertex(const Graph& g, int v);

// Vertices with at least two prime reductions.
std::uint32_t nonEssentialVertices(const Graph& g);
// Vertices v with G\v or G/v prime.
std::uint32_t nonPivotalVertices(const Graph& g);

// Checks the three-case correspondence between the reductions of G at v and
// the reductions of G*w at v (cases v = w, vw an edge, vw a non-edge).
bool checkReductionTriple(const Graph& g, int v, int w);

}  // namespace vmcalc
