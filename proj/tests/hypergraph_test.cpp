#include <doctest.h>

#include <random>
#include <set>

#include "vmcalc/hypergraph.hpp"
#include "oracles.hpp"

using namespace vmcalc;

namespace {
// Synthetic tight cycle: all cyclically consecutive triples.
ThreeUniformHypergraph cyclicH(int n) {
  ThreeUniformHypergraph h(n);
  for (int i = 0; i < n; ++i) h.addEdge(i, (i + 1) % n, (i + 2) % n);
  return h;
}

// Three internally disjoint hub-to-hub ears: the triangle hypergraph of the
// theta(3,3,3) presentation.
ThreeUniformHypergraph threeEarH() {
  ThreeUniformHypergraph h(8);
  for (int i = 0; i < 3; ++i) {
    const int a = 2 + 2 * i, b = 3 + 2 * i;
    h.addEdge(0, a, b);
    h.addEdge(a, b, 1);
  }
  return h;
}

ThreeUniformHypergraph randomH(int n, int edges, std::mt19937& rng) {
  ThreeUniformHypergraph h(n);
  for (int i = 0; i < edges; ++i) {
    const int a = int(rng() % n);
    int b = int(rng() % n), c = int(rng() % n);
    if (a == b || b == c || a == c) continue;
    h.addEdge(a, b, c);
  }
  return h;
}
}  // namespace

TEST_CASE("tight path recognition") {
  ThreeUniformHypergraph h(5);
  h.addEdge(0, 1, 2);
  CHECK(isTightPath(h, {0, 1, 2}));
  CHECK(isTightPath(h, {2, 0, 1}));
  CHECK_FALSE(isTightPath(h, {0, 1, 3}));
  CHECK_FALSE(isTightPath(h, {0, 1, 0}));
  CHECK_FALSE(isTightPath(h, {0, 1}));

  const ThreeUniformHypergraph c5 = cyclicH(5);
  CHECK(isTightPath(c5, {4, 0, 1, 2, 3}));
  CHECK(isTightPath(c5, {0, 1, 2, 3}));
}

TEST_CASE("every length-3 path of the cyclic hypergraph is maximal") {
  const ThreeUniformHypergraph c5 = cyclicH(5);
  for (const TightPath& p : allTightPaths(c5)) {
    if (p.size() == 5) CHECK(isMaximalTightPath(c5, p));
    if (p.size() == 3) CHECK_FALSE(isMaximalTightPath(c5, p));
  }
}

TEST_CASE("the k=2 reordering extension is detected") {
  ThreeUniformHypergraph h(5);
  h.addEdge(0, 1, 2);
  h.addEdge(1, 2, 3);
  h.addEdge(1, 3, 4);  // reachable only through the reordered path 0 2 1 3
  CHECK(isTightPath(h, {0, 1, 2, 3}));
  CHECK_FALSE(isMaximalTightPath(h, {0, 1, 2, 3}));
  CHECK(isTightPath(h, {0, 2, 1, 3, 4}));
  CHECK(isMaximalTightPath(h, {0, 2, 1, 3, 4}));
  const TightPath grown = maximalTightPathContaining(h, sortedEdge(0, 1, 2));
  CHECK(grown.size() == 5);
  CHECK(isMaximalTightPath(h, grown));
}

TEST_CASE("an isolated edge is its own maximal path") {
  ThreeUniformHypergraph h(6);
  h.addEdge(0, 1, 2);
  h.addEdge(3, 4, 5);
  const TightPath p = maximalTightPathContaining(h, sortedEdge(0, 1, 2));
  CHECK(p.size() == 3);
  CHECK(isMaximalTightPath(h, p));
}

TEST_CASE("grown paths always contain the seed edge and end maximal") {
  std::mt19937 rng(500);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 4 + int(rng() % 3);
    const ThreeUniformHypergraph h = randomH(n, 3 + int(rng() % 6), rng);
    for (const HyperEdge& e : h.edges()) {
      const TightPath p = maximalTightPathContaining(h, e);
      CHECK(isMaximalTightPath(h, p));
      const std::vector<HyperEdge> pe = pathEdges(p);
      CHECK(std::binary_search(pe.begin(), pe.end(), e));
    }
  }
}

TEST_CASE("maximality agrees with the brute-force oracle") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 4 + int(rng() % 3);
    const ThreeUniformHypergraph h = randomH(n, 2 + int(rng() % 7), rng);
    for (const TightPath& p : allTightPaths(h)) {
      CHECK(isMaximalTightPath(h, p) == oracle::isMaximalBrute(h, p));
    }
  }
}

TEST_CASE("the path enumerator matches an unrestricted search") {
  std::mt19937 rng(1000);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4 + int(rng() % 3);
    const ThreeUniformHypergraph h = randomH(n, 2 + int(rng() % 6), rng);
    std::set<TightPath> fromLibrary;
    for (const TightPath& p : allTightPaths(h)) fromLibrary.insert(p);
    std::set<TightPath> fromBrute;
    for (const TightPath& q : oracle::allTightSequencesBrute(h)) {
      if (!isTightPath(h, q)) continue;
      TightPath rev(q.rbegin(), q.rend());
      fromBrute.insert(std::min(q, rev));
    }
    CHECK(fromLibrary == fromBrute);
  }
}

TEST_CASE("three hub-to-hub ears cover the theta hypergraph") {
  const ThreeUniformHypergraph h = threeEarH();
  const std::uint32_t N = 0b11;  // the two hubs
  const StructureDecomposition d = classifyStructures(h, N);
  CHECK(d.ears.size() == 3);
  for (const auto& ear : d.ears) CHECK(ear.size() == 2);
  CHECK(d.triangles.empty());
  CHECK(d.windmills.empty());
  CHECK(d.tripods.empty());
  CHECK(d.tables.empty());
  CHECK(d.uncovered.empty());
  CHECK(maximalPathsEqualOrDisjoint(h, N));
}

TEST_CASE("empty hypergraph classifies to nothing") {
  const ThreeUniformHypergraph h(5);
  const StructureDecomposition d = classifyStructures(h, 0b11111);
  CHECK(d.ears.empty());
  CHECK(d.triangles.empty());
  CHECK(d.windmills.empty());
  CHECK(d.tripods.empty());
  CHECK(d.tables.empty());
  CHECK(d.uncovered.empty());
  CHECK(maximalPathsEqualOrDisjoint(h, 0));
}

TEST_CASE("isolated in-N edges are triangles") {
  ThreeUniformHypergraph h(6);
  h.addEdge(0, 1, 2);
  const StructureDecomposition d = classifyStructures(h, 0b000111);
  CHECK(d.triangles.size() == 1);
  CHECK(d.uncovered.empty());
}

TEST_CASE("windmill, tripod and table recognizers accept hand-built instances") {
  // Windmill: hub 0, blades {1,2} and {3,4}.
  ThreeUniformHypergraph wm(5);
  wm.addEdge(0, 1, 2);
  wm.addEdge(0, 3, 4);
  const StructureDecomposition dw = classifyStructures(wm, 0b11110);
  CHECK(dw.windmills.size() == 1);
  CHECK(dw.windmills.front().size() == 2);
  CHECK(dw.uncovered.empty());

  // Tripod: hubs 0 and 1, apexes 2, 3, 4.
  ThreeUniformHypergraph tp(5);
  tp.addEdge(0, 1, 2);
  tp.addEdge(0, 1, 3);
  tp.addEdge(0, 1, 4);
  const StructureDecomposition dt = classifyStructures(tp, 0b11100);
  CHECK(dt.tripods.size() == 1);
  CHECK(dt.tripods.front().size() == 3);
  CHECK(dt.uncovered.empty());

  // Table: base {0,1,2} with apexes 3, 4, 5.
  ThreeUniformHypergraph tb(6);
  tb.addEdge(0, 1, 2);
  tb.addEdge(0, 1, 3);
  tb.addEdge(1, 2, 4);
  tb.addEdge(0, 2, 5);
  const StructureDecomposition db = classifyStructures(tb, 0b111000);
  CHECK(db.tables.size() == 1);
  CHECK(db.tables.front().size() == 4);
  CHECK(db.uncovered.empty());
}

TEST_CASE("fixture round trip") {
  const ThreeUniformHypergraph h = threeEarH();
  CHECK(hypergraphFromEdgeLines(h.order(), toEdgeLines(h)) == h);
}
