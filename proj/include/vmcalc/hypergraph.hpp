#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace vmcalc {

using HyperEdge = std::array<int, 3>;  // sorted vertex triple

// A 3-uniform hypergraph on vertices 0..n-1.
class ThreeUniformHypergraph {
 public:
  ThreeUniformHypergraph() = default;
  explicit ThreeUniformHypergraph(int n) : n_(n) {}

  int order() const { return n_; }
  const std::vector<HyperEdge>& edges() const { return edges_; }
  void addEdge(int a, int b, int c);
  bool hasEdge(int a, int b, int c) const;
  bool hasEdge(const HyperEdge& e) const { return hasEdge(e[0], e[1], e[2]); }
  std::vector<HyperEdge> edgesIncident(int v) const;

  bool operator==(const ThreeUniformHypergraph&) const = default;

 private:
  int n_ = 0;
  std::vector<HyperEdge> edges_;  // kept sorted, no duplicates
};

// Fixture format: one edge per line, three ids.
std::string toEdgeLines(const ThreeUniformHypergraph& h);
ThreeUniformHypergraph hypergraphFromEdgeLines(int n, const std::string& text);

// A tight path is a sequence of distinct vertices v_0..v_{k+1} whose k
// consecutive triples are all edges; stored as the vertex sequence.
using TightPath = std::vector<int>;

HyperEdge sortedEdge(int a, int b, int c);
std::vector<HyperEdge> pathEdges(const TightPath& p);

bool isTightPath(const ThreeUniformHypergraph& h, const TightPath& seq);
// A tight path is maximal when no tight path has a strictly larger edge set;
// tested via the three extension cases (end extension, and the k = 1 and
// k = 2 reorderings).
bool isMaximalTightPath(const ThreeUniformHypergraph& h, const TightPath& p);
TightPath maximalTightPathContaining(const ThreeUniformHypergraph& h, const HyperEdge& e);

// All tight paths up to reversal (desk-scale enumeration).
std::vector<TightPath> allTightPaths(const ThreeUniformHypergraph& h);
// Maximal tight paths, deduplicated by edge set.
std::vector<TightPath> allMaximalTightPaths(const ThreeUniformHypergraph& h);

std::uint32_t pathVertexMask(const TightPath& p);
std::uint32_t internalVertexMask(const TightPath& p);
std::uint32_t endVertexMask(const TightPath& p);

// The five structure types relative to a vertex subset N, each one a list of
// edge sets, plus the edges covered by none of them.
struct StructureDecomposition {
  std::vector<std::vector<HyperEdge>> ears;
  std::vector<std::vector<HyperEdge>> triangles;
  std::vector<std::vector<HyperEdge>> windmills;
  std::vector<std::vector<HyperEdge>> tripods;
  std::vector<std::vector<HyperEdge>> tables;
  std::vector<HyperEdge> uncovered;
};
StructureDecomposition classifyStructures(const ThreeUniformHypergraph& h, std::uint32_t N);

// Whether all maximal tight paths P, Q satisfy: V(P) - N and V(Q) - N are
// equal or disjoint.
bool maximalPathsEqualOrDisjoint(const ThreeUniformHypergraph& h, std::uint32_t N);

}  // namespace vmcalc
