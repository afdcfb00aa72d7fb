#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vmcalc {

inline constexpr int kMaxVertices = 16;

// A labeled simple graph on vertices 0..n-1 with GF(2) adjacency rows packed
// into bit masks. Value type: two graphs compare equal iff they have the same
// order and the same adjacency bits.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  static Graph fromEdges(int n, const std::vector<std::pair<int, int>>& edges);
  static Graph cycle(int k);
  static Graph path(int k);  // k vertices, k-1 edges
  static Graph complete(int n);

  int order() const { return n_; }
  std::uint32_t vertexMask() const { return n_ == 0 ? 0 : ((1u << n_) - 1); }
  std::uint32_t neighbors(int v) const { return adj_[v]; }
  int degree(int v) const;
  bool hasEdge(int u, int v) const { return (adj_[u] >> v) & 1u; }
  void addEdge(int u, int v);
  void removeEdge(int u, int v);
  void toggleEdge(int u, int v);
  int edgeCount() const;

  // Packs order and adjacency into one word; valid for n <= 8.
  std::uint64_t packedKey() const;
  std::size_t hashValue() const;

  bool operator==(const Graph&) const = default;

 private:
  void checkVertex(int v) const;

  int n_ = 0;
  std::array<std::uint32_t, kMaxVertices> adj_{};  // unused slots stay zero
};

struct GraphHash {
  std::size_t operator()(const Graph& g) const { return g.hashValue(); }
};

Graph localComplement(Graph g, int v);
Graph pivot(const Graph& g, int v, int w);
Graph deleteVertex(const Graph& g, int v);
// G/v: delete if isolated, otherwise pivot on the least-labeled neighbor and
// delete. Well defined up to local equivalence for any neighbor choice.
Graph contractVertex(const Graph& g, int v);

int cutRank(const Graph& g, std::uint32_t X);

struct Split {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
};
std::optional<Split> findSplit(const Graph& g);
bool isPrime(const Graph& g);

struct StructuralSummary {
  std::uint32_t isolated = 0;
  std::uint32_t pendant = 0;
  std::vector<std::pair<int, int>> twinPairs;
  bool bipartite = false;
  bool cycleGraph = false;
  std::vector<int> degrees;
};
StructuralSummary structuralPredicates(const Graph& g);

bool isConnected(const Graph& g);
bool isBipartite(const Graph& g);
bool isCycleGraph(const Graph& g);
bool areTwins(const Graph& g, int u, int v);
bool hasTwinPair(const Graph& g);

// Plain graph surgery used by the extension lemmas and tests.
Graph addVertex(const Graph& g, std::uint32_t neighborMask);
Graph subdivideEdge(const Graph& g, int u, int v);
Graph contractEdge(const Graph& g, int u, int v);

// graph6 interchange format.
std::string toGraph6(const Graph& g);
Graph fromGraph6(const std::string& s);

// Edge list text: "n m\nu v\n..." with 0-based ids.
std::string toEdgeList(const Graph& g);
Graph fromEdgeList(const std::string& text);


}  // namespace vmcalc
