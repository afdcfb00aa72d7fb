#include "vmcalc/graph.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

#include "vmcalc/gf2.hpp"

namespace vmcalc {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("graph order out of range");
}

Graph Graph::fromEdges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.addEdge(u, v);
  return g;
}

Graph Graph::cycle(int k) {
  if (k < 3) throw std::invalid_argument("cycle length must be at least 3");
  Graph g(k);
  for (int i = 0; i < k; ++i) g.addEdge(i, (i + 1) % k);
  return g;
}

Graph Graph::path(int k) {
  Graph g(k);
  for (int i = 0; i + 1 < k; ++i) g.addEdge(i, i + 1);
  return g;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.addEdge(i, j);
  return g;
}

void Graph::checkVertex(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("unknown vertex");
}

int Graph::degree(int v) const {
  checkVertex(v);
  return std::popcount(adj_[v]);
}

void Graph::addEdge(int u, int v) {
  checkVertex(u);
  checkVertex(v);
  if (u == v) throw std::invalid_argument("loops are not allowed");
  adj_[u] |= 1u << v;
  adj_[v] |= 1u << u;
}

void Graph::removeEdge(int u, int v) {
  checkVertex(u);
  checkVertex(v);
  adj_[u] &= ~(1u << v);
  adj_[v] &= ~(1u << u);
}

void Graph::toggleEdge(int u, int v) {
  checkVertex(u);
  checkVertex(v);
  if (u == v) throw std::invalid_argument("loops are not allowed");
  adj_[u] ^= 1u << v;
  adj_[v] ^= 1u << u;
}

int Graph::edgeCount() const {
  int total = 0;
  for (int v = 0; v < n_; ++v) total += std::popcount(adj_[v]);
  return total / 2;
}

std::uint64_t Graph::packedKey() const {
  if (n_ > 8) throw std::invalid_argument("packedKey requires order <= 8");
  std::uint64_t k = 0;
  for (int v = 0; v < n_; ++v) k |= std::uint64_t(adj_[v] & 0xffu) << (8 * v);
  return k;
}

std::size_t Graph::hashValue() const {
  std::uint64_t h = 1469598103934665603ull ^ static_cast<std::uint64_t>(n_);
  for (int v = 0; v < n_; ++v) {
    h ^= adj_[v];
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

Graph localComplement(Graph g, int v) {
  if (v < 0 || v >= g.order()) throw std::out_of_range("unknown vertex");
  const std::uint32_t nb = g.neighbors(v);
  std::uint32_t rest = nb;
  while (rest) {
    const int x = std::countr_zero(rest);
    rest &= rest - 1;
    std::uint32_t others = nb & ~(1u << x) & ~((1u << x) - 1);
    while (others) {
      const int y = std::countr_zero(others);
      others &= others - 1;
      g.toggleEdge(x, y);
    }
  }
  return g;
}

namespace {
Graph swapLabels(Graph g, int v, int w) {
  Graph out(g.order());
  for (int a = 0; a < g.order(); ++a) {
    for (int b = a + 1; b < g.order(); ++b) {
      if (!g.hasEdge(a, b)) continue;
      const int a2 = a == v ? w : (a == w ? v : a);
      const int b2 = b == v ? w : (b == w ? v : b);
      out.addEdge(a2, b2);
    }
  }
  return out;
}
}  // namespace

Graph pivot(const Graph& g, int v, int w) {
  if (v < 0 || v >= g.order() || w < 0 || w >= g.order())
    throw std::out_of_range("unknown vertex");
  if (!g.hasEdge(v, w)) throw std::invalid_argument("pivot requires an edge");
  const std::uint32_t nv = g.neighbors(v), nw = g.neighbors(w);
  const std::uint32_t onlyV = nv & ~nw & ~(1u << w);
  const std::uint32_t onlyW = nw & ~nv & ~(1u << v);
  const std::uint32_t both = nv & nw;
  Graph out = g;
  auto togglePairs = [&out](std::uint32_t as, std::uint32_t bs) {
    std::uint32_t a = as;
    while (a) {
      const int x = std::countr_zero(a);
      a &= a - 1;
      std::uint32_t b = bs;
      while (b) {
        const int y = std::countr_zero(b);
        b &= b - 1;
        out.toggleEdge(x, y);
      }
    }
  };
  togglePairs(onlyV, onlyW);
  togglePairs(onlyV, both);
  togglePairs(onlyW, both);
  return swapLabels(out, v, w);
}

Graph deleteVertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw std::out_of_range("unknown vertex");
  Graph out(g.order() - 1);
  for (int a = 0; a < g.order(); ++a) {
    if (a == v) continue;
    for (int b = a + 1; b < g.order(); ++b) {
      if (b == v || !g.hasEdge(a, b)) continue;
      out.addEdge(a - (a > v), b - (b > v));
    }
  }
  return out;
}

Graph contractVertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw std::out_of_range("unknown vertex");
  const std::uint32_t nb = g.neighbors(v);
  if (!nb) return deleteVertex(g, v);
  const int w = std::countr_zero(nb);
  return deleteVertex(pivot(g, v, w), v);
}

namespace {
// Incremental GF(2) elimination on the cross rows, stopping once the rank
// exceeds `cap` (cap < 0 means no cap).
int crossRank(const Graph& g, std::uint32_t X, int cap) {
  const std::uint32_t comp = g.vertexMask() & ~X;
  std::uint32_t rows[kMaxVertices];
  int r = 0;
  std::uint32_t rest = X;
  while (rest) {
    const int v = std::countr_zero(rest);
    rest &= rest - 1;
    std::uint32_t w = g.neighbors(v) & comp;
    for (int j = 0; j < r; ++j) {
      if (w & (rows[j] & -rows[j])) w ^= rows[j];
    }
    if (w) {
      rows[r++] = w;
      if (cap >= 0 && r > cap) return r;
    }
  }
  return r;
}
}  // namespace

int cutRank(const Graph& g, std::uint32_t X) {
  if (X & ~g.vertexMask()) throw std::invalid_argument("X is not a subset of the vertex set");
  return crossRank(g, X, -1);
}

std::optional<Split> findSplit(const Graph& g) {
  const int n = g.order();
  if (n < 4) return std::nullopt;
  const std::uint32_t full = g.vertexMask();
  // Fix vertex 0 inside X; complements are covered by symmetry of cut-rank.
  for (std::uint32_t X = 1; X < (1u << n); X += 2) {
    const int s = std::popcount(X);
    if (s < 2 || n - s < 2) continue;
    if (crossRank(g, X, 1) <= 1) return Split{X, full & ~X};
  }
  return std::nullopt;
}

bool isPrime(const Graph& g) {
  // Fast reject: an isolated vertex, pendant vertex, or twin pair always
  // produces a split when n >= 5 (cross-checked exhaustively in the tests).
  if (g.order() >= 5) {
    for (int v = 0; v < g.order(); ++v) {
      if (std::popcount(g.neighbors(v)) <= 1) return false;
    }
    for (int u = 0; u < g.order(); ++u) {
      const std::uint32_t nu = g.neighbors(u);
      for (int v = u + 1; v < g.order(); ++v) {
        if (((nu ^ g.neighbors(v)) & ~((1u << u) | (1u << v))) == 0) return false;
      }
    }
  }
  return !findSplit(g).has_value();
}

bool isConnected(const Graph& g) {
  if (g.order() == 0) return true;
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    std::uint32_t f = frontier;
    while (f) {
      const int v = std::countr_zero(f);
      f &= f - 1;
      next |= g.neighbors(v);
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == g.vertexMask();
}

bool isBipartite(const Graph& g) {
  std::vector<int> color(g.order(), -1);
  for (int start = 0; start < g.order(); ++start) {
    if (color[start] >= 0) continue;
    color[start] = 0;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      std::uint32_t nb = g.neighbors(v);
      while (nb) {
        const int w = std::countr_zero(nb);
        nb &= nb - 1;
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool isCycleGraph(const Graph& g) {
  if (g.order() < 3) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (std::popcount(g.neighbors(v)) != 2) return false;
  }
  return isConnected(g);
}

bool areTwins(const Graph& g, int u, int v) {
  const std::uint32_t others = ~(1u << u) & ~(1u << v);
  return ((g.neighbors(u) ^ g.neighbors(v)) & others) == 0;
}

bool hasTwinPair(const Graph& g) {
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (areTwins(g, u, v)) return true;
  return false;
}

StructuralSummary structuralPredicates(const Graph& g) {
  StructuralSummary s;
  s.degrees.resize(g.order());
  for (int v = 0; v < g.order(); ++v) {
    s.degrees[v] = g.degree(v);
    if (s.degrees[v] == 0) s.isolated |= 1u << v;
    if (s.degrees[v] == 1) s.pendant |= 1u << v;
  }
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (areTwins(g, u, v)) s.twinPairs.emplace_back(u, v);
  s.bipartite = isBipartite(g);
  s.cycleGraph = isCycleGraph(g);
  return s;
}

Graph addVertex(const Graph& g, std::uint32_t neighborMask) {
  Graph out(g.order() + 1);
  for (int a = 0; a < g.order(); ++a)
    for (int b = a + 1; b < g.order(); ++b)
      if (g.hasEdge(a, b)) out.addEdge(a, b);
  std::uint32_t nb = neighborMask;
  while (nb) {
    const int v = std::countr_zero(nb);
    nb &= nb - 1;
    out.addEdge(v, g.order());
  }
  return out;
}

Graph subdivideEdge(const Graph& g, int u, int v) {
  if (!g.hasEdge(u, v)) throw std::invalid_argument("subdivision requires an edge");
  Graph out = addVertex(g, (1u << u) | (1u << v));
  out.removeEdge(u, v);
  return out;
}

Graph contractEdge(const Graph& g, int u, int v) {
  if (!g.hasEdge(u, v)) throw std::invalid_argument("contraction requires an edge");
  Graph merged = g;
  std::uint32_t nb = g.neighbors(v) & ~(1u << u);
  while (nb) {
    const int w = std::countr_zero(nb);
    nb &= nb - 1;
    if (!merged.hasEdge(u, w)) merged.addEdge(u, w);
  }
  return deleteVertex(merged, v);
}

std::string toGraph6(const Graph& g) {
  const int n = g.order();
  if (n > 62) throw std::invalid_argument("graph too large for short graph6 form");
  std::string s(1, static_cast<char>(n + 63));
  int bitpos = 5;
  char cur = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (g.hasEdge(i, j)) cur |= 1 << bitpos;
      if (--bitpos < 0) {
        s.push_back(static_cast<char>(cur + 63));
        bitpos = 5;
        cur = 0;
      }
    }
  }
  if (bitpos != 5) s.push_back(static_cast<char>(cur + 63));
  return s;
}

Graph fromGraph6(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty graph6 string");
  std::size_t pos = 0;
  const int n = s[pos++] - 63;
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("graph6 order out of range");
  Graph g(n);
  int bitpos = -1;
  int cur = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (bitpos < 0) {
        if (pos >= s.size()) throw std::invalid_argument("truncated graph6 string");
        cur = s[pos++] - 63;
        if (cur < 0 || cur > 63) throw std::invalid_argument("bad graph6 character");
        bitpos = 5;
      }
      if ((cur >> bitpos) & 1) g.addEdge(i, j);
      --bitpos;
    }
  }
  return g;
}

std::string toEdgeList(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edgeCount() << '\n';
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.hasEdge(u, v)) out << u << ' ' << v << '\n';
  return out.str();
}

Graph fromEdgeList(const std::string& text) {
  std::istringstream in(text);
  int n = 0, m = 0;
  if (!(in >> n >> m)) throw std::invalid_argument("bad edge list header");
  Graph g(n);
  for (int i = 0; i < m; ++i) {
    int u = 0, v = 0;
    if (!(in >> u >> v)) throw std::invalid_argument("truncated edge list");
    g.addEdge(u, v);
  }
  return g;
}


}  // namespace vmcalc
