#include "vmcalc/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <stdexcept>

namespace vmcalc {

HyperEdge sortedEdge(int a, int b, int c) {
  HyperEdge e{a, b, c};
  std::sort(e.begin(), e.end());
  return e;
}

void ThreeUniformHypergraph::addEdge(int a, int b, int c) {
  if (a == b || b == c || a == c) throw std::invalid_argument("edge needs three distinct vertices");
  if (a < 0 || b < 0 || c < 0 || a >= n_ || b >= n_ || c >= n_)
    throw std::out_of_range("unknown vertex");
  const HyperEdge e = sortedEdge(a, b, c);
  auto pos = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (pos == edges_.end() || *pos != e) edges_.insert(pos, e);
}

bool ThreeUniformHypergraph::hasEdge(int a, int b, int c) const {
  const HyperEdge e = sortedEdge(a, b, c);
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<HyperEdge> ThreeUniformHypergraph::edgesIncident(int v) const {
  std::vector<HyperEdge> out;
  for (const HyperEdge& e : edges_) {
    if (e[0] == v || e[1] == v || e[2] == v) out.push_back(e);
  }
  return out;
}

std::string toEdgeLines(const ThreeUniformHypergraph& h) {
  std::ostringstream out;
  for (const HyperEdge& e : h.edges()) out << e[0] << ' ' << e[1] << ' ' << e[2] << '\n';
  return out.str();
}

ThreeUniformHypergraph hypergraphFromEdgeLines(int n, const std::string& text) {
  ThreeUniformHypergraph h(n);
  std::istringstream in(text);
  int a, b, c;
  while (in >> a >> b >> c) h.addEdge(a, b, c);
  return h;
}

std::vector<HyperEdge> pathEdges(const TightPath& p) {
  std::vector<HyperEdge> out;
  for (std::size_t i = 0; i + 2 < p.size(); ++i)
    out.push_back(sortedEdge(p[i], p[i + 1], p[i + 2]));
  std::sort(out.begin(), out.end());
  return out;
}

bool isTightPath(const ThreeUniformHypergraph& h, const TightPath& seq) {
  if (seq.size() < 3) return false;
  std::uint32_t seen = 0;
  for (int v : seq) {
    if (v < 0 || v >= h.order() || (seen & (1u << v))) return false;
    seen |= 1u << v;
  }
  for (std::size_t i = 0; i + 2 < seq.size(); ++i) {
    if (!h.hasEdge(seq[i], seq[i + 1], seq[i + 2])) return false;
  }
  return true;
}

std::uint32_t pathVertexMask(const TightPath& p) {
  std::uint32_t m = 0;
  for (int v : p) m |= 1u << v;
  return m;
}

std::uint32_t endVertexMask(const TightPath& p) {
  if (p.size() == 3) return pathVertexMask(p);
  return (1u << p.front()) | (1u << p.back());
}

std::uint32_t internalVertexMask(const TightPath& p) {
  return pathVertexMask(p) & ~endVertexMask(p);
}

namespace {
// Least w outside `used` such that {a, b, w} is an edge, or -1.
int leastExtension(const ThreeUniformHypergraph& h, std::uint32_t used, int a, int b) {
  for (int w = 0; w < h.order(); ++w) {
    if (used & (1u << w)) continue;
    if (h.hasEdge(a, b, w)) return w;
  }
  return -1;
}
}  // namespace

bool isMaximalTightPath(const ThreeUniformHypergraph& h, const TightPath& p) {
  if (!isTightPath(h, p)) throw std::invalid_argument("not a tight path");
  const std::uint32_t used = pathVertexMask(p);
  const std::size_t k = p.size() - 2;
  const int last = static_cast<int>(p.size()) - 1;
  if (leastExtension(h, used, p[last - 1], p[last]) >= 0) return false;
  if (leastExtension(h, used, p[0], p[1]) >= 0) return false;
  if (k == 1) {
    // Reordering v1 v0 v2 extends with an edge {v0, v2, w}.
    if (leastExtension(h, used, p[0], p[2]) >= 0) return false;
  }
  if (k == 2) {
    // Reordering v0 v2 v1 v3 extends on the right with {v1, v3, w} and on
    // the left with {v0, v2, w}.
    if (leastExtension(h, used, p[1], p[3]) >= 0) return false;
    if (leastExtension(h, used, p[0], p[2]) >= 0) return false;
  }
  return true;
}

TightPath maximalTightPathContaining(const ThreeUniformHypergraph& h, const HyperEdge& e) {
  if (!h.hasEdge(e)) throw std::invalid_argument("not an edge of the hypergraph");
  TightPath p{e[0], e[1], e[2]};
  for (;;) {
    const std::uint32_t used = pathVertexMask(p);
    const std::size_t k = p.size() - 2;
    const int last = static_cast<int>(p.size()) - 1;
    int w = leastExtension(h, used, p[last - 1], p[last]);
    if (w >= 0) {
      p.push_back(w);
      continue;
    }
    w = leastExtension(h, used, p[0], p[1]);
    if (w >= 0) {
      p.insert(p.begin(), w);
      continue;
    }
    if (k == 1) {
      w = leastExtension(h, used, p[0], p[2]);
      if (w >= 0) {
        p = {p[1], p[0], p[2], w};
        continue;
      }
    }
    if (k == 2) {
      w = leastExtension(h, used, p[1], p[3]);
      if (w >= 0) {
        p = {p[0], p[2], p[1], p[3], w};
        continue;
      }
      w = leastExtension(h, used, p[0], p[2]);
      if (w >= 0) {
        p = {w, p[0], p[2], p[1], p[3]};
        continue;
      }
    }
    break;
  }
  return p;
}

std::vector<TightPath> allTightPaths(const ThreeUniformHypergraph& h) {
  std::set<TightPath> canonical;
  std::vector<TightPath> stack;
  for (const HyperEdge& e : h.edges()) {
    TightPath t{e[0], e[1], e[2]};
    std::sort(t.begin(), t.end());
    do {
      stack.push_back(t);
    } while (std::next_permutation(t.begin(), t.end()));
  }
  while (!stack.empty()) {
    TightPath p = std::move(stack.back());
    stack.pop_back();
    TightPath rev(p.rbegin(), p.rend());
    canonical.insert(std::min(p, rev));
    const std::uint32_t used = pathVertexMask(p);
    const int last = static_cast<int>(p.size()) - 1;
    for (int w = 0; w < h.order(); ++w) {
      if (used & (1u << w)) continue;
      if (!h.hasEdge(p[last - 1], p[last], w)) continue;
      TightPath q = p;
      q.push_back(w);
      stack.push_back(std::move(q));
    }
  }
  return {canonical.begin(), canonical.end()};
}

std::vector<TightPath> allMaximalTightPaths(const ThreeUniformHypergraph& h) {
  std::vector<TightPath> out;
  std::set<std::vector<HyperEdge>> seenEdgeSets;
  for (const TightPath& p : allTightPaths(h)) {
    if (!isMaximalTightPath(h, p)) continue;
    if (seenEdgeSets.insert(pathEdges(p)).second) out.push_back(p);
  }
  return out;
}

namespace {
std::uint32_t edgeMask(const HyperEdge& e) {
  return (1u << e[0]) | (1u << e[1]) | (1u << e[2]);
}

int intersectionSize(const HyperEdge& a, const HyperEdge& b) {
  return std::popcount(edgeMask(a) & edgeMask(b));
}
}  // namespace

StructureDecomposition classifyStructures(const ThreeUniformHypergraph& h, std::uint32_t N) {
  StructureDecomposition out;
  std::set<std::vector<HyperEdge>> covered;
  std::set<std::vector<HyperEdge>> seenEars;

  // Ears: tight paths of length >= 2 with both ends in N, internal vertices
  // outside N, and no external edge at an internal vertex.
  for (const TightPath& p : allTightPaths(h)) {
    if (p.size() < 4) continue;
    const std::uint32_t ends = endVertexMask(p);
    const std::uint32_t internals = internalVertexMask(p);
    if ((ends & ~N) || (internals & N)) continue;
    const std::vector<HyperEdge> pe = pathEdges(p);
    bool external = false;
    for (const HyperEdge& e : h.edges()) {
      if (!(edgeMask(e) & internals)) continue;
      if (!std::binary_search(pe.begin(), pe.end(), e)) {
        external = true;
        break;
      }
    }
    if (external) continue;
    if (seenEars.insert(pe).second) {
      out.ears.push_back(pe);
      covered.insert(pe);
    }
  }

  // Triangles: an edge inside N with no 2-intersecting companion.
  for (const HyperEdge& e : h.edges()) {
    if (edgeMask(e) & ~N) continue;
    bool companion = false;
    for (const HyperEdge& f : h.edges()) {
      if (f != e && intersectionSize(e, f) == 2) {
        companion = true;
        break;
      }
    }
    if (!companion) {
      out.triangles.push_back({e});
      covered.insert({e});
    }
  }

  // Windmills: all edges at a hub v outside N, pairwise meeting only in v,
  // each with its N-pair unique in the whole hypergraph.
  for (int v = 0; v < h.order(); ++v) {
    if (N & (1u << v)) continue;
    const std::vector<HyperEdge> X = h.edgesIncident(v);
    if (X.empty()) continue;
    bool ok = true;
    for (const HyperEdge& e : X) {
      if (edgeMask(e) & ~N & ~(1u << v)) { ok = false; break; }
      int owners = 0;
      const std::uint32_t pairMask = edgeMask(e) & ~(1u << v);
      for (const HyperEdge& f : h.edges()) {
        if ((edgeMask(f) & pairMask) == pairMask) ++owners;
      }
      if (owners != 1) { ok = false; break; }
    }
    if (ok) {
      for (std::size_t i = 0; ok && i < X.size(); ++i)
        for (std::size_t j = i + 1; ok && j < X.size(); ++j)
          if ((edgeMask(X[i]) & edgeMask(X[j])) != (1u << v)) ok = false;
    }
    if (ok) {
      std::vector<HyperEdge> sorted = X;
      std::sort(sorted.begin(), sorted.end());
      out.windmills.push_back(sorted);
      covered.insert(sorted);
    }
  }

  // Tripods: all edges at two hubs v, w outside N; exactly three of them,
  // each containing both hubs and otherwise inside N.
  for (int v = 0; v < h.order(); ++v) {
    if (N & (1u << v)) continue;
    for (int w = v + 1; w < h.order(); ++w) {
      if (N & (1u << w)) continue;
      std::vector<HyperEdge> X;
      for (const HyperEdge& e : h.edges()) {
        if (edgeMask(e) & ((1u << v) | (1u << w))) X.push_back(e);
      }
      if (X.size() != 3) continue;
      bool ok = true;
      const std::uint32_t hubs = (1u << v) | (1u << w);
      for (const HyperEdge& e : X) {
        if ((edgeMask(e) & hubs) != hubs || (edgeMask(e) & ~N & ~hubs)) { ok = false; break; }
      }
      if (ok) {
        std::sort(X.begin(), X.end());
        out.tripods.push_back(X);
        covered.insert(X);
      }
    }
  }

  // Tables: all edges meeting an edge f outside N; exactly four, each sharing
  // two vertices with f, with distinct N-apexes.
  for (const HyperEdge& f : h.edges()) {
    if (edgeMask(f) & N) continue;
    std::vector<HyperEdge> X;
    for (const HyperEdge& e : h.edges()) {
      if (edgeMask(e) & edgeMask(f)) X.push_back(e);
    }
    if (X.size() != 4) continue;
    bool ok = true;
    std::set<std::uint32_t> apexes;
    for (const HyperEdge& e : X) {
      if (intersectionSize(e, f) < 2) { ok = false; break; }
      const std::uint32_t apex = edgeMask(e) & ~edgeMask(f);
      if (apex & ~N) { ok = false; break; }
      if (!apexes.insert(apex).second) { ok = false; break; }
    }
    if (ok) {
      std::sort(X.begin(), X.end());
      out.tables.push_back(X);
      covered.insert(X);
    }
  }

  std::set<HyperEdge> coveredEdges;
  for (const auto& group : covered)
    for (const HyperEdge& e : group) coveredEdges.insert(e);
  for (const HyperEdge& e : h.edges()) {
    if (!coveredEdges.count(e)) out.uncovered.push_back(e);
  }
  return out;
}

bool maximalPathsEqualOrDisjoint(const ThreeUniformHypergraph& h, std::uint32_t N) {
  const std::vector<TightPath> paths = allMaximalTightPaths(h);
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const std::uint32_t a = pathVertexMask(paths[i]) & ~N;
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      const std::uint32_t b = pathVertexMask(paths[j]) & ~N;
      if (a != b && (a & b)) return false;
    }
  }
  return true;
}

}  // namespace vmcalc
