// Independent brute-force oracles used to freeze expected values. These stay
// deliberately naive and share no code with the library paths they check.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <vector>

#include "vmcalc/gf2.hpp"
#include "vmcalc/graph.hpp"
#include "vmcalc/isotropic.hpp"

namespace oracle {

// Rank via row-span enumeration: the span of r independent rows has 2^r
// elements.
inline int rankBySpan(const std::vector<std::uint64_t>& rows) {
  std::set<std::uint64_t> span{0};
  for (std::uint64_t r : rows) {
    std::set<std::uint64_t> next = span;
    for (std::uint64_t s : span) next.insert(s ^ r);
    span = next;
  }
  int bits = 0;
  while ((std::size_t(1) << bits) < span.size()) ++bits;
  return bits;
}

inline int cutRankBrute(const vmcalc::Graph& g, std::uint32_t X) {
  std::vector<std::uint64_t> rows;
  for (int v = 0; v < g.order(); ++v) {
    if (!(X & (1u << v))) continue;
    rows.push_back(g.neighbors(v) & ~X & g.vertexMask());
  }
  return rankBySpan(rows);
}

// formK by the literal definition.
inline int formKByDefinition(vmcalc::KElem x, vmcalc::KElem y) {
  return (x != 0 && y != 0 && x != y) ? 1 : 0;
}

// All 2^dim vectors of a subspace.
inline std::vector<std::uint64_t> allVectors(const vmcalc::Subspace& L) {
  std::vector<std::uint64_t> out{0};
  for (std::uint64_t b : L.packedBasis()) {
    const std::size_t sz = out.size();
    for (std::size_t i = 0; i < sz; ++i) out.push_back(out[i] ^ b);
  }
  return out;
}

// Eulerian test by scanning every nonempty subset.
inline bool isEulerianBrute(const vmcalc::IsotropicSystem& s, const vmcalc::KVector& a) {
  if (!a.isComplete()) return false;
  const std::uint32_t full = s.order() == 0 ? 0 : ((1u << s.order()) - 1);
  for (std::uint32_t X = 1; X && X <= full; ++X) {
    if (s.space().contains(vmcalc::maskTo(a, X))) return false;
  }
  return true;
}

// Connectivity by filtering the full vector list of L.
inline int connectivityBrute(const vmcalc::IsotropicSystem& s, std::uint32_t X) {
  const std::uint64_t cols = vmcalc::expandVertexMask(X);
  std::set<std::uint64_t> confined;
  for (std::uint64_t w : allVectors(s.space())) {
    if ((w & ~cols) == 0) confined.insert(w);
  }
  int dim = 0;
  while ((std::size_t(1) << dim) < confined.size()) ++dim;
  return std::popcount(X) - dim;
}

// Every tight-path vertex sequence, by unrestricted DFS over distinct
// vertices (definition level, no shared code with the library enumerator).
inline void collectSequences(const vmcalc::ThreeUniformHypergraph& h, vmcalc::TightPath& cur,
                             std::vector<vmcalc::TightPath>& out) {
  if (cur.size() >= 3) out.push_back(cur);
  for (int w = 0; w < h.order(); ++w) {
    if (std::find(cur.begin(), cur.end(), w) != cur.end()) continue;
    cur.push_back(w);
    const std::size_t k = cur.size();
    const bool stillTight =
        k < 3 || h.hasEdge(cur[k - 3], cur[k - 2], cur[k - 1]);
    if (stillTight) collectSequences(h, cur, out);
    cur.pop_back();
  }
}

inline std::vector<vmcalc::TightPath> allTightSequencesBrute(const vmcalc::ThreeUniformHypergraph& h) {
  std::vector<vmcalc::TightPath> out;
  vmcalc::TightPath cur;
  collectSequences(h, cur, out);
  return out;
}

// Maximality straight from the definition: no tight path has a strictly
// larger edge set.
inline bool isMaximalBrute(const vmcalc::ThreeUniformHypergraph& h, const vmcalc::TightPath& p) {
  const std::vector<vmcalc::HyperEdge> base = vmcalc::pathEdges(p);
  for (const vmcalc::TightPath& q : allTightSequencesBrute(h)) {
    const std::vector<vmcalc::HyperEdge> qe = vmcalc::pathEdges(q);
    if (qe.size() <= base.size()) continue;
    if (std::includes(qe.begin(), qe.end(), base.begin(), base.end())) return false;
  }
  return true;
}

}  // namespace oracle
