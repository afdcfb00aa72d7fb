#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vmcalc/gf2.hpp"
#include "vmcalc/graph.hpp"
#include "vmcalc/hypergraph.hpp"

namespace vmcalc {

// (V, L) with L a totally isotropic subspace of K^V of dimension |V|.
// Validated at construction; systems compare equal iff their reduced bases do.
class IsotropicSystem {
 public:
  IsotropicSystem(int n, Subspace L);

  int order() const { return n_; }
  const Subspace& space() const { return L_; }

  bool operator==(const IsotropicSystem&) const = default;

 private:
  int n_;
  Subspace L_;
};

struct NoEulerianVector : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Builds the system spanned by {a[N(v)] + b[{v}] : v in V} for supplementary
// a, b.
IsotropicSystem fromGraphicPresentation(const Graph& g, const KVector& a, const KVector& b);

// a is Eulerian iff it is complete and a[X] is outside L for every nonempty
// X. Decided by a rank computation rather than the 2^n subset scan.
bool isEulerian(const IsotropicSystem& s, const KVector& a);

// The unique vectors b_v in L with <b_v(v), a(v)> = 1 and <b_v(w), a(w)> = 0
// for w != v, indexed by v.
std::vector<KVector> fundamentalBasis(const IsotropicSystem& s, const KVector& a);
Graph fundamentalGraph(const IsotropicSystem& s, const KVector& a);

// The graphic presentation (G, a, b) read off the fundamental basis.
struct GraphicPresentation {
  Graph graph;
  KVector a;
  KVector b;
};
GraphicPresentation presentationFromEulerian(const IsotropicSystem& s, const KVector& a);

// a * v: the unique Eulerian vector among the two complete vectors that agree
// with a outside v and differ from it at v.
KVector eulerianSwitch(const IsotropicSystem& s, const KVector& a, int v);

// S|_x^v on V - {v} (remaining vertices re-indexed in order).
IsotropicSystem elementaryMinor(const IsotropicSystem& s, int v, KElem x);

// c_S(X) = |X| - dim(L restricted into X).
int connectivity(const IsotropicSystem& s, std::uint32_t X);
bool isThreeConnected(const IsotropicSystem& s);

// Vertices for which at least two of the three elementary minors are
// 3-connected.
std::uint32_t systemNonEssentialVertices(const IsotropicSystem& s);

// Whether some fundamental graph is a cycle of length at least 5.
bool isCyclic(const IsotropicSystem& s);

// All vectors of L with support of size exactly 3.
std::vector<KVector> triangles(const IsotropicSystem& s);
// 3-uniform hypergraph of triangle supports.
ThreeUniformHypergraph buildH(const IsotropicSystem& s);

// Finds an Eulerian vector honoring the given values on the constrained
// vertices. Prefers the constructive descent through elementary minors with
// linear-algebra witness search and falls back to scanning the complete
// vectors; throws NoEulerianVector when none satisfies the constraints.
KVector findEulerianVector(const IsotropicSystem& s,
                           const std::vector<std::pair<int, KElem>>& constraints = {});

// For a 3-connected non-cyclic system with at least 5 vertices: whether all
// maximal tight paths of H(S) have equal-or-disjoint vertex sets modulo the
// non-essential set.
bool verifyPartitionCorollary(const IsotropicSystem& s);

// One basis vector per line in the per-vertex character encoding.
std::string serializeSystem(const IsotropicSystem& s);
IsotropicSystem parseSystem(const std::string& text);

}  // namespace vmcalc
