#include "vmcalc/isotropic.hpp"

#include <bit>
#include <sstream>

#include "vmcalc/equivalence.hpp"

namespace vmcalc {

IsotropicSystem::IsotropicSystem(int n, Subspace L) : n_(n), L_(std::move(L)) {
  if (L_.ground() != n) throw std::invalid_argument("ground set mismatch");
  if (L_.dim() != n) throw std::invalid_argument("subspace dimension must equal |V|");
  const std::vector<KVector> basis = L_.basisVectors();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) {
      if (formV(basis[i], basis[j]) != 0)
        throw std::invalid_argument("subspace is not totally isotropic");
    }
  }
}

IsotropicSystem fromGraphicPresentation(const Graph& g, const KVector& a, const KVector& b) {
  const int n = g.order();
  if (a.size() != n || b.size() != n) throw std::invalid_argument("ground set mismatch");
  if (n > 0 && !supplementary(a, b))
    throw std::invalid_argument("presentation vectors must be supplementary");
  std::vector<KVector> gens;
  gens.reserve(n);
  for (int v = 0; v < n; ++v) {
    gens.push_back(maskTo(a, g.neighbors(v)) + maskTo(b, 1u << v));
  }
  Subspace L = Subspace::span(n, gens);
  if (L.dim() != n) throw std::invalid_argument("presentation generators are dependent");
  return IsotropicSystem(n, std::move(L));
}

namespace {
// Gram-style matrix of the basis against a complete vector: row w has bit i
// set iff <basis_i(w), a(w)> = 1. Its singularity detects a[X] in L.
std::vector<std::uint64_t> pairingMatrix(const IsotropicSystem& s, const KVector& a) {
  const std::vector<KVector> basis = s.space().basisVectors();
  std::vector<std::uint64_t> rows(s.order(), 0);
  for (int w = 0; w < s.order(); ++w) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (formK(basis[i].at(w), a.at(w))) rows[w] |= std::uint64_t(1) << i;
    }
  }
  return rows;
}

// Gauss-Jordan inverse of an n x n bit matrix; empty result when singular.
std::vector<std::uint64_t> invertBits(std::vector<std::uint64_t> rows, int n) {
  for (int i = 0; i < n; ++i) rows[i] |= std::uint64_t(1) << (n + i);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int r = c; r < n; ++r) {
      if ((rows[r] >> c) & 1u) { p = r; break; }
    }
    if (p < 0) return {};
    std::swap(rows[c], rows[p]);
    for (int r = 0; r < n; ++r) {
      if (r != c && ((rows[r] >> c) & 1u)) rows[r] ^= rows[c];
    }
  }
  std::vector<std::uint64_t> inv(n, 0);
  for (int r = 0; r < n; ++r) inv[r] = rows[r] >> n;
  return inv;
}
}  // namespace

bool isEulerian(const IsotropicSystem& s, const KVector& a) {
  if (a.size() != s.order()) throw std::invalid_argument("ground set mismatch");
  if (!a.isComplete()) return false;
  if (s.order() == 0) return true;
  return !invertBits(pairingMatrix(s, a), s.order()).empty();
}

std::vector<KVector> fundamentalBasis(const IsotropicSystem& s, const KVector& a) {
  if (a.size() != s.order()) throw std::invalid_argument("ground set mismatch");
  if (!a.isComplete()) throw std::invalid_argument("vector is not Eulerian");
  const int n = s.order();
  const std::vector<std::uint64_t> inv = invertBits(pairingMatrix(s, a), n);
  if (n > 0 && inv.empty()) throw std::invalid_argument("vector is not Eulerian");
  const std::vector<std::uint64_t>& basis = s.space().packedBasis();
  std::vector<KVector> out;
  out.reserve(n);
  for (int v = 0; v < n; ++v) {
    // Column v of the inverse gives the coefficients of b_v.
    std::uint64_t packed = 0;
    for (int i = 0; i < n; ++i) {
      if ((inv[i] >> v) & 1u) packed ^= basis[i];
    }
    out.push_back(KVector::fromPacked(n, packed));
  }
  return out;
}

Graph fundamentalGraph(const IsotropicSystem& s, const KVector& a) {
  const std::vector<KVector> basis = fundamentalBasis(s, a);
  Graph g(s.order());
  for (int v = 0; v < s.order(); ++v) {
    for (int w = v + 1; w < s.order(); ++w) {
      const bool vw = basis[v].at(w) != kZero;
      const bool wv = basis[w].at(v) != kZero;
      if (vw != wv) throw std::logic_error("fundamental basis is not symmetric");
      if (vw) g.addEdge(v, w);
    }
  }
  return g;
}

GraphicPresentation presentationFromEulerian(const IsotropicSystem& s, const KVector& a) {
  const std::vector<KVector> basis = fundamentalBasis(s, a);
  GraphicPresentation p{Graph(s.order()), a, KVector(s.order())};
  for (int v = 0; v < s.order(); ++v) {
    p.b.set(v, basis[v].at(v));
    for (int w = v + 1; w < s.order(); ++w) {
      if (basis[v].at(w) != kZero) p.graph.addEdge(v, w);
    }
  }
  return p;
}

KVector eulerianSwitch(const IsotropicSystem& s, const KVector& a, int v) {
  if (v < 0 || v >= s.order()) throw std::out_of_range("unknown vertex");
  if (!isEulerian(s, a)) throw std::invalid_argument("vector is not Eulerian");
  std::vector<KVector> hits;
  for (KElem x = 1; x <= 3; ++x) {
    if (x == a.at(v)) continue;
    KVector cand = a;
    cand.set(v, x);
    if (isEulerian(s, cand)) hits.push_back(cand);
  }
  if (hits.size() != 1) throw std::logic_error("expected exactly one Eulerian switch candidate");
  return hits.front();
}

IsotropicSystem elementaryMinor(const IsotropicSystem& s, int v, KElem x) {
  if (v < 0 || v >= s.order()) throw std::out_of_range("unknown vertex");
  if (x == kZero) throw std::invalid_argument("minor requires a nonzero element");
  // a(v) in {0, x} is the linear condition <a(v), x> = 0.
  std::vector<std::uint64_t> rows = s.space().packedBasis();
  const int n = s.order();
  std::vector<int> flagged;
  std::vector<bool> bad(rows.size(), false);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const KElem ev = static_cast<KElem>((rows[i] >> (2 * v)) & 3u);
    if (formK(ev, x)) {
      flagged.push_back(static_cast<int>(i));
      bad[i] = true;
    }
  }
  std::vector<std::uint64_t> kernelRows;
  if (flagged.empty()) {
    kernelRows = rows;
  } else {
    const std::uint64_t p = rows[flagged.front()];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == flagged.front()) continue;
      kernelRows.push_back(bad[i] ? rows[i] ^ p : rows[i]);
    }
  }
  const std::uint32_t keep = (n == 32 ? 0xffffffffu : ((1u << n) - 1)) & ~(1u << v);
  Subspace L = subProject(Subspace::fromPackedRows(n, kernelRows), keep);
  if (L.dim() != n - 1) throw std::logic_error("elementary minor lost dimension");
  return IsotropicSystem(n - 1, std::move(L));
}

int connectivity(const IsotropicSystem& s, std::uint32_t X) {
  if (X & ~((s.order() == 32 ? 0xffffffffu : (1u << s.order()) - 1)))
    throw std::invalid_argument("X is not a subset of the ground set");
  return std::popcount(X) - subRestrictInto(s.space(), X).dim();
}

bool isThreeConnected(const IsotropicSystem& s) {
  const int n = s.order();
  for (std::uint32_t X = 1; X + 1 < (1u << n); X += 2) {
    const int small = std::min(std::popcount(X), n - std::popcount(X));
    if (small < 1) continue;
    const int c = connectivity(s, X);
    if (c < 1 || (small >= 2 && c < 2)) return false;
  }
  return true;
}

std::uint32_t systemNonEssentialVertices(const IsotropicSystem& s) {
  std::uint32_t out = 0;
  for (int v = 0; v < s.order(); ++v) {
    int good = 0;
    for (KElem x = 1; x <= 3; ++x) {
      if (isThreeConnected(elementaryMinor(s, v, x))) ++good;
    }
    if (good >= 2) out |= 1u << v;
  }
  return out;
}

bool isCyclic(const IsotropicSystem& s) {
  if (s.order() < 5) return false;
  const Graph g = fundamentalGraph(s, findEulerianVector(s));
  return isLocallyEquivalentToCycle(g).has_value();
}

std::vector<KVector> triangles(const IsotropicSystem& s) {
  const std::vector<std::uint64_t>& basis = s.space().packedBasis();
  const int k = static_cast<int>(basis.size());
  std::vector<KVector> out;
  std::uint64_t acc = 0;
  // Gray-code walk over all nonzero combinations.
  for (std::uint64_t i = 1; i < (std::uint64_t(1) << k); ++i) {
    acc ^= basis[std::countr_zero(i)];
    KVector v = KVector::fromPacked(s.order(), acc);
    if (v.supportSize() == 3) out.push_back(v);
  }
  return out;
}

ThreeUniformHypergraph buildH(const IsotropicSystem& s) {
  ThreeUniformHypergraph h(s.order());
  for (const KVector& t : triangles(s)) {
    const std::uint32_t m = t.supportMask();
    int vs[3];
    int i = 0;
    std::uint32_t rest = m;
    while (rest) {
      vs[i++] = std::countr_zero(rest);
      rest &= rest - 1;
    }
    h.addEdge(vs[0], vs[1], vs[2]);
  }
  return h;
}

namespace {
KVector insertValue(const KVector& sub, int v, KElem x) {
  KVector out(sub.size() + 1);
  for (int i = 0, j = 0; i < out.size(); ++i) {
    if (i == v)
      out.set(i, x);
    else
      out.set(i, sub.at(j++));
  }
  return out;
}

// Solves for a vector of L meeting <a(w_i), x_i> = 1 for the last constraint
// and 0 for the earlier ones. Returns false when the system is inconsistent.
bool findWitness(const IsotropicSystem& s, const std::vector<std::pair<int, KElem>>& constraints,
                 std::size_t upto) {
  const std::vector<KVector> basis = s.space().basisVectors();
  const int k = static_cast<int>(basis.size());
  // Rows: one linear functional per constraint, augmented with the RHS bit.
  std::vector<std::uint64_t> rows;
  for (std::size_t j = 0; j <= upto; ++j) {
    std::uint64_t row = 0;
    for (int t = 0; t < k; ++t) {
      if (formK(basis[t].at(constraints[j].first), constraints[j].second))
        row |= std::uint64_t(1) << t;
    }
    if (j == upto) row |= std::uint64_t(1) << k;
    rows.push_back(row);
  }
  // Consistent iff the RHS column is not a pivot after elimination.
  std::vector<std::uint64_t> reduced;
  for (std::uint64_t w : rows) {
    for (std::uint64_t b : reduced) {
      if (w & (b & -b)) w ^= b;
    }
    if (w) reduced.push_back(w);
  }
  for (std::uint64_t b : reduced) {
    if ((b & -b) == (std::uint64_t(1) << k)) return false;
  }
  return true;
}

bool nextCompleteVector(KVector& a) {
  for (int v = 0; v < a.size(); ++v) {
    if (a.at(v) != kGamma) {
      a.set(v, static_cast<KElem>(a.at(v) + 1));
      return true;
    }
    a.set(v, kAlpha);
  }
  return false;
}

KVector bruteForceEulerian(const IsotropicSystem& s,
                           const std::vector<std::pair<int, KElem>>& constraints) {
  std::uint32_t fixed = 0;
  KVector a = KVector::constant(s.order(), kAlpha);
  for (auto [v, x] : constraints) {
    a.set(v, x);
    fixed |= 1u << v;
  }
  // Scan the free positions in base-3 order.
  KVector free(std::popcount(~fixed & ((s.order() == 32 ? ~0u : (1u << s.order()) - 1))));
  free = KVector::constant(free.size(), kAlpha);
  for (;;) {
    KVector cand = a;
    int j = 0;
    for (int v = 0; v < s.order(); ++v) {
      if (!(fixed & (1u << v))) cand.set(v, free.at(j++));
    }
    if (isEulerian(s, cand)) return cand;
    if (!nextCompleteVector(free)) break;
  }
  throw NoEulerianVector("no Eulerian vector satisfies the constraints");
}
}  // namespace

KVector findEulerianVector(const IsotropicSystem& s,
                           const std::vector<std::pair<int, KElem>>& constraints) {
  std::uint32_t constrained = 0;
  for (auto [v, x] : constraints) {
    if (v < 0 || v >= s.order()) throw std::out_of_range("unknown vertex");
    if (x == kZero) throw std::invalid_argument("constraints must be nonzero");
    if (constrained & (1u << v)) throw std::invalid_argument("duplicate constraint vertex");
    constrained |= 1u << v;
  }
  if (constraints.empty()) {
    if (s.order() == 0) return KVector(0);
    return bruteForceEulerian(s, {});
  }
  // Witnesses certify that the inductive descent applies.
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    if (!findWitness(s, constraints, i)) return bruteForceEulerian(s, constraints);
  }
  const auto [w1, x1] = constraints.front();
  IsotropicSystem minor = elementaryMinor(s, w1, x1);
  std::vector<std::pair<int, KElem>> rest(constraints.begin() + 1, constraints.end());
  for (auto& [v, x] : rest) {
    if (v > w1) --v;
  }
  const KVector sub = findEulerianVector(minor, rest);
  KVector lifted = insertValue(sub, w1, x1);
  if (!isEulerian(s, lifted)) return bruteForceEulerian(s, constraints);
  return lifted;
}

bool verifyPartitionCorollary(const IsotropicSystem& s) {
  if (s.order() < 5) throw std::invalid_argument("system needs at least 5 vertices");
  if (!isThreeConnected(s)) throw std::invalid_argument("system is not 3-connected");
  if (isCyclic(s)) throw std::invalid_argument("system is cyclic");
  return maximalPathsEqualOrDisjoint(buildH(s), systemNonEssentialVertices(s));
}

std::string serializeSystem(const IsotropicSystem& s) {
  std::ostringstream out;
  for (const KVector& b : s.space().basisVectors()) out << b.toString() << '\n';
  return out.str();
}

IsotropicSystem parseSystem(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<KVector> rows;
  int n = -1;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    rows.push_back(KVector::fromString(line));
    if (n < 0) n = rows.back().size();
    if (rows.back().size() != n) throw std::invalid_argument("inconsistent vector lengths");
  }
  if (n < 0) throw std::invalid_argument("empty system serialization");
  return IsotropicSystem(n, Subspace::span(n, rows));
}

}  // namespace vmcalc
