#include "vmcalc/theta.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "vmcalc/equivalence.hpp"

namespace vmcalc {

int ThetaSpec::vertexCount() const {
  int total = 2;
  for (int l : lengths) total += l - 1;
  return total;
}

bool ThetaSpec::valid() const {
  if (lengths.empty()) return false;
  if (!std::is_sorted(lengths.begin(), lengths.end())) return false;
  int ones = 0;
  for (int l : lengths) {
    if (l < 1) return false;
    if (l == 1) ++ones;
  }
  return ones <= 1;
}

ThetaSpec parseThetaSpec(const std::string& s) {
  std::string body = s;
  if (body.rfind("theta:", 0) == 0) body = body.substr(6);
  ThetaSpec spec;
  std::istringstream in(body);
  std::string part;
  while (std::getline(in, part, ',')) {
    std::size_t used = 0;
    const int l = std::stoi(part, &used);
    if (used != part.size()) throw std::invalid_argument("bad theta length: " + part);
    spec.lengths.push_back(l);
  }
  std::sort(spec.lengths.begin(), spec.lengths.end());
  if (!spec.valid()) throw std::invalid_argument("invalid theta lengths");
  return spec;
}

std::string thetaLiteral(const ThetaSpec& spec) {
  std::ostringstream out;
  out << "theta:";
  for (std::size_t i = 0; i < spec.lengths.size(); ++i) {
    if (i) out << ',';
    out << spec.lengths[i];
  }
  return out.str();
}

Graph buildTheta(const ThetaSpec& spec) {
  if (!spec.valid()) throw std::invalid_argument("invalid theta lengths");
  Graph g(spec.vertexCount());
  int next = 2;
  for (int l : spec.lengths) {
    int prev = 0;
    for (int i = 0; i < l - 1; ++i) {
      g.addEdge(prev, next);
      prev = next++;
    }
    g.addEdge(prev, 1);
  }
  return g;
}

std::optional<ThetaSpec> recognizeTheta(const Graph& g) {
  const int n = g.order();
  if (n < 3 || !isConnected(g)) return std::nullopt;
  if (isCycleGraph(g)) return ThetaSpec{{1, n - 1}};
  int x = -1, y = -1;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == 2) continue;
    if (x < 0)
      x = v;
    else if (y < 0)
      y = v;
    else
      return std::nullopt;
  }
  if (y < 0) return std::nullopt;
  const int m = g.degree(x);
  if (m < 3 || g.degree(y) != m) return std::nullopt;

  ThetaSpec spec;
  std::uint32_t seen = (1u << x) | (1u << y);
  std::uint32_t nb = g.neighbors(x);
  while (nb) {
    const int first = std::countr_zero(nb);
    nb &= nb - 1;
    int prev = x, cur = first, len = 1;
    while (cur != y) {
      if (seen & (1u << cur)) return std::nullopt;  // revisited or hit x
      seen |= 1u << cur;
      const std::uint32_t ahead = g.neighbors(cur) & ~(1u << prev);
      if (std::popcount(ahead) != 1) return std::nullopt;
      prev = cur;
      cur = std::countr_zero(ahead);
      ++len;
    }
    spec.lengths.push_back(len);
  }
  if (std::popcount(seen) != n) return std::nullopt;
  std::sort(spec.lengths.begin(), spec.lengths.end());
  if (!spec.valid() || spec.pathCount() != m) return std::nullopt;
  return spec;
}

bool thetaIsPrime(const ThetaSpec& spec) {
  if (!spec.valid() || spec.pathCount() < 2 || spec.vertexCount() < 5)
    throw std::invalid_argument("theta spec out of range");
  int twos = 0;
  for (int l : spec.lengths) {
    if (l == 2) ++twos;
  }
  return twos <= 1;
}

std::optional<ThetaNonEssential> thetaNonEssentialCount(const ThetaSpec& spec) {
  if (!spec.valid()) throw std::invalid_argument("invalid theta lengths");
  const auto& l = spec.lengths;
  const int m = spec.pathCount();
  if (m < 3 || l[2] < 3) return std::nullopt;
  if (!(l[1] >= 3 || (l[0] == 1 && l[1] == 2))) return std::nullopt;
  if (l[0] == 1) {
    if (m == 3 && l[1] <= 3) return ThetaNonEssential{0, "cycle of length l2+l3"};
    if (m == 3) return ThetaNonEssential{2, "l1=1, m=3, l2>=4"};
    if (l[1] == 2) return ThetaNonEssential{3, "l1=1, m>=4, l2=2"};
    return ThetaNonEssential{2, "l1=1, m>=4, l2>=3"};
  }
  if (l[0] == 2) return ThetaNonEssential{3, "l1=2"};
  return ThetaNonEssential{2, "l1>=3"};
}

Graph addHandle(const Graph& g, int u, int v, int length) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v)
    throw std::invalid_argument("handle endpoints must be distinct vertices");
  if (length < 3) throw std::invalid_argument("handle length must be at least 3");
  Graph out = g;
  int prev = u;
  for (int i = 0; i < length - 1; ++i) {
    out = addVertex(out, 1u << prev);
    prev = out.order() - 1;
  }
  out.addEdge(prev, v);
  return out;
}

bool goodThetaForTheorem(const Graph& g) {
  for (const Graph& m : localOrbit(g).members) {
    const std::optional<ThetaSpec> spec = recognizeTheta(m);
    if (!spec || spec->pathCount() < 2) continue;
    if (std::none_of(spec->lengths.begin(), spec->lengths.end(),
                     [](int l) { return l == 2; }))
      return true;
  }
  return false;
}

}  // namespace vmcalc
