#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vmcalc/graph.hpp"

namespace vmcalc {

// theta(l_1,...,l_m): two hub vertices joined by m internally-disjoint paths
// of the given lengths. At most one length may be 1.
struct ThetaSpec {
  std::vector<int> lengths;  // sorted ascending

  int pathCount() const { return static_cast<int>(lengths.size()); }
  int vertexCount() const;
  bool valid() const;
  bool operator==(const ThetaSpec&) const = default;
};

// Accepts "1,3,3" or "theta:1,3,3".
ThetaSpec parseThetaSpec(const std::string& s);
std::string thetaLiteral(const ThetaSpec& spec);

// Hubs are vertices 0 and 1; the paths' internal vertices follow in order.
Graph buildTheta(const ThetaSpec& spec);

// Inverse up to the cycle convention: a cycle of length k is reported as
// theta(1, k-1); otherwise the two vertices of degree >= 3 are the hubs.
std::optional<ThetaSpec> recognizeTheta(const Graph& g);

// Closed form: prime iff at most one path has length 2. Requires m >= 2 and
// at least 5 vertices.
bool thetaIsPrime(const ThetaSpec& spec);

struct ThetaNonEssential {
  int count = 0;
  std::string caseLabel;
};
// Closed-form non-essential counts for m >= 3, l_3 >= 3, and l_2 >= 3 or
// (l_1, l_2) = (1, 2); empty outside those hypotheses.
std::optional<ThetaNonEssential> thetaNonEssentialCount(const ThetaSpec& spec);

// Joins u and v by a new path with length-1 internal vertices appended at the
// end of the vertex list; length >= 3.
Graph addHandle(const Graph& g, int u, int v, int length);

// Whether some member of the local orbit is a theta graph whose hubs have no
// common neighbor (no path of length 2).
bool goodThetaForTheorem(const Graph& g);

}  // namespace vmcalc
