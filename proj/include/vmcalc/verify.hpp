#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace vmcalc {

struct BoundsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Machine-readable outcome of one exhaustive verification run. Everything
// except the wall time is deterministic across runs and worker counts.
struct VerificationReport {
  std::string theorem;
  int nMin = 0;
  int nMax = 0;
  std::uint64_t instances = 0;
  std::vector<std::string> counterexamples;  // graph6 descriptors, sorted
  double wallSeconds = 0.0;

  bool pass() const { return counterexamples.empty(); }
  std::string toText() const;
};

struct VerifyOptions {
  int nMin = -1;  // -1 selects the check's default range
  int nMax = -1;
  int workers = 1;
  bool dedupOrbits = false;
};

// The hard vertex bound: VMCALC_MAX_N when set, otherwise 8. Ranges beyond
// min(bound, 7) additionally require dedupOrbits where supported.
int hardMaxVertices();

// Known check identifiers:
//   thm1         every prime graph (n >= 5) has >= 2 non-essential vertices
//                or a cycle in its local orbit
//   thm3         >= 3 non-essential vertices iff no orbit member is a theta
//                graph whose hubs lack a common neighbor
//   cor-bippiv   prime bipartite: >= 2 non-pivotal vertices iff not pivot
//                equivalent to an even cycle; non-pivotal = non-essential
//   fan          five-type cover of the triangle hypergraph
//   partition    maximal tight paths agree or are disjoint off the
//                non-essential set
//   prop-igconn  connectivity function matches the cut-rank of the
//                fundamental graph on random instances
//   prop-igmin   elementary minors match the three vertex reductions, and
//                non-essential status agrees between system and graph
//   lemma-oddcyc no bipartite member in the local orbit of an odd cycle
std::vector<std::string> knownChecks();

VerificationReport verifyTheorem(const std::string& id, const VerifyOptions& opts = {});

}  // namespace vmcalc
