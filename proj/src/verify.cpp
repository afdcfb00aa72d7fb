#include "vmcalc/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <random>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "vmcalc/enumerate.hpp"
#include "vmcalc/equivalence.hpp"
#include "vmcalc/graph.hpp"
#include "vmcalc/isotropic.hpp"
#include "vmcalc/theta.hpp"
#include "vmcalc/words.hpp"

namespace vmcalc {

std::string VerificationReport::toText() const {
  std::ostringstream out;
  out << "theorem: " << theorem << '\n';
  out << "n-min: " << nMin << '\n';
  out << "n-max: " << nMax << '\n';
  out << "instances: " << instances << '\n';
  out << "counterexamples: " << counterexamples.size() << '\n';
  for (const std::string& c : counterexamples) out << "counterexample: " << c << '\n';
  out << "wall-seconds: " << wallSeconds << '\n';
  out << "result: " << (pass() ? "pass" : "fail") << '\n';
  return out.str();
}

int hardMaxVertices() {
  if (const char* env = std::getenv("VMCALC_MAX_N")) {
    const int v = std::atoi(env);
    if (v > 0) return std::min(v, kMaxVertices);
  }
  return 8;
}

std::vector<std::string> knownChecks() {
  return {"thm1",      "thm3",        "cor-bippiv",  "fan",
          "partition", "prop-igconn", "prop-igmin",  "lemma-oddcyc"};
}

namespace {

struct OrbitFacts {
  bool cycleMember = false;
  bool goodTheta = false;
  std::uint64_t minTag = 0;  // least member key, the dedup representative
};

// Per-worker state; workers share nothing and merge their results at the
// end. Sweeps never exceed 8 vertices, so the packed adjacency key is an
// exact cache key.
struct WorkerState {
  std::unordered_map<std::uint64_t, OrbitFacts> localFacts;
  std::unordered_map<std::uint64_t, bool> pivotEvenCycle;
  std::uint64_t instances = 0;
  std::vector<std::string> counterexamples;
};

// Bounds each worker's cache near 2 GB; n <= 7 sweeps stay far below this,
// and the caches are pure memoization so clearing them is always safe.
constexpr std::size_t kCacheCap = 32'000'000;

OrbitFacts orbitFactsFor(const Graph& g, WorkerState& ws) {
  const auto it = ws.localFacts.find(g.packedKey());
  if (it != ws.localFacts.end()) return it->second;
  if (ws.localFacts.size() > kCacheCap) ws.localFacts.clear();
  OrbitFacts facts;
  const Orbit orbit = localOrbit(g);
  facts.minTag = g.packedKey();
  for (const Graph& m : orbit.members) {
    if (isCycleGraph(m)) facts.cycleMember = true;
    facts.minTag = std::min(facts.minTag, m.packedKey());
    const std::optional<ThetaSpec> spec = recognizeTheta(m);
    if (spec && spec->pathCount() >= 2 &&
        std::none_of(spec->lengths.begin(), spec->lengths.end(),
                     [](int l) { return l == 2; }))
      facts.goodTheta = true;
  }
  for (const Graph& m : orbit.members) ws.localFacts.emplace(m.packedKey(), facts);
  return facts;
}

bool pivotEvenCycleFor(const Graph& g, WorkerState& ws) {
  const auto it = ws.pivotEvenCycle.find(g.packedKey());
  if (it != ws.pivotEvenCycle.end()) return it->second;
  if (ws.pivotEvenCycle.size() > kCacheCap) ws.pivotEvenCycle.clear();
  const Orbit orbit = pivotOrbit(g);
  bool found = false;
  for (const Graph& m : orbit.members) {
    if (isCycleGraph(m) && m.order() % 2 == 0) {
      found = true;
      break;
    }
  }
  for (const Graph& m : orbit.members) ws.pivotEvenCycle.emplace(m.packedKey(), found);
  return found;
}

struct CheckTraits {
  int defaultMin = 5;
  int defaultMax = 7;
  int minAllowed = 4;
  bool supportsDedup = false;
  GraphFilter filter;
  // Returns true when the instance satisfies the statement.
  bool (*predicate)(const Graph&, WorkerState&, bool dedup) = nullptr;
};

bool predThm1(const Graph& g, WorkerState& ws, bool) {
  if (std::popcount(nonEssentialVertices(g)) >= 2) return true;
  return orbitFactsFor(g, ws).cycleMember;
}

bool predThm3(const Graph& g, WorkerState& ws, bool) {
  const bool many = std::popcount(nonEssentialVertices(g)) >= 3;
  return many == !orbitFactsFor(g, ws).goodTheta;
}

bool predBipPiv(const Graph& g, WorkerState& ws, bool) {
  const std::uint32_t nonPiv = nonPivotalVertices(g);
  if (nonPiv != nonEssentialVertices(g)) return false;
  return (std::popcount(nonPiv) >= 2) == !pivotEvenCycleFor(g, ws);
}

IsotropicSystem alphaBetaSystem(const Graph& g) {
  return fromGraphicPresentation(g, KVector::constant(g.order(), kAlpha),
                                 KVector::constant(g.order(), kBeta));
}

bool predFan(const Graph& g, WorkerState& ws, bool) {
  if (orbitFactsFor(g, ws).cycleMember) return true;  // statement excludes cyclic systems
  const IsotropicSystem s = alphaBetaSystem(g);
  const std::uint32_t n = systemNonEssentialVertices(s);
  return classifyStructures(buildH(s), n).uncovered.empty();
}

bool predPartition(const Graph& g, WorkerState& ws, bool) {
  if (orbitFactsFor(g, ws).cycleMember) return true;
  const IsotropicSystem s = alphaBetaSystem(g);
  return maximalPathsEqualOrDisjoint(buildH(s), systemNonEssentialVertices(s));
}

bool predIgmin(const Graph& g, WorkerState&, bool) {
  const int n = g.order();
  const KVector a = KVector::constant(n, kAlpha);
  const KVector b = KVector::constant(n, kBeta);
  const IsotropicSystem s = fromGraphicPresentation(g, a, b);
  for (int v = 0; v < n; ++v) {
    for (KElem x = 1; x <= 3; ++x) {
      const IsotropicSystem minor = elementaryMinor(s, v, x);
      Graph predicted(0);
      KVector eulerian(0);
      if (x == kAlpha || g.neighbors(v) == 0) {
        predicted = deleteVertex(g, v);
        eulerian = KVector::constant(n - 1, kAlpha);
      } else if (x == kBeta) {
        const int w = std::countr_zero(g.neighbors(v));
        predicted = deleteVertex(pivot(g, v, w), v);
        eulerian = KVector::constant(n - 1, kAlpha);
        eulerian.set(w - (w > v), kBeta);
      } else {
        predicted = deleteVertex(localComplement(g, v), v);
        eulerian = KVector::constant(n - 1, kAlpha);
      }
      if (!isEulerian(minor, eulerian)) return false;
      if (fundamentalGraph(minor, eulerian) != predicted) return false;
    }
  }
  // The non-essential correspondence needs minors whose 3-connectivity
  // matches primality; tiny disconnected graphs fall outside it.
  if (!isConnected(g) && n < 5) return true;
  return systemNonEssentialVertices(s) == nonEssentialVertices(g);
}

VerificationReport sweepGraphs(const std::string& id, const CheckTraits& traits, int nMin,
                               int nMax, int workers, bool dedup) {
  VerificationReport report;
  report.theorem = id;
  report.nMin = nMin;
  report.nMax = nMax;
  const auto t0 = std::chrono::steady_clock::now();

  for (int n = nMin; n <= nMax; ++n) {
    const std::uint64_t total = labeledGraphCount(n);
    const std::uint64_t block = 8192;
    std::vector<WorkerState> states(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w]() {
        WorkerState& ws = states[w];
        for (std::uint64_t base = std::uint64_t(w) * block; base < total;
             base += std::uint64_t(workers) * block) {
          const std::uint64_t end = std::min(base + block, total);
          for (std::uint64_t mask = base; mask < end; ++mask) {
            const Graph g = graphFromMask(n, mask);
            if (!passesFilter(g, traits.filter)) continue;
            if (dedup && traits.supportsDedup) {
              // Only the orbit member with the least key runs the check.
              if (g.packedKey() != orbitFactsFor(g, ws).minTag) continue;
            }
            ++ws.instances;
            if (!traits.predicate(g, ws, dedup)) ws.counterexamples.push_back(toGraph6(g));
          }
        }
      });
    }
    for (std::thread& t : pool) t.join();
    for (WorkerState& ws : states) {
      report.instances += ws.instances;
      report.counterexamples.insert(report.counterexamples.end(), ws.counterexamples.begin(),
                                    ws.counterexamples.end());
    }
  }
  std::sort(report.counterexamples.begin(), report.counterexamples.end());
  report.wallSeconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

VerificationReport verifyIgconn(int nMin, int nMax, int workers) {
  VerificationReport report;
  report.theorem = "prop-igconn";
  report.nMin = nMin;
  report.nMax = nMax;
  const auto t0 = std::chrono::steady_clock::now();
  constexpr int kInstances = 500;
  std::vector<WorkerState> states(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      WorkerState& ws = states[w];
      for (int i = w; i < kInstances; i += workers) {
        // Instance i is a fixed function of i so reports do not depend on
        // the worker count.
        const std::uint64_t r = splitmix64(0x76d6ca1c00000000ull + std::uint64_t(i));
        const int n = nMin + static_cast<int>(r % std::uint64_t(nMax - nMin + 1));
        const std::uint64_t mask = splitmix64(r) % labeledGraphCount(n);
        const Graph g = graphFromMask(n, mask);
        const IsotropicSystem s = alphaBetaSystem(g);
        ++ws.instances;
        bool ok = true;
        for (std::uint32_t X = 0; X < (1u << n) && ok; ++X) {
          if (connectivity(s, X) != cutRank(g, X)) ok = false;
        }
        if (!ok) ws.counterexamples.push_back(toGraph6(g));
      }
    });
  }
  for (std::thread& t : pool) t.join();
  for (WorkerState& ws : states) {
    report.instances += ws.instances;
    report.counterexamples.insert(report.counterexamples.end(), ws.counterexamples.begin(),
                                  ws.counterexamples.end());
  }
  std::sort(report.counterexamples.begin(), report.counterexamples.end());
  report.wallSeconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

VerificationReport verifyOddCycles(int nMin, int nMax) {
  VerificationReport report;
  report.theorem = "lemma-oddcyc";
  report.nMin = nMin;
  report.nMax = nMax;
  const auto t0 = std::chrono::steady_clock::now();
  for (int k = std::max(5, nMin); k <= nMax; ++k) {
    if (k % 2 == 0) continue;
    ++report.instances;
    if (!verifyOddCycleLemma(k, nMax)) report.counterexamples.push_back(toGraph6(Graph::cycle(k)));
  }
  report.wallSeconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace

VerificationReport verifyTheorem(const std::string& id, const VerifyOptions& opts) {
  std::unordered_map<std::string, CheckTraits> traits;
  traits["thm1"] = {5, 7, 4, true, {false, true, false}, &predThm1};
  traits["thm3"] = {5, 7, 4, true, {false, true, false}, &predThm3};
  traits["cor-bippiv"] = {5, 7, 4, false, {false, true, true}, &predBipPiv};
  traits["fan"] = {5, 7, 4, false, {false, true, false}, &predFan};
  traits["partition"] = {5, 7, 4, false, {false, true, false}, &predPartition};
  traits["prop-igmin"] = {1, 5, 1, false, {false, false, false}, &predIgmin};
  traits["prop-igconn"] = {1, 7, 1, false, {}, nullptr};
  traits["lemma-oddcyc"] = {5, 7, 5, false, {}, nullptr};

  const auto it = traits.find(id);
  if (it == traits.end()) throw std::invalid_argument("unknown check: " + id);
  const CheckTraits& tr = it->second;

  const int nMin = opts.nMin < 0 ? tr.defaultMin : opts.nMin;
  const int nMax = opts.nMax < 0 ? tr.defaultMax : opts.nMax;
  const int hardMax = hardMaxVertices();
  const int allowedMax = (opts.dedupOrbits && tr.supportsDedup) ? hardMax : std::min(hardMax, 7);
  if (nMin < tr.minAllowed || nMax < nMin || nMax > allowedMax) {
    throw BoundsError("n range [" + std::to_string(nMin) + ", " + std::to_string(nMax) +
                      "] outside allowed [" + std::to_string(tr.minAllowed) + ", " +
                      std::to_string(allowedMax) + "] for " + id);
  }
  if (opts.dedupOrbits && nMax > 8)
    throw BoundsError("orbit dedup relies on packed graph keys and needs n <= 8");
  const int workers = std::max(1, opts.workers);

  if (id == "prop-igconn") return verifyIgconn(nMin, nMax, workers);
  if (id == "lemma-oddcyc") return verifyOddCycles(nMin, nMax);
  return sweepGraphs(id, tr, nMin, nMax, workers, opts.dedupOrbits);
}

}  // namespace vmcalc
