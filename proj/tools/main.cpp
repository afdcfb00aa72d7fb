#include <CLI11.hpp>
#include <bit>
#include <fstream>
#include <iostream>
#include <thread>

#include "vmcalc/enumerate.hpp"
#include "vmcalc/equivalence.hpp"
#include "vmcalc/graph.hpp"
#include "vmcalc/input.hpp"
#include "vmcalc/isotropic.hpp"
#include "vmcalc/theta.hpp"
#include "vmcalc/verify.hpp"
#include "vmcalc/words.hpp"

namespace {

using namespace vmcalc;

constexpr int kExitPass = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitParse = 2;
constexpr int kExitBounds = 3;

std::string vertexSet(std::uint32_t mask) {
  std::string out = "{";
  bool firstItem = true;
  while (mask) {
    const int v = std::countr_zero(mask);
    mask &= mask - 1;
    if (!firstItem) out += ",";
    out += std::to_string(v);
    firstItem = false;
  }
  return out + "}";
}

int cmdPrime(const std::string& input) {
  const Graph g = parseGraphInput(input);
  std::cout << "graph: " << toGraph6(g) << " (n=" << g.order() << ", m=" << g.edgeCount()
            << ")\n";
  const auto split = findSplit(g);
  std::cout << "prime: " << (split ? "no" : "yes") << '\n';
  if (split) std::cout << "split: " << vertexSet(split->a) << " | " << vertexSet(split->b) << '\n';
  return kExitPass;
}

int cmdNoness(const std::string& input) {
  const Graph g = parseGraphInput(input);
  std::cout << "graph: " << toGraph6(g) << " (n=" << g.order() << ", m=" << g.edgeCount()
            << ")\n";
  for (int v = 0; v < g.order(); ++v) {
    const ReductionPrimality r = classifyVertex(g, v);
    std::cout << "vertex " << v << ": delete=" << (r.primeDelete ? "prime" : "split")
              << " star-delete=" << (r.primeStarDelete ? "prime" : "split")
              << " contract=" << (r.primeContract ? "prime" : "split") << " -> "
              << (r.primeCount() >= 2 ? "non-essential" : "essential") << '\n';
  }
  const std::uint32_t ne = nonEssentialVertices(g);
  const std::uint32_t np = nonPivotalVertices(g);
  std::cout << "non-essential: " << vertexSet(ne) << " (" << std::popcount(ne) << ")\n";
  std::cout << "non-pivotal: " << vertexSet(np) << " (" << std::popcount(np) << ")\n";
  return kExitPass;
}

int cmdOrbit(const std::string& input, bool usePivot) {
  const Graph g = parseGraphInput(input);
  const Orbit orbit = usePivot ? pivotOrbit(g) : localOrbit(g);
  std::cout << "generator: " << (usePivot ? "pivot" : "local") << '\n';
  std::cout << "orbit-size: " << orbit.members.size() << '\n';
  bool cycleMember = false, bipartiteMember = false;
  for (const Graph& m : orbit.members) {
    cycleMember |= isCycleGraph(m);
    bipartiteMember |= isBipartite(m);
  }
  std::cout << "contains-cycle: " << (cycleMember ? "yes" : "no") << '\n';
  std::cout << "contains-bipartite: " << (bipartiteMember ? "yes" : "no") << '\n';
  return kExitPass;
}

int cmdTheta(const std::string& literal) {
  const ThetaSpec spec = parseThetaSpec(literal);
  const Graph g = buildTheta(spec);
  std::cout << "spec: " << thetaLiteral(spec) << '\n';
  std::cout << "graph: " << toGraph6(g) << " (n=" << g.order() << ")\n";
  if (spec.pathCount() >= 2 && g.order() >= 5) {
    const bool closed = thetaIsPrime(spec);
    const bool direct = isPrime(g);
    std::cout << "prime: " << (direct ? "yes" : "no") << " (closed form "
              << (closed == direct ? "agrees" : "DISAGREES") << ")\n";
  } else {
    std::cout << "prime: " << (isPrime(g) ? "yes" : "no") << '\n';
  }
  const std::uint32_t ne = nonEssentialVertices(g);
  std::cout << "non-essential: " << vertexSet(ne) << " (" << std::popcount(ne) << ")\n";
  if (const auto closed = thetaNonEssentialCount(spec)) {
    std::cout << "closed-form count: " << closed->count << " [" << closed->caseLabel << "] ("
              << (closed->count == std::popcount(ne) ? "agrees" : "DISAGREES") << ")\n";
  }
  const auto rec = recognizeTheta(g);
  std::cout << "recognized: " << (rec ? thetaLiteral(*rec) : std::string("none")) << '\n';
  return kExitPass;
}

int cmdIsotropic(const std::string& input, bool showTriangles, bool showHypergraph,
                 bool serialize) {
  const Graph g = parseGraphInput(input);
  const KVector a = KVector::constant(g.order(), kAlpha);
  const KVector b = KVector::constant(g.order(), kBeta);
  const IsotropicSystem s = fromGraphicPresentation(g, a, b);
  std::cout << "graph: " << toGraph6(g) << " (n=" << g.order() << ")\n";
  std::cout << "dimension: " << s.space().dim() << '\n';
  std::cout << "three-connected: " << (isThreeConnected(s) ? "yes" : "no") << '\n';
  std::cout << "cyclic: " << (isCyclic(s) ? "yes" : "no") << '\n';
  std::cout << "fundamental-graph: " << toGraph6(fundamentalGraph(s, a)) << '\n';
  const std::uint32_t ne = systemNonEssentialVertices(s);
  std::cout << "non-essential: " << vertexSet(ne) << " (" << std::popcount(ne) << ")\n";
  if (serialize) {
    std::cout << "basis:\n" << serializeSystem(s);
  }
  if (showTriangles) {
    for (const KVector& t : triangles(s)) std::cout << "triangle: " << t.toString() << '\n';
  }
  if (showHypergraph) {
    std::cout << "hypergraph edges:\n" << toEdgeLines(buildH(s));
  }
  return kExitPass;
}

int cmdWord(const std::string& text, const std::string& star) {
  DoubleOccurrenceWord m(text);
  if (!star.empty()) {
    if (star.size() != 1) throw std::invalid_argument("--star expects a single letter");
    const DoubleOccurrenceWord next = wordLocalComplement(m, star[0]);
    std::cout << "word: " << next.text() << '\n';
    const Graph lhs = interlacementGraph(next);
    const Graph rhs = localComplement(interlacementGraph(m), static_cast<int>(m.alphabet().find(star[0])));
    std::cout << "interlacement-commutes: " << (lhs == rhs ? "yes" : "no") << '\n';
    m = next;
  } else {
    std::cout << "word: " << m.text() << '\n';
  }
  const Graph a = interlacementGraph(m);
  std::cout << "interlacement: " << toGraph6(a) << " (letters " << m.alphabet() << ")\n";
  const Multigraph t = contractedWordGraph(m);
  std::cout << "contracted-graph: " << t.order() << " vertices, " << t.edgeCount()
            << " edges, 4-regular " << (t.isRegular(4) ? "yes" : "no") << '\n';
  return kExitPass;
}

int cmdVerify(const std::string& check, const VerifyOptions& opts, const std::string& reportPath) {
  const VerificationReport report = verifyTheorem(check, opts);
  std::cout << report.toText();
  if (!reportPath.empty()) {
    std::ofstream out(reportPath);
    if (!out) throw std::invalid_argument("cannot write report to " + reportPath);
    out << report.toText();
  }
  return report.pass() ? kExitPass : kExitCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vertex-minor calculus and exhaustive verification toolkit"};
  app.require_subcommand(1);

  std::string graphInput, thetaArg, wordText, starLetter, check, reportPath;
  bool usePivot = false, showTriangles = false, showHypergraph = false, serialize = false;
  VerifyOptions opts;
  opts.workers = static_cast<int>(std::thread::hardware_concurrency());
  if (opts.workers < 1) opts.workers = 1;

  CLI::App* prime = app.add_subcommand("prime", "primality and one split of a graph");
  prime->add_option("input", graphInput, "graph literal or file")->required();

  CLI::App* noness = app.add_subcommand("noness", "per-vertex reduction primality and the non-essential set");
  noness->add_option("input", graphInput, "graph literal or file")->required();

  CLI::App* orbit = app.add_subcommand("orbit", "local or pivot orbit summary");
  orbit->add_option("input", graphInput, "graph literal or file")->required();
  orbit->add_flag("--pivot", usePivot, "use pivot orbit instead of local orbit");

  CLI::App* theta = app.add_subcommand("theta", "build and classify a theta graph");
  theta->add_option("spec", thetaArg, "lengths, e.g. theta:2,3,3")->required();

  CLI::App* iso = app.add_subcommand("isotropic", "dump the system presented by a graph");
  iso->add_option("input", graphInput, "graph literal or file")->required();
  iso->add_flag("--triangles", showTriangles, "list triangle vectors");
  iso->add_flag("--hypergraph", showHypergraph, "list triangle supports");
  iso->add_flag("--serialize", serialize, "print the basis, one vector per line");

  CLI::App* word = app.add_subcommand("word", "double occurrence word operations");
  word->add_option("text", wordText, "word, e.g. abacbc")->required();
  word->add_option("--star", starLetter, "apply the word-level complementation at a letter");

  CLI::App* verify = app.add_subcommand("verify", "run one exhaustive check");
  verify->add_option("check", check, "one of: thm1 thm3 cor-bippiv fan partition prop-igconn prop-igmin lemma-oddcyc")
      ->required();
  verify->add_option("--n-min", opts.nMin, "smallest vertex count");
  verify->add_option("--n-max", opts.nMax, "largest vertex count");
  verify->add_option("--workers", opts.workers, "worker threads");
  verify->add_flag("--dedup-orbits", opts.dedupOrbits, "test one representative per local orbit");
  verify->add_option("--report", reportPath, "also write the report to a file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (prime->parsed()) return cmdPrime(graphInput);
    if (noness->parsed()) return cmdNoness(graphInput);
    if (orbit->parsed()) return cmdOrbit(graphInput, usePivot);
    if (theta->parsed()) return cmdTheta(thetaArg);
    if (iso->parsed()) return cmdIsotropic(graphInput, showTriangles, showHypergraph, serialize);
    if (word->parsed()) return cmdWord(wordText, starLetter);
    if (verify->parsed()) return cmdVerify(check, opts, reportPath);
  } catch (const vmcalc::BoundsError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBounds;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  }
  return kExitPass;
}
