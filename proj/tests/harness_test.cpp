#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "vmcalc/enumerate.hpp"
#include "vmcalc/equivalence.hpp"
#include "vmcalc/input.hpp"
#include "vmcalc/theta.hpp"
#include "vmcalc/verify.hpp"

using namespace vmcalc;

TEST_CASE("the graph input grammar covers literals and files") {
  CHECK(parseGraphInput("cycle:5") == Graph::cycle(5));
  CHECK(parseGraphInput("theta:2,3,3") == buildTheta(parseThetaSpec("2,3,3")));
  CHECK(parseGraphInput("g6:Dhc") == Graph::cycle(5));
  CHECK(parseGraphInput("edges:4;0-1,1-2,2-3,3-0") == Graph::cycle(4));
  CHECK_THROWS_AS(parseGraphInput("edges:4"), std::invalid_argument);
  CHECK_THROWS_AS(parseGraphInput("edges:4;0+1"), std::invalid_argument);
  CHECK_THROWS_AS(parseGraphInput("/no/such/file"), std::invalid_argument);

  const std::string edgePath = "harness_edges.tmp";
  std::ofstream(edgePath) << toEdgeList(Graph::cycle(6));
  CHECK(parseGraphInput(edgePath) == Graph::cycle(6));
  std::remove(edgePath.c_str());

  const std::string g6Path = "harness_g6.tmp";
  std::ofstream(g6Path) << toGraph6(Graph::complete(4)) << "\n";
  CHECK(parseGraphInput(g6Path) == Graph::complete(4));
  std::remove(g6Path.c_str());
}

TEST_CASE("labeled enumeration counts") {
  CHECK(labeledGraphCount(4) == 64);
  std::uint64_t seen = 0;
  forEachGraph(4, {}, [&](const Graph&) {
    ++seen;
    return true;
  });
  CHECK(seen == 64);
  std::uint64_t connected = 0;
  forEachGraph(4, {true, false, false}, [&](const Graph&) {
    ++connected;
    return true;
  });
  CHECK(connected == 38);
  CHECK_THROWS_AS(labeledGraphCount(11), std::invalid_argument);
}

TEST_CASE("prime filter at n=5 yields cyclic graphs only") {
  std::uint64_t count = 0;
  bool sawCycle = false;
  forEachGraph(5, {false, true, false}, [&](const Graph& g) {
    ++count;
    if (g == Graph::cycle(5)) sawCycle = true;
    CHECK(isLocallyEquivalentToCycle(g) == 5);
    return true;
  });
  CHECK(count > 0);
  CHECK(sawCycle);
}

TEST_CASE("prefilter matches full primality on n=5") {
  forEachGraph(5, {}, [&](const Graph& g) {
    if (isPrime(g)) CHECK(primePrefilter(g));
    return true;
  });
}

TEST_CASE("verification reports are deterministic across worker counts") {
  VerifyOptions one;
  one.nMin = 5;
  one.nMax = 5;
  one.workers = 1;
  VerifyOptions four = one;
  four.workers = 4;
  for (const std::string& id : {std::string("thm1"), std::string("thm3")}) {
    VerificationReport a = verifyTheorem(id, one);
    VerificationReport b = verifyTheorem(id, four);
    CHECK(a.pass());
    CHECK(a.instances == b.instances);
    CHECK(a.counterexamples == b.counterexamples);
  }
}

TEST_CASE("dedup mode tests one representative per orbit and still passes") {
  VerifyOptions opts;
  opts.nMin = 5;
  opts.nMax = 5;
  opts.workers = 2;
  const VerificationReport plain = verifyTheorem("thm1", opts);
  opts.dedupOrbits = true;
  const VerificationReport dedup = verifyTheorem("thm1", opts);
  CHECK(dedup.pass());
  CHECK(dedup.instances < plain.instances);
  CHECK(dedup.instances > 0);
}

TEST_CASE("bounds errors") {
  VerifyOptions opts;
  opts.nMax = 12;
  CHECK_THROWS_AS(verifyTheorem("thm1", opts), BoundsError);
  opts.nMax = -1;
  opts.nMin = 2;
  CHECK_THROWS_AS(verifyTheorem("thm1", opts), BoundsError);
  CHECK_THROWS_AS(verifyTheorem("no-such-check", {}), std::invalid_argument);
}

TEST_CASE("reports render counterexamples one per line") {
  VerificationReport r;
  r.theorem = "thm1";
  r.nMin = 5;
  r.nMax = 5;
  r.instances = 2;
  r.counterexamples = {"DUW", "Dhc"};
  CHECK_FALSE(r.pass());
  const std::string text = r.toText();
  CHECK(text.find("counterexamples: 2\n") != std::string::npos);
  CHECK(text.find("counterexample: DUW\n") != std::string::npos);
  CHECK(text.find("counterexample: Dhc\n") != std::string::npos);
  CHECK(text.find("result: fail\n") != std::string::npos);
}

TEST_CASE("report text follows the key/value schema") {
  VerifyOptions opts;
  opts.nMin = 5;
  opts.nMax = 5;
  opts.workers = 2;
  const VerificationReport r = verifyTheorem("lemma-oddcyc", opts);
  const std::string text = r.toText();
  CHECK(text.find("theorem: lemma-oddcyc\n") != std::string::npos);
  CHECK(text.find("n-min: 5") != std::string::npos);
  CHECK(text.find("instances: 1") != std::string::npos);
  CHECK(text.find("result: pass") != std::string::npos);
}

TEST_CASE("small ranges of the remaining checks pass") {
  VerifyOptions opts;
  opts.workers = 2;
  opts.nMin = 5;
  opts.nMax = 5;
  CHECK(verifyTheorem("cor-bippiv", opts).pass());
  CHECK(verifyTheorem("fan", opts).pass());
  CHECK(verifyTheorem("partition", opts).pass());
  opts.nMin = 1;
  opts.nMax = 4;
  CHECK(verifyTheorem("prop-igmin", opts).pass());
  opts.nMax = 5;
  CHECK(verifyTheorem("prop-igconn", opts).pass());
}
