#include <doctest.h>

#include <bit>
#include <random>

#include "vmcalc/gf2.hpp"
#include "oracles.hpp"

using namespace vmcalc;

namespace {
KVector randomVector(int n, std::mt19937& rng) {
  KVector v(n);
  for (int i = 0; i < n; ++i) v.set(i, static_cast<KElem>(rng() & 3u));
  return v;
}

Subspace randomSubspace(int n, int gens, std::mt19937& rng) {
  std::vector<KVector> rows;
  for (int i = 0; i < gens; ++i) rows.push_back(randomVector(n, rng));
  return Subspace::span(n, rows);
}

// The C5 presentation span used in several examples: alpha on both cycle
// neighbors plus beta on the vertex itself.
Subspace c5Space() {
  std::vector<KVector> gens;
  for (int v = 0; v < 5; ++v) {
    KVector g(5);
    g.set((v + 4) % 5, kAlpha);
    g.set((v + 1) % 5, kAlpha);
    g.set(v, kBeta);
    gens.push_back(g);
  }
  return Subspace::span(5, gens);
}
}  // namespace

TEST_CASE("K is a 2-dimensional GF(2) space with the expected form") {
  for (KElem x = 0; x <= 3; ++x) {
    CHECK((x ^ x) == 0);
    CHECK(formK(x, x) == 0);
    CHECK(formK(kZero, x) == 0);
    for (KElem y = 0; y <= 3; ++y) {
      CHECK(formK(x, y) == oracle::formKByDefinition(x, y));
      CHECK(formK(x, y) == formK(y, x));
    }
  }
  CHECK(formK(kAlpha, kBeta) == 1);
  CHECK(formK(kAlpha, kAlpha) == 0);
  CHECK(formK(kZero, kGamma) == 0);
}

TEST_CASE("rank handles the small fixed matrices") {
  CHECK(rank(BitMatrix(0, 4)) == 0);
  CHECK(rank(BitMatrix::fromRows({0b11, 0b11}, 2)) == 1);
  CHECK(rank(BitMatrix::fromRows({0b011, 0b110}, 3)) == 2);
}

TEST_CASE("rank agrees with row-span enumeration on random matrices") {
  std::mt19937 rng(7021);
  for (int trial = 0; trial < 300; ++trial) {
    const int r = 1 + int(rng() % 6), c = 1 + int(rng() % 6);
    std::vector<std::uint64_t> rows;
    for (int i = 0; i < r; ++i) rows.push_back(rng() & ((1u << c) - 1));
    CHECK(rankOfRows(rows) == oracle::rankBySpan(rows));
  }
}

TEST_CASE("rref is idempotent") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const int r = 1 + int(rng() % 5), c = 1 + int(rng() % 8);
    std::vector<std::uint64_t> rows;
    for (int i = 0; i < r; ++i) rows.push_back(rng() & ((1u << c) - 1));
    const BitMatrix m = BitMatrix::fromRows(rows, c);
    CHECK(rref(rref(m)) == rref(m));
  }
}

TEST_CASE("formV fixed examples") {
  CHECK(formV(KVector::fromString("a0"), KVector::fromString("bg")) == 1);
  CHECK(formV(KVector::fromString("ab"), KVector::fromString("ba")) == 0);
  std::mt19937 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const KVector a = randomVector(6, rng);
    CHECK(formV(a, a) == 0);
  }
}

TEST_CASE("formV is bilinear and matches the per-vertex sum") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + int(rng() % 8);
    const KVector a = randomVector(n, rng), b = randomVector(n, rng), c = randomVector(n, rng);
    CHECK(formV(a + b, c) == (formV(a, c) ^ formV(b, c)));
    int direct = 0;
    for (int v = 0; v < n; ++v) direct ^= formK(a.at(v), b.at(v));
    CHECK(formV(a, b) == direct);
  }
}

TEST_CASE("restrictTo and maskTo follow the definitions") {
  const KVector a = KVector::fromString("abg");
  CHECK(restrictTo(a, 0b111) == a);
  CHECK(restrictTo(a, 0).size() == 0);
  CHECK(restrictTo(a, 0b101) == KVector::fromString("ag"));
  CHECK_THROWS_AS(restrictTo(a, 0b1000), std::invalid_argument);

  const KVector ab = KVector::fromString("ab");
  CHECK(maskTo(ab, 0b11) == ab);
  CHECK(maskTo(ab, 0).isZero());
  CHECK(maskTo(ab, 0b10) == KVector::fromString("0b"));
  CHECK(maskTo(ab, 0b10).supportMask() == (ab.supportMask() & 0b10u));
}

TEST_CASE("supplementary vectors are complete and pointwise distinct") {
  CHECK(supplementary(KVector::fromString("ab"), KVector::fromString("bg")));
  CHECK_FALSE(supplementary(KVector::fromString("ab"), KVector::fromString("b0")));
  CHECK_FALSE(supplementary(KVector::fromString("ab"), KVector::fromString("bb")));
}

TEST_CASE("orthogonal complement endpoints") {
  CHECK(orthogonalComplement(Subspace(3)).dim() == 6);
  CHECK(orthogonalComplement(Subspace::full(3)).dim() == 0);
  const Subspace c5 = c5Space();
  REQUIRE(c5.dim() == 5);
  CHECK(orthogonalComplement(c5) == c5);
}

TEST_CASE("orthogonal complement is an involution with complementary dimension") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + int(rng() % 6);
    const Subspace L = randomSubspace(n, int(rng() % (2 * n + 1)), rng);
    const Subspace P = orthogonalComplement(L);
    CHECK(L.dim() + P.dim() == 2 * n);
    CHECK(orthogonalComplement(P) == L);
    for (const KVector& a : L.basisVectors())
      for (const KVector& b : P.basisVectors()) CHECK(formV(a, b) == 0);
  }
}

TEST_CASE("restriction and projection endpoints") {
  const Subspace c5 = c5Space();
  const std::uint32_t full = 0b11111;
  CHECK(subRestrictInto(c5, full) == c5);
  CHECK(subRestrictInto(c5, 0).dim() == 0);
  CHECK(subProject(c5, full) == c5);
  CHECK(subProject(c5, 0).dim() == 0);
  // The generator at vertex 0 is confined to {4,0,1}.
  CHECK(subRestrictInto(c5, 0b10011).dim() >= 1);
  // For a self-dual space and a single vertex, the two dimensions add to 2.
  for (int v = 0; v < 5; ++v) {
    const std::uint32_t X = 1u << v;
    CHECK(subRestrictInto(c5, X).dim() + subProject(c5, X).dim() == 2);
  }
}

TEST_CASE("restriction duality for arbitrary subspaces") {
  std::mt19937 rng(515);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + int(rng() % 5);
    const Subspace L = randomSubspace(n, int(rng() % (2 * n + 1)), rng);
    const std::uint32_t X = rng() & ((1u << n) - 1);
    const int k = std::popcount(X);
    CHECK(subRestrictInto(orthogonalComplement(L), X).dim() == 2 * k - subProject(L, X).dim());
  }
}

TEST_CASE("membership and vector listing agree") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + int(rng() % 4);
    const Subspace L = randomSubspace(n, int(rng() % (n + 2)), rng);
    const std::vector<std::uint64_t> vectors = oracle::allVectors(L);
    CHECK(vectors.size() == (std::size_t(1) << L.dim()));
    for (std::uint64_t w : vectors) CHECK(L.contains(KVector::fromPacked(n, w)));
    for (int probe = 0; probe < 20; ++probe) {
      const KVector v = randomVector(n, rng);
      const bool inList =
          std::find(vectors.begin(), vectors.end(), v.packed()) != vectors.end();
      CHECK(L.contains(v) == inList);
    }
  }
}
