#include "vmcalc/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace vmcalc {

namespace {
constexpr std::uint64_t kAlphaBits = 0x5555555555555555ull;

int checkedSize(int n) {
  if (n < 0 || n > 32) throw std::invalid_argument("ground set size out of range");
  return n;
}
}  // namespace

char kElemChar(KElem x) {
  static const char table[4] = {'0', 'a', 'b', 'g'};
  return table[x & 3u];
}

KElem kElemFromChar(char c) {
  switch (c) {
    case '0': return kZero;
    case 'a': case '1': return kAlpha;
    case 'b': case '2': return kBeta;
    case 'g': case '3': return kGamma;
    default: throw std::invalid_argument(std::string("bad K element character: ") + c);
  }
}

BitMatrix::BitMatrix(int rows, int cols) : cols_(cols), rows_(rows, 0) {
  if (rows < 0 || cols < 0 || cols > 64) throw std::invalid_argument("bad matrix shape");
}

BitMatrix BitMatrix::fromRows(std::vector<std::uint64_t> rows, int cols) {
  BitMatrix m(static_cast<int>(rows.size()), cols);
  m.rows_ = std::move(rows);
  return m;
}

void BitMatrix::set(int r, int c, bool value) {
  if (value)
    rows_[r] |= std::uint64_t(1) << c;
  else
    rows_[r] &= ~(std::uint64_t(1) << c);
}

int rankOfRows(std::vector<std::uint64_t> rows) {
  int r = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::uint64_t w = rows[i];
    for (std::size_t j = 0; j < i; ++j) {
      std::uint64_t pivot = rows[j] & -rows[j];
      if (w & pivot) w ^= rows[j];
    }
    rows[i] = w;
    if (w) ++r;
  }
  return r;
}

int rank(const BitMatrix& m) { return rankOfRows(m.rowWords()); }

BitMatrix rref(const BitMatrix& m) {
  std::vector<std::uint64_t> basis;
  for (std::uint64_t w : m.rowWords()) {
    for (const std::uint64_t b : basis) {
      if (w & (b & -b)) w ^= b;
    }
    if (!w) continue;
    const std::uint64_t pivot = w & -w;
    for (std::uint64_t& b : basis) {
      if (b & pivot) b ^= w;
    }
    basis.push_back(w);
  }
  std::sort(basis.begin(), basis.end(),
            [](std::uint64_t a, std::uint64_t b) { return (a & -a) < (b & -b); });
  basis.resize(m.rows(), 0);
  return BitMatrix::fromRows(std::move(basis), m.cols());
}

std::vector<std::uint64_t> kernelBasis(const std::vector<std::uint64_t>& rows, int cols) {
  // Row reduce, remembering each pivot column.
  std::vector<std::uint64_t> basis;
  for (std::uint64_t w : rows) {
    for (const std::uint64_t b : basis) {
      if (w & (b & -b)) w ^= b;
    }
    if (!w) continue;
    const std::uint64_t pivot = w & -w;
    for (std::uint64_t& b : basis) {
      if (b & pivot) b ^= w;
    }
    basis.push_back(w);
  }
  std::uint64_t pivotMask = 0;
  for (std::uint64_t b : basis) pivotMask |= b & -b;

  std::vector<std::uint64_t> kernel;
  for (int f = 0; f < cols; ++f) {
    const std::uint64_t fbit = std::uint64_t(1) << f;
    if (pivotMask & fbit) continue;
    std::uint64_t x = fbit;
    for (std::uint64_t b : basis) {
      if (b & fbit) x |= b & -b;
    }
    kernel.push_back(x);
  }
  return kernel;
}

KVector::KVector(int n) : n_(checkedSize(n)) {}

KVector KVector::constant(int n, KElem x) {
  KVector v(n);
  for (int i = 0; i < n; ++i) v.set(i, x);
  return v;
}

KVector KVector::fromPacked(int n, std::uint64_t bits) {
  KVector v(n);
  v.bits_ = n == 32 ? bits : (bits & ((std::uint64_t(1) << (2 * n)) - 1));
  return v;
}

KVector KVector::fromString(const std::string& s) {
  KVector v(static_cast<int>(s.size()));
  for (int i = 0; i < v.n_; ++i) v.set(i, kElemFromChar(s[i]));
  return v;
}

void KVector::set(int v, KElem x) {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
  bits_ = (bits_ & ~(std::uint64_t(3) << (2 * v))) | (std::uint64_t(x & 3u) << (2 * v));
}

KVector KVector::operator+(const KVector& o) const {
  if (n_ != o.n_) throw std::invalid_argument("ground set mismatch");
  KVector r(n_);
  r.bits_ = bits_ ^ o.bits_;
  return r;
}

bool KVector::isComplete() const {
  for (int v = 0; v < n_; ++v) {
    if (at(v) == kZero) return false;
  }
  return true;
}

std::uint32_t KVector::supportMask() const {
  std::uint32_t m = 0;
  for (int v = 0; v < n_; ++v) {
    if (at(v) != kZero) m |= 1u << v;
  }
  return m;
}

int KVector::supportSize() const {
  return std::popcount((bits_ | (bits_ >> 1)) & kAlphaBits);
}

std::string KVector::toString() const {
  std::string s(n_, '0');
  for (int v = 0; v < n_; ++v) s[v] = kElemChar(at(v));
  return s;
}

int formV(const KVector& a, const KVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("ground set mismatch");
  const std::uint64_t x = a.packed(), y = b.packed();
  const std::uint64_t t1 = (x >> 1) & y & kAlphaBits;
  const std::uint64_t t2 = x & (y >> 1) & kAlphaBits;
  return (std::popcount(t1) ^ std::popcount(t2)) & 1;
}

bool supplementary(const KVector& a, const KVector& b) {
  if (a.size() != b.size()) return false;
  for (int v = 0; v < a.size(); ++v) {
    if (a.at(v) == kZero || b.at(v) == kZero || a.at(v) == b.at(v)) return false;
  }
  return true;
}

std::uint64_t expandVertexMask(std::uint32_t X) {
  std::uint64_t m = 0;
  while (X) {
    const int v = std::countr_zero(X);
    X &= X - 1;
    m |= std::uint64_t(3) << (2 * v);
  }
  return m;
}

KVector restrictTo(const KVector& a, std::uint32_t X) {
  const std::uint32_t full = a.size() == 32 ? 0xffffffffu : ((1u << a.size()) - 1);
  if (X & ~full) throw std::invalid_argument("X is not a subset of the ground set");
  KVector r(std::popcount(X));
  int i = 0;
  for (int v = 0; v < a.size(); ++v) {
    if (X & (1u << v)) r.set(i++, a.at(v));
  }
  return r;
}

KVector maskTo(const KVector& a, std::uint32_t X) {
  const std::uint32_t full = a.size() == 32 ? 0xffffffffu : ((1u << a.size()) - 1);
  if (X & ~full) throw std::invalid_argument("X is not a subset of the ground set");
  return KVector::fromPacked(a.size(), a.packed() & expandVertexMask(X));
}

void Subspace::insert(std::uint64_t w) {
  for (const std::uint64_t b : basis_) {
    if (w & (b & -b)) w ^= b;
  }
  if (!w) return;
  const std::uint64_t pivot = w & -w;
  for (std::uint64_t& b : basis_) {
    if (b & pivot) b ^= w;
  }
  auto pos = basis_.begin();
  while (pos != basis_.end() && (*pos & -*pos) < pivot) ++pos;
  basis_.insert(pos, w);
}

Subspace Subspace::span(int n, const std::vector<KVector>& gens) {
  Subspace s(checkedSize(n));
  for (const KVector& g : gens) {
    if (g.size() != n) throw std::invalid_argument("ground set mismatch");
    s.insert(g.packed());
  }
  return s;
}

Subspace Subspace::fromPackedRows(int n, const std::vector<std::uint64_t>& rows) {
  Subspace s(checkedSize(n));
  for (std::uint64_t w : rows) s.insert(w);
  return s;
}

Subspace Subspace::full(int n) {
  Subspace s(checkedSize(n));
  for (int c = 0; c < 2 * n; ++c) s.basis_.push_back(std::uint64_t(1) << c);
  return s;
}

std::uint64_t Subspace::reduce(std::uint64_t w) const {
  for (const std::uint64_t b : basis_) {
    if (w & (b & -b)) w ^= b;
  }
  return w;
}

std::vector<KVector> Subspace::basisVectors() const {
  std::vector<KVector> out;
  out.reserve(basis_.size());
  for (std::uint64_t w : basis_) out.push_back(KVector::fromPacked(n_, w));
  return out;
}

namespace {
// Swaps the alpha/beta bit of every vertex; turns the form <a,b> into a
// plain dot product so complements reduce to kernel computations.
std::uint64_t swapPairs(std::uint64_t w) {
  return ((w & kAlphaBits) << 1) | ((w >> 1) & kAlphaBits);
}

std::uint64_t projectColumns(std::uint64_t w, std::uint32_t X) {
  std::uint64_t out = 0;
  int i = 0;
  while (X) {
    const int v = std::countr_zero(X);
    X &= X - 1;
    out |= ((w >> (2 * v)) & 3u) << (2 * i);
    ++i;
  }
  return out;
}
}  // namespace

Subspace orthogonalComplement(const Subspace& L) {
  std::vector<std::uint64_t> rows;
  rows.reserve(L.dim());
  for (std::uint64_t b : L.packedBasis()) rows.push_back(swapPairs(b));
  return Subspace::fromPackedRows(L.ground(), kernelBasis(rows, 2 * L.ground()));
}

Subspace subRestrictInto(const Subspace& L, std::uint32_t X) {
  const std::uint64_t comp = expandVertexMask(~X) & (L.ground() == 32 ? ~0ull : ((1ull << (2 * L.ground())) - 1));
  std::vector<std::uint64_t> rows = L.packedBasis();
  std::vector<bool> dead(rows.size(), false);
  // Eliminate on the complement columns first; the surviving rows span the
  // vectors confined to X.
  for (int c = 0; c < 64; ++c) {
    const std::uint64_t cbit = std::uint64_t(1) << c;
    if (!(comp & cbit)) continue;
    int p = -1;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!dead[i] && (rows[i] & cbit)) { p = static_cast<int>(i); break; }
    }
    if (p < 0) continue;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) != p && !dead[i] && (rows[i] & cbit)) rows[i] ^= rows[p];
    }
    dead[p] = true;
  }
  std::vector<std::uint64_t> confined;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!dead[i] && rows[i]) confined.push_back(projectColumns(rows[i], X));
  }
  return Subspace::fromPackedRows(std::popcount(X), confined);
}

Subspace subProject(const Subspace& L, std::uint32_t X) {
  std::vector<std::uint64_t> rows;
  rows.reserve(L.dim());
  for (std::uint64_t b : L.packedBasis()) rows.push_back(projectColumns(b, X));
  return Subspace::fromPackedRows(std::popcount(X), rows);
}

}  // namespace vmcalc
