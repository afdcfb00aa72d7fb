#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace vmcalc {

// Elements of K, the 2-dimensional vector space over GF(2), packed into two
// bits: 0 = 00, alpha = 01, beta = 10, gamma = 11. Addition is XOR.
using KElem = std::uint8_t;

inline constexpr KElem kZero = 0;
inline constexpr KElem kAlpha = 1;
inline constexpr KElem kBeta = 2;
inline constexpr KElem kGamma = 3;

// <x,y> = 1 iff x and y are nonzero and distinct (the symplectic form on
// GF(2)^2: <(x1,x0),(y1,y0)> = x1*y0 + x0*y1).
inline int formK(KElem x, KElem y) {
  return static_cast<int>(((x >> 1) & y & 1u) ^ (x & (y >> 1) & 1u));
}

char kElemChar(KElem x);
KElem kElemFromChar(char c);

// Dense GF(2) matrix with rows packed into 64-bit words. All instances in
// this project are desk-scale, so a row never exceeds 64 columns.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(int rows, int cols);
  static BitMatrix fromRows(std::vector<std::uint64_t> rows, int cols);

  int rows() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  bool get(int r, int c) const { return (rows_[r] >> c) & 1u; }
  void set(int r, int c, bool value);
  std::uint64_t row(int r) const { return rows_[r]; }
  const std::vector<std::uint64_t>& rowWords() const { return rows_; }

  bool operator==(const BitMatrix&) const = default;

 private:
  int cols_ = 0;
  std::vector<std::uint64_t> rows_;
};

int rank(const BitMatrix& m);
BitMatrix rref(const BitMatrix& m);

// Rank of a set of packed rows; the rows are consumed as scratch space.
int rankOfRows(std::vector<std::uint64_t> rows);

// Basis of {x : Mx = 0} for the matrix whose rows are given, over `cols`
// columns. Rows are bit rows (bit c = entry in column c).
std::vector<std::uint64_t> kernelBasis(const std::vector<std::uint64_t>& rows, int cols);

// A vector in K^V for V = {0,...,n-1}, packed two bits per vertex
// (alpha bit at 2v, beta bit at 2v+1). Supports n <= 32.
class KVector {
 public:
  KVector() = default;
  explicit KVector(int n);
  static KVector constant(int n, KElem x);
  static KVector fromPacked(int n, std::uint64_t bits);
  // Accepts the per-vertex characters used by the serialized form: one of
  // "0abg" (or digits 0..3).
  static KVector fromString(const std::string& s);

  int size() const { return n_; }
  KElem at(int v) const { return static_cast<KElem>((bits_ >> (2 * v)) & 3u); }
  void set(int v, KElem x);
  std::uint64_t packed() const { return bits_; }

  KVector operator+(const KVector& o) const;
  bool operator==(const KVector&) const = default;

  bool isZero() const { return bits_ == 0; }
  bool isComplete() const;
  std::uint32_t supportMask() const;
  int supportSize() const;
  std::string toString() const;

 private:
  int n_ = 0;
  std::uint64_t bits_ = 0;
};

int formV(const KVector& a, const KVector& b);
bool supplementary(const KVector& a, const KVector& b);

// p_X(a): the vector on ground set X (re-indexed in increasing vertex order).
KVector restrictTo(const KVector& a, std::uint32_t X);
// a[X]: agrees with a on X and is zero elsewhere; same ground set.
KVector maskTo(const KVector& a, std::uint32_t X);

// Expands a vertex mask to the corresponding 2-bit-per-vertex column mask.
std::uint64_t expandVertexMask(std::uint32_t X);

// A subspace of K^V stored as a reduced row echelon basis over GF(2)^{2|V|}
// with the fixed column order (vertex order, alpha bit before beta bit), so
// equal subspaces have equal bases.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(int n) : n_(n) {}
  static Subspace span(int n, const std::vector<KVector>& gens);
  static Subspace fromPackedRows(int n, const std::vector<std::uint64_t>& rows);
  static Subspace full(int n);

  int ground() const { return n_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  bool contains(const KVector& a) const { return reduce(a.packed()) == 0; }
  std::uint64_t reduce(std::uint64_t w) const;
  const std::vector<std::uint64_t>& packedBasis() const { return basis_; }
  std::vector<KVector> basisVectors() const;

  bool operator==(const Subspace&) const = default;

 private:
  void insert(std::uint64_t w);

  int n_ = 0;
  std::vector<std::uint64_t> basis_;  // RREF rows, pivots strictly increasing
};

Subspace orthogonalComplement(const Subspace& L);
// L|_{subset X} = {p_X(a) : a in L, supp(a) subset of X}, on ground set X.
Subspace subRestrictInto(const Subspace& L, std::uint32_t X);
// L|_X = {p_X(a) : a in L}, on ground set X.
Subspace subProject(const Subspace& L, std::uint32_t X);

}  // namespace vmcalc
