#pragma once

#include <string>
#include <vector>

#include "vmcalc/graph.hpp"

namespace vmcalc {

// A sequence of lowercase letters in which every letter appears exactly
// twice.
class DoubleOccurrenceWord {
 public:
  explicit DoubleOccurrenceWord(std::string letters);

  const std::string& text() const { return letters_; }
  int letterCount() const { return static_cast<int>(letters_.size()) / 2; }
  // The distinct letters in sorted order.
  std::string alphabet() const;
  std::pair<int, int> positionsOf(char v) const;

  bool operator==(const DoubleOccurrenceWord&) const = default;

 private:
  std::string letters_;
};

// A(m): letters are vertices (in sorted order); two letters are adjacent iff
// their occurrences alternate around the word.
Graph interlacementGraph(const DoubleOccurrenceWord& m);

// m * v: reverses the subword strictly between the two occurrences of v.
DoubleOccurrenceWord wordLocalComplement(const DoubleOccurrenceWord& m, char v);

// Multigraph with loops and parallel edges, stored as a count matrix.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int n);

  int order() const { return n_; }
  int edgeMultiplicity(int u, int v) const { return counts_[u][v]; }
  void addEdge(int u, int v);  // u == v adds a loop
  int degree(int v) const;     // loops contribute 2
  bool isRegular(int d) const;
  int edgeCount() const;

  bool operator==(const Multigraph&) const = default;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> counts_;
};

bool multigraphIsomorphic(const Multigraph& a, const Multigraph& b);

// D(m) viewed as a cubic multigraph: vertices are the 2k circle positions;
// edges are the circle segments plus one chord per letter.
struct ChordDiagram {
  Multigraph graph;
  std::vector<std::pair<int, int>> chords;   // position pairs, one per letter
  std::vector<int> letterOfPosition;          // index into alphabet()
};
ChordDiagram chordDiagram(const DoubleOccurrenceWord& m);

// T(m): contract every chord of D(m); 4-regular on the letters.
Multigraph contractChords(const ChordDiagram& d);
Multigraph contractedWordGraph(const DoubleOccurrenceWord& m);

// m_k with A(m_k) = C_k, built from the offset-3 chord pattern on a circle
// with 2k positions (letter i sits at positions 2i and 2i+3 mod 2k).
DoubleOccurrenceWord canonicalCycleWord(int k);

// C_k^2: vertices at circular distance 1 or 2 are adjacent.
Graph squareOfCycle(int k);

// Checks that the local orbit of C_k (k odd, >= 5) has no bipartite member.
bool verifyOddCycleLemma(int k, int maxK = 9);

}  // namespace vmcalc
