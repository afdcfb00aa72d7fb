#include "vmcalc/words.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

#include "vmcalc/equivalence.hpp"

namespace vmcalc {

DoubleOccurrenceWord::DoubleOccurrenceWord(std::string letters) : letters_(std::move(letters)) {
  std::array<int, 26> count{};
  for (char c : letters_) {
    if (c < 'a' || c > 'z') throw std::invalid_argument("letters must be lowercase a-z");
    ++count[c - 'a'];
  }
  for (int c : count) {
    if (c != 0 && c != 2) throw std::invalid_argument("each letter must appear exactly twice");
  }
  if (letters_.empty()) throw std::invalid_argument("empty word");
}

std::string DoubleOccurrenceWord::alphabet() const {
  std::string a;
  for (char c : letters_) {
    if (a.find(c) == std::string::npos) a.push_back(c);
  }
  std::sort(a.begin(), a.end());
  return a;
}

std::pair<int, int> DoubleOccurrenceWord::positionsOf(char v) const {
  const std::size_t p1 = letters_.find(v);
  if (p1 == std::string::npos) throw std::invalid_argument("unknown letter");
  const std::size_t p2 = letters_.find(v, p1 + 1);
  return {static_cast<int>(p1), static_cast<int>(p2)};
}

Graph interlacementGraph(const DoubleOccurrenceWord& m) {
  const std::string a = m.alphabet();
  Graph g(static_cast<int>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto [p1, p2] = m.positionsOf(a[i]);
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      const auto [q1, q2] = m.positionsOf(a[j]);
      const bool in1 = p1 < q1 && q1 < p2;
      const bool in2 = p1 < q2 && q2 < p2;
      if (in1 != in2) g.addEdge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return g;
}

DoubleOccurrenceWord wordLocalComplement(const DoubleOccurrenceWord& m, char v) {
  const auto [p1, p2] = m.positionsOf(v);
  std::string s = m.text();
  std::reverse(s.begin() + p1 + 1, s.begin() + p2);
  return DoubleOccurrenceWord(s);
}

Multigraph::Multigraph(int n) : n_(n), counts_(n, std::vector<int>(n, 0)) {
  if (n < 0) throw std::invalid_argument("bad order");
}

void Multigraph::addEdge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("unknown vertex");
  ++counts_[u][v];
  if (u != v) ++counts_[v][u];
}

int Multigraph::degree(int v) const {
  int d = counts_[v][v];  // loop counted twice below
  for (int w = 0; w < n_; ++w) d += counts_[v][w];
  return d;
}

bool Multigraph::isRegular(int d) const {
  for (int v = 0; v < n_; ++v) {
    if (degree(v) != d) return false;
  }
  return true;
}

int Multigraph::edgeCount() const {
  int total = 0;
  for (int v = 0; v < n_; ++v) {
    total += counts_[v][v];
    for (int w = v + 1; w < n_; ++w) total += counts_[v][w];
  }
  return total;
}

bool multigraphIsomorphic(const Multigraph& a, const Multigraph& b) {
  if (a.order() != b.order() || a.edgeCount() != b.edgeCount()) return false;
  const int n = a.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; ok && u < n; ++u)
      for (int v = u; ok && v < n; ++v)
        if (a.edgeMultiplicity(u, v) != b.edgeMultiplicity(perm[u], perm[v])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

ChordDiagram chordDiagram(const DoubleOccurrenceWord& m) {
  const std::string& text = m.text();
  const int positions = static_cast<int>(text.size());
  const std::string a = m.alphabet();
  ChordDiagram d;
  d.graph = Multigraph(positions);
  d.letterOfPosition.resize(positions);
  for (int p = 0; p < positions; ++p)
    d.letterOfPosition[p] = static_cast<int>(a.find(text[p]));
  for (int p = 0; p < positions; ++p) d.graph.addEdge(p, (p + 1) % positions);
  for (char c : a) {
    const auto [p1, p2] = m.positionsOf(c);
    d.graph.addEdge(p1, p2);
    d.chords.emplace_back(p1, p2);
  }
  return d;
}

Multigraph contractChords(const ChordDiagram& d) {
  int letters = 0;
  for (int l : d.letterOfPosition) letters = std::max(letters, l + 1);
  Multigraph t(letters);
  const int positions = d.graph.order();
  for (int p = 0; p < positions; ++p) {
    t.addEdge(d.letterOfPosition[p], d.letterOfPosition[(p + 1) % positions]);
  }
  return t;
}

Multigraph contractedWordGraph(const DoubleOccurrenceWord& m) {
  return contractChords(chordDiagram(m));
}

DoubleOccurrenceWord canonicalCycleWord(int k) {
  if (k < 4) throw std::invalid_argument("cycle word needs k >= 4");
  if (k > 26) throw std::invalid_argument("cycle word needs k <= 26");
  std::string text(std::size_t(2) * k, '?');
  for (int i = 0; i < k; ++i) {
    text[(2 * i) % (2 * k)] = static_cast<char>('a' + i);
    text[(2 * i + 3) % (2 * k)] = static_cast<char>('a' + i);
  }
  DoubleOccurrenceWord m(text);
  // Guards the position convention: the interlacement graph must be the
  // cycle on the letters in order.
  const Graph g = interlacementGraph(m);
  if (g != Graph::cycle(k)) throw std::logic_error("cycle word convention broken");
  return m;
}

Graph squareOfCycle(int k) {
  if (k < 3) throw std::invalid_argument("square of a cycle needs k >= 3");
  Graph g(k);
  for (int i = 0; i < k; ++i) {
    for (int d = 1; d <= 2; ++d) {
      const int j = (i + d) % k;
      if (!g.hasEdge(i, j)) g.addEdge(i, j);
    }
  }
  return g;
}

bool verifyOddCycleLemma(int k, int maxK) {
  if (k % 2 == 0 || k < 5 || k > maxK) throw std::invalid_argument("k out of range");
  for (const Graph& g : localOrbit(Graph::cycle(k)).members) {
    if (isBipartite(g)) return false;
  }
  return true;
}

}  // namespace vmcalc
