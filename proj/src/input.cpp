#include "vmcalc/input.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "vmcalc/theta.hpp"

namespace vmcalc {

Graph parseGraphInput(const std::string& input) {
  if (input.rfind("theta:", 0) == 0) return buildTheta(parseThetaSpec(input));
  if (input.rfind("cycle:", 0) == 0) {
    const int k = std::stoi(input.substr(6));
    return Graph::cycle(k);
  }
  if (input.rfind("g6:", 0) == 0) return fromGraph6(input.substr(3));
  if (input.rfind("edges:", 0) == 0) {
    const std::string body = input.substr(6);
    const std::size_t semi = body.find(';');
    if (semi == std::string::npos) throw std::invalid_argument("missing ';' in edges literal");
    const int n = std::stoi(body.substr(0, semi));
    Graph g(n);
    std::istringstream in(body.substr(semi + 1));
    std::string pair;
    while (std::getline(in, pair, ',')) {
      if (pair.empty()) continue;
      const std::size_t dash = pair.find('-');
      if (dash == std::string::npos) throw std::invalid_argument("bad edge literal: " + pair);
      g.addEdge(std::stoi(pair.substr(0, dash)), std::stoi(pair.substr(dash + 1)));
    }
    return g;
  }
  std::ifstream file(input);
  if (!file) throw std::invalid_argument("cannot open input: " + input);
  std::stringstream buffer;
  buffer << file.rdbuf();
  const std::string text = buffer.str();
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw std::invalid_argument("empty input file");
  if (std::isdigit(static_cast<unsigned char>(text[first]))) return fromEdgeList(text);
  std::istringstream lines(text.substr(first));
  std::string line;
  std::getline(lines, line);
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
  return fromGraph6(line);
}

}  // namespace vmcalc
