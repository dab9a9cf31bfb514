#pragma once

#include <string>
#include <vector>

#include "bow/algebra.hpp"
#include "bow/linalg.hpp"
#include "bow/tie.hpp"

namespace bow {

enum class ArrowColor { Black, Blue, Red, Violet, Green };
const char* arrowColorName(ArrowColor c);

// Butterfly vertex: x is the 0-based black line, j the row.
struct Vertex {
  int x;
  int j;
  bool operator==(const Vertex& o) const { return x == o.x && j == o.j; }
  bool operator<(const Vertex& o) const {
    return x < o.x || (x == o.x && j < o.j);
  }
};

// Green arrows touch the external node, flagged by sourceExternal /
// targetExternal.
struct Arrow {
  ArrowColor color;
  Vertex source;
  Vertex target;
  bool sourceExternal = false;
  bool targetExternal = false;
};

struct ButterflyData {
  int blue = 0;      // 1-based index i of U_i
  int position = 0;  // 0-based colored position; U^- is black `position`
  std::vector<int> coverCounts;
  std::vector<int> columnBottoms;
  std::vector<Vertex> vertices;
  std::vector<Arrow> arrows;

  bool hasVertex(int x, int j) const;
  int J() const { return position; }
  // Offset o_U such that e_{U,j} has weight t_U + (j - o_U) h.
  int gradingOffset() const;
};

std::vector<int> coverCounts(const TieDiagram& t, int blue);
std::vector<int> columnBottoms(const TieDiagram& t, int blue);
ButterflyData butterfly(const TieDiagram& t, int blue);

struct BasisLabel {
  int blue;  // 1-based
  int j;
  bool operator==(const BasisLabel& o) const {
    return blue == o.blue && j == o.j;
  }
};

struct FixedPointData {
  TieDiagram tie;
  std::vector<ButterflyData> butterflies;        // indexed by blue - 1
  std::vector<std::vector<BasisLabel>> bases;    // indexed by black line
  std::vector<Matrix> A, Bplus, Bminus, a, b;    // indexed by blue - 1
  std::vector<Matrix> C, D;                      // indexed by red - 1

  int dim(int x) const { return static_cast<int>(bases[x].size()); }
  // Index of the label in bases[x], or -1.
  int find(int x, int blue, int j) const;
  Weight weight(int x, int k) const;
};

FixedPointData assembleFixedPoint(const TieDiagram& t);

Character fiberCharacter(const TieDiagram& t, int x);
std::vector<Character> fiberCharacters(const TieDiagram& t);

std::string renderButterfly(const ButterflyData& b, const BraneDiagram& d);

}  // namespace bow
