#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bow/brane.hpp"

namespace bow {

// A tie joins the colored lines at 0-based positions left < right.
struct Tie {
  int left;
  int right;
  bool operator==(const Tie& o) const {
    return left == o.left && right == o.right;
  }
};

using NamePair = std::pair<std::string, std::string>;

struct TieDiagram {
  BraneDiagram base;
  std::vector<Tie> ties;

  bool covers(const Tie& t, int x) const { return t.left < x && x <= t.right; }
  int coverCount(int x) const;
  std::vector<NamePair> names() const;
  // "{(V3,U1),(V2,U2),(U2,V1),(U1,V1)}"
  std::string toString() const;
  bool hasTie(int a, int b) const;
  void sortCanonical();
  bool operator==(const TieDiagram& o) const {
    return base == o.base && ties == o.ties;
  }
};

struct TieValidity {
  bool valid = true;
  std::vector<std::string> violations;
};

TieValidity isValid(const TieDiagram& t);

// Build from named pairs; each pair is reordered left-to-right. Throws
// InvalidTie when a pair is not one red and one blue line.
TieDiagram makeTieDiagram(const BraneDiagram& d,
                          const std::vector<NamePair>& pairs);
// Parses "(V3,U1),(V2,U2)" with or without surrounding braces.
std::vector<NamePair> parseTieNames(const std::string& src);

// Each pair list is sorted in decreasing order and the lists are compared
// lexicographically, with blue names before red names and indices compared
// numerically.
bool canonicalLess(const TieDiagram& a, const TieDiagram& b);

std::vector<TieDiagram> enumerateTies(const BraneDiagram& d);
size_t countTies(const BraneDiagram& d);

// Fixed-point matching along the Hanany-Witten move at 0-based position pos.
TieDiagram hwMatch(const TieDiagram& t, int pos);

std::string pointId(size_t index);
// Looks up "D<k>" or an explicit tie set.
size_t findPoint(const std::vector<TieDiagram>& points, const std::string& key);

std::string renderTieAscii(const TieDiagram& t);

}  // namespace bow
