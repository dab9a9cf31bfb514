#include "bow/brane.hpp"

#include <cctype>

#include "bow/error.hpp"

namespace bow {

int BraneDiagram::M() const {
  int m = 0;
  for (Color c : colors) m += c == Color::Red;
  return m;
}

int BraneDiagram::N() const { return numColored() - M(); }

int BraneDiagram::indexAt(int pos) const {
  if (colors[pos] == Color::Blue) {
    int i = 0;
    for (int p = 0; p <= pos; ++p) i += colors[p] == Color::Blue;
    return i;
  }
  int j = 0;
  for (int p = numColored() - 1; p >= pos; --p) j += colors[p] == Color::Red;
  return j;
}

int BraneDiagram::positionOfBlue(int i) const {
  int seen = 0;
  for (int p = 0; p < numColored(); ++p)
    if (colors[p] == Color::Blue && ++seen == i) return p;
  throw Error(Errc::SyntaxError, "no blue line U" + std::to_string(i));
}

int BraneDiagram::positionOfRed(int j) const {
  int seen = 0;
  for (int p = numColored() - 1; p >= 0; --p)
    if (colors[p] == Color::Red && ++seen == j) return p;
  throw Error(Errc::SyntaxError, "no red line V" + std::to_string(j));
}

std::string BraneDiagram::nameAt(int pos) const {
  return (colors[pos] == Color::Blue ? "U" : "V") + std::to_string(indexAt(pos));
}

int BraneDiagram::positionOfName(std::string_view name) const {
  if (name.size() < 2 || (name[0] != 'U' && name[0] != 'V'))
    throw Error(Errc::SyntaxError, "bad line name '" + std::string(name) + "'");
  int idx = 0;
  for (size_t k = 1; k < name.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(name[k])))
      throw Error(Errc::SyntaxError, "bad line name '" + std::string(name) + "'");
    idx = idx * 10 + (name[k] - '0');
  }
  return name[0] == 'U' ? positionOfBlue(idx) : positionOfRed(idx);
}

BraneDiagram parseDiagram(std::string_view src) {
  BraneDiagram d;
  size_t i = 0;
  auto fail = [&](const std::string& what) {
    throw Error(Errc::SyntaxError, what + " at position " + std::to_string(i) +
                                       " in '" + std::string(src) + "'");
  };
  auto skip = [&] {
    while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i]))) ++i;
  };
  auto number = [&] {
    skip();
    size_t start = i;
    long v = 0;
    while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
      v = v * 10 + (src[i] - '0');
      if (v > 1000000) fail("label too large");
      ++i;
    }
    if (start == i) fail("expected a black-line label");
    d.blacks.push_back(static_cast<int>(v));
  };
  number();
  while (true) {
    skip();
    if (i == src.size()) break;
    char c = src[i];
    if (c == '/' || c == 'r' || c == 'R')
      d.colors.push_back(Color::Red);
    else if (c == '\\' || c == 'b' || c == 'B')
      d.colors.push_back(Color::Blue);
    else
      fail("expected '/' or '\\'");
    ++i;
    number();
  }
  if (d.colors.empty()) fail("a brane diagram needs at least one colored line");
  if (d.blacks.front() != 0 || d.blacks.back() != 0)
    throw Error(Errc::BoundaryNotZero,
                "first and last labels must be 0 in '" + std::string(src) + "'");
  return d;
}

std::string render(const BraneDiagram& d) {
  std::string s = std::to_string(d.blacks[0]);
  for (int p = 0; p < d.numColored(); ++p) {
    s += d.colors[p] == Color::Red ? '/' : '\\';
    s += std::to_string(d.blacks[p + 1]);
  }
  return s;
}

std::string renderAlias(const BraneDiagram& d) {
  std::string s = std::to_string(d.blacks[0]);
  for (int p = 0; p < d.numColored(); ++p) {
    s += d.colors[p] == Color::Red ? 'r' : 'b';
    s += std::to_string(d.blacks[p + 1]);
  }
  return s;
}

bool admissible(const BraneDiagram& d) {
  for (int p = 0; p + 1 < d.numColored(); ++p) {
    if (d.colors[p] == d.colors[p + 1]) continue;
    if (d.blacks[p + 1] > d.blacks[p] + d.blacks[p + 2] + 1) return false;
  }
  return true;
}

int sdeg(const BraneDiagram& d) {
  int blues = 0, count = 0;
  for (Color c : d.colors) {
    if (c == Color::Blue)
      ++blues;
    else
      count += blues;
  }
  return count;
}

bool isSeparated(const BraneDiagram& d) { return sdeg(d) == 0; }

BraneDiagram hwTransition(const BraneDiagram& d, int pos) {
  if (pos < 0 || pos + 1 >= d.numColored() ||
      d.colors[pos] == d.colors[pos + 1])
    throw Error(Errc::NotAdjacentOppositePair,
                "positions " + std::to_string(pos + 1) + "," +
                    std::to_string(pos + 2) + " of " + render(d));
  BraneDiagram r = d;
  int middle = d.blacks[pos] + d.blacks[pos + 2] + 1 - d.blacks[pos + 1];
  if (middle < 0)
    throw Error(Errc::NegativeLabel,
                "move at position " + std::to_string(pos + 1) + " of " +
                    render(d) + " gives label " + std::to_string(middle));
  r.blacks[pos + 1] = middle;
  std::swap(r.colors[pos], r.colors[pos + 1]);
  return r;
}

int junctionPosition(const BraneDiagram& d, std::string_view blue,
                     std::string_view red) {
  int pb = d.positionOfName(blue);
  int pr = d.positionOfName(red);
  if (d.colors[pb] != Color::Blue || d.colors[pr] != Color::Red ||
      (pb + 1 != pr && pr + 1 != pb))
    throw Error(Errc::IllegalMove, std::string(blue) + " and " +
                                       std::string(red) + " are not adjacent");
  return std::min(pb, pr);
}

Separation separate(const BraneDiagram& d) {
  Separation s{d, {}};
  while (true) {
    int pos = -1;
    for (int p = 0; p + 1 < s.diagram.numColored(); ++p)
      if (s.diagram.colors[p] == Color::Blue &&
          s.diagram.colors[p + 1] == Color::Red) {
        pos = p;
        break;
      }
    if (pos < 0) break;
    s.diagram = hwTransition(s.diagram, pos);
    s.moves.push_back(pos);
  }
  return s;
}

void forEachDiagram(int maxBlacks, int maxLabel,
                    const std::function<void(const BraneDiagram&)>& fn) {
  for (int n = 3; n <= maxBlacks; ++n) {
    int colored = n - 1;
    int inner = n - 2;
    BraneDiagram d;
    d.blacks.assign(n, 0);
    d.colors.assign(colored, Color::Red);
    for (unsigned mask = 0; mask < (1u << colored); ++mask) {
      for (int p = 0; p < colored; ++p)
        d.colors[p] = (mask >> (colored - 1 - p)) & 1 ? Color::Blue : Color::Red;
      std::vector<int> lab(inner, 0);
      while (true) {
        for (int k = 0; k < inner; ++k) d.blacks[k + 1] = lab[k];
        fn(d);
        int k = inner - 1;
        while (k >= 0 && lab[k] == maxLabel) lab[k--] = 0;
        if (k < 0) break;
        ++lab[k];
      }
    }
  }
}

}  // namespace bow
