#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace bow {

enum class Color { Red, Blue };

// Black lines X_1..X_{M+N+1} are stored 0-based in `blacks`; colored line at
// 0-based position p sits between blacks[p] and blacks[p+1]. Blue lines are
// numbered U_1, U_2, ... from the left, red lines V_1, V_2, ... from the right.
struct BraneDiagram {
  std::vector<int> blacks;
  std::vector<Color> colors;

  int numColored() const { return static_cast<int>(colors.size()); }
  int numBlacks() const { return static_cast<int>(blacks.size()); }
  int M() const;
  int N() const;

  // 1-based index of the line at `pos` within its color.
  int indexAt(int pos) const;
  int positionOfBlue(int i) const;
  int positionOfRed(int j) const;
  std::string nameAt(int pos) const;
  // Accepts "U3" / "V1"; throws SyntaxError for malformed or absent names.
  int positionOfName(std::string_view name) const;

  bool operator==(const BraneDiagram& o) const {
    return blacks == o.blacks && colors == o.colors;
  }
};

// Canonical DSL "0/1\1/0"; the alias "0r1b1r0" is accepted as well.
BraneDiagram parseDiagram(std::string_view src);
std::string render(const BraneDiagram& d);
std::string renderAlias(const BraneDiagram& d);

bool admissible(const BraneDiagram& d);
int sdeg(const BraneDiagram& d);
bool isSeparated(const BraneDiagram& d);

// Hanany-Witten move exchanging the colored lines at 0-based positions pos and
// pos+1.
BraneDiagram hwTransition(const BraneDiagram& d, int pos);
// Position of the junction between the named blue and red lines.
int junctionPosition(const BraneDiagram& d, std::string_view blue,
                     std::string_view red);

struct Separation {
  BraneDiagram diagram;
  std::vector<int> moves;
};
Separation separate(const BraneDiagram& d);

// Every diagram with 3..maxBlacks black lines, inner labels in [0, maxLabel]
// and zero boundary labels, in a fixed deterministic order.
void forEachDiagram(int maxBlacks, int maxLabel,
                    const std::function<void(const BraneDiagram&)>& fn);

}  // namespace bow
