#pragma once

#include <string>
#include <vector>

#include "bow/algebra.hpp"
#include "bow/tie.hpp"

namespace bow {

// Reduction formula without validation; may be non-effective on bad input.
Character tangentFormula(const TieDiagram& t);

// Validated tangent character: effective, every weight of the form
// t_i - t_j + m h with i != j, and stable under w -> h - w.
Character tangentCharacter(const TieDiagram& t);

int dimension(const BraneDiagram& d);

struct ChamberSplit {
  std::vector<int> chamber;
  Character plus;
  Character minus;
};

// chamber lists pi(1), ..., pi(N): t_{pi(1)} > ... > t_{pi(N)}.
ChamberSplit chamberSplit(const Character& tc, const std::vector<int>& chamber);
std::vector<int> parseChamber(const std::string& src);
std::vector<int> reversedChamber(const std::vector<int>& chamber);

FactoredClass eulerClass(const Character& c);

}  // namespace bow
