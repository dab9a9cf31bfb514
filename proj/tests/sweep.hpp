#pragma once

#include <map>
#include <string>
#include <vector>

#include "bow/brane.hpp"
#include "bow/butterfly.hpp"
#include "bow/error.hpp"
#include "bow/tangent.hpp"
#include "bow/tie.hpp"
#include "bow/verify.hpp"

namespace sweep {

struct Stats {
  long diagrams = 0;
  long nonempty = 0;
  long points = 0;
  long verifyFailures = 0;
  std::map<std::string, long> passesPerCheck;
  std::map<std::string, long> skipsPerCheck;
  long tangentFailures = 0;
  long dimensionMismatches = 0;
  long hwMoves = 0;
  long hwCountMismatches = 0;
  long hwPointsChecked = 0;
  long hwTangentMismatches = 0;
  std::vector<std::string> examples;

  void note(const std::string& s) {
    if (examples.size() < 10) examples.push_back(s);
  }
};

// The blue line of an adjacent red-blue pair at pos moves by one slot; after
// a move putting the blue line on the left the tangent weights agree with the
// old ones under t_i -> t_i + h, and the opposite move uses t_i -> t_i - h.
inline int hwShift(const bow::BraneDiagram& d, int pos) {
  return d.colors[pos] == bow::Color::Red ? 1 : -1;
}

inline int hwBlueIndex(const bow::BraneDiagram& d, int pos) {
  return d.colors[pos] == bow::Color::Blue ? d.indexAt(pos) : d.indexAt(pos + 1);
}

inline void checkDiagram(const bow::BraneDiagram& d, Stats& s, bool withHw) {
  using namespace bow;
  auto pts = enumerateTies(d);
  if (pts.empty()) return;
  ++s.nonempty;
  std::vector<Character> tangents(pts.size());
  long dim = -1;
  for (size_t k = 0; k < pts.size(); ++k) {
    ++s.points;
    auto rep = verifyFixedPoint(assembleFixedPoint(pts[k]));
    for (const auto& c : rep.checks) {
      if (c.status == CheckStatus::Pass) ++s.passesPerCheck[c.name];
      if (c.status == CheckStatus::Skipped) ++s.skipsPerCheck[c.name];
    }
    if (!rep.passed()) {
      ++s.verifyFailures;
      for (const auto& c : rep.checks)
        if (c.status == CheckStatus::Fail)
          s.note(render(d) + " " + pts[k].toString() + ": " + c.name + ": " + c.detail);
    }
    try {
      tangents[k] = tangentCharacter(pts[k]);
    } catch (const Error& e) {
      ++s.tangentFailures;
      s.note(render(d) + " " + pts[k].toString() + ": " + e.what());
      continue;
    }
    long k2 = tangents[k].totalMultiplicity();
    if (dim >= 0 && k2 != dim) {
      ++s.dimensionMismatches;
      s.note(render(d) + ": dimensions " + std::to_string(dim) + " and " + std::to_string(k2));
    }
    dim = k2;
  }
  if (!withHw) return;
  for (int pos = 0; pos + 1 < d.numColored(); ++pos) {
    if (d.colors[pos] == d.colors[pos + 1]) continue;
    ++s.hwMoves;
    BraneDiagram nd = hwTransition(d, pos);
    auto npts = enumerateTies(nd);
    if (npts.size() != pts.size()) {
      ++s.hwCountMismatches;
      s.note(render(d) + " -> " + render(nd) + ": fixed point counts differ");
      continue;
    }
    int i = hwBlueIndex(d, pos), shift = hwShift(d, pos);
    std::vector<bool> hit(npts.size(), false);
    for (size_t k = 0; k < pts.size(); ++k) {
      ++s.hwPointsChecked;
      TieDiagram m = hwMatch(pts[k], pos);
      size_t idx = npts.size();
      for (size_t l = 0; l < npts.size(); ++l)
        if (npts[l] == m) idx = l;
      if (idx == npts.size() || hit[idx]) {
        ++s.hwCountMismatches;
        s.note(render(d) + ": matching is not a bijection at " + pts[k].toString());
        continue;
      }
      hit[idx] = true;
      Character moved = tangentFormula(npts[idx]);
      if (!(moved == tangents[k].substituteShift(i, shift))) {
        ++s.hwTangentMismatches;
        s.note(render(d) + " -> " + render(nd) + " at " + pts[k].toString() +
               ": tangent weights do not match");
      }
    }
  }
}

inline Stats run(int maxBlacks, int maxLabel, bool withHw) {
  Stats s;
  bow::forEachDiagram(maxBlacks, maxLabel, [&](const bow::BraneDiagram& d) {
    if (!bow::admissible(d)) return;
    ++s.diagrams;
    checkDiagram(d, s, withHw);
  });
  return s;
}

}  // namespace sweep
