#pragma once

#include <string>
#include <vector>

#include "bow/algebra.hpp"
#include "bow/tie.hpp"
#include "bow/verify.hpp"

namespace bow {

struct AttractionData {
  BraneDiagram diagram;
  std::vector<int> chamber;
  std::vector<std::string> ids;
  std::vector<TieDiagram> points;
  std::vector<int> order;  // point indices, smallest first
  // R[p][q] = restriction of the closure of Attr(p) to q.
  std::vector<std::vector<Poly>> R;
  std::vector<Character> tangent;
  std::vector<Character> minus;
  int dim = 0;

  size_t size() const { return ids.size(); }
  int index(const std::string& id) const;
  // below[p][q]: q precedes p in the transitive closure of the R-support.
  std::vector<std::vector<bool>> supportOrder() const;
  FactoredClass eulerMinus(int p) const;
  FactoredClass eulerFull(int p) const;
};

// Fills tangent data and runs the structural checks.
void validateAttractionData(AttractionData& data);
AttractionData parseAttractionData(const std::string& jsonText);
AttractionData loadAttractionData(const std::string& path);
std::string attractionDataToJson(const AttractionData& data);

struct RecursionStep {
  int below;
  long coefficient;
};

struct StabClass {
  int point = 0;
  std::vector<long> coeffs;
  std::vector<Poly> restriction;
  std::vector<RecursionStep> steps;
};

std::vector<StabClass> stableEnvelopes(const AttractionData& data);
std::vector<StabClass> stableEnvelopes(const AttractionData& data,
                                       const std::vector<int>& order);
// Throws AxiomFailure on the first violated axiom.
void checkAxioms(const AttractionData& data, const std::vector<StabClass>& stabs);
std::string stabsToJson(const AttractionData& data, const std::vector<StabClass>& stabs);

// Every total order refining the R-support order, each smallest first.
std::vector<std::vector<int>> linearExtensions(const AttractionData& data);

RationalFn virtualPairing(const std::vector<Poly>& u, const std::vector<Poly>& v,
                          const AttractionData& data);

// For each point of data, the index of the same fixed point in opData.
std::vector<int> matchPoints(const AttractionData& data, const AttractionData& opData);

std::vector<std::vector<RationalFn>> gramMatrix(const std::vector<StabClass>& stabs,
                                                const std::vector<StabClass>& opStabs,
                                                const AttractionData& data,
                                                const AttractionData& opData);

CheckResult checkPolynomiality(const std::vector<StabClass>& stabs,
                               const std::vector<StabClass>& opStabs,
                               const AttractionData& data, const AttractionData& opData,
                               const std::vector<std::vector<Poly>>& gammas);
std::vector<std::vector<Poly>> defaultGammas(const AttractionData& data);

CheckResult oppositeOrderCheck(const AttractionData& data, const AttractionData& opData);

}  // namespace bow
