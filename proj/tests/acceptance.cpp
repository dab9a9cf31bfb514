#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bow/butterfly.hpp"
#include "bow/envelope.hpp"
#include "bow/error.hpp"
#include "bow/tangent.hpp"
#include "bow/tie.hpp"
#include "sweep.hpp"

using namespace bow;

namespace {

using Clock = std::chrono::steady_clock;

double secondsSince(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fixture(const std::string& name) {
  return std::string(BOWVAR_FIXTURE_DIR) + "/" + name;
}

Character chars(const std::vector<std::string>& ws) {
  Character c;
  for (const auto& w : ws) c.add(parseWeight(w), 1);
  return c;
}

struct Outcome {
  bool pass;
  std::string detail;
  bool expectedFailure = false;
};

Outcome criterion1() {
  auto t0 = Clock::now();
  auto big = enumerateTies(parseDiagram("0/1\\1/2\\2\\2/0"));
  auto tp = enumerateTies(parseDiagram("0/1\\1\\1/0"));
  auto pt = enumerateTies(parseDiagram("0\\1/0"));
  double s = secondsSince(t0);
  std::vector<std::string> expected = {
      "{(V3,U1),(V2,U2),(U2,V1),(U1,V1)}",
      "{(V3,U1),(V2,U3),(U3,V1),(U1,V1)}",
      "{(V3,U1),(V2,U3),(V2,U2),(U3,V1),(U2,V1),(U1,V2)}",
      "{(V3,U2),(V2,U3),(U3,V1),(U2,V1)}",
      "{(V3,U3),(V2,U2),(U3,V1),(U2,V1)}",
  };
  bool listMatches = big.size() == expected.size();
  for (size_t k = 0; listMatches && k < big.size(); ++k)
    listMatches = big[k].toString() == expected[k];
  bool ok = listMatches && tp.size() == 2 && pt.size() == 1 && s < 1.0;
  std::ostringstream d;
  d << big.size() << "/" << tp.size() << "/" << pt.size() << " tie diagrams, list "
    << (listMatches ? "matches" : "differs") << ", " << s * 1000 << " ms";
  return {ok, d.str()};
}

Outcome criterion2() {
  BraneDiagram d = parseDiagram("0/1/2/3\\3/5\\4/2\\2/0");
  TieDiagram t = makeTieDiagram(
      d, parseTieNames("(V6,U2),(V5,U2),(V4,U1),(V3,U2),(V3,U3),(U1,V2),(U2,V2),"
                       "(U2,V1),(U3,V1)"));
  auto counts = coverCounts(t, 2);
  auto bottoms = columnBottoms(t, 2);
  std::vector<int> mid(bottoms.begin() + 1, bottoms.begin() + 9);
  bool ok = isValid(t).valid && counts == std::vector<int>{0, 1, 2, 2, 2, 3, 2, 1, 1, 0} &&
            mid == std::vector<int>{-1, -1, 0, 0, 0, 0, 1, 1};
  std::ostringstream s;
  s << "d = (";
  for (size_t i = 0; i < counts.size(); ++i) s << (i ? "," : "") << counts[i];
  s << "), c(j=2..9) = (";
  for (size_t i = 0; i < mid.size(); ++i) s << (i ? "," : "") << mid[i];
  s << ")";
  return {ok, s.str()};
}

Outcome criterion3(const sweep::Stats& st, double secs, int maxBlacks) {
  bool ok = st.verifyFailures == 0 && st.points > 0 && secs < 300 && maxBlacks >= 9;
  std::ostringstream s;
  s << st.diagrams << " admissible diagrams (<= " << maxBlacks << " black lines, labels <= 3), "
    << st.nonempty << " nonempty, " << st.points << " fixed points, " << st.verifyFailures
    << " failing; passes:";
  for (const auto& [name, n] : st.passesPerCheck) s << " " << name << "=" << n;
  auto sk = st.skipsPerCheck.find("nilpotency");
  if (sk != st.skipsPerCheck.end()) s << " (nilpotency skipped on " << sk->second << " non-separated)";
  s << "; " << secs << " s";
  return {ok, s.str()};
}

Outcome criterion4(const sweep::Stats& st) {
  BraneDiagram d = parseDiagram("0/1\\1/2\\2\\2/0");
  auto pts = enumerateTies(d);
  std::vector<std::vector<std::string>> reference = {
      {"t3-t1+h", "t3-t2+h", "t1-t3", "t2-t3"},
      {"t2-t1+h", "t2-t3+h", "t1-t2", "t3-t2"},
      {"t2-t1", "t3-t1", "t1-t2+h", "t2-t3+h"},
      {"t2-t1-h", "t1-t2+2h", "t2-t3", "t2-t3+h"},
      {"t3-t1-h", "t1-t3+2h", "t3-t2", "t2-t3+h"},
  };
  std::set<int> mismatched, nonInvolutive;
  bool dimOk = dimension(d) == 4 && pts.size() == 5;
  for (size_t k = 0; k < pts.size() && k < reference.size(); ++k) {
    Character c = tangentCharacter(pts[k]);
    Character p = chars(reference[k]);
    if (c.totalMultiplicity() != 4) dimOk = false;
    if (!(c == p)) mismatched.insert(int(k) + 1);
    if (!(p.dual().shifted(Weight::h()) == p)) nonInvolutive.insert(int(k) + 1);
  }
  bool sweepOk = st.tangentFailures == 0 && st.dimensionMismatches == 0;
  bool ok = mismatched.empty() && dimOk && sweepOk;

  // Two reference rows carry a weight that breaks the w -> h - w
  // pairing the criterion also demands; both differ in that single weight.
  Character w3 = tangentCharacter(pts[2]), w4 = tangentCharacter(pts[3]);
  bool documented =
      mismatched == std::set<int>{3, 4} && nonInvolutive == std::set<int>{3, 4} &&
      w3 - chars(reference[2]) == chars({"t1-t3+h"}) - chars({"t2-t3+h"}) &&
      w4 - chars(reference[3]) == chars({"t3-t2+h"}) - chars({"t2-t3+h"}) && dimOk && sweepOk;

  std::ostringstream s;
  s << "rows W1,W2,W5 exact; ";
  if (mismatched.empty()) {
    s << "all rows exact";
  } else {
    s << "rows";
    for (int k : mismatched) s << " W" << k;
    s << " differ from the reference table (computed W3 has t1-t3+h for t2-t3+h, "
         "W4 has t3-t2+h for t2-t3+h; the reference rows";
    for (int k : nonInvolutive) s << " W" << k;
    s << " violate w -> h-w)";
  }
  s << "; dim 4 at all points: " << (dimOk ? "yes" : "no") << "; sweep: " << st.points
    << " tangent characters, " << st.tangentFailures << " invalid, " << st.dimensionMismatches
    << " dimension mismatches";
  return {ok, s.str(), !ok && documented};
}

Outcome criterion5(const sweep::Stats& st) {
  bool ok = st.hwMoves > 0 && st.hwCountMismatches == 0 && st.hwTangentMismatches == 0;
  std::ostringstream s;
  s << st.hwMoves << " moves, " << st.hwPointsChecked << " matched fixed points, "
    << st.hwCountMismatches << " count/bijection failures, " << st.hwTangentMismatches
    << " tangent mismatches after t_i -> t_i + h";
  return {ok, s.str()};
}

Outcome criterion6() {
  AttractionData d = loadAttractionData(fixture("example_5pt_chamber321.json"));
  std::vector<StabClass> stabs;
  try {
    stabs = stableEnvelopes(d);
    checkAxioms(d, stabs);
  } catch (const Error& e) {
    return {false, std::string("recursion failed: ") + e.what()};
  }
  int d1 = d.index("D1"), d2 = d.index("D2"), d3 = d.index("D3");
  std::vector<long> expect(d.size(), 0);
  expect[d3] = 1;
  expect[d2] = 1;
  bool stab3 = stabs[d3].coeffs == expect &&
               stabs[d3].restriction[d1] == polyParse("h*(t3-t2+h)", 3);
  bool homogeneous = true;
  for (const auto& s : stabs)
    for (const auto& r : s.restriction)
      if (!r.isZero() && !r.isHomogeneous(d.dim / 2)) homogeneous = false;
  auto orders = linearExtensions(d);
  bool independent = true;
  for (const auto& o : orders) {
    auto other = stableEnvelopes(d, o);
    for (size_t p = 0; p < d.size(); ++p)
      if (other[p].coeffs != stabs[p].coeffs) independent = false;
  }
  size_t steps = 0;
  for (const auto& s : stabs) steps += s.steps.size();
  bool ok = stab3 && homogeneous && independent;
  std::ostringstream s;
  s << "Stab(D3) = [L3]+[L2] with restriction at D1 " << stabs[d3].restriction[d1].toString()
    << ": " << (stab3 ? "yes" : "no") << "; Stab-1/2/3 hold for all " << stabs.size()
    << "; " << steps << " integer ratios; " << orders.size()
    << " refinement(s) of the support order, coefficients "
    << (independent ? "identical" : "differ");
  return {ok, s.str()};
}

Outcome criterion7() {
  AttractionData c = loadAttractionData(fixture("tstar_p1_chamber12.json"));
  AttractionData op = loadAttractionData(fixture("tstar_p1_chamber21.json"));
  auto stabs = stableEnvelopes(c);
  auto opStabs = stableEnvelopes(op);
  auto g = gramMatrix(stabs, opStabs, c, op);
  bool identity = g.size() == 2;
  for (size_t p = 0; identity && p < g.size(); ++p)
    for (size_t q = 0; q < g.size(); ++q)
      if (g[p][q] != RationalFn(Poly::constant(p == q ? 1 : 0))) identity = false;
  CheckResult poly = checkPolynomiality(stabs, opStabs, c, op, defaultGammas(c));
  bool ok = identity && poly.status == CheckStatus::Pass;
  std::ostringstream s;
  s << "gram matrix " << (identity ? "is" : "is not") << " the 2x2 identity; polynomiality "
    << checkStatusName(poly.status) << " (" << poly.detail << ")";
  return {ok, s.str()};
}

Outcome criterion8() {
  AttractionData c = loadAttractionData(fixture("tstar_p1_chamber12.json"));
  AttractionData op = loadAttractionData(fixture("tstar_p1_chamber21.json"));
  CheckResult r = oppositeOrderCheck(c, op);
  AttractionData five = loadAttractionData(fixture("example_5pt_chamber321.json"));
  auto below = five.supportOrder();
  bool chain = true;
  for (int p = 0; p < 5; ++p)
    for (int q = 0; q < 5; ++q) {
      int ip = five.index("D" + std::to_string(p + 1));
      int iq = five.index("D" + std::to_string(q + 1));
      if (below[ip][iq] != (q < p)) chain = false;
    }
  bool ok = r.status == CheckStatus::Pass && chain;
  std::ostringstream s;
  s << "opposite orders: " << checkStatusName(r.status) << " (" << r.detail
    << "); five point support order D1 < D2 < D3 < D4 < D5: " << (chain ? "yes" : "no");
  return {ok, s.str()};
}

}  // namespace

int main(int argc, char** argv) {
  int maxBlacks = argc > 1 ? std::atoi(argv[1]) : 9;

  std::vector<Outcome> results;
  results.push_back(criterion1());
  results.push_back(criterion2());
  auto t0 = Clock::now();
  sweep::Stats st = sweep::run(maxBlacks, 3, true);
  double secs = secondsSince(t0);
  results.push_back(criterion3(st, secs, maxBlacks));
  results.push_back(criterion4(st));
  results.push_back(criterion5(st));
  results.push_back(criterion6());
  results.push_back(criterion7());
  results.push_back(criterion8());

  int passed = 0, unexpected = 0;
  for (size_t i = 0; i < results.size(); ++i) {
    const Outcome& o = results[i];
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << o.detail;
    if (o.expectedFailure) std::cout << " [known inconsistency in the reference table]";
    std::cout << "\n";
    if (o.pass)
      ++passed;
    else if (!o.expectedFailure)
      ++unexpected;
  }
  for (const auto& e : st.examples) std::cout << "  sweep: " << e << "\n";
  std::cout << passed << "/" << results.size() << " criteria pass, "
            << results.size() - passed - unexpected << " known discrepancy, " << unexpected
            << " unexpected failure(s)\n";
  return unexpected == 0 ? 0 : 1;
}
