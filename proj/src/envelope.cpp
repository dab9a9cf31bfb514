#include "bow/envelope.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "bow/error.hpp"
#include "bow/tangent.hpp"

namespace bow {

using json = nlohmann::ordered_json;

int AttractionData::index(const std::string& id) const {
  for (size_t k = 0; k < ids.size(); ++k)
    if (ids[k] == id) return static_cast<int>(k);
  throw Error(Errc::UnknownPoint, id);
}

std::vector<std::vector<bool>> AttractionData::supportOrder() const {
  size_t n = size();
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
  for (size_t p = 0; p < n; ++p)
    for (size_t q = 0; q < n; ++q)
      if (p != q && !R[p][q].isZero()) below[p][q] = true;
  for (size_t k = 0; k < n; ++k)
    for (size_t p = 0; p < n; ++p)
      if (below[p][k])
        for (size_t q = 0; q < n; ++q)
          if (below[k][q]) below[p][q] = true;
  return below;
}

FactoredClass AttractionData::eulerMinus(int p) const { return eulerClass(minus[p]); }
FactoredClass AttractionData::eulerFull(int p) const { return eulerClass(tangent[p]); }

void validateAttractionData(AttractionData& data) {
  size_t n = data.size();
  data.tangent.clear();
  data.minus.clear();
  for (size_t p = 0; p < n; ++p) {
    data.tangent.push_back(tangentCharacter(data.points[p]));
    data.minus.push_back(chamberSplit(data.tangent.back(), data.chamber).minus);
    int k = static_cast<int>(data.tangent.back().totalMultiplicity());
    if (p == 0) data.dim = k;
    else if (k != data.dim)
      throw Error(Errc::InconsistentDimension, data.ids[p] + " has dimension " + std::to_string(k));
  }
  std::vector<int> pos(n, -1);
  for (size_t k = 0; k < data.order.size(); ++k) pos[data.order[k]] = static_cast<int>(k);
  for (size_t p = 0; p < n; ++p) {
    Poly e = data.eulerMinus(p).expand();
    if (data.R[p][p] != e)
      throw Error(Errc::DiagonalMismatch, "restriction of " + data.ids[p] + " to itself is " +
                                              data.R[p][p].toString() + ", expected " +
                                              e.toString());
    for (size_t q = 0; q < n; ++q) {
      const Poly& r = data.R[p][q];
      if (r.isZero()) continue;
      if (pos[q] > pos[p])
        throw Error(Errc::TriangularityViolation,
                    data.ids[p] + " restricts nontrivially to the later point " + data.ids[q]);
      if (data.dim % 2 || !r.isHomogeneous(data.dim / 2))
        throw Error(Errc::HomogeneityViolation,
                    "restriction of " + data.ids[p] + " to " + data.ids[q] +
                        " is not homogeneous of degree " + std::to_string(data.dim / 2));
    }
  }
}

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(Errc::SchemaError, what); }

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) schema(std::string("missing field '") + name + "'");
  return j.at(name);
}

}  // namespace

AttractionData parseAttractionData(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    schema(e.what());
  }
  AttractionData data;
  try {
    const json& dj = field(j, "diagram");
    if (!dj.is_string()) schema("'diagram' must be a string");
    data.diagram = parseDiagram(dj.get<std::string>());
    const json& cj = field(j, "chamber");
    if (!cj.is_array()) schema("'chamber' must be an array");
    std::string cs;
    for (const auto& c : cj) {
      if (!c.is_number_integer()) schema("chamber entries must be integers");
      cs += (cs.empty() ? "" : ",") + std::to_string(c.get<int>());
    }
    data.chamber = parseChamber(cs);
    if (static_cast<int>(data.chamber.size()) != data.diagram.N())
      schema("chamber length differs from the number of blue lines");

    auto fixed = enumerateTies(data.diagram);
    const json& pj = field(j, "points");
    if (!pj.is_array()) schema("'points' must be an array");
    for (const auto& pt : pj) {
      const json& id = field(pt, "id");
      const json& ties = field(pt, "ties");
      if (!id.is_string() || !ties.is_array()) schema("bad point entry");
      std::vector<NamePair> names;
      for (const auto& t : ties) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_string() || !t[1].is_string())
          schema("ties must be pairs of line names");
        names.emplace_back(t[0].get<std::string>(), t[1].get<std::string>());
      }
      TieDiagram td = makeTieDiagram(data.diagram, names);
      auto v = isValid(td);
      if (!v.valid) schema("point " + id.get<std::string>() + ": " + v.violations[0]);
      for (size_t k = 0; k < data.points.size(); ++k)
        if (data.points[k] == td || data.ids[k] == id.get<std::string>())
          schema("point " + id.get<std::string>() + " listed twice");
      data.ids.push_back(id.get<std::string>());
      data.points.push_back(td);
    }
    if (data.points.size() != fixed.size())
      schema("expected " + std::to_string(fixed.size()) + " fixed points, found " +
             std::to_string(data.points.size()));

    size_t n = data.size();
    const json& oj = field(j, "order");
    if (!oj.is_array() || oj.size() != n) schema("'order' must list every point once");
    std::vector<bool> seen(n, false);
    for (const auto& o : oj) {
      if (!o.is_string()) schema("order entries must be point ids");
      int k = data.index(o.get<std::string>());
      if (seen[k]) schema("order lists " + o.get<std::string>() + " twice");
      seen[k] = true;
      data.order.push_back(k);
    }

    data.R.assign(n, std::vector<Poly>(n));
    const json& rj = field(j, "restrictions");
    if (!rj.is_object()) schema("'restrictions' must be an object");
    for (const auto& [pid, row] : rj.items()) {
      int p = data.index(pid);
      if (!row.is_object()) schema("restrictions of " + pid + " must be an object");
      for (const auto& [qid, expr] : row.items()) {
        int q = data.index(qid);
        if (!expr.is_string()) schema("restriction entries must be strings");
        data.R[p][q] = polyParse(expr.get<std::string>(), data.diagram.N());
      }
    }
  } catch (const json::exception& e) {
    schema(e.what());
  }
  validateAttractionData(data);
  return data;
}

AttractionData loadAttractionData(const std::string& path) {
  std::ifstream in(path);
  if (!in) schema("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parseAttractionData(ss.str());
}

std::string attractionDataToJson(const AttractionData& data) {
  json j;
  j["diagram"] = render(data.diagram);
  j["chamber"] = data.chamber;
  j["points"] = json::array();
  for (size_t p = 0; p < data.size(); ++p) {
    json ties = json::array();
    for (const auto& [a, b] : data.points[p].names()) ties.push_back({a, b});
    j["points"].push_back({{"id", data.ids[p]}, {"ties", ties}});
  }
  j["order"] = json::array();
  for (int k : data.order) j["order"].push_back(data.ids[k]);
  json r = json::object();
  for (size_t p = 0; p < data.size(); ++p) {
    json row = json::object();
    for (size_t q = 0; q < data.size(); ++q)
      if (!data.R[p][q].isZero()) row[data.ids[q]] = data.R[p][q].toString();
    r[data.ids[p]] = row;
  }
  j["restrictions"] = r;
  return j.dump(2);
}

std::vector<StabClass> stableEnvelopes(const AttractionData& data) {
  return stableEnvelopes(data, data.order);
}

std::vector<StabClass> stableEnvelopes(const AttractionData& data,
                                       const std::vector<int>& order) {
  size_t n = data.size();
  std::vector<StabClass> out(n);
  for (size_t i = 0; i < order.size(); ++i) {
    int p = order[i];
    StabClass s;
    s.point = p;
    s.coeffs.assign(n, 0);
    s.coeffs[p] = 1;
    s.restriction = data.R[p];
    for (size_t j = i; j-- > 0;) {
      int q = order[j];
      long a;
      try {
        a = integerRatioModH(s.restriction[q], data.eulerMinus(q));
      } catch (const Error& e) {
        throw Error(Errc::IntegralityFailure, "at " + data.ids[p] + " below " + data.ids[q] +
                                                  ": " + e.what());
      }
      s.steps.push_back({q, a});
      if (a == 0) continue;
      s.coeffs[q] -= a;
      for (size_t r = 0; r < n; ++r)
        if (!data.R[q][r].isZero()) s.restriction[r] -= data.R[q][r] * Rational(a);
    }
    out[p] = std::move(s);
  }
  checkAxioms(data, out);
  return out;
}

void checkAxioms(const AttractionData& data, const std::vector<StabClass>& stabs) {
  auto below = data.supportOrder();
  for (const auto& s : stabs) {
    int p = s.point;
    const std::string& id = data.ids[p];
    if (s.restriction[p] != data.eulerMinus(p).expand())
      throw Error(Errc::AxiomFailure, "normalization fails for " + id);
    for (size_t q = 0; q < data.size(); ++q) {
      if (static_cast<int>(q) == p) continue;
      bool allowed = below[p][q];
      if (!allowed && (s.coeffs[q] != 0 || !s.restriction[q].isZero()))
        throw Error(Errc::AxiomFailure, "support fails for " + id + " at " + data.ids[q]);
      if (!modH(s.restriction[q]).isZero())
        throw Error(Errc::AxiomFailure,
                    "restriction of Stab(" + id + ") to " + data.ids[q] + " is not divisible by h");
    }
    for (const auto& r : s.restriction)
      if (!r.isZero() && !r.isHomogeneous(data.dim / 2))
        throw Error(Errc::AxiomFailure, "inhomogeneous restriction of Stab(" + id + ")");
  }
}

std::string stabsToJson(const AttractionData& data, const std::vector<StabClass>& stabs) {
  json j;
  j["diagram"] = render(data.diagram);
  j["chamber"] = data.chamber;
  json pts = json::object();
  for (int p : data.order) {
    const StabClass& s = stabs[p];
    json coeffs = json::object(), res = json::object();
    for (int q : data.order) {
      if (s.coeffs[q] != 0) coeffs[data.ids[q]] = s.coeffs[q];
      if (!s.restriction[q].isZero()) res[data.ids[q]] = s.restriction[q].toString();
    }
    pts[data.ids[p]] = {{"coeffs", coeffs}, {"restrictions", res}};
  }
  j["stabs"] = pts;
  return j.dump(2);
}

std::vector<std::vector<int>> linearExtensions(const AttractionData& data) {
  auto below = data.supportOrder();
  size_t n = data.size();
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::vector<bool> used(n, false);
  std::function<void()> rec = [&]() {
    if (cur.size() == n) {
      out.push_back(cur);
      return;
    }
    for (size_t p = 0; p < n; ++p) {
      if (used[p]) continue;
      bool ready = true;
      for (size_t q = 0; q < n; ++q)
        if (below[p][q] && !used[q]) ready = false;
      if (!ready) continue;
      used[p] = true;
      cur.push_back(static_cast<int>(p));
      rec();
      cur.pop_back();
      used[p] = false;
    }
  };
  rec();
  return out;
}

RationalFn virtualPairing(const std::vector<Poly>& u, const std::vector<Poly>& v,
                          const AttractionData& data) {
  RationalFn sum;
  for (size_t p = 0; p < data.size(); ++p) {
    Poly num = u[p] * v[p];
    if (num.isZero()) continue;
    sum = sum + RationalFn(num, data.eulerFull(p));
  }
  return sum;
}

std::vector<int> matchPoints(const AttractionData& data, const AttractionData& opData) {
  if (!(data.diagram == opData.diagram))
    throw Error(Errc::ChamberMismatch, "the two data sets describe different diagrams");
  if (opData.chamber != reversedChamber(data.chamber))
    throw Error(Errc::ChamberMismatch, "chambers are not opposite");
  if (data.size() != opData.size())
    throw Error(Errc::ChamberMismatch, "point sets differ");
  std::vector<int> m(data.size(), -1);
  for (size_t p = 0; p < data.size(); ++p) {
    for (size_t q = 0; q < opData.size(); ++q)
      if (data.points[p] == opData.points[q]) m[p] = static_cast<int>(q);
    if (m[p] < 0) throw Error(Errc::ChamberMismatch, data.ids[p] + " missing from opposite data");
  }
  return m;
}

namespace {

std::vector<Poly> pullBack(const std::vector<Poly>& opVec, const std::vector<int>& match) {
  std::vector<Poly> v(match.size());
  for (size_t p = 0; p < match.size(); ++p) v[p] = opVec[match[p]];
  return v;
}

}  // namespace

std::vector<std::vector<RationalFn>> gramMatrix(const std::vector<StabClass>& stabs,
                                                const std::vector<StabClass>& opStabs,
                                                const AttractionData& data,
                                                const AttractionData& opData) {
  auto match = matchPoints(data, opData);
  size_t n = data.size();
  std::vector<std::vector<RationalFn>> g(n, std::vector<RationalFn>(n));
  for (size_t p = 0; p < n; ++p)
    for (size_t q = 0; q < n; ++q)
      g[p][q] = virtualPairing(stabs[p].restriction,
                               pullBack(opStabs[match[q]].restriction, match), data);
  return g;
}

std::vector<std::vector<Poly>> defaultGammas(const AttractionData& data) {
  std::vector<std::vector<Poly>> g;
  g.push_back(std::vector<Poly>(data.size(), Poly::constant(1)));
  for (size_t p = 0; p < data.size(); ++p) g.push_back(data.R[p]);
  return g;
}

CheckResult checkPolynomiality(const std::vector<StabClass>& stabs,
                               const std::vector<StabClass>& opStabs,
                               const AttractionData& data, const AttractionData& opData,
                               const std::vector<std::vector<Poly>>& gammas) {
  CheckResult r{"polynomiality", CheckStatus::Pass, ""};
  auto match = matchPoints(data, opData);
  size_t n = data.size(), tested = 0, bad = 0;
  for (size_t g = 0; g < gammas.size(); ++g)
    for (size_t p = 0; p < n; ++p) {
      std::vector<Poly> u(n);
      for (size_t k = 0; k < n; ++k) u[k] = stabs[p].restriction[k] * gammas[g][k];
      for (size_t q = 0; q < n; ++q) {
        ++tested;
        auto v = pullBack(opStabs[match[q]].restriction, match);
        if (!virtualPairing(u, v, data).isPolynomial()) {
          if (!bad) r.detail = "first failure: gamma " + std::to_string(g) + ", " +
                               data.ids[p] + ", " + data.ids[q] + "; ";
          ++bad;
        }
      }
    }
  if (bad) r.status = CheckStatus::Fail;
  r.detail += std::to_string(tested - bad) + "/" + std::to_string(tested) + " pairings polynomial";
  return r;
}

CheckResult oppositeOrderCheck(const AttractionData& data, const AttractionData& opData) {
  CheckResult r{"opposite-order", CheckStatus::Pass, ""};
  auto match = matchPoints(data, opData);
  auto a = data.supportOrder();
  auto b = opData.supportOrder();
  for (size_t p = 0; p < data.size(); ++p)
    for (size_t q = 0; q < data.size(); ++q)
      if (a[p][q] != b[match[q]][match[p]]) {
        r.status = CheckStatus::Fail;
        r.detail += (r.detail.empty() ? "" : "; ") + data.ids[q] + " below " + data.ids[p] +
                    (a[p][q] ? " only in the first chamber" : " only in the opposite chamber");
      }
  if (r.status == CheckStatus::Pass) r.detail = "support orders are exact reverses";
  return r;
}

}  // namespace bow
