#include "bow/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include "bow/brane.hpp"
#include "bow/butterfly.hpp"
#include "bow/envelope.hpp"
#include "bow/error.hpp"
#include "bow/json_io.hpp"
#include "bow/tangent.hpp"
#include "bow/tie.hpp"
#include "bow/verify.hpp"

namespace bow {

namespace {

using json = nlohmann::ordered_json;

constexpr int kOk = 0, kUsage = 1, kInput = 2, kCheck = 3;

bool isCheckError(Errc c) {
  switch (c) {
    case Errc::NonEffective:
    case Errc::BadWeightForm:
    case Errc::BrokenSymplecticInvolution:
    case Errc::InconsistentDimension:
    case Errc::IntegralityFailure:
    case Errc::AxiomFailure:
      return true;
    default:
      return false;
  }
}

std::string joinWeights(const Character& c) {
  std::string s;
  for (const auto& w : c.weights()) s += (s.empty() ? "" : ", ") + w.toString();
  return s.empty() ? "(none)" : s;
}

struct Options {
  std::string dsl, point, chamber, data, opposite;
  int blue = 1, at = 0;
  bool asJson = false, ascii = false, verify = false, check = false;
};

int cmdParse(const Options& o, std::ostream& out) {
  BraneDiagram d = parseDiagram(o.dsl);
  if (o.asJson) {
    json j = json::parse(diagramToJson(d));
    j["M"] = d.M();
    j["N"] = d.N();
    j["admissible"] = admissible(d);
    j["sdeg"] = sdeg(d);
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "diagram    " << render(d) << "\n";
  out << "alias      " << renderAlias(d) << "\n";
  out << "M          " << d.M() << "\n";
  out << "N          " << d.N() << "\n";
  out << "labels    ";
  for (int b : d.blacks) out << " " << b;
  out << "\n";
  out << "admissible " << (admissible(d) ? "yes" : "no") << "\n";
  out << "sdeg       " << sdeg(d) << "\n";
  return kOk;
}

int cmdFixedPoints(const Options& o, std::ostream& out) {
  BraneDiagram d = parseDiagram(o.dsl);
  auto pts = enumerateTies(d);
  if (o.asJson) {
    json arr = json::array();
    for (size_t k = 0; k < pts.size(); ++k) arr.push_back(json::parse(tieToJson(pts[k], pointId(k))));
    out << arr.dump(2) << "\n";
    return kOk;
  }
  out << pts.size() << " fixed point" << (pts.size() == 1 ? "" : "s") << " of " << render(d) << "\n";
  for (size_t k = 0; k < pts.size(); ++k) {
    out << pointId(k) << " " << pts[k].toString() << "\n";
    if (o.ascii) out << renderTieAscii(pts[k]) << "\n";
  }
  return kOk;
}

TieDiagram pickPoint(const BraneDiagram& d, const std::string& key) {
  auto pts = enumerateTies(d);
  return pts[findPoint(pts, key)];
}

int cmdButterfly(const Options& o, std::ostream& out) {
  BraneDiagram d = parseDiagram(o.dsl);
  TieDiagram t = pickPoint(d, o.point);
  if (o.blue < 1 || o.blue > d.N())
    throw Error(Errc::UnknownVariable, "no blue line U" + std::to_string(o.blue));
  ButterflyData b = butterfly(t, o.blue);
  if (o.asJson) {
    out << butterflyToJson(b) << "\n";
    return kOk;
  }
  out << "butterfly of U" << o.blue << " at " << t.toString() << "\n";
  out << "cover counts  ";
  for (int c : b.coverCounts) out << " " << c;
  out << "\ncolumn bottoms";
  for (int c : b.columnBottoms) out << " " << c;
  out << "\n" << renderButterfly(b, d);
  return kOk;
}

void printReport(const std::string& label, const VerificationReport& r, std::ostream& out) {
  out << label << ":";
  for (const auto& c : r.checks) out << " " << c.name << "=" << checkStatusName(c.status);
  out << "\n";
  for (const auto& c : r.checks)
    if (c.status == CheckStatus::Fail) out << "  " << c.name << ": " << c.detail << "\n";
}

int cmdMatrices(const Options& o, std::ostream& out) {
  BraneDiagram d = parseDiagram(o.dsl);
  TieDiagram t = pickPoint(d, o.point);
  FixedPointData f = assembleFixedPoint(t);
  VerificationReport rep;
  if (o.verify) rep = verifyFixedPoint(f);
  if (o.asJson) {
    json j = json::parse(fixedPointToJson(f));
    if (o.verify) j["verification"] = json::parse(reportToJson(rep));
    out << j.dump(2) << "\n";
  } else {
    out << "fixed point " << t.toString() << "\n";
    for (int x = 0; x < d.numBlacks(); ++x) {
      out << "W_X" << x + 1 << ":";
      for (int k = 0; k < f.dim(x); ++k)
        out << " e(U" << f.bases[x][k].blue << "," << f.bases[x][k].j << ")["
            << f.weight(x, k).toString() << "]";
      out << "\n";
    }
    auto show = [&](const std::string& name, const Matrix& m) {
      out << name << " (" << m.rows() << "x" << m.cols() << ")\n" << m.toString();
    };
    for (int i = 0; i < d.N(); ++i) {
      std::string u = "U" + std::to_string(i + 1);
      show("A_" + u, f.A[i]);
      show("B+_" + u, f.Bplus[i]);
      show("B-_" + u, f.Bminus[i]);
      show("a_" + u, f.a[i]);
      show("b_" + u, f.b[i]);
    }
    for (int j = 0; j < d.M(); ++j) {
      std::string v = "V" + std::to_string(j + 1);
      show("C_" + v, f.C[j]);
      show("D_" + v, f.D[j]);
    }
    if (o.verify) printReport("verification", rep, out);
  }
  return o.verify && !rep.passed() ? kCheck : kOk;
}

int cmdTangent(const Options& o, std::ostream& out) {
  BraneDiagram d = parseDiagram(o.dsl);
  auto pts = enumerateTies(d);
  std::vector<size_t> chosen;
  if (o.point.empty())
    for (size_t k = 0; k < pts.size(); ++k) chosen.push_back(k);
  else
    chosen.push_back(findPoint(pts, o.point));
  std::vector<int> chamber;
  if (!o.chamber.empty()) {
    chamber = parseChamber(o.chamber);
    if (static_cast<int>(chamber.size()) != d.N())
      throw Error(Errc::ChamberMismatch, "chamber needs " + std::to_string(d.N()) + " entries");
  }
  json arr = json::array();
  for (size_t k : chosen) {
    Character tc = tangentCharacter(pts[k]);
    if (o.asJson) {
      json e{{"id", pointId(k)}, {"ties", json::parse(tieToJson(pts[k]))["ties"]},
             {"tangent", json::parse(characterToJson(tc))}};
      if (!chamber.empty()) {
        auto s = chamberSplit(tc, chamber);
        e["plus"] = json::parse(characterToJson(s.plus));
        e["minus"] = json::parse(characterToJson(s.minus));
      }
      arr.push_back(e);
      continue;
    }
    out << pointId(k) << " " << pts[k].toString() << "\n";
    out << "  tangent: " << joinWeights(tc) << "\n";
    if (!chamber.empty()) {
      auto s = chamberSplit(tc, chamber);
      out << "  plus:    " << joinWeights(s.plus) << "\n";
      out << "  minus:   " << joinWeights(s.minus) << "\n";
      out << "  e(T-):   " << eulerClass(s.minus).toString() << "\n";
    }
  }
  if (o.asJson) out << arr.dump(2) << "\n";
  return kOk;
}

int cmdHw(const Options& o, std::ostream& out) {
  BraneDiagram d = parseDiagram(o.dsl);
  int pos = o.at - 1;
  BraneDiagram nd = hwTransition(d, pos);
  if (o.asJson) {
    json j{{"from", render(d)}, {"to", render(nd)}, {"matching", json::array()}};
    auto pts = enumerateTies(d);
    auto npts = enumerateTies(nd);
    for (size_t k = 0; k < pts.size(); ++k) {
      TieDiagram m = hwMatch(pts[k], pos);
      j["matching"].push_back({{"from", pointId(k)}, {"to", pointId(findPoint(npts, m.toString()))}});
    }
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << render(nd) << "\n";
  if (!o.point.empty()) {
    TieDiagram t = pickPoint(d, o.point);
    out << t.toString() << " -> " << hwMatch(t, pos).toString() << "\n";
  }
  return kOk;
}

int cmdSeparate(const Options& o, std::ostream& out) {
  BraneDiagram d = parseDiagram(o.dsl);
  if (!admissible(d)) throw Error(Errc::NegativeLabel, render(d) + " is not admissible");
  Separation s = separate(d);
  if (o.asJson) {
    std::vector<int> moves;
    for (int m : s.moves) moves.push_back(m + 1);
    out << json{{"diagram", render(s.diagram)}, {"moves", moves}}.dump(2) << "\n";
    return kOk;
  }
  out << render(s.diagram) << "\n";
  out << s.moves.size() << " move" << (s.moves.size() == 1 ? "" : "s");
  if (!s.moves.empty()) {
    out << " at";
    for (int m : s.moves) out << " " << m + 1;
  }
  out << "\n";
  return kOk;
}

int cmdStab(const Options& o, std::ostream& out) {
  AttractionData data = loadAttractionData(o.data);
  auto stabs = stableEnvelopes(data);
  bool failed = false;
  std::vector<std::string> notes;
  if (o.check) {
    for (const auto& ord : linearExtensions(data)) {
      auto other = stableEnvelopes(data, ord);
      for (size_t p = 0; p < data.size(); ++p)
        if (other[p].coeffs != stabs[p].coeffs || other[p].restriction != stabs[p].restriction) {
          failed = true;
          notes.push_back("coefficients of " + data.ids[p] + " depend on the order");
        }
    }
  }
  if (o.asJson) {
    json j = json::parse(stabsToJson(data, stabs));
    json report = json::array();
    report.push_back({{"check", "axioms"}, {"status", "pass"}, {"detail", ""}});
    report.push_back({{"check", "integrality"}, {"status", "pass"}, {"detail", ""}});
    if (o.check) {
      std::string detail;
      for (const auto& n : notes) detail += (detail.empty() ? "" : "; ") + n;
      report.push_back({{"check", "order-independence"},
                        {"status", failed ? "fail" : "pass"},
                        {"detail", detail}});
    }
    j["report"] = report;
    j["passed"] = !failed;
    out << j.dump(2) << "\n";
  } else {
    for (int p : data.order) {
      const StabClass& s = stabs[p];
      out << "Stab(" << data.ids[p] << ") =";
      bool first = true;
      for (auto it = data.order.rbegin(); it != data.order.rend(); ++it) {
        long c = s.coeffs[*it];
        if (c == 0) continue;
        out << (c < 0 ? (first ? " -" : " - ") : (first ? " " : " + "));
        if (std::abs(c) != 1) out << std::abs(c) << "*";
        out << "[L_" << data.ids[*it] << "]";
        first = false;
      }
      out << "\n";
      for (int q : data.order)
        if (!s.restriction[q].isZero())
          out << "  at " << data.ids[q] << ": " << s.restriction[q].toString() << "\n";
    }
    if (o.check) {
      out << "axioms: pass\n";
      out << "order independence: " << (failed ? "FAIL" : "pass") << " ("
          << linearExtensions(data).size() << " refinements)\n";
      for (const auto& n : notes) out << "  " << n << "\n";
    }
  }
  return failed ? kCheck : kOk;
}

int cmdPair(const Options& o, std::ostream& out) {
  AttractionData data = loadAttractionData(o.data);
  AttractionData op = loadAttractionData(o.opposite);
  auto stabs = stableEnvelopes(data);
  auto opStabs = stableEnvelopes(op);
  auto g = gramMatrix(stabs, opStabs, data, op);
  bool identity = true;
  for (size_t p = 0; p < g.size(); ++p)
    for (size_t q = 0; q < g.size(); ++q)
      if (g[p][q] != RationalFn(Poly::constant(p == q ? 1 : 0))) identity = false;
  CheckResult poly = checkPolynomiality(stabs, opStabs, data, op, defaultGammas(data));
  CheckResult ord = oppositeOrderCheck(data, op);
  if (o.asJson) {
    json m = json::array();
    for (const auto& row : g) {
      json r = json::array();
      for (const auto& e : row) r.push_back(e.toString());
      m.push_back(r);
    }
    json ids = data.ids;
    out << json{{"points", ids},
                {"gram", m},
                {"identity", identity},
                {"polynomiality", {{"status", checkStatusName(poly.status)}, {"detail", poly.detail}}},
                {"oppositeOrder", {{"status", checkStatusName(ord.status)}, {"detail", ord.detail}}}}
               .dump(2)
        << "\n";
  } else {
    auto joined = [](const std::vector<int>& c) {
      std::string r;
      for (size_t i = 0; i < c.size(); ++i) r += (i ? "," : "") + std::to_string(c[i]);
      return r;
    };
    out << render(data.diagram) << ": rows chamber " << joined(data.chamber)
        << ", columns chamber " << joined(op.chamber) << "\n";
    for (size_t p = 0; p < g.size(); ++p) {
      out << "  " << data.ids[p] << ":";
      for (const auto& e : g[p]) out << " " << e.toString();
      out << "\n";
    }
    out << "identity: " << (identity ? "pass" : "FAIL") << "\n";
    out << "polynomiality: " << checkStatusName(poly.status) << " (" << poly.detail << ")\n";
    out << "opposite order: " << checkStatusName(ord.status) << " (" << ord.detail << ")\n";
  }
  bool ok = identity && poly.status != CheckStatus::Fail && ord.status != CheckStatus::Fail;
  return ok ? kOk : kCheck;
}

int cmdVerify(const Options& o, std::ostream& out) {
  BraneDiagram d = parseDiagram(o.dsl);
  auto pts = enumerateTies(d);
  bool ok = true;
  json arr = json::array();
  for (size_t k = 0; k < pts.size(); ++k) {
    auto rep = verifyFixedPoint(assembleFixedPoint(pts[k]));
    std::string tstatus = "pass";
    try {
      tangentCharacter(pts[k]);
    } catch (const Error& e) {
      tstatus = e.what();
    }
    ok = ok && rep.passed() && tstatus == "pass";
    if (o.asJson) {
      json e = json::parse(reportToJson(rep));
      e["id"] = pointId(k);
      e["tangent"] = tstatus;
      arr.push_back(e);
    } else {
      printReport(pointId(k) + " " + pts[k].toString(), rep, out);
      if (tstatus != "pass") out << "  tangent: " << tstatus << "\n";
    }
  }
  if (o.asJson)
    out << json{{"diagram", render(d)}, {"passed", ok}, {"points", arr}}.dump(2) << "\n";
  else
    out << pts.size() << " fixed points, " << (ok ? "all checks pass" : "FAILURES") << "\n";
  return ok ? kOk : kCheck;
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fixed points, tangent weights and stable envelopes of type A bow varieties",
               "bowvar"};
  app.require_subcommand(1);
  Options o;
  auto diagramArg = [&](CLI::App* c) {
    c->add_option("diagram", o.dsl, "brane diagram, e.g. 0/1\\\\1/0 or 0r1b1r0")->required();
  };
  auto jsonFlag = [&](CLI::App* c) { c->add_flag("--json", o.asJson, "JSON output"); };

  auto* parse = app.add_subcommand("parse", "summarize a brane diagram");
  diagramArg(parse);
  jsonFlag(parse);

  auto* fixed = app.add_subcommand("fixed-points", "enumerate tie diagrams");
  diagramArg(fixed);
  jsonFlag(fixed);
  fixed->add_flag("--ascii", o.ascii, "draw each tie diagram");

  auto* bfly = app.add_subcommand("butterfly", "butterfly diagram of one blue line");
  diagramArg(bfly);
  jsonFlag(bfly);
  bfly->add_option("--point", o.point, "fixed point id (D1, ...) or tie set")->required();
  bfly->add_option("--blue", o.blue, "blue line index i of U_i")->required();

  auto* mats = app.add_subcommand("matrices", "fixed-point matrices");
  diagramArg(mats);
  jsonFlag(mats);
  mats->add_option("--point", o.point, "fixed point id or tie set")->required();
  mats->add_flag("--verify", o.verify, "run all fixed-point checks");

  auto* tang = app.add_subcommand("tangent", "tangent characters");
  diagramArg(tang);
  jsonFlag(tang);
  tang->add_option("--point", o.point, "fixed point id or tie set");
  tang->add_option("--chamber", o.chamber, "permutation such as 3,2,1");

  auto* hw = app.add_subcommand("hw", "Hanany-Witten transition");
  diagramArg(hw);
  jsonFlag(hw);
  hw->add_option("--at", o.at, "1-based position k; swaps colored lines k and k+1")->required();
  hw->add_option("--point", o.point, "also map this fixed point");

  auto* sep = app.add_subcommand("separate", "move to a separated diagram");
  diagramArg(sep);
  jsonFlag(sep);

  auto* stab = app.add_subcommand("stab", "stable envelopes from attraction data");
  stab->add_option("--data", o.data, "attraction data JSON")->required()->check(CLI::ExistingFile);
  stab->add_flag("--check", o.check, "also test independence of the order refinement");
  jsonFlag(stab);

  auto* pair = app.add_subcommand("pair", "Gram matrix of opposite stable envelopes");
  pair->add_option("--data", o.data, "attraction data JSON")->required()->check(CLI::ExistingFile);
  pair->add_option("--opposite", o.opposite, "attraction data for the opposite chamber")
      ->required()
      ->check(CLI::ExistingFile);
  jsonFlag(pair);

  auto* ver = app.add_subcommand("verify", "verify every fixed point");
  diagramArg(ver);
  jsonFlag(ver);

  std::vector<const char*> argv{"bowvar"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (parse->parsed()) return cmdParse(o, out);
    if (fixed->parsed()) return cmdFixedPoints(o, out);
    if (bfly->parsed()) return cmdButterfly(o, out);
    if (mats->parsed()) return cmdMatrices(o, out);
    if (tang->parsed()) return cmdTangent(o, out);
    if (hw->parsed()) return cmdHw(o, out);
    if (sep->parsed()) return cmdSeparate(o, out);
    if (stab->parsed()) return cmdStab(o, out);
    if (pair->parsed()) return cmdPair(o, out);
    if (ver->parsed()) return cmdVerify(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return isCheckError(e.code()) ? kCheck : kInput;
  }
  return kUsage;
}

}  // namespace bow
