#include "bow/json_io.hpp"

#include <json.hpp>

#include "bow/error.hpp"

namespace bow {

using json = nlohmann::ordered_json;

namespace {

json parseOrThrow(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::SchemaError, e.what());
  }
}

json diagramJ(const BraneDiagram& d) {
  json c = json::array();
  for (auto col : d.colors) c.push_back(col == Color::Red ? "r" : "b");
  return {{"blacks", d.blacks}, {"colors", c}};
}

json characterJ(const Character& c) {
  json arr = json::array();
  for (const auto& [w, k] : c.terms()) {
    std::vector<int> a(w.tpart().begin(), w.tpart().end());
    arr.push_back({{"a", a}, {"m", w.hcoeff()}, {"mult", k}});
  }
  return arr;
}

json matrixJ(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

json butterflyJ(const ButterflyData& b) {
  json verts = json::array();
  for (const auto& v : b.vertices) verts.push_back({v.x - b.position, v.j});
  json arrows = json::array();
  for (const auto& a : b.arrows) {
    auto end = [&](const Vertex& v, bool ext) -> json {
      if (ext) return "*";
      return json::array({v.x - b.position, v.j});
    };
    arrows.push_back({{"color", arrowColorName(a.color)},
                      {"source", end(a.source, a.sourceExternal)},
                      {"target", end(a.target, a.targetExternal)}});
  }
  return {{"blue", "U" + std::to_string(b.blue)},
          {"coverCounts", b.coverCounts},
          {"columnBottoms", b.columnBottoms},
          {"vertices", verts},
          {"arrows", arrows}};
}

}  // namespace

std::string diagramToJson(const BraneDiagram& d) { return diagramJ(d).dump(); }

BraneDiagram diagramFromJson(const std::string& text) {
  json j = parseOrThrow(text);
  try {
    std::string dsl = std::to_string(j.at("blacks").at(0).get<int>());
    const json& cols = j.at("colors");
    if (cols.size() + 1 != j.at("blacks").size())
      throw Error(Errc::SchemaError, "expected one more black label than colors");
    for (size_t k = 0; k < cols.size(); ++k) {
      std::string c = cols[k].get<std::string>();
      if (c != "r" && c != "b") throw Error(Errc::SchemaError, "color must be \"r\" or \"b\"");
      dsl += (c == "r" ? "/" : "\\") + std::to_string(j["blacks"][k + 1].get<int>());
    }
    return parseDiagram(dsl);
  } catch (const json::exception& e) {
    throw Error(Errc::SchemaError, e.what());
  }
}

std::string tieToJson(const TieDiagram& t, const std::string& id) {
  json j;
  if (!id.empty()) j["id"] = id;
  j["diagram"] = render(t.base);
  json ties = json::array();
  for (const auto& [a, b] : t.names()) ties.push_back({a, b});
  j["ties"] = ties;
  return j.dump();
}

TieDiagram tieFromJson(const std::string& text) {
  json j = parseOrThrow(text);
  try {
    BraneDiagram d = parseDiagram(j.at("diagram").get<std::string>());
    std::vector<NamePair> pairs;
    for (const auto& p : j.at("ties"))
      pairs.emplace_back(p.at(0).get<std::string>(), p.at(1).get<std::string>());
    TieDiagram t = makeTieDiagram(d, pairs);
    auto v = isValid(t);
    if (!v.valid) throw Error(Errc::InvalidTie, v.violations[0]);
    return t;
  } catch (const json::exception& e) {
    throw Error(Errc::SchemaError, e.what());
  }
}

std::string characterToJson(const Character& c) { return characterJ(c).dump(); }

Character characterFromJson(const std::string& text) {
  json j = parseOrThrow(text);
  Character c;
  try {
    for (const auto& e : j) {
      IntVec a;
      for (const auto& x : e.at("a")) a.push_back(x.get<int>());
      c.add(Weight(a, e.at("m").get<int>()), e.at("mult").get<long>());
    }
  } catch (const json::exception& e) {
    throw Error(Errc::SchemaError, e.what());
  }
  return c;
}

std::string butterflyToJson(const ButterflyData& b) { return butterflyJ(b).dump(2); }

std::string fixedPointToJson(const FixedPointData& f) {
  const BraneDiagram& d = f.tie.base;
  json j;
  j["diagram"] = render(d);
  json ties = json::array();
  for (const auto& [a, b] : f.tie.names()) ties.push_back({a, b});
  j["ties"] = ties;
  json bases = json::array();
  for (int x = 0; x < d.numBlacks(); ++x) {
    json col = json::array();
    for (int k = 0; k < f.dim(x); ++k)
      col.push_back({{"blue", "U" + std::to_string(f.bases[x][k].blue)},
                     {"j", f.bases[x][k].j},
                     {"weight", f.weight(x, k).toString()}});
    bases.push_back(col);
  }
  j["bases"] = bases;
  json blues = json::object();
  for (int i = 0; i < d.N(); ++i)
    blues["U" + std::to_string(i + 1)] = {{"A", matrixJ(f.A[i])},
                                          {"B+", matrixJ(f.Bplus[i])},
                                          {"B-", matrixJ(f.Bminus[i])},
                                          {"a", matrixJ(f.a[i])},
                                          {"b", matrixJ(f.b[i])}};
  j["blue"] = blues;
  json reds = json::object();
  for (int k = 0; k < d.M(); ++k)
    reds["V" + std::to_string(k + 1)] = {{"C", matrixJ(f.C[k])}, {"D", matrixJ(f.D[k])}};
  j["red"] = reds;
  return j.dump(2);
}

std::string reportToJson(const VerificationReport& r) {
  json arr = json::array();
  for (const auto& c : r.checks)
    arr.push_back({{"check", c.name}, {"status", checkStatusName(c.status)}, {"detail", c.detail}});
  return json{{"passed", r.passed()}, {"checks", arr}}.dump(2);
}

}  // namespace bow
