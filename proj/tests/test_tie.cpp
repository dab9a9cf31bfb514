#include <doctest.h>

#include <set>

#include "bow/butterfly.hpp"
#include "bow/error.hpp"
#include "bow/tie.hpp"

using namespace bow;

TEST_CASE("the five point example has exactly five tie diagrams") {
  BraneDiagram d = parseDiagram("0/1\\1/2\\2\\2/0");
  auto pts = enumerateTies(d);
  REQUIRE(pts.size() == 5);
  CHECK(pts[0].toString() == "{(V3,U1),(V2,U2),(U2,V1),(U1,V1)}");
  CHECK(pts[1].toString() == "{(V3,U1),(V2,U3),(U3,V1),(U1,V1)}");
  CHECK(pts[2].toString() == "{(V3,U1),(V2,U3),(V2,U2),(U3,V1),(U2,V1),(U1,V2)}");
  CHECK(pts[3].toString() == "{(V3,U2),(V2,U3),(U3,V1),(U2,V1)}");
  CHECK(pts[4].toString() == "{(V3,U3),(V2,U2),(U3,V1),(U2,V1)}");
  for (const auto& t : pts) CHECK(isValid(t).valid);
  for (size_t k = 0; k + 1 < pts.size(); ++k) CHECK(canonicalLess(pts[k], pts[k + 1]));
  CHECK(countTies(d) == 5);
}

TEST_CASE("small enumerations") {
  auto tp = enumerateTies(parseDiagram("0/1\\1\\1/0"));
  REQUIRE(tp.size() == 2);
  CHECK(tp[0].toString() == "{(V2,U1),(U1,V1)}");
  CHECK(tp[1].toString() == "{(V2,U2),(U2,V1)}");

  auto pt = enumerateTies(parseDiagram("0\\1/0"));
  REQUIRE(pt.size() == 1);
  CHECK(pt[0].toString() == "{(U1,V1)}");
  CHECK(enumerateTies(parseDiagram("0/2\\0")).empty());
}

TEST_CASE("validity") {
  BraneDiagram d = parseDiagram("0\\1/0");
  CHECK(isValid(makeTieDiagram(d, {{"U1", "V1"}})).valid);

  BraneDiagram big = parseDiagram("0/1\\1/2\\2\\2/0");
  TieDiagram t = makeTieDiagram(big, parseTieNames("{(V3,U1),(V2,U2),(U2,V1),(U1,V1)}"));
  CHECK(isValid(t).valid);
  t.ties.pop_back();
  TieValidity v = isValid(t);
  CHECK_FALSE(v.valid);
  REQUIRE_FALSE(v.violations.empty());
  CHECK(v.violations[0].find("X") != std::string::npos);

  try {
    makeTieDiagram(big, {{"U1", "U2"}});
    FAIL("expected InvalidTie");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InvalidTie);
  }
  CHECK_THROWS_AS(makeTieDiagram(big, {{"U1", "V4"}}), Error);
}

TEST_CASE("tie names round trip and order-insensitivity") {
  BraneDiagram big = parseDiagram("0/1\\1/2\\2\\2/0");
  auto pts = enumerateTies(big);
  for (const auto& t : pts) {
    TieDiagram back = makeTieDiagram(big, parseTieNames(t.toString()));
    back.sortCanonical();
    CHECK(back == t);
  }
  TieDiagram shuffled =
      makeTieDiagram(big, parseTieNames("(U1,V1),(U2,V1),(V2,U2),(V3,U1)"));
  shuffled.sortCanonical();
  CHECK(shuffled == pts[0]);
  CHECK(findPoint(pts, "D3") == 2);
  CHECK(findPoint(pts, "{(V3,U2),(V2,U3),(U3,V1),(U2,V1)}") == 3);
  CHECK(findPoint(pts, "(U2,V1),(U3,V1),(V2,U3),(V3,U2)") == 3);
  try {
    findPoint(pts, "D9");
    FAIL("expected UnknownPoint");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnknownPoint);
  }
  CHECK(pointId(0) == "D1");
}

TEST_CASE("fixed point matching along a move") {
  BraneDiagram d = parseDiagram("0/1\\1\\1/0");
  auto pts = enumerateTies(d);
  TieDiagram m = hwMatch(pts[1], 2);
  CHECK(render(m.base) == "0/1\\1/1\\0");
  CHECK(m.toString() == "{(V2,U2)}");
  CHECK(isValid(m).valid);
  CHECK(hwMatch(m, 2) == pts[1]);
  CHECK_THROWS_AS(hwMatch(pts[0], 1), Error);
}

TEST_CASE("property: matching is a bijection and an involution") {
  forEachDiagram(7, 3, [&](const BraneDiagram& d) {
    if (!admissible(d)) return;
    auto pts = enumerateTies(d);
    for (int pos = 0; pos + 1 < d.numColored(); ++pos) {
      if (d.colors[pos] == d.colors[pos + 1]) continue;
      auto npts = enumerateTies(hwTransition(d, pos));
      REQUIRE(npts.size() == pts.size());
      std::set<std::string> image;
      for (const auto& t : pts) {
        TieDiagram m = hwMatch(t, pos);
        CHECK(isValid(m).valid);
        CHECK(hwMatch(m, pos) == t);
        image.insert(m.toString());
      }
      std::set<std::string> target;
      for (const auto& t : npts) target.insert(t.toString());
      CHECK(image == target);
    }
  });
}

TEST_CASE("property: coverage consistency") {
  forEachDiagram(7, 3, [&](const BraneDiagram& d) {
    if (!admissible(d)) return;
    for (const auto& t : enumerateTies(d)) {
      for (int x = 0; x < d.numBlacks(); ++x) {
        int sum = 0;
        for (int i = 1; i <= d.N(); ++i) sum += coverCounts(t, i)[x];
        CHECK(sum == d.blacks[x]);
        CHECK(t.coverCount(x) == d.blacks[x]);
      }
    }
  });
}

TEST_CASE("enumeration is deterministic") {
  BraneDiagram d = parseDiagram("0/1/2\\2/3\\2\\1/0");
  auto a = enumerateTies(d);
  auto b = enumerateTies(d);
  CHECK(a == b);
  CHECK(countTies(d) == a.size());
}

TEST_CASE("ascii rendering names every tie") {
  auto pts = enumerateTies(parseDiagram("0/1\\1\\1/0"));
  std::string art = renderTieAscii(pts[0]);
  CHECK(art.find("V2") != std::string::npos);
  CHECK(art.find("U1") != std::string::npos);
}
