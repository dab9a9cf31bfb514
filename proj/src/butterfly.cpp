#include "bow/butterfly.hpp"

#include <algorithm>
#include <sstream>

#include "bow/error.hpp"

namespace bow {

const char* arrowColorName(ArrowColor c) {
  switch (c) {
    case ArrowColor::Black: return "black";
    case ArrowColor::Blue: return "blue";
    case ArrowColor::Red: return "red";
    case ArrowColor::Violet: return "violet";
    case ArrowColor::Green: return "green";
  }
  return "?";
}

bool ButterflyData::hasVertex(int x, int j) const {
  if (x < 0 || x >= static_cast<int>(coverCounts.size())) return false;
  return j >= columnBottoms[x] && j < columnBottoms[x] + coverCounts[x];
}

int ButterflyData::gradingOffset() const {
  int dJ = coverCounts[position];
  return dJ >= 1 ? dJ - 1 : 0;
}

std::vector<int> coverCounts(const TieDiagram& t, int blue) {
  const BraneDiagram& d = t.base;
  int p = d.positionOfBlue(blue);
  std::vector<int> out(d.numBlacks(), 0);
  for (const auto& tie : t.ties) {
    if (tie.right == p && d.colors[tie.left] == Color::Red) {
      for (int x = tie.left + 1; x <= p; ++x) ++out[x];
    } else if (tie.left == p && d.colors[tie.right] == Color::Red) {
      for (int x = p + 1; x <= tie.right; ++x) ++out[x];
    }
  }
  return out;
}

namespace {

std::vector<int> bottomsFromCounts(const BraneDiagram& d, int p,
                                   const std::vector<int>& cnt) {
  int n = d.numBlacks();
  std::vector<int> c(n, 0);
  for (int x = p - 1; x >= 1; --x) {
    if (d.colors[x] == Color::Blue || cnt[x] + 1 == cnt[x + 1])
      c[x] = c[x + 1];
    else
      c[x] = c[x + 1] - 1;
  }
  int lift = cnt[p] == 0 ? 1 : 0;
  for (int x = p + 1; x < n; ++x) c[x] = cnt[p + 1] - cnt[x] + lift;
  return c;
}

}  // namespace

std::vector<int> columnBottoms(const TieDiagram& t, int blue) {
  int p = t.base.positionOfBlue(blue);
  return bottomsFromCounts(t.base, p, coverCounts(t, blue));
}

ButterflyData butterfly(const TieDiagram& t, int blue) {
  const BraneDiagram& d = t.base;
  ButterflyData b;
  b.blue = blue;
  b.position = d.positionOfBlue(blue);
  b.coverCounts = coverCounts(t, blue);
  b.columnBottoms = bottomsFromCounts(d, b.position, b.coverCounts);
  int n = d.numBlacks();
  for (int x = 0; x < n; ++x)
    for (int j = b.columnBottoms[x]; j < b.columnBottoms[x] + b.coverCounts[x]; ++j)
      b.vertices.push_back({x, j});

  auto nextToBlue = [&](int x) {
    return (x < d.numColored() && d.colors[x] == Color::Blue) ||
           (x >= 1 && d.colors[x - 1] == Color::Blue);
  };
  for (const auto& v : b.vertices) {
    if (nextToBlue(v.x) && b.hasVertex(v.x, v.j - 1))
      b.arrows.push_back({ArrowColor::Black, v, {v.x, v.j - 1}});
    if (v.x + 1 >= n) continue;
    int pos = v.x;
    if (d.colors[pos] == Color::Blue) {
      if (b.hasVertex(v.x + 1, v.j))
        b.arrows.push_back({ArrowColor::Blue, {v.x + 1, v.j}, v});
    } else {
      if (b.hasVertex(v.x + 1, v.j))
        b.arrows.push_back({ArrowColor::Red, v, {v.x + 1, v.j}});
      if (b.hasVertex(v.x + 1, v.j + 1))
        b.arrows.push_back({ArrowColor::Violet, {v.x + 1, v.j + 1}, v});
    }
  }
  int p = b.position;
  int dJ = b.coverCounts[p];
  if (dJ >= 1) {
    Arrow g{ArrowColor::Green, {0, 0}, {p, dJ - 1}};
    g.sourceExternal = true;
    b.arrows.push_back(g);
  }
  if (dJ < b.coverCounts[p + 1]) {
    int jb = dJ >= 1 ? dJ : 1;
    if (b.hasVertex(p + 1, jb)) {
      Arrow g{ArrowColor::Green, {p + 1, jb}, {0, 0}};
      g.targetExternal = true;
      b.arrows.push_back(g);
    }
  }
  return b;
}

int FixedPointData::find(int x, int blue, int j) const {
  const auto& bs = bases[x];
  for (size_t k = 0; k < bs.size(); ++k)
    if (bs[k].blue == blue && bs[k].j == j) return static_cast<int>(k);
  return -1;
}

Weight FixedPointData::weight(int x, int k) const {
  const BasisLabel& l = bases[x][k];
  return Weight::t(l.blue) + Weight::h(l.j - butterflies[l.blue - 1].gradingOffset());
}

FixedPointData assembleFixedPoint(const TieDiagram& t) {
  const BraneDiagram& d = t.base;
  FixedPointData f{t, {}, {}, {}, {}, {}, {}, {}, {}, {}};
  int n = d.numBlacks(), N = d.N(), M = d.M();
  f.bases.resize(n);
  for (int i = 1; i <= N; ++i) {
    f.butterflies.push_back(butterfly(t, i));
    const auto& b = f.butterflies.back();
    for (const auto& v : b.vertices) f.bases[v.x].push_back({i, v.j});
  }

  auto lower = [&](int x) {
    Matrix m(f.dim(x), f.dim(x));
    for (int k = 0; k < f.dim(x); ++k) {
      int r = f.find(x, f.bases[x][k].blue, f.bases[x][k].j - 1);
      if (r >= 0) m(r, k) = -1;
    }
    return m;
  };
  // Matrix from column s to column tcol sending (u,j) to (u,j+shift).
  auto shiftMap = [&](int s, int tcol, int shift) {
    Matrix m(f.dim(tcol), f.dim(s));
    for (int k = 0; k < f.dim(s); ++k) {
      int r = f.find(tcol, f.bases[s][k].blue, f.bases[s][k].j + shift);
      if (r >= 0) m(r, k) = 1;
    }
    return m;
  };

  for (int i = 1; i <= N; ++i) {
    const auto& b = f.butterflies[i - 1];
    int p = b.position;
    f.A.push_back(shiftMap(p + 1, p, 0));
    f.Bminus.push_back(lower(p));
    f.Bplus.push_back(lower(p + 1));
    int dJ = b.coverCounts[p];
    Matrix av(f.dim(p), 1);
    if (dJ >= 1) av(f.find(p, i, dJ - 1), 0) = 1;
    Matrix bv(1, f.dim(p + 1));
    if (dJ < b.coverCounts[p + 1]) {
      int k = f.find(p + 1, i, dJ >= 1 ? dJ : 1);
      if (k >= 0) bv(0, k) = -1;
    }
    f.a.push_back(av);
    f.b.push_back(bv);
  }
  for (int j = 1; j <= M; ++j) {
    int p = d.positionOfRed(j);
    f.C.push_back(shiftMap(p + 1, p, -1));
    f.D.push_back(shiftMap(p, p + 1, 0));
  }
  return f;
}

std::vector<Character> fiberCharacters(const TieDiagram& t) {
  const BraneDiagram& d = t.base;
  std::vector<Character> out(d.numBlacks());
  for (int i = 1; i <= d.N(); ++i) {
    auto cnt = coverCounts(t, i);
    int p = d.positionOfBlue(i);
    auto c = bottomsFromCounts(d, p, cnt);
    int o = cnt[p] >= 1 ? cnt[p] - 1 : 0;
    for (int x = 0; x < d.numBlacks(); ++x)
      for (int j = c[x]; j < c[x] + cnt[x]; ++j)
        out[x].add(Weight::t(i) + Weight::h(j - o), 1);
  }
  return out;
}

Character fiberCharacter(const TieDiagram& t, int x) {
  if (x < 0 || x >= t.base.numBlacks())
    throw Error(Errc::UnknownVariable, "no black line X" + std::to_string(x + 1));
  return fiberCharacters(t)[x];
}

std::string renderButterfly(const ButterflyData& b, const BraneDiagram& d) {
  std::ostringstream os;
  if (b.vertices.empty()) {
    os << "U" << b.blue << ": empty butterfly\n";
    return os.str();
  }
  int lo = b.vertices.front().j, hi = lo;
  for (const auto& v : b.vertices) {
    lo = std::min(lo, v.j);
    hi = std::max(hi, v.j);
  }
  int n = d.numBlacks();
  const int step = 4;
  for (int j = hi; j >= lo; --j) {
    std::string row(step * n + 1, ' ');
    for (int x = 0; x < n; ++x)
      if (b.hasVertex(x, j)) {
        row[step * x + 2] = 'o';
        if (x + 1 < n && b.hasVertex(x + 1, j))
          row[step * x + 4] = d.colors[x] == Color::Blue ? '<' : '>';
      }
    while (!row.empty() && row.back() == ' ') row.pop_back();
    std::string lab = std::to_string(j);
    os << std::string(lab.size() < 3 ? 3 - lab.size() : 0, ' ') << lab << " |" << row << "\n";
  }
  std::string foot(step * n + 1, ' ');
  for (int x = 0; x + 1 < n; ++x) foot[step * x + 4] = d.colors[x] == Color::Red ? '/' : '\\';
  while (!foot.empty() && foot.back() == ' ') foot.pop_back();
  os << "    |" << foot << "\n";
  for (const auto& a : b.arrows) {
    os << "  " << arrowColorName(a.color) << ": ";
    auto vs = [&](const Vertex& v, bool ext) {
      return ext ? std::string("*")
                 : "(" + std::to_string(v.x - b.position) + "," + std::to_string(v.j) + ")";
    };
    os << vs(a.source, a.sourceExternal) << " -> " << vs(a.target, a.targetExternal) << "\n";
  }
  return os.str();
}

}  // namespace bow
