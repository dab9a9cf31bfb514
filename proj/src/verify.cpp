#include "bow/verify.hpp"

#include <numeric>
#include <stdexcept>

namespace bow {

const char* checkStatusName(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

bool VerificationReport::passed() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::Fail) return false;
  return true;
}

const CheckResult& VerificationReport::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw std::out_of_range("no check named " + name);
}

namespace {

struct Failures {
  CheckResult result;
  void fail(const std::string& why) {
    if (result.status != CheckStatus::Fail) {
      result.status = CheckStatus::Fail;
      result.detail = why;
    } else {
      result.detail += "; " + why;
    }
  }
};

std::string blackName(int x) { return "X" + std::to_string(x + 1); }

CheckResult checkMomentMap(const FixedPointData& f) {
  Failures r{{"moment-map", CheckStatus::Pass, ""}};
  const BraneDiagram& d = f.tie.base;
  auto blueAt = [&](int pos) { return d.indexAt(pos) - 1; };
  auto redAt = [&](int pos) { return d.indexAt(pos) - 1; };
  for (int x = 1; x + 1 < d.numBlacks(); ++x) {
    int l = x - 1, rt = x;
    bool lb = d.colors[l] == Color::Blue, rb = d.colors[rt] == Color::Blue;
    Matrix m;
    if (lb && rb) {
      m = f.Bminus[blueAt(rt)] - f.Bplus[blueAt(l)];
    } else if (!lb && !rb) {
      m = f.D[redAt(l)] * f.C[redAt(l)] - f.C[redAt(rt)] * f.D[redAt(rt)];
    } else if (!lb && rb) {
      m = f.D[redAt(l)] * f.C[redAt(l)] + f.Bminus[blueAt(rt)];
    } else {
      m = -(f.C[redAt(rt)] * f.D[redAt(rt)]) - f.Bplus[blueAt(l)];
    }
    if (!m.isZero()) r.fail("component at " + blackName(x) + " is nonzero");
  }
  for (int i = 0; i < d.N(); ++i) {
    Matrix t = f.Bminus[i] * f.A[i] - f.A[i] * f.Bplus[i] + f.a[i] * f.b[i];
    if (!t.isZero()) r.fail("triangle relation fails at U" + std::to_string(i + 1));
  }
  return r.result;
}

// Row space of m closed under right multiplication by g.
Matrix rowClosure(Matrix m, const Matrix& g) {
  m = rowReduce(m);
  while (true) {
    Matrix next = rowReduce(vstack(m, m * g));
    if (next.rows() == m.rows()) return next;
    m = next;
  }
}

CheckResult checkS1S2(const FixedPointData& f) {
  Failures r{{"S1/S2", CheckStatus::Pass, ""}};
  const BraneDiagram& d = f.tie.base;
  for (int i = 0; i < d.N(); ++i) {
    std::string u = "U" + std::to_string(i + 1);
    int p = f.butterflies[i].position;
    // S1: no nonzero B+-invariant subspace inside ker A and ker b.
    int dp = f.dim(p + 1);
    if (dp > 0) {
      Matrix n = rowClosure(vstack(f.A[i], f.b[i]), f.Bplus[i]);
      if (n.rows() != dp) r.fail("S1 fails at " + u);
    }
    // S2: the B--invariant subspace generated by Im A and Im a is everything.
    int dm = f.dim(p);
    if (dm > 0) {
      Matrix k = rowClosure(hstack(f.A[i], f.a[i]).transpose(), f.Bminus[i].transpose());
      if (k.rows() != dm) r.fail("S2 fails at " + u);
    }
  }
  return r.result;
}

struct Graph {
  std::vector<int> offset;
  std::vector<std::vector<int>> next;
  std::vector<int> forced;
};

Graph stabilityGraph(const FixedPointData& f) {
  const BraneDiagram& d = f.tie.base;
  Graph g;
  g.offset.assign(d.numBlacks() + 1, 0);
  for (int x = 0; x < d.numBlacks(); ++x) g.offset[x + 1] = g.offset[x] + f.dim(x);
  g.next.resize(g.offset.back());
  auto put = [&](const Matrix& m, int tx, int sx) {
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c)
        if (m(r, c) != 0) g.next[g.offset[sx] + c].push_back(g.offset[tx] + r);
  };
  for (int i = 0; i < d.N(); ++i) {
    int p = f.butterflies[i].position;
    const Matrix& A = f.A[i];
    put(A, p, p + 1);
    put(A.transpose(), p + 1, p);
    put(f.Bminus[i], p, p);
    put(f.Bplus[i], p + 1, p + 1);
    for (int r = 0; r < f.a[i].rows(); ++r)
      if (f.a[i](r, 0) != 0) g.forced.push_back(g.offset[p] + r);
    for (int c = 0; c < A.cols(); ++c) {
      bool zero = true;
      for (int r = 0; r < A.rows(); ++r) zero = zero && A(r, c) == 0;
      if (zero) g.forced.push_back(g.offset[p + 1] + c);
    }
    for (int r = 0; r < A.rows(); ++r) {
      bool zero = true;
      for (int c = 0; c < A.cols(); ++c) zero = zero && A(r, c) == 0;
      if (zero) g.forced.push_back(g.offset[p] + r);
    }
  }
  for (int j = 0; j < d.M(); ++j) {
    int p = d.positionOfRed(j + 1);
    put(f.C[j], p, p + 1);
    put(f.D[j], p + 1, p);
  }
  return g;
}

bool coordinateSubspaceClosed(const Graph& g, const std::vector<bool>& in) {
  for (int v : g.forced)
    if (!in[v]) return false;
  for (size_t v = 0; v < g.next.size(); ++v)
    if (in[v])
      for (int w : g.next[v])
        if (!in[w]) return false;
  return true;
}

CheckResult checkStability(const FixedPointData& f) {
  CheckResult r{"stability", CheckStatus::Pass, ""};
  auto in = stabilityClosure(f);
  int missing = 0;
  for (bool b : in) missing += !b;
  if (missing) {
    r.status = CheckStatus::Fail;
    r.detail = "a proper graded subspace of codimension " + std::to_string(missing) +
               " satisfies the closure hypotheses";
  }
  return r;
}

CheckResult checkJunctions(const FixedPointData& f) {
  Failures r{{"junctions", CheckStatus::Pass, ""}};
  const BraneDiagram& d = f.tie.base;
  for (int p = 0; p + 1 < d.numColored(); ++p) {
    if (d.colors[p] == d.colors[p + 1]) continue;
    int x = p + 1;
    if (f.dim(x) == 0) continue;
    if (d.colors[p] == Color::Blue) {
      int i = d.indexAt(p) - 1, j = d.indexAt(p + 1) - 1;
      Matrix m = vstack(vstack(f.A[i], f.D[j]), f.b[i]);
      if (rank(m) != f.dim(x))
        r.fail("map out of " + blackName(x) + " is not injective");
    } else {
      int j = d.indexAt(p) - 1, i = d.indexAt(p + 1) - 1;
      Matrix m = hstack(hstack(f.D[j], f.A[i]), f.a[i]);
      if (rank(m) != f.dim(x))
        r.fail("map into " + blackName(x) + " is not surjective");
    }
  }
  return r.result;
}

CheckResult checkNilpotency(const FixedPointData& f) {
  Failures r{{"nilpotency", CheckStatus::Pass, ""}};
  const BraneDiagram& d = f.tie.base;
  if (!isSeparated(d)) {
    r.result.status = CheckStatus::Skipped;
    r.result.detail = "diagram is not separated";
    return r.result;
  }
  int M = d.M();
  for (int j = 1; j <= M; ++j) {
    const Matrix& C = f.C[j - 1];
    const Matrix& D = f.D[j - 1];
    if (j < M && !(C * D).pow(M - j).isZero())
      r.fail("(C D)^" + std::to_string(M - j) + " != 0 at V" + std::to_string(j));
    if (!(D * C).pow(M - j + 1).isZero())
      r.fail("(D C)^" + std::to_string(M - j + 1) + " != 0 at V" + std::to_string(j));
  }
  if (d.N() >= 1 && !f.Bminus[0].pow(M).isZero())
    r.fail("(B-)^" + std::to_string(M) + " != 0 at U1");
  return r.result;
}

CheckResult checkGrading(const FixedPointData& f) {
  Failures r{{"grading", CheckStatus::Pass, ""}};
  const BraneDiagram& d = f.tie.base;
  // Basis vector k of column x has weight t_blue + hexp h.
  auto hexp = [&](int x, int k) {
    const BasisLabel& l = f.bases[x][k];
    return l.j - f.butterflies[l.blue - 1].gradingOffset();
  };
  // Every nonzero entry must carry the weight of the map it belongs to.
  auto check = [&](const Matrix& m, int tx, int sx, int shift, const std::string& what) {
    for (int row = 0; row < m.rows(); ++row)
      for (int col = 0; col < m.cols(); ++col) {
        if (m(row, col) == 0) continue;
        if (f.bases[tx][row].blue != f.bases[sx][col].blue ||
            hexp(tx, row) != hexp(sx, col) + shift) {
          r.fail(what + " does not respect the torus grading");
          return;
        }
      }
  };
  for (int i = 0; i < d.N(); ++i) {
    int p = f.butterflies[i].position;
    std::string u = "U" + std::to_string(i + 1);
    check(f.A[i], p, p + 1, 0, "A at " + u);
    check(f.Bminus[i], p, p, -1, "B- at " + u);
    check(f.Bplus[i], p + 1, p + 1, -1, "B+ at " + u);
    for (int row = 0; row < f.a[i].rows(); ++row)
      if (f.a[i](row, 0) != 0 && (f.bases[p][row].blue != i + 1 || hexp(p, row) != 0))
        r.fail("a at " + u + " does not land in weight t" + std::to_string(i + 1));
    for (int col = 0; col < f.b[i].cols(); ++col)
      if (f.b[i](0, col) != 0 && (f.bases[p + 1][col].blue != i + 1 || hexp(p + 1, col) != 1))
        r.fail("b at " + u + " does not leave weight t" + std::to_string(i + 1) + "+h");
  }
  for (int j = 0; j < d.M(); ++j) {
    int p = d.positionOfRed(j + 1);
    std::string v = "V" + std::to_string(j + 1);
    check(f.C[j], p, p + 1, -1, "C at " + v);
    check(f.D[j], p + 1, p, 0, "D at " + v);
  }
  return r.result;
}

}  // namespace

std::vector<bool> stabilityClosure(const FixedPointData& f) {
  Graph g = stabilityGraph(f);
  std::vector<bool> in(g.next.size(), false);
  std::vector<int> stack;
  for (int v : g.forced)
    if (!in[v]) {
      in[v] = true;
      stack.push_back(v);
    }
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.next[v])
      if (!in[w]) {
        in[w] = true;
        stack.push_back(w);
      }
  }
  return in;
}

int stabilityBruteForce(const FixedPointData& f, int maxDim) {
  Graph g = stabilityGraph(f);
  int n = static_cast<int>(g.next.size());
  if (n > maxDim) return -1;
  std::vector<bool> in(n);
  for (unsigned long s = 0; s + 1 < (1UL << n); ++s) {
    for (int k = 0; k < n; ++k) in[k] = (s >> k) & 1;
    if (coordinateSubspaceClosed(g, in)) return 0;
  }
  return 1;
}

VerificationReport verifyFixedPoint(const FixedPointData& f) {
  VerificationReport rep;
  rep.checks.push_back(checkMomentMap(f));
  rep.checks.push_back(checkS1S2(f));
  rep.checks.push_back(checkStability(f));
  rep.checks.push_back(checkJunctions(f));
  rep.checks.push_back(checkNilpotency(f));
  rep.checks.push_back(checkGrading(f));
  return rep;
}

}  // namespace bow
