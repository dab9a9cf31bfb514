#include "bow/tangent.hpp"

#include <algorithm>
#include <sstream>

#include "bow/butterfly.hpp"
#include "bow/error.hpp"

namespace bow {

namespace {

// Fiber weights are t_i + m h. Tangent contributions are products of a weight
// and a dual weight, so every term is t_p - t_q + m h with p, q in 0..N
// (index 0 standing for "no t"). Terms are packed into one integer and
// collected with signs, then merged by sorting.
constexpr int kHBias = 1 << 12;

struct Term {
  int blue;
  int m;
};

class Accumulator {
 public:
  void add(int p, int q, int m, int sign) {
    keys_.push_back({((p * 256 + q) << 13) + (m + kHBias), sign});
  }
  // sign * (A^dual * B) shifted by m0 h
  void homs(const std::vector<Term>& A, const std::vector<Term>& B, int m0, int sign) {
    for (const auto& b : B)
      for (const auto& a : A)
        if (a.blue != b.blue) add(b.blue, a.blue, b.m - a.m + m0, sign);
        else add(0, 0, b.m - a.m + m0, sign);
  }
  Character finish() {
    std::sort(keys_.begin(), keys_.end());
    Character c;
    for (size_t k = 0; k < keys_.size();) {
      int key = keys_[k].first;
      long sum = 0;
      for (; k < keys_.size() && keys_[k].first == key; ++k) sum += keys_[k].second;
      if (sum == 0) continue;
      int m = (key & ((1 << 13) - 1)) - kHBias;
      int pq = key >> 13;
      int p = pq / 256, q = pq % 256;
      Weight w = Weight::h(m);
      if (p) w = w + Weight::t(p);
      if (q) w = w - Weight::t(q);
      c.add(w, sum);
    }
    return c;
  }

 private:
  std::vector<std::pair<int, int>> keys_;
};

}  // namespace

Character tangentFormula(const TieDiagram& t) {
  const BraneDiagram& d = t.base;
  std::vector<std::vector<Term>> W(d.numBlacks());
  for (int i = 1; i <= d.N(); ++i) {
    auto cnt = coverCounts(t, i);
    auto bottoms = columnBottoms(t, i);
    int p = d.positionOfBlue(i);
    int o = cnt[p] >= 1 ? cnt[p] - 1 : 0;
    for (int x = 0; x < d.numBlacks(); ++x)
      for (int j = bottoms[x]; j < bottoms[x] + cnt[x]; ++j) W[x].push_back({i, j - o});
  }
  Accumulator acc;
  for (int i = 1; i <= d.N(); ++i) {
    int p = d.positionOfBlue(i);
    const auto& Wm = W[p];
    const auto& Wp = W[p + 1];
    acc.homs(Wp, Wm, 0, 1);
    acc.homs(Wm, Wm, 1, 1);
    acc.homs(Wp, Wp, 1, 1);
    for (const auto& a : Wm) {
      if (a.blue == i) acc.add(0, 0, a.m, 1);
      else acc.add(a.blue, i, a.m, 1);
    }
    for (const auto& b : Wp) {
      if (b.blue == i) acc.add(0, 0, 1 - b.m, 1);
      else acc.add(i, b.blue, 1 - b.m, 1);
    }
    acc.homs(Wp, Wm, 1, -1);
  }
  for (int j = 1; j <= d.M(); ++j) {
    int p = d.positionOfRed(j);
    acc.homs(W[p + 1], W[p], 1, 1);
    acc.homs(W[p], W[p + 1], 0, 1);
  }
  for (const auto& X : W) {
    acc.homs(X, X, 0, -1);
    acc.homs(X, X, 1, -1);
  }
  return acc.finish();
}

namespace {

bool hasDifferenceForm(const Weight& w) {
  int plus = 0, minus = 0;
  for (int i = 1; i <= w.numVars(); ++i) {
    int c = w.coeff(i);
    if (c == 1) ++plus;
    else if (c == -1) ++minus;
    else if (c != 0) return false;
  }
  return plus == 1 && minus == 1;
}

}  // namespace

Character tangentCharacter(const TieDiagram& t) {
  TieValidity v = isValid(t);
  if (!v.valid) throw Error(Errc::InvalidTie, v.violations[0]);
  Character T = tangentFormula(t);
  if (!T.isEffective())
    throw Error(Errc::NonEffective, "tangent character " + T.toString() + " at " + t.toString());
  for (const auto& [w, k] : T.terms())
    if (!hasDifferenceForm(w))
      throw Error(Errc::BadWeightForm, "weight " + w.toString() + " at " + t.toString());
  for (const auto& [w, k] : T.terms())
    if (T.multiplicity(Weight::h(1) - w) != k)
      throw Error(Errc::BrokenSymplecticInvolution,
                  "weight " + w.toString() + " has no partner at " + t.toString());
  return T;
}

int dimension(const BraneDiagram& d) {
  auto points = enumerateTies(d);
  if (points.empty())
    throw Error(Errc::InconsistentDimension, render(d) + " has no fixed points");
  long dim = -1;
  for (const auto& p : points) {
    long k = tangentCharacter(p).totalMultiplicity();
    if (dim >= 0 && k != dim)
      throw Error(Errc::InconsistentDimension,
                  "dimensions " + std::to_string(dim) + " and " + std::to_string(k));
    dim = k;
  }
  return static_cast<int>(dim);
}

ChamberSplit chamberSplit(const Character& tc, const std::vector<int>& chamber) {
  ChamberSplit s;
  s.chamber = chamber;
  std::vector<int> rankOf;
  for (size_t k = 0; k < chamber.size(); ++k) {
    int i = chamber[k];
    if (i < 1) throw Error(Errc::SyntaxError, "chamber entries must be positive");
    if (static_cast<int>(rankOf.size()) <= i) rankOf.resize(i + 1, -1);
    rankOf[i] = static_cast<int>(k);
  }
  auto rankFor = [&](int i) {
    if (i >= static_cast<int>(rankOf.size()) || rankOf[i] < 0)
      throw Error(Errc::ChamberMismatch, "chamber does not order t" + std::to_string(i));
    return rankOf[i];
  };
  for (const auto& [w, k] : tc.terms()) {
    if (w.torusPartZero())
      throw Error(Errc::DegenerateWeight, "weight " + w.toString() + " has zero torus part");
    if (!hasDifferenceForm(w))
      throw Error(Errc::BadWeightForm, "weight " + w.toString());
    int i = 0, j = 0;
    for (int v = 1; v <= w.numVars(); ++v) {
      if (w.coeff(v) == 1) i = v;
      if (w.coeff(v) == -1) j = v;
    }
    if (rankFor(i) < rankFor(j))
      s.plus.add(w, k);
    else
      s.minus.add(w, k);
  }
  return s;
}

std::vector<int> parseChamber(const std::string& src) {
  std::vector<int> out;
  std::stringstream ss(src);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw Error(Errc::SyntaxError, "bad chamber entry '" + item + "'");
    }
  }
  auto sorted = out;
  std::sort(sorted.begin(), sorted.end());
  for (size_t k = 0; k < sorted.size(); ++k)
    if (sorted[k] != static_cast<int>(k) + 1)
      throw Error(Errc::SyntaxError, "chamber '" + src + "' is not a permutation");
  return out;
}

std::vector<int> reversedChamber(const std::vector<int>& chamber) {
  return {chamber.rbegin(), chamber.rend()};
}

FactoredClass eulerClass(const Character& c) { return FactoredClass::fromWeights(c.weights()); }

}  // namespace bow
