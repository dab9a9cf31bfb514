#include "bow/tie.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

#include "bow/error.hpp"

namespace bow {

namespace {

using Key = std::array<int, 4>;

Key tieKey(const BraneDiagram& d, const Tie& t) {
  auto rank = [&](int p) { return d.colors[p] == Color::Blue ? 0 : 1; };
  return {rank(t.left), d.indexAt(t.left), rank(t.right), d.indexAt(t.right)};
}

std::vector<Key> descendingKeys(const TieDiagram& t) {
  std::vector<Key> keys;
  keys.reserve(t.ties.size());
  for (const auto& x : t.ties) keys.push_back(tieKey(t.base, x));
  std::sort(keys.begin(), keys.end(), std::greater<Key>());
  return keys;
}

}  // namespace

int TieDiagram::coverCount(int x) const {
  int c = 0;
  for (const auto& t : ties) c += covers(t, x);
  return c;
}

std::vector<NamePair> TieDiagram::names() const {
  std::vector<NamePair> out;
  for (const auto& t : ties) out.emplace_back(base.nameAt(t.left), base.nameAt(t.right));
  return out;
}

std::string TieDiagram::toString() const {
  std::string s = "{";
  bool first = true;
  for (const auto& [a, b] : names()) {
    if (!first) s += ",";
    s += "(" + a + "," + b + ")";
    first = false;
  }
  return s + "}";
}

bool TieDiagram::hasTie(int a, int b) const {
  for (const auto& t : ties)
    if (t.left == a && t.right == b) return true;
  return false;
}

void TieDiagram::sortCanonical() {
  std::sort(ties.begin(), ties.end(), [&](const Tie& x, const Tie& y) {
    return tieKey(base, x) > tieKey(base, y);
  });
}

TieValidity isValid(const TieDiagram& t) {
  TieValidity v;
  const auto& d = t.base;
  auto bad = [&](const std::string& s) {
    v.valid = false;
    v.violations.push_back(s);
  };
  for (size_t k = 0; k < t.ties.size(); ++k) {
    const Tie& x = t.ties[k];
    if (x.left < 0 || x.right >= d.numColored() || x.left >= x.right) {
      bad("tie " + std::to_string(k + 1) + " does not join two lines left to right");
      continue;
    }
    if (d.colors[x.left] == d.colors[x.right])
      bad("tie (" + d.nameAt(x.left) + "," + d.nameAt(x.right) +
          ") joins two lines of the same color");
    for (size_t l = 0; l < k; ++l)
      if (t.ties[l] == x)
        bad("tie (" + d.nameAt(x.left) + "," + d.nameAt(x.right) + ") repeated");
  }
  if (!v.valid) return v;
  for (int x = 0; x < d.numBlacks(); ++x) {
    int c = t.coverCount(x);
    if (c != d.blacks[x])
      bad("X" + std::to_string(x + 1) + ": covered " + std::to_string(c) +
          " times, label " + std::to_string(d.blacks[x]));
  }
  return v;
}

TieDiagram makeTieDiagram(const BraneDiagram& d,
                          const std::vector<NamePair>& pairs) {
  TieDiagram t{d, {}};
  for (const auto& [a, b] : pairs) {
    int pa = d.positionOfName(a), pb = d.positionOfName(b);
    if (d.colors[pa] == d.colors[pb])
      throw Error(Errc::InvalidTie, "(" + a + "," + b + ") is not a red-blue pair");
    t.ties.push_back({std::min(pa, pb), std::max(pa, pb)});
  }
  t.sortCanonical();
  return t;
}

std::vector<NamePair> parseTieNames(const std::string& src) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : src) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      cur += c;
    } else if (!cur.empty()) {
      tokens.push_back(cur);
      cur.clear();
    }
  }
  if (!cur.empty()) tokens.push_back(cur);
  if (tokens.size() % 2)
    throw Error(Errc::SyntaxError, "odd number of line names in '" + src + "'");
  std::vector<NamePair> out;
  for (size_t k = 0; k < tokens.size(); k += 2)
    out.emplace_back(tokens[k], tokens[k + 1]);
  return out;
}

bool canonicalLess(const TieDiagram& a, const TieDiagram& b) {
  return descendingKeys(a) < descendingKeys(b);
}

namespace {

class TieSearch {
 public:
  explicit TieSearch(const BraneDiagram& d) : d_(d) {
    int n = d.numColored();
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (d.colors[a] != d.colors[b]) cand_.push_back({a, b});
    nb_ = d.numBlacks();
    // capacity_[i * nb_ + x]: candidates with index >= i covering black x
    capacity_.assign((cand_.size() + 1) * nb_, 0);
    for (int i = static_cast<int>(cand_.size()) - 1; i >= 0; --i) {
      std::copy_n(&capacity_[(i + 1) * nb_], nb_, &capacity_[i * nb_]);
      for (int x = cand_[i].left + 1; x <= cand_[i].right; ++x) ++capacity_[i * nb_ + x];
    }
    count_.assign(nb_, 0);
  }

  template <class Fn>
  void run(Fn&& fn) {
    if (!feasible(0)) return;
    recurse(0, fn);
  }

 private:
  bool feasible(size_t i) const {
    const int* cap = &capacity_[i * nb_];
    for (int x = 0; x < nb_; ++x)
      if (count_[x] + cap[x] < d_.blacks[x]) return false;
    return true;
  }

  template <class Fn>
  void recurse(size_t i, Fn& fn) {
    if (i == cand_.size()) {
      fn(chosen_);
      return;
    }
    const Tie& t = cand_[i];
    bool fits = true;
    for (int x = t.left + 1; x <= t.right; ++x)
      if (count_[x] >= d_.blacks[x]) {
        fits = false;
        break;
      }
    if (fits) {
      for (int x = t.left + 1; x <= t.right; ++x) ++count_[x];
      chosen_.push_back(t);
      if (feasible(i + 1)) recurse(i + 1, fn);
      chosen_.pop_back();
      for (int x = t.left + 1; x <= t.right; ++x) --count_[x];
    }
    if (feasible(i + 1)) recurse(i + 1, fn);
  }

  const BraneDiagram& d_;
  std::vector<Tie> cand_;
  int nb_ = 0;
  std::vector<int> capacity_;
  std::vector<int> count_;
  std::vector<Tie> chosen_;
};

}  // namespace

std::vector<TieDiagram> enumerateTies(const BraneDiagram& d) {
  std::vector<TieDiagram> out;
  TieSearch search(d);
  search.run([&](const std::vector<Tie>& ties) {
    TieDiagram t{d, ties};
    t.sortCanonical();
    out.push_back(std::move(t));
  });
  std::sort(out.begin(), out.end(), canonicalLess);
  return out;
}

size_t countTies(const BraneDiagram& d) {
  size_t n = 0;
  TieSearch search(d);
  search.run([&](const std::vector<Tie>&) { ++n; });
  return n;
}

TieDiagram hwMatch(const TieDiagram& t, int pos) {
  const BraneDiagram& d = t.base;
  if (pos < 0 || pos + 1 >= d.numColored() || d.colors[pos] == d.colors[pos + 1])
    throw Error(Errc::IllegalMove,
                "no adjacent red-blue pair at position " + std::to_string(pos + 1));
  BraneDiagram nd;
  try {
    nd = hwTransition(d, pos);
  } catch (const Error& e) {
    throw Error(Errc::IllegalMove, e.what());
  }
  auto swapPos = [&](int p) { return p == pos ? pos + 1 : p == pos + 1 ? pos : p; };
  TieDiagram r{nd, {}};
  bool toggled = false;
  for (const auto& x : t.ties) {
    if (x.left == pos && x.right == pos + 1) {
      toggled = true;
      continue;
    }
    int a = swapPos(x.left), b = swapPos(x.right);
    r.ties.push_back({std::min(a, b), std::max(a, b)});
  }
  if (!toggled) r.ties.push_back({pos, pos + 1});
  r.sortCanonical();
  auto v = isValid(r);
  if (!v.valid)
    throw Error(Errc::IllegalMove, "matched tie diagram invalid: " + v.violations[0]);
  return r;
}

std::string pointId(size_t index) { return "D" + std::to_string(index + 1); }

size_t findPoint(const std::vector<TieDiagram>& points, const std::string& key) {
  if (key.size() > 1 && key[0] == 'D' &&
      std::all_of(key.begin() + 1, key.end(),
                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    size_t k = std::stoul(key.substr(1));
    if (k >= 1 && k <= points.size()) return k - 1;
    throw Error(Errc::UnknownPoint, key + " (there are " +
                                        std::to_string(points.size()) + " fixed points)");
  }
  if (points.empty()) throw Error(Errc::UnknownPoint, key);
  TieDiagram want = makeTieDiagram(points[0].base, parseTieNames(key));
  for (size_t k = 0; k < points.size(); ++k)
    if (points[k] == want) return k;
  throw Error(Errc::UnknownPoint, "no fixed point with ties " + want.toString());
}

std::string renderTieAscii(const TieDiagram& t) {
  const BraneDiagram& d = t.base;
  const int step = 5;
  auto col = [&](int pos) { return 4 + step * pos; };
  int width = col(d.numColored()) + 2;

  auto packRows = [&](bool upper) {
    std::vector<std::vector<Tie>> rows;
    std::vector<Tie> group;
    for (const auto& x : t.ties)
      if ((d.colors[x.left] == Color::Red) == upper) group.push_back(x);
    std::sort(group.begin(), group.end(), [](const Tie& a, const Tie& b) {
      return a.right - a.left < b.right - b.left ||
             (a.right - a.left == b.right - b.left && a.left < b.left);
    });
    for (const auto& x : group) {
      bool placed = false;
      for (auto& row : rows) {
        bool clash = false;
        for (const auto& y : row)
          if (!(x.right < y.left || y.right < x.left)) clash = true;
        if (!clash) {
          row.push_back(x);
          placed = true;
          break;
        }
      }
      if (!placed) rows.push_back({x});
    }
    return rows;
  };
  auto drawRow = [&](const std::vector<Tie>& row) {
    std::string s(width, ' ');
    for (const auto& x : row) {
      for (int c = col(x.left); c <= col(x.right); ++c) s[c] = '-';
      s[col(x.left)] = '+';
      s[col(x.right)] = '+';
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
  };

  std::ostringstream os;
  auto upper = packRows(true);
  for (auto it = upper.rbegin(); it != upper.rend(); ++it) os << drawRow(*it) << "\n";
  std::string names(width, ' ');
  std::string line(width, ' ');
  for (int p = 0; p < d.numColored(); ++p) {
    std::string nm = d.nameAt(p);
    for (size_t k = 0; k < nm.size() && col(p) + k < names.size(); ++k)
      names[col(p) + k] = nm[k];
    line[col(p)] = d.colors[p] == Color::Red ? '/' : '\\';
  }
  for (int x = 0; x < d.numBlacks(); ++x) {
    std::string lab = std::to_string(d.blacks[x]);
    int c = col(x) - step / 2 - 1;
    if (c < 0) c = 0;
    for (size_t k = 0; k < lab.size(); ++k) line[c + k] = lab[k];
  }
  while (!names.empty() && names.back() == ' ') names.pop_back();
  while (!line.empty() && line.back() == ' ') line.pop_back();
  os << names << "\n" << line << "\n";
  for (const auto& row : packRows(false)) os << drawRow(row) << "\n";
  return os.str();
}

}  // namespace bow
