#include "bow/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace bow {

namespace {

void trimVec(IntVec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

int at(const IntVec& v, size_t i) { return i < v.size() ? v[i] : 0; }

std::string rationalString(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace

// ---------------------------------------------------------------- Weight

Weight::Weight(IntVec a, int m) : a_(std::move(a)), m_(m) { trim(); }

void Weight::trim() { trimVec(a_); }

Weight Weight::t(int i, int coeff) {
  IntVec a(static_cast<size_t>(i), 0);
  a[i - 1] = coeff;
  return Weight(std::move(a), 0);
}

Weight Weight::h(int m) { return Weight(IntVec{}, m); }

int Weight::coeff(int i) const { return at(a_, static_cast<size_t>(i - 1)); }

Weight Weight::operator+(const Weight& o) const {
  IntVec r(std::max(a_.size(), o.a_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) r[i] = at(a_, i) + at(o.a_, i);
  return Weight(std::move(r), m_ + o.m_);
}

Weight Weight::operator-(const Weight& o) const { return *this + (-o); }

Weight Weight::operator-() const {
  IntVec r(a_);
  for (auto& x : r) x = -x;
  return Weight(std::move(r), -m_);
}

bool Weight::operator<(const Weight& o) const {
  size_t n = std::max(a_.size(), o.a_.size());
  for (size_t i = 0; i < n; ++i) {
    int x = at(a_, i), y = at(o.a_, i);
    if (x != y) return x < y;
  }
  return m_ < o.m_;
}

Weight Weight::substituteShift(int i, int s) const {
  return Weight(a_, m_ + s * coeff(i));
}

std::string Weight::toString() const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](int c, const std::string& var) {
    if (c == 0) return;
    if (c < 0)
      os << "-";
    else if (!first)
      os << "+";
    if (std::abs(c) != 1) os << std::abs(c) << "*";
    os << var;
    first = false;
  };
  for (size_t i = 0; i < a_.size(); ++i)
    emit(a_[i], "t" + std::to_string(i + 1));
  emit(m_, "h");
  if (first) return "0";
  return os.str();
}

Weight parseWeight(std::string_view src) {
  Poly p = polyParse(src);
  IntVec a;
  int m = 0;
  for (const auto& [mono, c] : p.terms()) {
    if (mono.degree() != 1 || c.get_den() != 1 || !c.get_num().fits_sint_p())
      throw Error(Errc::SyntaxError,
                  "not an integral linear weight: " + std::string(src));
    int ci = static_cast<int>(c.get_num().get_si());
    if (mono.h == 1) {
      m = ci;
    } else {
      size_t i = mono.t.size() - 1;
      if (a.size() <= i) a.resize(i + 1, 0);
      a[i] = ci;
    }
  }
  return Weight(std::move(a), m);
}

// ------------------------------------------------------------- Character

Character Character::single(const Weight& w, long mult) {
  Character c;
  c.add(w, mult);
  return c;
}

void Character::add(const Weight& w, long mult) {
  if (mult == 0) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, mult);
  } else {
    it->second += mult;
    if (it->second == 0) terms_.erase(it);
  }
}

Character& Character::operator+=(const Character& o) {
  for (const auto& [w, k] : o.terms_) add(w, k);
  return *this;
}

Character& Character::operator-=(const Character& o) {
  for (const auto& [w, k] : o.terms_) add(w, -k);
  return *this;
}

Character Character::operator+(const Character& o) const {
  Character r(*this);
  r += o;
  return r;
}

Character Character::operator-(const Character& o) const {
  Character r(*this);
  r -= o;
  return r;
}

Character Character::operator*(const Character& o) const {
  Character r;
  for (const auto& [w1, k1] : terms_)
    for (const auto& [w2, k2] : o.terms_) r.add(w1 + w2, k1 * k2);
  return r;
}

Character Character::dual() const {
  Character r;
  for (const auto& [w, k] : terms_) r.terms_.emplace(-w, k);
  return r;
}

Character Character::shifted(const Weight& s) const {
  Character r;
  for (const auto& [w, k] : terms_) r.terms_.emplace(w + s, k);
  return r;
}

Character Character::substituteShift(int i, int s) const {
  Character r;
  for (const auto& [w, k] : terms_) r.add(w.substituteShift(i, s), k);
  return r;
}

long Character::multiplicity(const Weight& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

long Character::totalMultiplicity() const {
  long s = 0;
  for (const auto& [w, k] : terms_) s += k;
  return s;
}

bool Character::isEffective() const {
  for (const auto& [w, k] : terms_)
    if (k < 0) return false;
  return true;
}

std::vector<Weight> Character::weights() const {
  std::vector<Weight> out;
  for (const auto& [w, k] : terms_)
    for (long i = 0; i < std::abs(k); ++i) out.push_back(w);
  return out;
}

std::string Character::toString() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, k] : terms_) {
    if (!first) os << (k < 0 ? " - " : " + ");
    else if (k < 0) os << "-";
    if (std::abs(k) != 1) os << std::abs(k) << "*";
    os << "[" << w.toString() << "]";
    first = false;
  }
  return os.str();
}

// ------------------------------------------------------------------ Poly

int Monomial::degree() const {
  int d = h;
  for (int e : t) d += e;
  return d;
}

void Monomial::trim() { trimVec(t); }

bool MonomialLess::operator()(const Monomial& x, const Monomial& y) const {
  int dx = x.degree(), dy = y.degree();
  if (dx != dy) return dx < dy;
  if (x.h != y.h) return x.h < y.h;
  size_t n = std::max(x.t.size(), y.t.size());
  for (size_t i = 0; i < n; ++i) {
    int a = at(x.t, i), b = at(y.t, i);
    if (a != b) return a < b;
  }
  return false;
}

void Poly::addTerm(const Monomial& mono, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(mono);
  if (it == terms_.end()) {
    terms_.emplace(mono, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::constant(const Rational& c) {
  Poly p;
  p.addTerm(Monomial{}, c);
  return p;
}

Poly Poly::t(int i) {
  Monomial m;
  m.t.assign(static_cast<size_t>(i), 0);
  m.t[i - 1] = 1;
  Poly p;
  p.addTerm(m, 1);
  return p;
}

Poly Poly::h() {
  Monomial m;
  m.h = 1;
  Poly p;
  p.addTerm(m, 1);
  return p;
}

Poly Poly::fromWeight(const Weight& w) {
  Poly p;
  for (int i = 1; i <= w.numVars(); ++i)
    if (w.coeff(i) != 0) p += Poly::t(i) * Rational(w.coeff(i));
  if (w.hcoeff() != 0) p += Poly::h() * Rational(w.hcoeff());
  return p;
}

bool Poly::isConstant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

Rational Poly::constantTerm() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::numVars() const {
  int n = 0;
  for (const auto& [m, c] : terms_) n = std::max(n, static_cast<int>(m.t.size()));
  return n;
}

int Poly::degree() const {
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.degree();
}

bool Poly::isHomogeneous(int deg) const {
  for (const auto& [m, c] : terms_)
    if (m.degree() != deg) return false;
  return true;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r(*this);
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r(*this);
  r -= o;
  return r;
}

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) addTerm(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) addTerm(m, -c);
  return *this;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m;
      m.t.assign(std::max(m1.t.size(), m2.t.size()), 0);
      for (size_t i = 0; i < m.t.size(); ++i) m.t[i] = at(m1.t, i) + at(m2.t, i);
      m.h = m1.h + m2.h;
      r.addTerm(m, c1 * c2);
    }
  }
  return r;
}

Poly Poly::operator*(const Rational& c) const {
  Poly r;
  if (c == 0) return r;
  for (const auto& [m, x] : terms_) r.terms_.emplace(m, x * c);
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly r = Poly::constant(1);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::pair<Monomial, Rational> Poly::leadingTerm() const {
  if (terms_.empty()) return {Monomial{}, Rational(0)};
  return *terms_.rbegin();
}

std::string Poly::toString() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Monomial& m = it->first;
    Rational c = it->second;
    if (c < 0) {
      os << "-";
      c = -c;
    } else if (!first) {
      os << "+";
    }
    first = false;
    std::vector<std::string> vars;
    for (size_t i = 0; i < m.t.size(); ++i) {
      if (m.t[i] == 0) continue;
      std::string v = "t" + std::to_string(i + 1);
      if (m.t[i] > 1) v += "^" + std::to_string(m.t[i]);
      vars.push_back(v);
    }
    if (m.h > 0) vars.push_back(m.h > 1 ? "h^" + std::to_string(m.h) : "h");
    if (vars.empty()) {
      os << rationalString(c);
      continue;
    }
    if (c != 1) os << rationalString(c) << "*";
    for (size_t i = 0; i < vars.size(); ++i) {
      if (i) os << "*";
      os << vars[i];
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- parser

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view s, int nvars) : s_(s), nvars_(nvars) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw Error(Errc::SyntaxError, what + " at position " +
                                       std::to_string(pos_) + " in '" +
                                       std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool peekIs(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool atAtomStart() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return c == 't' || c == 'h' || c == '(';
  }

  Integer uint() {
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (start == pos_) fail("expected unsigned integer");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  Poly expr() {
    Poly acc;
    bool neg = eat('-');
    if (!neg) eat('+');
    Poly first = term();
    acc = neg ? -first : first;
    while (true) {
      if (eat('+')) {
        acc += term();
      } else if (eat('-')) {
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    while (true) {
      if (eat('*')) {
        acc = acc * factor();
      } else if (eat('/')) {
        size_t at = pos_;
        Poly d = factor();
        if (!d.isConstant() || d.isZero()) {
          pos_ = at;
          fail("division only by a nonzero constant");
        }
        acc = acc * (Rational(1) / d.constantTerm());
      } else if (atAtomStart()) {
        // implicit product such as 2h or 3(t1-t2)
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  Poly factor() {
    Poly a = atom();
    if (eat('^')) {
      Integer e = uint();
      if (!e.fits_uint_p() || e > 64) fail("exponent too large");
      a = a.pow(static_cast<unsigned>(e.get_ui()));
    }
    return a;
  }

  Poly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)))
      return Poly::constant(Rational(uint()));
    if (c == 'h') {
      ++pos_;
      return Poly::h();
    }
    if (c == 't') {
      ++pos_;
      size_t at = pos_;
      Integer i = uint();
      if (i == 0 || !i.fits_sint_p()) {
        pos_ = at;
        fail("bad variable index");
      }
      int idx = static_cast<int>(i.get_si());
      if (nvars_ >= 0 && idx > nvars_)
        throw Error(Errc::UnknownVariable,
                    "t" + std::to_string(idx) + " with N=" +
                        std::to_string(nvars_));
      return Poly::t(idx);
    }
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    fail("unexpected character");
  }

  std::string_view s_;
  int nvars_;
  size_t pos_ = 0;
};

}  // namespace

Poly polyParse(std::string_view expr, int nvars) {
  return PolyParser(expr, nvars).parse();
}

Poly modH(const Poly& p) {
  Poly out;
  for (const auto& [m, c] : p.terms()) {
    if (m.h != 0) continue;
    Poly mono = Poly::constant(c);
    for (size_t i = 0; i < m.t.size(); ++i)
      if (m.t[i]) mono = mono * Poly::t(static_cast<int>(i + 1)).pow(m.t[i]);
    out += mono;
  }
  return out;
}

bool divides(const Poly& q, const Poly& p, Poly* quotient) {
  if (q.isZero()) throw Error(Errc::NotDivisible, "division by zero");
  Poly r = p;
  Poly quot;
  auto [lq, cq] = q.leadingTerm();
  while (!r.isZero()) {
    auto [lr, cr] = r.leadingTerm();
    if (lr.h < lq.h) return false;
    Monomial m;
    m.h = lr.h - lq.h;
    m.t.assign(std::max(lr.t.size(), lq.t.size()), 0);
    for (size_t i = 0; i < m.t.size(); ++i) {
      m.t[i] = at(lr.t, i) - at(lq.t, i);
      if (m.t[i] < 0) return false;
    }
    m.trim();
    Poly step = Poly::constant(cr / cq);
    for (size_t i = 0; i < m.t.size(); ++i)
      if (m.t[i]) step = step * Poly::t(static_cast<int>(i + 1)).pow(m.t[i]);
    if (m.h) step = step * Poly::h().pow(m.h);
    quot += step;
    r -= step * q;
  }
  if (quotient) *quotient = quot;
  return true;
}

Poly exactDivide(const Poly& p, const Poly& q) {
  Poly r;
  if (!divides(q, p, &r))
    throw Error(Errc::NotDivisible,
                "(" + p.toString() + ") / (" + q.toString() + ")");
  return r;
}

// --------------------------------------------------------- FactoredClass

FactoredClass FactoredClass::fromWeights(const std::vector<Weight>& ws) {
  FactoredClass f;
  for (const auto& w : ws) f.multiplyBy(w, 1);
  return f;
}

void FactoredClass::multiplyBy(const Weight& w, int exponent) {
  if (exponent <= 0) return;
  factors_.emplace_back(w, exponent);
  canonicalize();
}

FactoredClass FactoredClass::operator*(const FactoredClass& o) const {
  FactoredClass r(*this);
  r.constant_ *= o.constant_;
  for (const auto& f : o.factors_) r.factors_.push_back(f);
  r.canonicalize();
  return r;
}

void FactoredClass::canonicalize() {
  std::sort(factors_.begin(), factors_.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<std::pair<Weight, int>> merged;
  for (const auto& f : factors_) {
    if (!merged.empty() && merged.back().first == f.first)
      merged.back().second += f.second;
    else
      merged.push_back(f);
  }
  factors_ = std::move(merged);
  bool zero = constant_ == 0;
  for (const auto& f : factors_)
    if (f.first.isZero()) zero = true;
  if (zero) {
    constant_ = 0;
    factors_.clear();
  }
}

bool FactoredClass::isZero() const { return constant_ == 0; }

int FactoredClass::degree() const {
  int d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

Poly FactoredClass::expand() const {
  Poly p = Poly::constant(constant_);
  for (const auto& [w, e] : factors_)
    p = p * Poly::fromWeight(w).pow(static_cast<unsigned>(e));
  return p;
}

FactoredClass FactoredClass::normalized() const {
  FactoredClass r;
  r.constant_ = constant_;
  for (const auto& [w, e] : factors_) {
    int lead = w.hcoeff();
    for (int i = 1; lead == 0 && i <= w.numVars(); ++i) lead = w.coeff(i);
    if (lead < 0) {
      r.factors_.emplace_back(-w, e);
      if (e % 2) r.constant_ = -r.constant_;
    } else {
      r.factors_.emplace_back(w, e);
    }
  }
  r.canonicalize();
  return r;
}

std::string FactoredClass::toString() const {
  if (constant_ == 0) return "0";
  std::ostringstream os;
  bool any = false;
  if (constant_ != 1 || factors_.empty()) {
    if (constant_ == -1 && !factors_.empty())
      os << "-";
    else {
      os << rationalString(constant_);
      any = true;
    }
  }
  for (const auto& [w, e] : factors_) {
    if (any) os << "*";
    os << "(" << w.toString() << ")";
    if (e > 1) os << "^" << e;
    any = true;
  }
  return os.str();
}

long integerRatioModH(const Poly& p, const FactoredClass& e) {
  Poly e0 = modH(e.expand());
  if (e0.isZero())
    throw Error(Errc::NotProportional,
                "Euler class " + e.toString() + " vanishes modulo h");
  Poly p0 = modH(p);
  if (p0.isZero()) return 0;
  auto [mp, cp] = p0.leadingTerm();
  auto [me, ce] = e0.leadingTerm();
  Rational a = cp / ce;
  if (!(mp == me) || a.get_den() != 1 || p0 != e0 * a ||
      !a.get_num().fits_slong_p())
    throw Error(Errc::NotProportional,
                p.toString() + " is not an integer multiple of " +
                    e.toString() + " modulo h");
  return a.get_num().get_si();
}

// ------------------------------------------------------------ RationalFn

RationalFn::RationalFn(Poly numerator, FactoredClass denominator)
    : num_(std::move(numerator)), den_(denominator.normalized()) {
  if (den_.isZero()) throw Error(Errc::NotDivisible, "zero denominator");
  cancel();
}

void RationalFn::cancel() {
  if (num_.isZero()) {
    den_ = FactoredClass();
    return;
  }
  FactoredClass kept(Rational(1));
  for (const auto& [w, e] : den_.factors()) {
    Poly lin = Poly::fromWeight(w);
    int left = e;
    Poly q;
    while (left > 0 && divides(lin, num_, &q)) {
      num_ = q;
      --left;
    }
    if (left > 0) kept.multiplyBy(w, left);
  }
  num_ = num_ * (Rational(1) / den_.constant());
  den_ = kept;
}

bool RationalFn::isPolynomial() const { return den_.factors().empty(); }

RationalFn RationalFn::operator+(const RationalFn& o) const {
  std::map<Weight, int> lcm;
  for (const auto& [w, e] : den_.factors()) lcm[w] = std::max(lcm[w], e);
  for (const auto& [w, e] : o.den_.factors()) lcm[w] = std::max(lcm[w], e);
  auto cofactor = [&](const FactoredClass& d) {
    std::map<Weight, int> have;
    for (const auto& [w, e] : d.factors()) have[w] = e;
    Poly c = Poly::constant(1);
    for (const auto& [w, e] : lcm)
      c = c * Poly::fromWeight(w).pow(static_cast<unsigned>(e - have[w]));
    return c;
  };
  FactoredClass den;
  for (const auto& [w, e] : lcm) den.multiplyBy(w, e);
  Poly num = num_ * cofactor(den_) + o.num_ * cofactor(o.den_);
  return RationalFn(num, den);
}

RationalFn RationalFn::operator-(const RationalFn& o) const {
  return *this + RationalFn(-o.num_, o.den_);
}

RationalFn RationalFn::operator*(const RationalFn& o) const {
  return RationalFn(num_ * o.num_, den_ * o.den_);
}

bool RationalFn::operator==(const RationalFn& o) const {
  return num_ * o.den_.expand() == o.num_ * den_.expand();
}

std::string RationalFn::toString() const {
  if (isPolynomial()) return num_.toString();
  return "(" + num_.toString() + ")/(" + den_.toString() + ")";
}

}  // namespace bow
