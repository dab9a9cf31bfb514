#pragma once

#include <gmpxx.h>

#include <boost/container/small_vector.hpp>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bow/error.hpp"

namespace bow {

using Rational = mpq_class;
using Integer = mpz_class;

using IntVec = boost::container::small_vector<int, 6>;

// A character of the torus T = A x C*_h, written additively as
// a_1 t_1 + ... + a_N t_N + m h. Trailing zero coefficients are dropped so
// that equality does not depend on the ambient N.
class Weight {
 public:
  Weight() = default;
  Weight(IntVec a, int m);

  static Weight t(int i, int coeff = 1);
  static Weight h(int m = 1);

  int coeff(int i) const;
  int hcoeff() const { return m_; }
  int numVars() const { return static_cast<int>(a_.size()); }
  const IntVec& tpart() const { return a_; }
  bool isZero() const { return a_.empty() && m_ == 0; }
  bool torusPartZero() const { return a_.empty(); }

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;
  bool operator==(const Weight& o) const { return m_ == o.m_ && a_ == o.a_; }
  bool operator!=(const Weight& o) const { return !(*this == o); }
  bool operator<(const Weight& o) const;

  // t_i -> t_i + s*h
  Weight substituteShift(int i, int s) const;

  std::string toString() const;

 private:
  void trim();
  IntVec a_;
  int m_ = 0;
};

Weight parseWeight(std::string_view src);

class Character {
 public:
  using Map = std::map<Weight, long>;

  Character() = default;
  static Character single(const Weight& w, long mult = 1);

  void add(const Weight& w, long mult);
  Character& operator+=(const Character& o);
  Character& operator-=(const Character& o);
  Character operator+(const Character& o) const;
  Character operator-(const Character& o) const;
  Character operator*(const Character& o) const;
  bool operator==(const Character& o) const { return terms_ == o.terms_; }

  Character dual() const;
  Character shifted(const Weight& w) const;
  Character substituteShift(int i, int s) const;

  long multiplicity(const Weight& w) const;
  long totalMultiplicity() const;
  bool isEffective() const;
  bool empty() const { return terms_.empty(); }
  const Map& terms() const { return terms_; }
  std::vector<Weight> weights() const;

  std::string toString() const;

 private:
  Map terms_;
};

struct Monomial {
  IntVec t;
  int h = 0;
  int degree() const;
  bool operator==(const Monomial& o) const { return h == o.h && t == o.t; }
  void trim();
};

// Graded lexicographic order with h heaviest, then t1 > t2 > ... .
struct MonomialLess {
  bool operator()(const Monomial& x, const Monomial& y) const;
};

class Poly {
 public:
  using Map = std::map<Monomial, Rational, MonomialLess>;

  Poly() = default;
  static Poly constant(const Rational& c);
  static Poly t(int i);
  static Poly h();
  static Poly fromWeight(const Weight& w);

  bool isZero() const { return terms_.empty(); }
  bool isConstant() const;
  Rational constantTerm() const;
  const Map& terms() const { return terms_; }
  int numVars() const;
  int degree() const;
  bool isHomogeneous(int deg) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& c) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }
  Poly pow(unsigned e) const;

  std::pair<Monomial, Rational> leadingTerm() const;

  std::string toString() const;

 private:
  void addTerm(const Monomial& mono, const Rational& c);
  Map terms_;
};

// nvars < 0 accepts any t index.
Poly polyParse(std::string_view expr, int nvars = -1);
Poly modH(const Poly& p);
Poly exactDivide(const Poly& p, const Poly& q);
bool divides(const Poly& q, const Poly& p, Poly* quotient = nullptr);

class FactoredClass {
 public:
  FactoredClass() = default;
  explicit FactoredClass(Rational constant) : constant_(std::move(constant)) {}
  static FactoredClass fromWeights(const std::vector<Weight>& ws);

  void multiplyBy(const Weight& w, int exponent = 1);
  FactoredClass operator*(const FactoredClass& o) const;

  const Rational& constant() const { return constant_; }
  const std::vector<std::pair<Weight, int>>& factors() const {
    return factors_;
  }
  bool isZero() const;
  int degree() const;
  Poly expand() const;
  // Flip every factor so that its leading coefficient is positive, moving the
  // signs into the constant.
  FactoredClass normalized() const;
  bool operator==(const FactoredClass& o) const {
    return constant_ == o.constant_ && factors_ == o.factors_;
  }

  std::string toString() const;

 private:
  void canonicalize();
  Rational constant_{1};
  std::vector<std::pair<Weight, int>> factors_;
};

long integerRatioModH(const Poly& p, const FactoredClass& e);

class RationalFn {
 public:
  RationalFn() = default;
  explicit RationalFn(Poly numerator, FactoredClass denominator = {});

  const Poly& numerator() const { return num_; }
  const FactoredClass& denominator() const { return den_; }
  bool isPolynomial() const;
  bool isZero() const { return num_.isZero(); }

  RationalFn operator+(const RationalFn& o) const;
  RationalFn operator-(const RationalFn& o) const;
  RationalFn operator*(const RationalFn& o) const;
  bool operator==(const RationalFn& o) const;
  bool operator!=(const RationalFn& o) const { return !(*this == o); }

  std::string toString() const;

 private:
  void cancel();
  Poly num_;
  FactoredClass den_;
};

}  // namespace bow
