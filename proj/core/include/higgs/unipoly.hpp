#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "higgs/rational.hpp"

namespace higgs {

/// Dense univariate polynomial with rational coefficients; coefficient i
/// multiplies var^i. Trailing zeros are always trimmed.
class UniPoly {
 public:
  static constexpr int kZeroDegree = -1;

  UniPoly() = default;
  UniPoly(std::initializer_list<long> coeffs);
  explicit UniPoly(std::vector<Rational> coeffs);

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, int exponent);

  /// kZeroDegree for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  /// Coefficient of var^i; zero outside the stored range.
  Rational operator[](int i) const;
  const std::vector<Rational>& coefficients() const { return c_; }

  Rational eval(const Rational& x) const;

  /// Keeps terms of degree <= d.
  UniPoly truncated(int d) const;
  /// Multiplies by var^k.
  UniPoly shifted(int k) const;
  /// var^deg * p(1/var) using the given reference degree.
  UniPoly reversed(int deg) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Rational& s);
  UniPoly operator-() const;

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
  friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  static UniPoly pow(const UniPoly& p, int e);

  /// "c0 + c1*t + ..." style text using the given variable name.
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

struct DivMod {
  UniPoly quotient;
  UniPoly remainder;
};

DivMod divmod(const UniPoly& num, const UniPoly& den);

/// Returns q with num == q * den; throws NotDivisible on a nonzero remainder
/// and DivisionByZero when den is zero.
UniPoly exactDiv(const UniPoly& num, const UniPoly& den);

/// Power-series quotient num/den truncated at degree d; den(0) must be nonzero.
UniPoly seriesDiv(const UniPoly& num, const UniPoly& den, int d);

}  // namespace higgs
