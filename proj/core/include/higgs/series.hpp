#pragma once

#include <string_view>

#include "higgs/multipoly.hpp"

namespace higgs {

/// Multivariate power series truncated at a total weighted degree (inclusive).
/// Weight-0 variables of the ring are coefficient-ring symbols and never
/// count towards truncation; they may carry negative exponents.
class TruncatedSeries {
 public:
  TruncatedSeries(MultiPoly terms, long truncation);

  static TruncatedSeries constant(RingPtr ring, const Rational& c, long truncation);
  static TruncatedSeries variable(RingPtr ring, std::string_view name, long truncation);

  const MultiPoly& poly() const { return p_; }
  const RingPtr& ring() const { return p_.ring(); }
  long truncation() const { return trunc_; }

  /// Terms of weighted degree 0, i.e. the coefficient-ring constant.
  MultiPoly constantPart() const { return p_.homogeneousPart(0); }
  MultiPoly homogeneousPart(long d) const { return p_.homogeneousPart(d); }

  TruncatedSeries withTruncation(long t) const;

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries operator-() const { return TruncatedSeries(-p_, trunc_); }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  /// Multiplication by an exact polynomial (e.g. a coefficient-ring scalar).
  friend TruncatedSeries operator*(const TruncatedSeries& a, const MultiPoly& b);
  friend TruncatedSeries operator*(const MultiPoly& b, const TruncatedSeries& a) { return a * b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& s) {
    a.p_ *= s;
    return a;
  }
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  MultiPoly p_;
  long trunc_;
};

/// Requires a nonzero rational constant part (NotAUnit).
TruncatedSeries seriesInverse(const TruncatedSeries& f);
/// Requires zero constant part (NonzeroConstant).
TruncatedSeries seriesExp(const TruncatedSeries& f);
/// Requires constant part 1 (NotAUnit).
TruncatedSeries seriesLog(const TruncatedSeries& f);
/// Requires constant part 1 (NotAUnit).
TruncatedSeries seriesSqrt(const TruncatedSeries& f);
/// f^e = exp(e * log f) for an arbitrary ring element e; f needs constant part 1.
TruncatedSeries seriesPow(const TruncatedSeries& f, const MultiPoly& exponent);
TruncatedSeries seriesPow(const TruncatedSeries& f, int exponent);

/// Exact coefficient of var^n, as a series in the remaining variables.
/// Throws TruncationExceeded when n is beyond the truncation budget.
TruncatedSeries seriesCoeff(const TruncatedSeries& f, std::string_view var, int n);

/// var^shift * body: a Laurent window in one distinguished variable.
class LaurentSeries {
 public:
  LaurentSeries(TruncatedSeries body, std::string_view var, int shift);

  const TruncatedSeries& body() const { return body_; }
  std::size_t var() const { return var_; }
  int shift() const { return shift_; }
  /// Lowest exponent representable in the window.
  int floor() const { return shift_; }
  /// Highest exponent known exactly.
  int ceiling() const;

  /// Exact coefficient of var^k (k within the window).
  MultiPoly coefficient(int k) const;

 private:
  TruncatedSeries body_;
  std::size_t var_;
  int shift_;
};

/// Coefficient of var^-1. Terms absent from the window contribute zero.
MultiPoly residueAtZero(const LaurentSeries& f);

}  // namespace higgs
