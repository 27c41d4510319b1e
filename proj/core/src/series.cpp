#include "higgs/series.hpp"

#include <algorithm>

#include "higgs/error.hpp"

namespace higgs {

namespace {

void requireNonNegativeDegrees(const MultiPoly& p) {
  if (!p.is_zero() && p.lowDegree() < 0)
    throw Error(ErrorKind::InvalidArgument, "series term of negative weighted degree");
}

void requireGrading(const Ring& ring) {
  for (const auto& v : ring.vars())
    if (v.weight > 0) return;
  throw Error(ErrorKind::InvalidArgument, "series ring has no positively weighted variable");
}

// Positive part h of f = c + h, where c is the weight-0 part.
TruncatedSeries positivePart(const TruncatedSeries& f) {
  return TruncatedSeries(f.poly() - f.constantPart(), f.truncation());
}

// sum_k coeffs[k] * h^k for h with zero constant part.
TruncatedSeries composeWith(const TruncatedSeries& h, const std::vector<Rational>& coeffs) {
  const long trunc = h.truncation();
  TruncatedSeries acc = TruncatedSeries::constant(h.ring(), coeffs.empty() ? Rational(0) : coeffs[0], trunc);
  TruncatedSeries power = TruncatedSeries::constant(h.ring(), Rational(1), trunc);
  for (std::size_t k = 1; k < coeffs.size(); ++k) {
    power = power * h;
    if (power.poly().is_zero()) break;
    if (!coeffs[k].is_zero()) acc += power * coeffs[k];
  }
  return acc;
}

std::size_t termsNeeded(const TruncatedSeries& h) {
  // Every positive weight is >= 1, so h^k has degree >= k.
  return static_cast<std::size_t>(std::max<long>(h.truncation(), 0)) + 1;
}

}  // namespace

TruncatedSeries::TruncatedSeries(MultiPoly terms, long truncation)
    : p_(terms.truncated(truncation)), trunc_(truncation) {
  if (truncation < 0) throw Error(ErrorKind::InvalidArgument, "negative truncation degree");
  requireGrading(*p_.ring());
  requireNonNegativeDegrees(p_);
}

TruncatedSeries TruncatedSeries::constant(RingPtr ring, const Rational& c, long truncation) {
  return TruncatedSeries(MultiPoly::constant(std::move(ring), c), truncation);
}

TruncatedSeries TruncatedSeries::variable(RingPtr ring, std::string_view name, long truncation) {
  return TruncatedSeries(MultiPoly::variable(std::move(ring), name), truncation);
}

TruncatedSeries TruncatedSeries::withTruncation(long t) const {
  return TruncatedSeries(p_, std::min(t, trunc_));
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  trunc_ = std::min(trunc_, o.trunc_);
  p_ = (p_ + o.p_).truncated(trunc_);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  trunc_ = std::min(trunc_, o.trunc_);
  p_ = (p_ - o.p_).truncated(trunc_);
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const long t = std::min(a.trunc_, b.trunc_);
  return TruncatedSeries(MultiPoly::mulTruncated(a.p_, b.p_, t), t);
}

TruncatedSeries operator*(const TruncatedSeries& a, const MultiPoly& b) {
  return TruncatedSeries(MultiPoly::mulTruncated(a.p_, b, a.trunc_), a.trunc_);
}

TruncatedSeries seriesInverse(const TruncatedSeries& f) {
  const MultiPoly c = f.constantPart();
  if (c.is_zero() || !c.is_constant())
    throw Error(ErrorKind::NotAUnit, "series constant part '" + c.to_string() + "' is not a nonzero rational");
  const Rational inv = Rational(1) / c.constantTerm();
  // 1/(c + h) = (1/c) * sum (-h/c)^k
  const TruncatedSeries h = positivePart(f) * inv;
  std::vector<Rational> coeffs(termsNeeded(h));
  for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] = (k % 2 == 0) ? Rational(1) : Rational(-1);
  return composeWith(h, coeffs) * inv;
}

TruncatedSeries seriesExp(const TruncatedSeries& f) {
  const MultiPoly c = f.constantPart();
  if (!c.is_zero()) throw Error(ErrorKind::NonzeroConstant, "exp of series with constant part " + c.to_string());
  std::vector<Rational> coeffs(termsNeeded(f));
  Rational fact(1);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (k) fact *= Rational(static_cast<long>(k));
    coeffs[k] = Rational(1) / fact;
  }
  return composeWith(f, coeffs);
}

namespace {

void requireUnitConstant(const TruncatedSeries& f, const char* op) {
  const MultiPoly c = f.constantPart();
  if (!(c.is_constant() && c.constantTerm().is_one()))
    throw Error(ErrorKind::NotAUnit, std::string(op) + " needs constant part 1, got " + c.to_string());
}

}  // namespace

TruncatedSeries seriesLog(const TruncatedSeries& f) {
  requireUnitConstant(f, "log");
  const TruncatedSeries h = positivePart(f);
  std::vector<Rational> coeffs(termsNeeded(h));
  for (std::size_t k = 1; k < coeffs.size(); ++k)
    coeffs[k] = Rational((k % 2 == 1) ? 1 : -1, static_cast<long>(k));
  return composeWith(h, coeffs);
}

TruncatedSeries seriesSqrt(const TruncatedSeries& f) {
  requireUnitConstant(f, "sqrt");
  const TruncatedSeries h = positivePart(f);
  std::vector<Rational> coeffs(termsNeeded(h));
  for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] = binomial(Rational(1, 2), static_cast<long>(k));
  return composeWith(h, coeffs);
}

TruncatedSeries seriesPow(const TruncatedSeries& f, const MultiPoly& exponent) {
  return seriesExp(seriesLog(f) * exponent);
}

TruncatedSeries seriesPow(const TruncatedSeries& f, int exponent) {
  if (exponent < 0) return seriesPow(seriesInverse(f), -exponent);
  TruncatedSeries result = TruncatedSeries::constant(f.ring(), Rational(1), f.truncation());
  TruncatedSeries base = f;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

TruncatedSeries seriesCoeff(const TruncatedSeries& f, std::string_view var, int n) {
  const std::size_t i = f.ring()->require(var);
  const long w = f.ring()->var(i).weight;
  if (w <= 0) throw Error(ErrorKind::InvalidArgument, "coefficient extraction needs a graded variable");
  if (n < 0) return TruncatedSeries(MultiPoly(f.ring()), f.truncation());
  const long budget = f.truncation() - w * n;
  if (budget < 0)
    throw Error(ErrorKind::TruncationExceeded, "coefficient of " + std::string(var) + "^" + std::to_string(n) +
                                                   " beyond truncation " + std::to_string(f.truncation()));
  return TruncatedSeries(f.poly().coefficientOf(i, n), budget);
}

LaurentSeries::LaurentSeries(TruncatedSeries body, std::string_view var, int shift)
    : body_(std::move(body)), var_(body_.ring()->require(var)), shift_(shift) {
  if (body_.ring()->var(var_).weight <= 0)
    throw Error(ErrorKind::InvalidArgument, "Laurent variable must be graded");
}

int LaurentSeries::ceiling() const {
  return shift_ + static_cast<int>(body_.truncation() / body_.ring()->var(var_).weight);
}

MultiPoly LaurentSeries::coefficient(int k) const {
  if (k < floor()) return MultiPoly(body_.ring());
  if (k > ceiling())
    throw Error(ErrorKind::TruncationExceeded,
                "coefficient " + std::to_string(k) + " above window ceiling " + std::to_string(ceiling()));
  return body_.poly().coefficientOf(var_, k - shift_);
}

MultiPoly residueAtZero(const LaurentSeries& f) { return f.coefficient(-1); }

}  // namespace higgs
