#include "higgs/unipoly.hpp"

#include <algorithm>
#include <sstream>

#include "higgs/error.hpp"

namespace higgs {

UniPoly::UniPoly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, int exponent) {
  if (exponent < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent in UniPoly");
  std::vector<Rational> v(static_cast<std::size_t>(exponent) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UniPoly::operator[](int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
  return c_[static_cast<std::size_t>(i)];
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::truncated(int d) const {
  if (d < 0) return {};
  if (d >= degree()) return *this;
  return UniPoly(std::vector<Rational>(c_.begin(), c_.begin() + d + 1));
}

UniPoly UniPoly::shifted(int k) const {
  if (is_zero()) return {};
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "negative shift");
  std::vector<Rational> v(static_cast<std::size_t>(k));
  v.insert(v.end(), c_.begin(), c_.end());
  return UniPoly(std::move(v));
}

UniPoly UniPoly::reversed(int deg) const {
  if (degree() > deg) throw Error(ErrorKind::InvalidArgument, "reference degree below degree");
  std::vector<Rational> v(static_cast<std::size_t>(deg) + 1);
  for (int i = 0; i <= degree(); ++i) v[static_cast<std::size_t>(deg - i)] = c_[static_cast<std::size_t>(i)];
  return UniPoly(std::move(v));
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(v));
}

UniPoly UniPoly::pow(const UniPoly& p, int e) {
  if (e < 0) throw Error(ErrorKind::InvalidArgument, "negative power of UniPoly");
  UniPoly result = constant(Rational(1));
  UniPoly base = p;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= degree(); ++i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << c.to_string();
    if (i >= 1) os << '*' << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

DivMod divmod(const UniPoly& num, const UniPoly& den) {
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  const int dd = den.degree();
  std::vector<Rational> rem = num.coefficients();
  if (num.degree() < dd) return {UniPoly{}, num};
  std::vector<Rational> q(static_cast<std::size_t>(num.degree() - dd) + 1);
  const Rational lead = den[dd];
  for (int i = num.degree(); i >= dd; --i) {
    const Rational c = rem[static_cast<std::size_t>(i)] / lead;
    if (c.is_zero()) continue;
    q[static_cast<std::size_t>(i - dd)] = c;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= c * den[j];
  }
  return {UniPoly(std::move(q)), UniPoly(std::move(rem))};
}

UniPoly exactDiv(const UniPoly& num, const UniPoly& den) {
  auto [q, r] = divmod(num, den);
  if (!r.is_zero())
    throw Error(ErrorKind::NotDivisible, "(" + num.to_string() + ") / (" + den.to_string() +
                                             ") leaves remainder " + r.to_string());
  return q;
}

UniPoly seriesDiv(const UniPoly& num, const UniPoly& den, int d) {
  if (den[0].is_zero()) throw Error(ErrorKind::NotAUnit, "series denominator has zero constant term");
  if (d < 0) return {};
  std::vector<Rational> out(static_cast<std::size_t>(d) + 1);
  const Rational inv0 = Rational(1) / den[0];
  for (int i = 0; i <= d; ++i) {
    Rational acc = num[i];
    for (int j = 1; j <= std::min(i, den.degree()); ++j) acc -= den[j] * out[static_cast<std::size_t>(i - j)];
    out[static_cast<std::size_t>(i)] = acc * inv0;
  }
  return UniPoly(std::move(out));
}

}  // namespace higgs
