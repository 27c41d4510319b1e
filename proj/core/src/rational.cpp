#include "higgs/rational.hpp"

#include <ostream>

#include "higgs/error.hpp"

namespace higgs {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::TruncationExceeded: return "TruncationExceeded";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::NonzeroConstant: return "NonzeroConstant";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(ErrorKind::Parse, "empty rational");
  const auto slash = s.find('/');
  auto valid_int = [](std::string_view part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!valid_int(s, true)) throw Error(ErrorKind::Parse, "bad rational '" + s + "'");
    if (s[0] == '+') s.erase(0, 1);
    return Rational(mpz_class(s, 10));
  }
  std::string num = s.substr(0, slash);
  std::string den = s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw Error(ErrorKind::Parse, "bad rational '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class d(den, 10);
  if (d == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  return Rational(mpq_class(mpz_class(num, 10), d));
}

std::string Rational::to_string() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::pow(const Rational& a, long e) {
  if (e < 0) {
    if (a.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero to a negative power");
    return Rational(1) / pow(a, -e);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), a.v_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), a.v_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(mpq_class(num, den));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational binomial(long a, long b) {
  if (b < 0 || a < 0 || b > a) return Rational(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return Rational(r);
}

Rational binomial(const Rational& x, long k) {
  if (k < 0) return Rational(0);
  Rational r(1);
  for (long i = 0; i < k; ++i) r *= (x - Rational(i)) / Rational(i + 1);
  return r;
}

Rational factorial(long n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "factorial of a negative number");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(r);
}

}  // namespace higgs
