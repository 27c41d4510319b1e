#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "higgs/rational.hpp"

namespace higgs {

/// A ring variable. Weight is the variable's degree in the active grading;
/// weight-0 variables act as coefficient-ring symbols for truncation purposes.
struct VarSpec {
  std::string name;
  int weight = 1;

  friend bool operator==(const VarSpec&, const VarSpec&) = default;
};

inline constexpr std::size_t kMaxVars = 8;

/// Dense exponent vector; slots beyond the ring's arity stay zero. Exponents
/// may be negative (Laurent variables).
struct Monomial {
  std::array<std::int32_t, kMaxVars> e{};

  std::int32_t& operator[](std::size_t i) { return e[i]; }
  std::int32_t operator[](std::size_t i) const { return e[i]; }

  bool is_one() const;
  /// Componentwise a <= b.
  bool divides(const Monomial& b) const;
  bool coprime(const Monomial& b) const;
  bool has_negative() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Ordered list of variables. Immutable once built; shared between all
/// polynomials over it.
class Ring {
 public:
  explicit Ring(std::vector<VarSpec> vars);

  std::size_t arity() const { return vars_.size(); }
  const VarSpec& var(std::size_t i) const { return vars_[i]; }
  const std::vector<VarSpec>& vars() const { return vars_; }
  std::optional<std::size_t> index(std::string_view name) const;
  std::size_t require(std::string_view name) const;

  long degree(const Monomial& m) const;

  /// Weighted graded lexicographic comparison: weighted degree first, then
  /// exponents in declaration order (earlier variables dominate).
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  /// "a:1,b:2,g:3"
  std::string descriptor() const;

  friend bool operator==(const Ring& a, const Ring& b) { return a.vars_ == b.vars_; }

 private:
  std::vector<VarSpec> vars_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr makeRing(std::vector<VarSpec> vars);

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Sparse multivariate polynomial with exact rational coefficients. Terms are
/// kept strictly decreasing in the ring's order with no zero coefficients, so
/// equality is structural.
class MultiPoly {
 public:
  explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}

  static MultiPoly constant(RingPtr ring, const Rational& c);
  static MultiPoly variable(RingPtr ring, std::string_view name);
  static MultiPoly variable(RingPtr ring, std::size_t index);
  static MultiPoly monomial(RingPtr ring, const Monomial& m, const Rational& c = Rational(1));
  /// Sorts and combines arbitrary terms.
  static MultiPoly fromTerms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  const Term& leading() const { return terms_.front(); }
  const Monomial& leadingMonomial() const { return terms_.front().mono; }
  const Rational& leadingCoeff() const { return terms_.front().coeff; }

  Rational coefficient(const Monomial& m) const;
  /// Rational constant term.
  Rational constantTerm() const;

  /// Highest / lowest weighted degree; throws on zero polynomial.
  long degree() const;
  long lowDegree() const;
  bool isHomogeneous() const;
  MultiPoly homogeneousPart(long d) const;
  /// Drops terms of weighted degree > d.
  MultiPoly truncated(long d) const;

  /// Coefficient of var^exponent as a polynomial in the remaining variables
  /// (same ring, that variable's exponent set to zero).
  MultiPoly coefficientOf(std::size_t var, int exponent) const;
  int maxExponent(std::size_t var) const;
  int minExponent(std::size_t var) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& s);
  MultiPoly operator-() const;

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
  friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  /// a*m*c for a monomial m and scalar c.
  MultiPoly mulTerm(const Monomial& m, const Rational& c) const;
  /// Product keeping only terms of weighted degree <= maxDegree.
  static MultiPoly mulTruncated(const MultiPoly& a, const MultiPoly& b, long maxDegree);

  static MultiPoly pow(const MultiPoly& p, int e);

  /// Removes and returns the leading term.
  Term popLeading();

  /// Divides all coefficients by the leading coefficient.
  MultiPoly monic() const;

  /// Canonical text: terms in decreasing order, "3/2*a^2*b + -1*g".
  std::string to_string() const;

 private:
  MultiPoly(RingPtr ring, std::vector<Term> sorted) : ring_(std::move(ring)), terms_(std::move(sorted)) {}
  void requireSameRing(const MultiPoly& o) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Parses the canonical text format over the given ring. Also accepts terms
/// without an explicit coefficient ("a*b").
MultiPoly parsePoly(const RingPtr& ring, std::string_view text);

/// Ring homomorphism sending source variable i to images[i]. Negative
/// exponents use inverseImages[i], which must then be provided.
MultiPoly substitute(const MultiPoly& p, const RingPtr& target, std::span<const MultiPoly> images,
                     std::span<const MultiPoly> inverseImages = {});

/// Re-expresses p over target, matching variables by name. Variables that
/// never occur in p need not exist in target.
MultiPoly embed(const MultiPoly& p, const RingPtr& target);

}  // namespace higgs
