#pragma once

#include <string>

#include "higgs/multipoly.hpp"

namespace higgs {

/// Element of a coefficient ring extended by s = sqrt(beta) with integer
/// (possibly negative) s-exponents. The interpretation is s^2 = beta.
class SqrtLaurentElem {
 public:
  /// sVar names the square-root variable inside value's ring.
  SqrtLaurentElem(MultiPoly value, std::string_view sVar);

  /// Lifts a polynomial in beta (variable betaVar) into a ring containing
  /// sVar, replacing beta^k by s^(2k) and matching the rest by name.
  static SqrtLaurentElem fromBeta(const MultiPoly& p, std::string_view betaVar, const RingPtr& target,
                                  std::string_view sVar);

  const MultiPoly& value() const { return value_; }
  std::size_t sIndex() const { return s_; }

  /// Lowest s-exponent present (0 for the zero element).
  int windowFloor() const;

  /// True iff every s-exponent is even and non-negative.
  bool isPolynomialInBeta() const;

  /// Converts s^(2k) to beta^k over target (other variables by name).
  /// Throws InvalidArgument unless isPolynomialInBeta().
  MultiPoly toBeta(const RingPtr& target, std::string_view betaVar) const;

  friend bool operator==(const SqrtLaurentElem&, const SqrtLaurentElem&) = default;

 private:
  MultiPoly value_;
  std::size_t s_;
};

}  // namespace higgs
