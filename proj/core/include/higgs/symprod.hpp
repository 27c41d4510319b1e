#pragma once

#include <optional>
#include <string>
#include <vector>

#include "higgs/multipoly.hpp"
#include "higgs/unipoly.hpp"

namespace higgs {

/// Ring of invariant classes on a symmetric product: eta and sigma, both of
/// T-weight 1.
RingPtr etaSigmaRing();
/// eta, sigma and the equivariant parameter u, all of T-weight 1.
RingPtr etaSigmaURing();

/// A(eta) exp(B(eta) sigma) [Sigma_n]: the coefficient of eta^n in
/// A(eta) (1 + eta B(eta))^g.
Rational zagierEval(const UniPoly& a, const UniPoly& b, int n, int g);

/// eta^a sigma^b [Sigma_n] = b! C(g, b) when a + b = n, else 0.
Rational pairMonomial(int a, int b, int n, int g);

/// Linear extension of pairMonomial to a polynomial in eta and sigma. The
/// ring must name both variables; any other variable must be absent.
Rational evaluateOnSymProd(const MultiPoly& p, int n, int g);

struct PairingWitness {
  long degree = 0;  // T-degree of the failing homogeneous component
  int i = 0;        // exponent of eta in the complementary monomial
  int j = 0;        // exponent of sigma
  Rational value;
  std::string to_string() const;
};

/// First complementary monomial eta^i sigma^j pairing nonzero with some
/// homogeneous component of p, or nothing when p is zero in H_I(Sigma_n).
std::optional<PairingWitness> zeroTestWitness(const MultiPoly& p, int n, int g);
bool isZeroInvariant(const MultiPoly& p, int n, int g);

/// Degree-l part of exp(sigma) eta^k / (1+eta)^m over etaSigmaRing(), with
/// sigma powers above min(g, n) dropped.
MultiPoly vanishingLemmaClass(int n, int k, int m, int l, int g);
bool vanishingLemmaHypotheses(int n, int k, int m, int l, int g);
bool vanishingLemmaCheck(int n, int k, int m, int l, int g);

struct GridEntry {
  int g, n, k, m, l;
  bool hypotheses;
  bool vanishes;
  std::optional<PairingWitness> witness;
};
/// All tuples with 2 <= g <= maxGenus, n <= 2g-2 and k, m, l <= 2g.
std::vector<GridEntry> vanishingLemmaGrid(int maxGenus);
std::vector<GridEntry> vanishingLemmaGrid(int g, int maxIndex);

/// e^{sigma u} (1 - (eta-u)(eta-2u))^{d-1} / (1 - eta(eta-u))^d over
/// etaSigmaURing(), truncated at T-degree 2g.
MultiPoly betaGRestrictionClass(int g, int d);

struct RestrictionWitness {
  int uPower = 0;
  PairingWitness pairing;
  std::string to_string() const;
};
/// Tests every u-coefficient of the degree-2g part of cls on
/// Sigma_{2g-2d-1}; returns the first failure.
std::optional<RestrictionWitness> restrictionWitness(const MultiPoly& cls, int g, int d);
bool betaGRestrictionCheck(int g, int d);

/// Summand i of the binomial expansion of the restriction class:
/// C(d+i-1, i) eta^{2i} e^{sigma u} (1+eta u)^{-(d+i)} (1-(eta-u)(eta-2u))^{d-1},
/// truncated at T-degree 2g.
MultiPoly betaGSummand(int g, int d, int i);
/// Same summand with the coefficient C(d+i, i) instead.
MultiPoly betaGSummandShiftedBinomial(int g, int d, int i);
/// Sum of betaGSummand over 0 <= i <= g equals betaGRestrictionClass.
bool betaGSumMatches(int g, int d);
/// Every summand individually vanishes in degree 2g.
bool betaGTermwiseCheck(int g, int d);

}  // namespace higgs
