#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "higgs/unipoly.hpp"

namespace higgs {

/// Spaces whose Poincare polynomials are known in closed form. Infinite
/// dimensional ones (SymProdInfty, BG, BGbar, MtildeInfty) are returned
/// truncated at a caller-supplied degree.
enum class SpaceId {
  Jacobian,
  SymProd,
  SymProdInfty,
  BG,
  BGbar,
  N,
  Ntilde,
  F,
  M,
  Mtilde,
  MGammaInv,
  Mk,
  MtildeK,
  Z,
  Mbar,
  MtildeInfty,
};

/// CLI spelling ("J", "Sigma", "SigmaInf", ...).
std::string_view spaceName(SpaceId id);
std::optional<SpaceId> parseSpaceName(std::string_view name);
const std::vector<SpaceId>& allSpaces();

struct GenusParams {
  int g = 2;
  std::optional<int> n;      // symmetric product index
  std::optional<int> d;      // fixed point component / stratum index
  std::optional<int> k;      // pole order
  std::optional<int> trunc;  // truncation degree for infinite spaces

  /// d-bar = 2g - 2d - 1
  int dbar(int dValue) const { return 2 * g - 2 * dValue - 1; }
};

/// Poincare polynomial in the cohomological variable t. Mk is the
/// Gamma-invariant part P_t(M_k)^Gamma; MGammaInv is P_t(M)^Gamma.
UniPoly poincare(SpaceId space, const GenusParams& params);

/// P_t(Sigma_n) as the x^n coefficient of (1+xt)^2g / ((1-x)(1-xt^2)).
UniPoly symProdCoeffForm(int g, int n);
/// Abel-Jacobi closed form, valid for n > 2g-2.
UniPoly symProdFibrationForm(int g, int n);

/// Gamma-invariant Poincare polynomial of the k-pole Higgs moduli space:
/// P(N) + sum_{d=1}^{g-1+k} t^{2(g+2d-2)} P(Sigma_{dbar+k}), with
/// P(Sigma_m) = 0 for m < 0 (no fixed points there).
UniPoly mkInvariant(int g, int k);

struct Stratum {
  UniPoly poincare;
  int index = 0;  // real codimension, even
};

/// Perfect stratification: sum over strata of t^index * P(stratum).
UniPoly assembleStratification(const std::vector<Stratum>& strata);

/// Hitchin stratification of M: N at index 0, F_d at 2(g+2d-2).
std::vector<Stratum> hitchinStrata(int g);
/// Same stratification with the compactifying divisor Z at index 2.
std::vector<Stratum> compactifiedStrata(int g);
/// Strata of Mtilde_k: Ntilde at 0, Sigma_{dbar+k} x J at 2(g+2d-2).
std::vector<Stratum> poleStrata(int g, int k);

/// Gamma-invariant / Sp-invariant polynomials in the complex variable T.
UniPoly invariantPoincareSymProd(int g, int n);
UniPoly invariantPoincareN(int g);
UniPoly invariantPoincareM(int g);

struct IdentityResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct IdentityReport {
  int g = 2;
  int stabilizationDegree = 0;
  std::optional<int> stabilizationK;  // minimal k reaching agreement
  std::vector<IdentityResult> results;

  bool allPassed() const;
};

/// Runs the consistency identities among the closed forms for genus g.
IdentityReport identitySuite(int g, int stabilizationDegree, int maxK = 64);

/// Smallest k with P(Mtilde_k) == P(BGbar) through degree D, searching k <= maxK.
std::optional<int> stabilizationK(int g, int degree, int maxK);

/// p(t) == t^deg p(1/t)
bool isPalindromic(const UniPoly& p, int degree);
bool hasNonNegativeIntegerCoefficients(const UniPoly& p);

}  // namespace higgs
