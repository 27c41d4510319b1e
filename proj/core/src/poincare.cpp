#include "higgs/poincare.hpp"

#include <array>
#include <sstream>

#include "higgs/error.hpp"
#include "higgs/series.hpp"

namespace higgs {

namespace {

struct SpaceEntry {
  SpaceId id;
  std::string_view name;
};

constexpr std::array<SpaceEntry, 16> kSpaces{{
    {SpaceId::Jacobian, "J"},       {SpaceId::SymProd, "Sigma"},  {SpaceId::SymProdInfty, "SigmaInf"},
    {SpaceId::BG, "BG"},            {SpaceId::BGbar, "BGbar"},    {SpaceId::N, "N"},
    {SpaceId::Ntilde, "Ntilde"},    {SpaceId::F, "F"},            {SpaceId::M, "M"},
    {SpaceId::Mtilde, "Mtilde"},    {SpaceId::MGammaInv, "MGamma"}, {SpaceId::Mk, "Mk"},
    {SpaceId::MtildeK, "MtildeK"},  {SpaceId::Z, "Z"},            {SpaceId::Mbar, "Mbar"},
    {SpaceId::MtildeInfty, "MtildeInf"},
}};

UniPoly t() { return UniPoly{0, 1}; }
UniPoly onePlusT() { return UniPoly{1, 1}; }
UniPoly tPow(int e) { return UniPoly::monomial(Rational(1), e); }

UniPoly jacobian(int g) { return UniPoly::pow(onePlusT(), 2 * g); }

void requireGenus(int g) {
  if (g < 2) throw Error(ErrorKind::InvalidArgument, "genus must be >= 2, got " + std::to_string(g));
}

int requireParam(const std::optional<int>& v, const char* name, SpaceId id) {
  if (!v)
    throw Error(ErrorKind::InvalidArgument,
                "space " + std::string(spaceName(id)) + " needs parameter " + std::string(name));
  return *v;
}

void requireD(int g, int d, int maxD) {
  if (d < 1 || d > maxD)
    throw Error(ErrorKind::InvalidArgument,
                "d must satisfy 1 <= d <= " + std::to_string(maxD) + " at genus " + std::to_string(g));
}

UniPoly pN(int g) {
  const UniPoly num = UniPoly::pow(UniPoly{1, 0, 0, 1}, 2 * g) - tPow(2 * g) * UniPoly::pow(onePlusT(), 2 * g);
  const UniPoly den = UniPoly{1, 0, -1} * UniPoly{1, 0, 0, 0, -1};
  return exactDiv(num, den);
}

UniPoly pF(int g, int d) {
  const int dbar = 2 * g - 2 * d - 1;
  Rational nonInvariant = (Rational::pow(Rational(2), 2 * g) - Rational(1)) * binomial(2 * g - 2, dbar);
  return symProdCoeffForm(g, dbar) + UniPoly::monomial(nonInvariant, dbar);
}

UniPoly pMGamma(int g) {
  UniPoly p = pN(g);
  for (int d = 1; d <= g - 1; ++d) p += tPow(2 * (g + 2 * d - 2)) * symProdCoeffForm(g, 2 * g - 2 * d - 1);
  return p;
}

UniPoly pM(int g) {
  UniPoly p = pN(g);
  for (int d = 1; d <= g - 1; ++d) p += tPow(2 * (g + 2 * d - 2)) * pF(g, d);
  return p;
}

UniPoly pZ(int g) {
  const UniPoly den{-1, 0, 1};
  UniPoly p = exactDiv(tPow(6 * g - 6) - UniPoly{1}, den) * pN(g);
  for (int d = 1; d <= g - 1; ++d) p += exactDiv(tPow(6 * g - 6) - tPow(2 * g - 4 + 4 * d), den) * pF(g, d);
  return p;
}

UniPoly pBG(int g, int D) {
  const UniPoly num = UniPoly::pow(onePlusT() * UniPoly{1, 0, 0, 1}, 2 * g);
  const UniPoly den = UniPoly::pow(UniPoly{1, 0, -1}, 2) * UniPoly{1, 0, 0, 0, -1};
  return seriesDiv(num, den, D);
}

UniPoly pBGbar(int g, int D) {
  const UniPoly num = UniPoly::pow(onePlusT() * UniPoly{1, 0, 0, 1}, 2 * g);
  const UniPoly den = UniPoly{1, 0, -1} * UniPoly{1, 0, 0, 0, -1};
  return seriesDiv(num, den, D);
}

UniPoly pSigmaInf(int g, int D) { return seriesDiv(jacobian(g), UniPoly{1, 0, -1}, D); }

UniPoly pMtildeInf(int g, int D) {
  UniPoly p = (jacobian(g) * pN(g)).truncated(D);
  const UniPoly fibre = (jacobian(g) * pSigmaInf(g, D)).truncated(D);
  for (int d = 1; 2 * (g + 2 * d - 2) <= D; ++d) p += (tPow(2 * (g + 2 * d - 2)) * fibre).truncated(D);
  return p;
}

}  // namespace

std::string_view spaceName(SpaceId id) {
  for (const auto& e : kSpaces)
    if (e.id == id) return e.name;
  return "?";
}

std::optional<SpaceId> parseSpaceName(std::string_view name) {
  for (const auto& e : kSpaces)
    if (e.name == name) return e.id;
  return std::nullopt;
}

const std::vector<SpaceId>& allSpaces() {
  static const std::vector<SpaceId> all = [] {
    std::vector<SpaceId> v;
    for (const auto& e : kSpaces) v.push_back(e.id);
    return v;
  }();
  return all;
}

UniPoly symProdCoeffForm(int g, int n) {
  if (n < 0) return {};
  const RingPtr ring = makeRing({{"x", 1}, {"t", 0}});
  const MultiPoly x = MultiPoly::variable(ring, "x");
  const MultiPoly tv = MultiPoly::variable(ring, "t");
  const MultiPoly one = MultiPoly::constant(ring, Rational(1));
  const TruncatedSeries numerator(MultiPoly::pow(one + x * tv, 2 * g), n);
  const TruncatedSeries denominator((one - x) * (one - x * tv * tv), n);
  const TruncatedSeries gen = numerator * seriesInverse(denominator);
  const MultiPoly coeff = seriesCoeff(gen, "x", n).poly();
  const std::size_t ti = ring->require("t");
  std::vector<Rational> c;
  if (!coeff.is_zero()) c.resize(static_cast<std::size_t>(coeff.maxExponent(ti)) + 1);
  for (const auto& term : coeff.terms()) c[static_cast<std::size_t>(term.mono[ti])] = term.coeff;
  return UniPoly(std::move(c));
}

UniPoly symProdFibrationForm(int g, int n) {
  if (n <= 2 * g - 2)
    throw Error(ErrorKind::InvalidArgument, "fibration form needs n > 2g-2");
  return exactDiv(jacobian(g) * (UniPoly{1} - tPow(2 * (n - g + 1))), UniPoly{1, 0, -1});
}

UniPoly mkInvariant(int g, int k) {
  requireGenus(g);
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "pole order must be >= 0");
  UniPoly p = pN(g);
  for (int d = 1; d <= g - 1 + k; ++d) {
    const int m = 2 * g - 2 * d - 1 + k;
    if (m < 0) continue;
    p += tPow(2 * (g + 2 * d - 2)) * symProdCoeffForm(g, m);
  }
  return p;
}

UniPoly poincare(SpaceId space, const GenusParams& params) {
  const int g = params.g;
  requireGenus(g);
  switch (space) {
    case SpaceId::Jacobian: return jacobian(g);
    case SpaceId::SymProd: {
      const int n = requireParam(params.n, "n", space);
      if (n < 0) throw Error(ErrorKind::InvalidArgument, "n must be >= 0");
      return symProdCoeffForm(g, n);
    }
    case SpaceId::SymProdInfty: return pSigmaInf(g, requireParam(params.trunc, "trunc", space));
    case SpaceId::BG: return pBG(g, requireParam(params.trunc, "trunc", space));
    case SpaceId::BGbar: return pBGbar(g, requireParam(params.trunc, "trunc", space));
    case SpaceId::N: return pN(g);
    case SpaceId::Ntilde: return jacobian(g) * pN(g);
    case SpaceId::F: {
      const int d = requireParam(params.d, "d", space);
      requireD(g, d, g - 1);
      return pF(g, d);
    }
    case SpaceId::M: return pM(g);
    case SpaceId::Mtilde: return jacobian(g) * pMGamma(g);
    case SpaceId::MGammaInv: return pMGamma(g);
    case SpaceId::Mk: return mkInvariant(g, requireParam(params.k, "k", space));
    case SpaceId::MtildeK: return jacobian(g) * mkInvariant(g, requireParam(params.k, "k", space));
    case SpaceId::Z: return pZ(g);
    case SpaceId::Mbar: return pM(g) + tPow(2) * pZ(g);
    case SpaceId::MtildeInfty: return pMtildeInf(g, requireParam(params.trunc, "trunc", space));
  }
  throw Error(ErrorKind::InvalidArgument, "unknown space");
}

UniPoly assembleStratification(const std::vector<Stratum>& strata) {
  if (strata.empty()) throw Error(ErrorKind::InvalidArgument, "empty stratification");
  UniPoly p;
  for (const auto& s : strata) {
    if (s.index < 0 || s.index % 2 != 0)
      throw Error(ErrorKind::InvalidArgument, "stratum index must be even and non-negative");
    p += s.poincare.shifted(s.index);
  }
  return p;
}

std::vector<Stratum> hitchinStrata(int g) {
  requireGenus(g);
  std::vector<Stratum> s{{pN(g), 0}};
  for (int d = 1; d <= g - 1; ++d) s.push_back({pF(g, d), 2 * (g + 2 * d - 2)});
  return s;
}

std::vector<Stratum> compactifiedStrata(int g) {
  auto s = hitchinStrata(g);
  s.push_back({pZ(g), 2});
  return s;
}

std::vector<Stratum> poleStrata(int g, int k) {
  requireGenus(g);
  std::vector<Stratum> s{{jacobian(g) * pN(g), 0}};
  for (int d = 1; d <= g - 1 + k; ++d) {
    const int m = 2 * g - 2 * d - 1 + k;
    if (m < 0) continue;
    s.push_back({symProdCoeffForm(g, m) * jacobian(g), 2 * (g + 2 * d - 2)});
  }
  return s;
}

UniPoly invariantPoincareSymProd(int g, int n) {
  requireGenus(g);
  if (n < 0 || n > 2 * g - 2)
    throw Error(ErrorKind::InvalidArgument, "invariant Poincare polynomial of Sigma_n needs 0 <= n <= 2g-2");
  UniPoly p;
  for (int q = 0; q <= n; ++q)
    for (int s = 0; q + 2 * s <= n; ++s) p += tPow(q + s);
  return p;
}

UniPoly invariantPoincareN(int g) {
  requireGenus(g);
  UniPoly p;
  for (int r = 0; r <= g - 1; ++r)
    for (int s = 0; r + s <= g - 1; ++s)
      for (int u = 0; r + s + u <= g - 1; ++u) p += tPow(r + 2 * s + 3 * u);
  return p;
}

UniPoly invariantPoincareM(int g) {
  requireGenus(g);
  UniPoly p;
  for (int r = 0; r <= 3 * g - 3; ++r)
    for (int s = 0; r + 3 * s <= 3 * g - 3; ++s)
      for (int u = 0; r + 3 * s + 3 * u <= 3 * g - 3; ++u) p += tPow(r + 2 * s + 3 * u);
  return p;
}

bool isPalindromic(const UniPoly& p, int degree) {
  if (p.degree() > degree) return false;
  return p.reversed(degree) == p;
}

bool hasNonNegativeIntegerCoefficients(const UniPoly& p) {
  for (const auto& c : p.coefficients())
    if (!c.is_integer() || c.sign() < 0) return false;
  return true;
}

bool IdentityReport::allPassed() const {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

std::optional<int> stabilizationK(int g, int degree, int maxK) {
  const UniPoly target = pBGbar(g, degree);
  for (int k = 0; k <= maxK; ++k)
    if ((jacobian(g) * mkInvariant(g, k)).truncated(degree) == target) return k;
  return std::nullopt;
}

IdentityReport identitySuite(int g, int D, int maxK) {
  requireGenus(g);
  IdentityReport rep;
  rep.g = g;
  rep.stabilizationDegree = D;
  auto check = [&](std::string name, bool ok, std::string detail = {}) {
    rep.results.push_back({std::move(name), ok, std::move(detail)});
  };
  auto differ = [](const UniPoly& a, const UniPoly& b) { return a.to_string() + " != " + b.to_string(); };

  {
    const UniPoly lhs = (UniPoly{1, 0, -1} * pBG(g, D)).truncated(D);
    const UniPoly rhs = pBGbar(g, D);
    check("bgbar_product", lhs == rhs, lhs == rhs ? "" : differ(lhs, rhs));
  }
  {
    const UniPoly assembled = assembleStratification(compactifiedStrata(g));
    const UniPoly direct = pM(g) + tPow(2) * pZ(g);
    check("mbar_decomposition", assembled == direct, assembled == direct ? direct.to_string() : differ(assembled, direct));
  }
  {
    const Rational chi = pN(g).eval(Rational(-1));
    check("euler_characteristic_N", chi.is_zero(), "P_{-1}(N) = " + chi.to_string());
  }
  check("palindromic_N", isPalindromic(pN(g), 6 * g - 6));
  {
    bool ok = true;
    std::string bad;
    for (int n = 0; n <= 2 * g + 2; ++n)
      if (!isPalindromic(symProdCoeffForm(g, n), 2 * n)) {
        ok = false;
        bad += " n=" + std::to_string(n);
      }
    check("palindromic_SymProd", ok, bad);
  }
  check("palindromic_Z", isPalindromic(pZ(g), 2 * (6 * g - 7)));
  check("palindromic_Mbar", isPalindromic(pM(g) + tPow(2) * pZ(g), 2 * (6 * g - 6)));
  check("split_Ntilde", poincare(SpaceId::Ntilde, {g}) == jacobian(g) * pN(g));
  {
    UniPoly nonInvariant;
    for (int d = 1; d <= g - 1; ++d) {
      const int dbar = 2 * g - 2 * d - 1;
      nonInvariant += UniPoly::monomial(
          (Rational::pow(Rational(2), 2 * g) - Rational(1)) * binomial(2 * g - 2, dbar), dbar + 2 * (g + 2 * d - 2));
    }
    const UniPoly viaM = pM(g) - nonInvariant;
    check("gamma_invariant_part", viaM == pMGamma(g), viaM == pMGamma(g) ? "" : differ(viaM, pMGamma(g)));
    check("split_Mtilde", poincare(SpaceId::Mtilde, {g}) == jacobian(g) * viaM);
  }
  {
    UniPoly rhs = invariantPoincareN(g);
    for (int d = 1; d <= g - 1; ++d) rhs += invariantPoincareSymProd(g, 2 * g - 2 * d - 1).shifted(g + 2 * d - 2);
    const UniPoly lhs = invariantPoincareM(g);
    check("invariant_M_decomposition", lhs == rhs, lhs == rhs ? "" : differ(lhs, rhs));
  }
  {
    bool ok = true;
    std::string bad;
    for (int n = 2 * g - 1; n <= 2 * g + 3; ++n)
      if (symProdCoeffForm(g, n) != symProdFibrationForm(g, n)) {
        ok = false;
        bad += " n=" + std::to_string(n);
      }
    check("symprod_fibration_form", ok, bad);
  }
  check("stratification_M", assembleStratification(hitchinStrata(g)) == pM(g));
  {
    bool ok = true;
    for (int k = 0; k <= 3; ++k)
      ok = ok && assembleStratification(poleStrata(g, k)) == jacobian(g) * mkInvariant(g, k);
    check("stratification_MtildeK", ok);
  }
  check("Mk_zero_is_MGamma", mkInvariant(g, 0) == pMGamma(g));
  {
    const UniPoly m = pM(g);
    const bool ok = m.degree() == 6 * g - 6 && m[6 * g - 6] == Rational(g);
    check("top_betti_M", ok, "b_{6g-6}(M) = " + m[6 * g - 6].to_string());
  }
  {
    bool ok = true;
    for (const auto& p : {pN(g), pM(g), pZ(g), pMGamma(g), jacobian(g) * pN(g)})
      ok = ok && hasNonNegativeIntegerCoefficients(p);
    check("betti_nonnegative", ok);
  }
  {
    const UniPoly lim = pMtildeInf(g, D);
    const UniPoly bg = pBGbar(g, D);
    check("MtildeInfty_limit", lim == bg, lim == bg ? "" : differ(lim, bg));
  }
  rep.stabilizationK = stabilizationK(g, D, maxK);
  {
    std::ostringstream os;
    if (rep.stabilizationK) os << "minimal k = " << *rep.stabilizationK << " through degree " << D;
    else os << "no k <= " << maxK << " agrees through degree " << D;
    check("stabilization", rep.stabilizationK.has_value(), os.str());
  }
  return rep;
}

}  // namespace higgs
