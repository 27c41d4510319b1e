#include "higgs/symprod.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "higgs/error.hpp"
#include "higgs/series.hpp"

namespace higgs {

namespace {

struct EtaSigmaSlots {
  std::size_t eta;
  std::size_t sigma;
};

EtaSigmaSlots slotsOf(const Ring& ring) {
  return {ring.require("eta"), ring.require("sigma")};
}

Rational pairTerms(const MultiPoly& p, EtaSigmaSlots s, int i, int j, int n, int g) {
  Rational total;
  for (const auto& term : p.terms())
    total += term.coeff * pairMonomial(term.mono[s.eta] + i, term.mono[s.sigma] + j, n, g);
  return total;
}

void requireOnlyEtaSigma(const MultiPoly& p, EtaSigmaSlots s) {
  const Ring& ring = *p.ring();
  for (const auto& term : p.terms())
    for (std::size_t v = 0; v < ring.arity(); ++v)
      if (v != s.eta && v != s.sigma && term.mono[v] != 0)
        throw Error(ErrorKind::InvalidArgument,
                    "class on a symmetric product may only involve eta and sigma, found " + ring.var(v).name);
}

MultiPoly var(const RingPtr& ring, std::string_view name) { return MultiPoly::variable(ring, name); }
MultiPoly one(const RingPtr& ring) { return MultiPoly::constant(ring, Rational(1)); }

// 1 - (eta - u)(eta - 2u)
MultiPoly numeratorBase(const RingPtr& r) {
  const MultiPoly eta = var(r, "eta"), u = var(r, "u");
  return one(r) - (eta - u) * (eta - u * Rational(2));
}

MultiPoly summand(int g, int d, int i, const Rational& coeff) {
  const RingPtr r = etaSigmaURing();
  const long trunc = 2L * g;
  const MultiPoly eta = var(r, "eta"), sigma = var(r, "sigma"), u = var(r, "u");
  const TruncatedSeries e = seriesExp(TruncatedSeries(sigma * u, trunc));
  const TruncatedSeries den = seriesInverse(seriesPow(TruncatedSeries(one(r) + eta * u, trunc), d + i));
  const TruncatedSeries num = seriesPow(TruncatedSeries(numeratorBase(r), trunc), d - 1);
  return (e * den * num * (MultiPoly::pow(eta, 2 * i) * coeff)).poly();
}

}  // namespace

RingPtr etaSigmaRing() {
  static const RingPtr r = makeRing({{"eta", 1}, {"sigma", 1}});
  return r;
}

RingPtr etaSigmaURing() {
  static const RingPtr r = makeRing({{"eta", 1}, {"sigma", 1}, {"u", 1}});
  return r;
}

Rational zagierEval(const UniPoly& a, const UniPoly& b, int n, int g) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "n must be >= 0");
  UniPoly base = UniPoly{1} + b.shifted(1);
  UniPoly acc = a.truncated(n);
  for (int e = 0; e < g; ++e) acc = (acc * base).truncated(n);
  return acc[n];
}

Rational pairMonomial(int a, int b, int n, int g) {
  if (a < 0 || b < 0) throw Error(ErrorKind::InvalidArgument, "exponents must be >= 0");
  if (a + b != n) return Rational(0);
  return factorial(b) * binomial(g, b);
}

Rational evaluateOnSymProd(const MultiPoly& p, int n, int g) {
  const auto s = slotsOf(*p.ring());
  requireOnlyEtaSigma(p, s);
  return pairTerms(p, s, 0, 0, n, g);
}

std::string PairingWitness::to_string() const {
  std::ostringstream os;
  os << "degree " << degree << " component pairs with eta^" << i << "*sigma^" << j << " to " << value;
  return os.str();
}

std::optional<PairingWitness> zeroTestWitness(const MultiPoly& p, int n, int g) {
  const auto s = slotsOf(*p.ring());
  requireOnlyEtaSigma(p, s);
  std::set<long> degrees;
  for (const auto& term : p.terms()) degrees.insert(p.ring()->degree(term.mono));
  for (long d : degrees) {
    if (d > n) continue;
    const MultiPoly part = p.homogeneousPart(d);
    for (int i = 0; i <= n - d; ++i) {
      const int j = static_cast<int>(n - d) - i;
      Rational v = pairTerms(part, s, i, j, n, g);
      if (!v.is_zero()) return PairingWitness{d, i, j, std::move(v)};
    }
  }
  return std::nullopt;
}

bool isZeroInvariant(const MultiPoly& p, int n, int g) { return !zeroTestWitness(p, n, g); }

MultiPoly vanishingLemmaClass(int n, int k, int m, int l, int g) {
  if (n < 0 || k < 0 || m < 0 || l < 0) throw Error(ErrorKind::InvalidArgument, "arguments must be >= 0");
  const RingPtr r = etaSigmaRing();
  const MultiPoly eta = var(r, "eta"), sigma = var(r, "sigma");
  const TruncatedSeries e = seriesExp(TruncatedSeries(sigma, l));
  const TruncatedSeries inv = seriesInverse(seriesPow(TruncatedSeries(one(r) + eta, l), m));
  const MultiPoly full = (e * inv * MultiPoly::pow(eta, k)).homogeneousPart(l);
  const int sigmaMax = std::min(g, n);
  std::vector<Term> kept;
  for (const auto& t : full.terms())
    if (t.mono[1] <= sigmaMax) kept.push_back(t);
  return MultiPoly::fromTerms(r, std::move(kept));
}

bool vanishingLemmaHypotheses(int n, int k, int m, int l, int g) { return n - g + m <= l && g + k - m < l; }

bool vanishingLemmaCheck(int n, int k, int m, int l, int g) {
  return isZeroInvariant(vanishingLemmaClass(n, k, m, l, g), n, g);
}

std::vector<GridEntry> vanishingLemmaGrid(int g, int maxIndex) {
  std::vector<GridEntry> out;
  for (int n = 0; n <= 2 * g - 2; ++n)
    for (int k = 0; k <= maxIndex; ++k)
      for (int m = 0; m <= maxIndex; ++m)
        for (int l = 0; l <= maxIndex; ++l) {
          GridEntry e{g, n, k, m, l, vanishingLemmaHypotheses(n, k, m, l, g), false, std::nullopt};
          e.witness = zeroTestWitness(vanishingLemmaClass(n, k, m, l, g), n, g);
          e.vanishes = !e.witness;
          out.push_back(std::move(e));
        }
  return out;
}

std::vector<GridEntry> vanishingLemmaGrid(int maxGenus) {
  std::vector<GridEntry> out;
  for (int g = 2; g <= maxGenus; ++g) {
    auto part = vanishingLemmaGrid(g, 2 * g);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

MultiPoly betaGRestrictionClass(int g, int d) {
  if (d < 1 || d > g - 1) throw Error(ErrorKind::InvalidArgument, "need 1 <= d <= g-1");
  const RingPtr r = etaSigmaURing();
  const long trunc = 2L * g;
  const MultiPoly eta = var(r, "eta"), sigma = var(r, "sigma"), u = var(r, "u");
  const TruncatedSeries e = seriesExp(TruncatedSeries(sigma * u, trunc));
  const TruncatedSeries num = seriesPow(TruncatedSeries(numeratorBase(r), trunc), d - 1);
  const TruncatedSeries den = seriesInverse(seriesPow(TruncatedSeries(one(r) - eta * (eta - u), trunc), d));
  return (e * num * den).poly();
}

std::string RestrictionWitness::to_string() const {
  return "coefficient of u^" + std::to_string(uPower) + ": " + pairing.to_string();
}

std::optional<RestrictionWitness> restrictionWitness(const MultiPoly& cls, int g, int d) {
  const long top = 2L * g;
  const int n = 2 * g - 2 * d - 1;
  const MultiPoly slice = cls.homogeneousPart(top);
  const std::size_t ui = cls.ring()->require("u");
  for (int p = 0; p <= top; ++p) {
    const MultiPoly c = slice.coefficientOf(ui, p);
    if (auto w = zeroTestWitness(c, n, g)) return RestrictionWitness{p, *w};
  }
  return std::nullopt;
}

bool betaGRestrictionCheck(int g, int d) { return !restrictionWitness(betaGRestrictionClass(g, d), g, d); }

MultiPoly betaGSummand(int g, int d, int i) { return summand(g, d, i, binomial(d + i - 1, i)); }

MultiPoly betaGSummandShiftedBinomial(int g, int d, int i) { return summand(g, d, i, binomial(d + i, i)); }

bool betaGSumMatches(int g, int d) {
  MultiPoly sum(etaSigmaURing());
  for (int i = 0; i <= g; ++i) sum += betaGSummand(g, d, i);
  return sum == betaGRestrictionClass(g, d);
}

bool betaGTermwiseCheck(int g, int d) {
  for (int i = 0; i <= g; ++i)
    if (restrictionWitness(betaGSummand(g, d, i), g, d)) return false;
  return true;
}

}  // namespace higgs
