#include "higgs/rings.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "higgs/error.hpp"
#include "higgs/poincare.hpp"
#include "higgs/symprod.hpp"

namespace higgs {

namespace {

using Clock = std::chrono::steady_clock;

double secondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

MultiPoly v(const RingPtr& r, std::string_view name) { return MultiPoly::variable(r, name); }
MultiPoly c(const RingPtr& r, const Rational& x) { return MultiPoly::constant(r, x); }

MultiPoly laurentMonomial(const RingPtr& r, std::string_view name, int e) {
  Monomial m;
  m[r->require(name)] = e;
  return MultiPoly::monomial(r, m);
}

// {a, s, g} with s = sqrt(beta); weights keep zeta_{r,s} homogeneous.
RingPtr zetaValueRing() {
  static const RingPtr r = makeRing({{"a", 1}, {"s", 1}, {"g", 3}});
  return r;
}

std::string rhoLabel(int r, int s, int t) {
  return "rho(" + std::to_string(r) + "," + std::to_string(s) + "," + std::to_string(t) + ")";
}

std::string dims(long d, const Rational& got, const Rational& want) {
  return "degree " + std::to_string(d) + ": quotient dimension " + got.to_string() + ", expected " + want.to_string();
}

std::vector<Monomial> standardMonomials(const GroebnerBasis& gb, long d) {
  const auto leads = gb.leadingMonomials();
  std::vector<Monomial> out;
  for (const auto& m : monomialsOfDegree(*gb.ring(), d)) {
    bool reducible = false;
    for (const auto& l : leads)
      if (l.divides(m)) {
        reducible = true;
        break;
      }
    if (!reducible) out.push_back(m);
  }
  return out;
}

std::string monomialText(const RingPtr& r, const Monomial& m) { return MultiPoly::monomial(r, m).to_string(); }

// Rank of a family of polynomials by echelon reduction on leading terms.
std::size_t rankOf(const std::vector<MultiPoly>& polys) {
  if (polys.empty()) return 0;
  std::unordered_map<Monomial, MultiPoly, MonomialHash> pivots;
  for (MultiPoly p : polys) {
    while (!p.is_zero()) {
      auto it = pivots.find(p.leadingMonomial());
      if (it == pivots.end()) break;
      p -= it->second * p.leadingCoeff();
    }
    if (!p.is_zero()) {
      const Monomial lead = p.leadingMonomial();
      pivots.emplace(lead, p.monic());
    }
  }
  return pivots.size();
}

struct Memo {
  std::mutex mu;
  std::map<std::string, GroebnerBasis> bases;
};

Memo& memo() {
  static Memo m;
  return m;
}

BuchbergerOptions bopts(const VerifyOptions& opts, const std::string& stage) {
  BuchbergerOptions b;
  b.deadline = opts.deadline;
  if (opts.progress) b.progress = [cb = opts.progress, stage](const BuchbergerProgress& p) { cb(stage, p); };
  return b;
}

Report startReport(std::string check, int g) {
  Report r;
  r.check = std::move(check);
  r.genus = g;
  return r;
}

void fail(Report& r, std::string witness) {
  r.status = CheckStatus::Falsified;
  r.witnesses.push_back(std::move(witness));
}

void limited(Report& r, const ResourceLimitError& e) {
  r.status = CheckStatus::ResourceLimited;
  r.witnesses.push_back("resource limit reached at degree " + std::to_string(e.degreeReached()) + " with " +
                        std::to_string(e.pairsRemaining()) + " pairs remaining");
}

void requireGenus(int g) {
  if (g < 2) throw Error(ErrorKind::InvalidArgument, "genus must be >= 2, got " + std::to_string(g));
}

}  // namespace

RingPtr universalRing() {
  static const RingPtr r = makeRing({{"a", 1}, {"b", 2}, {"g", 3}});
  return r;
}

std::vector<MultiPoly> zetaRecUpTo(int r) {
  if (r < 0) throw Error(ErrorKind::InvalidArgument, "zeta index must be >= 0");
  const RingPtr R = universalRing();
  const MultiPoly a = v(R, "a"), b = v(R, "b"), g2 = v(R, "g") * Rational(2);
  std::vector<MultiPoly> z{c(R, 1)};
  for (int k = 0; k < r; ++k) {
    MultiPoly next = a * z[k];
    if (k >= 1) next += b * z[k - 1] * Rational(k);
    if (k >= 2) next += g2 * z[k - 2];
    z.push_back(next * Rational(1, k + 1));
  }
  return z;
}

MultiPoly zetaRec(int r) { return zetaRecUpTo(r).back(); }

std::string_view gfParseName(GfParse p) {
  return p == GfParse::ExpOverBeta ? "exp(-2*gamma*x)/beta" : "exp(-2*gamma*x/beta)";
}

RingPtr generatingFunctionRing() {
  static const RingPtr r = makeRing({{"x", 1}, {"y", 1}, {"a", 0}, {"s", 0}, {"g", 0}});
  return r;
}

TruncatedSeries zagierGeneratingFunction(int N, GfParse parse) {
  if (N < 0) throw Error(ErrorKind::InvalidArgument, "truncation must be >= 0");
  const RingPtr R = generatingFunctionRing();
  const MultiPoly x = v(R, "x"), y = v(R, "y"), a = v(R, "a"), s = v(R, "s"), gm = v(R, "g");
  const MultiPoly one = c(R, 1);
  const MultiPoly beta = s * s;
  const MultiPoly by = one - beta * y;
  const TruncatedSeries root = seriesSqrt(TruncatedSeries(by * by - beta * x * x, N));
  const TruncatedSeries ratio =
      TruncatedSeries(by + x * s, N) * seriesInverse(TruncatedSeries(by - x * s, N));
  // gamma* / (2 beta sqrt(beta)) with gamma* = 2 gamma + alpha beta
  const MultiPoly exponent = gm * laurentMonomial(R, "s", -3) + a * laurentMonomial(R, "s", -1) * Rational(1, 2);
  TruncatedSeries prefactor(one, N);
  if (parse == GfParse::ExpGammaOverBeta) {
    prefactor = seriesExp(TruncatedSeries(gm * x * laurentMonomial(R, "s", -2) * Rational(-2), N));
  } else {
    prefactor = seriesExp(TruncatedSeries(gm * x * Rational(-2), N)) * laurentMonomial(R, "s", -2);
  }
  return prefactor * seriesInverse(root) * seriesPow(ratio, exponent);
}

std::vector<ZetaRS> zetaRSUpTo(int N, GfParse parse) {
  const TruncatedSeries G = zagierGeneratingFunction(N, parse);
  std::vector<ZetaRS> out;
  for (int r = 0; r <= N; ++r) {
    const TruncatedSeries gx = seriesCoeff(G, "x", r);
    for (int s = 0; r + s <= N; ++s) {
      const MultiPoly value = embed(seriesCoeff(gx, "y", s).poly(), zetaValueRing());
      SqrtLaurentElem elem(value, "s");
      std::optional<MultiPoly> inBeta;
      if (elem.isPolynomialInBeta()) inBeta = elem.toBeta(universalRing(), "b");
      out.push_back(ZetaRS{r, s, std::move(elem), std::move(inBeta)});
    }
  }
  return out;
}

ZetaRS zetaRS(int r, int s, GfParse parse) {
  if (r < 0 || s < 0) throw Error(ErrorKind::InvalidArgument, "indices must be >= 0");
  for (auto& z : zetaRSUpTo(r + s, parse))
    if (z.r == r && z.s == s) return z;
  throw Error(ErrorKind::InvalidArgument, "zeta_{r,s} not found");
}

MultiPoly zetaRST(int r, int s, int t, GfParse parse) {
  if (t < 0) throw Error(ErrorKind::InvalidArgument, "indices must be >= 0");
  const ZetaRS z = zetaRS(r, s, parse);
  if (!z.inBeta) throw Error(ErrorKind::InvalidArgument, "zeta_{r,s} is not polynomial under this parse");
  const RingPtr R = universalRing();
  return *z.inBeta * MultiPoly::pow(v(R, "g") * Rational(2), t) * (Rational(1) / factorial(t));
}

MultiPoly rho(int r, int s, int t, int g) {
  if (r < 0 || s < 0 || t < 0) throw Error(ErrorKind::InvalidArgument, "indices must be >= 0");
  const RingPtr R = universalRing();
  const MultiPoly a = v(R, "a"), b = v(R, "b"), g2 = v(R, "g") * Rational(2);
  MultiPoly out(R);
  for (int i = 0; i <= std::min(r, s); ++i) {
    const Rational k = binomial(r, i) * binomial(g - t - i, g - t - s);
    if (k.is_zero()) continue;
    out += MultiPoly::pow(a, r - i) * MultiPoly::pow(b, s - i) * MultiPoly::pow(g2, t + i) * k;
  }
  return out;
}

PresentedRing buildR(int g, std::optional<long> cap) {
  requireGenus(g);
  PresentedRing pr;
  pr.genus = g;
  pr.ring = universalRing();
  pr.cap = cap.value_or(3L * g);
  for (int r = 0; r <= pr.cap; ++r)
    for (int s = 0; r + 3 * s <= pr.cap; ++s)
      for (int t = 0; r + 3 * s + 3 * t <= pr.cap; ++t) {
        if (r + 3 * s + 3 * t <= 3 * g - 3) continue;
        MultiPoly p = rho(r, s, t, g);
        if (p.is_zero()) continue;
        pr.relations.push_back(std::move(p));
        pr.labels.push_back(rhoLabel(r, s, t));
      }
  pr.targetHilbert = invariantPoincareM(g);
  return pr;
}

PresentedRing buildIg(int g) {
  requireGenus(g);
  PresentedRing pr;
  pr.genus = g;
  pr.ring = universalRing();
  const auto z = zetaRecUpTo(g + 2);
  for (int k = g; k <= g + 2; ++k) {
    pr.relations.push_back(z[k]);
    pr.labels.push_back("zeta_" + std::to_string(k));
  }
  pr.targetHilbert = invariantPoincareN(g);
  return pr;
}

std::string_view statusName(CheckStatus s) {
  switch (s) {
    case CheckStatus::Verified: return "verified";
    case CheckStatus::Falsified: return "falsified";
    case CheckStatus::ResourceLimited: return "resource-limited";
  }
  return "?";
}

GroebnerBasis presentationBasis(const PresentedRing& pr, const VerifyOptions& opts, std::string* keyHex) {
  const IdealPresentation ideal(pr.ring, pr.relations);
  const GbCacheKey key = GbCacheKey::of(ideal, std::nullopt);
  if (keyHex) *keyHex = key.hex;
  {
    std::lock_guard lock(memo().mu);
    auto it = memo().bases.find(key.text);
    if (it != memo().bases.end()) {
      if (opts.cache && !opts.cache->load(key, pr.ring)) opts.cache->store(key, it->second);
      return it->second;
    }
  }
  GroebnerBasis gb = cachedBuchberger(ideal, bopts(opts, "groebner g=" + std::to_string(pr.genus)), opts.cache);
  std::lock_guard lock(memo().mu);
  memo().bases.emplace(key.text, gb);
  return gb;
}

Report verifyPresentation(int g, const VerifyOptions& opts) {
  requireGenus(g);
  const auto start = Clock::now();
  Report rep = startReport("presentation", g);
  const long maxCap = opts.maxCap > 0 ? opts.maxCap : 3L * g + 9;
  rep.params = {{"maxCap", std::to_string(maxCap)}};
  for (const auto& o : opts.omitRho) rep.params.emplace_back("omit", rhoLabel(o[0], o[1], o[2]));
  long cap = 3L * g;
  for (;;) {
    PresentedRing pr = buildR(g, cap);
    for (const auto& o : opts.omitRho)
      for (std::size_t i = 0; i < pr.labels.size(); ++i)
        if (pr.labels[i] == rhoLabel(o[0], o[1], o[2])) {
          pr.labels.erase(pr.labels.begin() + static_cast<long>(i));
          pr.relations.erase(pr.relations.begin() + static_cast<long>(i));
          break;
        }
    rep.capUsed = cap;
    std::optional<GroebnerBasis> gb;
    try {
      gb = presentationBasis(pr, opts, &rep.gbCacheKey);
    } catch (const ResourceLimitError& e) {
      limited(rep, e);
      break;
    }
    const UniPoly& target = pr.targetHilbert;
    const bool artinian = isArtinian(*gb);
    const long upTo = artinian ? std::max<long>(artinianDegreeBound(*gb), target.degree()) : cap + 3;
    const UniPoly h = hilbertSeries(*gb, upTo);
    rep.facts = {{"relations", std::to_string(pr.relations.size())},
                 {"basisSize", std::to_string(gb->size())},
                 {"hilbert", h.to_string("T")},
                 {"target", target.to_string("T")},
                 {"artinian", artinian ? "true" : "false"}};
    std::vector<long> excess;
    bool deficit = false;
    for (long d = 0; d <= upTo; ++d) {
      if (h[d] < target[d]) {
        fail(rep, dims(d, h[d], target[d]));
        deficit = true;
      } else if (h[d] > target[d]) {
        excess.push_back(d);
      }
    }
    if (deficit) break;
    if (!excess.empty() || !artinian) {
      if (cap + 3 <= maxCap) {
        cap += 3;
        continue;
      }
      for (long d : excess) {
        std::string w = dims(d, h[d], target[d]) + "; standard monomials:";
        for (const auto& m : standardMonomials(*gb, d)) w += " " + monomialText(pr.ring, m);
        fail(rep, w);
      }
      if (!artinian) fail(rep, "quotient is not finite-dimensional");
      break;
    }
    // Every further rho of degree at most the top nonzero degree must reduce to
    // zero; beyond that degree the quotient vanishes.
    const long top = artinianDegreeBound(*gb);
    std::size_t certified = 0;
    for (int r = 0; r <= top; ++r)
      for (int s = 0; r + 2 * s <= top; ++s)
        for (int t = 0; r + 2 * s + 3 * t <= top; ++t) {
          if (r + 3 * s + 3 * t <= cap) continue;
          const MultiPoly p = rho(r, s, t, g);
          if (p.is_zero()) continue;
          ++certified;
          if (!reduce(p, *gb).is_zero()) fail(rep, rhoLabel(r, s, t) + " does not reduce to zero");
        }
    rep.facts.emplace_back("certifiedBeyondCap", std::to_string(certified));
    break;
  }
  rep.wallTime = secondsSince(start);
  return rep;
}

Report verifyNPresentation(int g, const VerifyOptions& opts) {
  requireGenus(g);
  const auto start = Clock::now();
  Report rep = startReport("n-presentation", g);
  const PresentedRing pr = buildIg(g);
  try {
    const GroebnerBasis gb = presentationBasis(pr, opts, &rep.gbCacheKey);
    const bool artinian = isArtinian(gb);
    const long upTo = artinian ? std::max<long>(artinianDegreeBound(gb), pr.targetHilbert.degree()) : 3L * g + 6;
    const UniPoly h = hilbertSeries(gb, upTo);
    rep.facts = {{"basisSize", std::to_string(gb.size())},
                 {"hilbert", h.to_string("T")},
                 {"target", pr.targetHilbert.to_string("T")}};
    if (!artinian) fail(rep, "quotient is not finite-dimensional");
    for (long d = 0; d <= upTo; ++d)
      if (h[d] != pr.targetHilbert[d]) fail(rep, dims(d, h[d], pr.targetHilbert[d]));
  } catch (const ResourceLimitError& e) {
    limited(rep, e);
  }
  rep.wallTime = secondsSince(start);
  return rep;
}

Report verifyNewstead(int g, const VerifyOptions& opts) {
  requireGenus(g);
  const auto start = Clock::now();
  Report rep = startReport("newstead", g);
  const RingPtr R = universalRing();
  const MultiPoly a = v(R, "a"), b = v(R, "b"), gm = v(R, "g");
  try {
    const PresentedRing pr = buildR(g);
    rep.capUsed = pr.cap;
    const GroebnerBasis gbR = presentationBasis(pr, opts, &rep.gbCacheKey);
    const GroebnerBasis gbI = presentationBasis(buildIg(g), opts);
    const MultiPoly betaG = MultiPoly::pow(b, g);
    if (rho(0, g, 0, g) != betaG) fail(rep, "rho(0,g,0) != b^g: " + rho(0, g, 0, g).to_string());
    if (!reduce(betaG, gbR).is_zero()) fail(rep, "b^g does not vanish in R_g");
    const MembershipCertificate cb = normalForm(betaG, gbI);
    if (!cb.remainder.is_zero() || !cb.reconstructs(betaG, gbI))
      fail(rep, "b^g not in I_g, remainder " + cb.remainder.to_string());
    const MultiPoly below = reduce(MultiPoly::pow(b, g - 1), gbR);
    if (below.is_zero()) fail(rep, "b^(g-1) vanishes in R_g");
    const MultiPoly first = rho(1, g - 1, 0, g);
    const MultiPoly expected =
        a * MultiPoly::pow(b, g - 1) * Rational(g) + MultiPoly::pow(b, g - 2) * gm * Rational(2 * (g - 1));
    if (first != expected) fail(rep, "rho(1,g-1,0) = " + first.to_string() + ", expected " + expected.to_string());
    if (!reduce(first, gbR).is_zero()) fail(rep, "rho(1,g-1,0) does not vanish in R_g");
    const MembershipCertificate cf = normalForm(first, gbI);
    if (!cf.remainder.is_zero() || !cf.reconstructs(first, gbI))
      fail(rep, "rho(1,g-1,0) not in I_g, remainder " + cf.remainder.to_string());
    rep.facts = {{"b^(g-1) normal form", below.to_string()},
                 {"first relation", first.to_string()},
                 {"certificate terms b^g", std::to_string(cb.quotients.size())},
                 {"certificate terms rho(1,g-1,0)", std::to_string(cf.quotients.size())}};
  } catch (const ResourceLimitError& e) {
    limited(rep, e);
  }
  rep.wallTime = secondsSince(start);
  return rep;
}

MembershipCertificate rhoInIg(int r, int s, int t, int g, const VerifyOptions& opts) {
  requireGenus(g);
  return normalForm(rho(r, s, t, g), presentationBasis(buildIg(g), opts));
}

Report verifyRhoMembership(int g, const VerifyOptions& opts) {
  requireGenus(g);
  const auto start = Clock::now();
  Report rep = startReport("rho-membership", g);
  try {
    const PresentedRing pr = buildR(g);
    rep.capUsed = pr.cap;
    const GroebnerBasis gbI = presentationBasis(buildIg(g), opts, &rep.gbCacheKey);
    std::size_t maxTerms = 0;
    for (std::size_t i = 0; i < pr.relations.size(); ++i) {
      const MembershipCertificate cert = normalForm(pr.relations[i], gbI);
      if (!cert.remainder.is_zero()) fail(rep, pr.labels[i] + " has remainder " + cert.remainder.to_string());
      else if (!cert.reconstructs(pr.relations[i], gbI)) fail(rep, pr.labels[i] + " certificate does not reconstruct");
      std::size_t terms = 0;
      for (const auto& q : cert.quotients) terms += q.multiplier.size();
      maxTerms = std::max(maxTerms, terms);
    }
    rep.facts = {{"relations", std::to_string(pr.relations.size())},
                 {"maxCertificateTerms", std::to_string(maxTerms)}};
  } catch (const ResourceLimitError& e) {
    limited(rep, e);
  }
  rep.wallTime = secondsSince(start);
  return rep;
}

Report verifyZetaBasis(int g, const VerifyOptions& opts) {
  requireGenus(g);
  const auto start = Clock::now();
  Report rep = startReport("zeta-basis", g);
  try {
    const GroebnerBasis gbI = presentationBasis(buildIg(g), opts, &rep.gbCacheKey);
    const auto zetas = zetaRSUpTo(g + 2);
    auto zrs = [&](int r, int s) -> const ZetaRS& {
      for (const auto& z : zetas)
        if (z.r == r && z.s == s) return z;
      throw Error(ErrorKind::InvalidArgument, "missing zeta");
    };
    const RingPtr R = universalRing();
    std::map<long, std::vector<MultiPoly>> byDegree;
    std::size_t members = 0;
    for (int r = 0; r <= g + 2; ++r)
      for (int s = 0; r + s <= g + 2; ++s)
        for (int t = 0; r + s + t <= g + 2; ++t) {
          const ZetaRS& z = zrs(r, s);
          const std::string label = "zeta(" + std::to_string(r) + "," + std::to_string(s) + "," + std::to_string(t) + ")";
          if (!z.inBeta) {
            fail(rep, label + " is not polynomial in beta");
            continue;
          }
          const MultiPoly p = *z.inBeta * MultiPoly::pow(v(R, "g") * Rational(2), t) * (Rational(1) / factorial(t));
          const long deg = r + 2L * s + 3L * t;
          if (!p.is_zero() && (!p.isHomogeneous() || p.degree() != deg))
            fail(rep, label + " is not homogeneous of degree " + std::to_string(deg));
          if (r + s + t <= g - 1) {
            byDegree[deg].push_back(reduce(p, gbI));
          } else {
            ++members;
            if (!reduce(p, gbI).is_zero()) fail(rep, label + " is not in I_g");
          }
        }
    const UniPoly target = invariantPoincareN(g);
    for (const auto& [deg, forms] : byDegree) {
      const std::size_t rank = rankOf(forms);
      if (Rational(static_cast<long>(rank)) != target[deg])
        fail(rep, "degree " + std::to_string(deg) + ": rank " + std::to_string(rank) + " modulo I_g, expected " +
                      target[deg].to_string());
    }
    rep.facts = {{"membersChecked", std::to_string(members)}};
  } catch (const ResourceLimitError& e) {
    limited(rep, e);
  }
  rep.wallTime = secondsSince(start);
  return rep;
}

MultiPoly restrictToFd(const MultiPoly& p, int d, int g) {
  requireGenus(g);
  if (d < 1 || d > g - 1) throw Error(ErrorKind::InvalidArgument, "need 1 <= d <= g-1");
  const RingPtr T = etaSigmaURing();
  const MultiPoly w = v(T, "eta") - v(T, "u"), sigma = v(T, "sigma");
  const Ring& src = *p.ring();
  std::vector<MultiPoly> images;
  for (const auto& var : src.vars()) {
    if (var.name == "a") images.push_back(w * Rational(2 * d - 1) + sigma);
    else if (var.name == "b") images.push_back(w * w);
    else if (var.name == "g") images.push_back(w * w * sigma * Rational(-1, 2));
    else throw Error(ErrorKind::InvalidArgument, "unexpected variable " + var.name);
  }
  return substitute(p, T, images);
}

bool generatingFunctionOracle(int g, int d, GfParse parse) {
  requireGenus(g);
  if (d < 1 || d > g - 1) throw Error(ErrorKind::InvalidArgument, "need 1 <= d <= g-1");
  static const RingPtr W = makeRing({{"w", 1}, {"sigma", 1}, {"u", 1}});
  const MultiPoly w = v(W, "w"), sigma = v(W, "sigma"), u = v(W, "u"), one = c(W, 1);
  const std::vector<MultiPoly> images{w * Rational(2 * d - 1) + sigma, w, w * w * sigma * Rational(-1, 2)};
  const std::vector<MultiPoly> inverses{MultiPoly(W), laurentMonomial(W, "w", -1), MultiPoly(W)};
  const long top = 2L * g;
  MultiPoly lhs(W);
  for (const auto& z : zetaRSUpTo(g, parse))
    lhs += substitute(z.value.value(), W, images, inverses) * MultiPoly::pow(u, z.r);
  const TruncatedSeries closed = seriesExp(TruncatedSeries(sigma * u, top)) *
                                 seriesPow(TruncatedSeries(one - w * w + u * w, top), d - 1) *
                                 seriesInverse(seriesPow(TruncatedSeries(one - w * w - u * w, top), d));
  return lhs.truncated(top) == closed.poly();
}

std::optional<GfParse> selectGfParse(int g) {
  std::optional<GfParse> chosen;
  for (GfParse p : {GfParse::ExpOverBeta, GfParse::ExpGammaOverBeta}) {
    bool ok = true;
    for (int d = 1; d <= g - 1 && ok; ++d) ok = generatingFunctionOracle(g, d, p);
    if (!ok) continue;
    if (chosen) return std::nullopt;
    chosen = p;
  }
  return chosen;
}

std::vector<MultiPoly> chernFromCharacter(const std::vector<MultiPoly>& ch) {
  if (ch.empty()) return {};
  const RingPtr R = ch.front().ring();
  std::vector<MultiPoly> p(ch.size(), MultiPoly(R));
  for (std::size_t k = 1; k < ch.size(); ++k) p[k] = ch[k] * factorial(static_cast<long>(k));
  std::vector<MultiPoly> e{c(R, 1)};
  for (std::size_t k = 1; k < ch.size(); ++k) {
    MultiPoly acc(R);
    for (std::size_t i = 1; i <= k; ++i) acc += e[k - i] * p[i] * Rational(i % 2 == 1 ? 1 : -1);
    e.push_back(acc * Rational(1, static_cast<long>(k)));
  }
  return e;
}

std::vector<MultiPoly> characterFromChern(const std::vector<MultiPoly>& cls, const Rational& rank) {
  if (cls.empty()) return {};
  const RingPtr R = cls.front().ring();
  std::vector<MultiPoly> p(cls.size(), MultiPoly(R));
  for (std::size_t k = 1; k < cls.size(); ++k) {
    MultiPoly acc = cls[k] * Rational(static_cast<long>(k) * ((k - 1) % 2 == 0 ? 1 : -1));
    for (std::size_t i = 1; i < k; ++i) acc += cls[k - i] * p[i] * Rational((k - 1 + i) % 2 == 0 ? 1 : -1);
    p[k] = acc;
  }
  std::vector<MultiPoly> ch{c(R, rank)};
  for (std::size_t k = 1; k < cls.size(); ++k) ch.push_back(p[k] * (Rational(1) / factorial(static_cast<long>(k))));
  return ch;
}

DiracChernData diracChern(int g, int maxIndex) {
  requireGenus(g);
  if (maxIndex < 0) throw Error(ErrorKind::InvalidArgument, "maxIndex must be >= 0");
  static const RingPtr S = makeRing({{"a", 1}, {"s", 1}});
  const MultiPoly a = v(S, "a"), s = v(S, "s");
  const TruncatedSeries ea = seriesExp(TruncatedSeries(a * Rational(1, 2), maxIndex));
  const TruncatedSeries cosh = (seriesExp(TruncatedSeries(s * Rational(1, 2), maxIndex)) +
                                seriesExp(TruncatedSeries(s * Rational(-1, 2), maxIndex))) *
                               Rational(1, 2);
  const TruncatedSeries chS = ea * cosh * Rational(4 * g - 4);
  DiracChernData out;
  out.genus = g;
  out.maxIndex = maxIndex;
  const RingPtr R = universalRing();
  for (int k = 0; k <= maxIndex; ++k)
    out.ch.push_back(SqrtLaurentElem(chS.homogeneousPart(k), "s").toBeta(R, "b"));
  out.c = chernFromCharacter(out.ch);
  const MultiPoly ra = v(R, "a"), rb = v(R, "b");
  out.expected = MultiPoly::pow(c(R, 1) + ra + (ra * ra - rb) * Rational(1, 4), 2 * g - 2);
  return out;
}

Report verifyDirac(int g, int maxIndex) {
  requireGenus(g);
  const auto start = Clock::now();
  if (maxIndex <= 0) maxIndex = 4 * g - 2;
  Report rep = startReport("dirac", g);
  rep.params = {{"maxIndex", std::to_string(maxIndex)}};
  const DiracChernData data = diracChern(g, maxIndex);
  const RingPtr R = universalRing();
  const long rank = 4L * g - 4;
  if (data.ch[0] != c(R, rank)) fail(rep, "ch_0 = " + data.ch[0].to_string());
  MultiPoly total(R);
  for (const auto& ci : data.c) total += ci;
  if (total != data.expected.truncated(maxIndex)) fail(rep, "total Chern class " + total.to_string());
  for (int i = static_cast<int>(rank) + 1; i <= maxIndex; ++i)
    if (!data.c[i].is_zero()) fail(rep, "c_" + std::to_string(i) + " = " + data.c[i].to_string());
  if (characterFromChern(data.c, Rational(rank)) != data.ch) fail(rep, "c -> ch round trip differs");
  rep.facts = {{"ch_0", data.ch[0].to_string()}, {"c_1", data.c.size() > 1 ? data.c[1].to_string() : "0"}};
  rep.wallTime = secondsSince(start);
  return rep;
}

Report verifyVanishingLemma(int g, int maxIndex) {
  requireGenus(g);
  const auto start = Clock::now();
  if (maxIndex <= 0) maxIndex = 2 * g;
  Report rep = startReport("vanishing-lemma", g);
  rep.params = {{"maxIndex", std::to_string(maxIndex)}};
  std::size_t checked = 0, controls = 0;
  for (const auto& e : vanishingLemmaGrid(g, maxIndex)) {
    if (!e.hypotheses) {
      if (!e.vanishes) ++controls;
      continue;
    }
    ++checked;
    if (!e.vanishes) {
      std::ostringstream os;
      os << "(n,k,m,l)=(" << e.n << "," << e.k << "," << e.m << "," << e.l << "): " << e.witness->to_string();
      fail(rep, os.str());
    }
  }
  rep.facts = {{"hypothesisTuples", std::to_string(checked)}, {"nonvanishingControls", std::to_string(controls)}};
  rep.wallTime = secondsSince(start);
  return rep;
}

Report verifyBetaGRestriction(int g) {
  requireGenus(g);
  const auto start = Clock::now();
  Report rep = startReport("beta-g", g);
  for (int d = 1; d <= g - 1; ++d) {
    const std::string at = "d=" + std::to_string(d) + ": ";
    if (auto w = restrictionWitness(betaGRestrictionClass(g, d), g, d)) fail(rep, at + w->to_string());
    if (!betaGSumMatches(g, d)) fail(rep, at + "binomial expansion differs from the direct expansion");
    if (!betaGTermwiseCheck(g, d)) fail(rep, at + "a summand does not vanish in degree 2g");
  }
  const auto parse = selectGfParse(g);
  if (!parse) fail(rep, "no unique generating-function parse reproduces the closed form");
  else if (*parse != GfParse::ExpGammaOverBeta) fail(rep, "unexpected parse selected");
  rep.facts = {{"selectedParse", parse ? std::string(gfParseName(*parse)) : "none"}};
  rep.wallTime = secondsSince(start);
  return rep;
}

Report verifyIdentities(int g, int stabilizationDegree) {
  const auto start = Clock::now();
  Report rep = startReport("identities", g);
  rep.params = {{"stabilizationDegree", std::to_string(stabilizationDegree)}};
  const IdentityReport ir = identitySuite(g, stabilizationDegree);
  for (const auto& r : ir.results) {
    if (!r.passed) fail(rep, r.name + (r.detail.empty() ? "" : ": " + r.detail));
  }
  if (ir.stabilizationK) rep.facts.emplace_back("stabilizationK", std::to_string(*ir.stabilizationK));
  rep.facts.emplace_back("identities", std::to_string(ir.results.size()));
  rep.wallTime = secondsSince(start);
  return rep;
}

}  // namespace higgs
