#include "higgs/groebner.hpp"

#include <algorithm>
#include <numeric>

namespace higgs {

IdealPresentation::IdealPresentation(RingPtr ring, std::vector<MultiPoly> generators)
    : ring_(std::move(ring)), gens_(std::move(generators)) {
  for (const auto& g : gens_) {
    if (g.is_zero()) throw Error(ErrorKind::InvalidArgument, "zero generator in ideal presentation");
    if (!(*g.ring() == *ring_)) throw Error(ErrorKind::ArityMismatch, "generator over a different ring");
    if (!g.isHomogeneous()) throw Error(ErrorKind::InvalidArgument, "inhomogeneous generator " + g.to_string());
  }
  for (const auto& v : ring_->vars())
    if (v.weight < 1) throw Error(ErrorKind::InvalidArgument, "Groebner ring variables need weight >= 1");
}

GroebnerBasis::GroebnerBasis(RingPtr ring, std::vector<MultiPoly> basis, std::optional<long> degreeCap)
    : ring_(std::move(ring)), basis_(std::move(basis)), cap_(degreeCap) {}

std::vector<Monomial> GroebnerBasis::leadingMonomials() const {
  std::vector<Monomial> out;
  out.reserve(basis_.size());
  for (const auto& g : basis_) out.push_back(g.leadingMonomial());
  return out;
}

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  long degree;
  bool input;
};

// Index of the first reducer whose leading monomial divides m, or -1.
long findDivisor(const Monomial& m, const std::vector<MultiPoly>& G, const std::vector<std::size_t>& usable) {
  for (std::size_t k : usable)
    if (G[k].leadingMonomial().divides(m)) return static_cast<long>(k);
  return -1;
}

// Full reduction of p; when quotients is given, multipliers are accumulated
// per basis index.
MultiPoly reduceFull(MultiPoly p, const std::vector<MultiPoly>& G, const std::vector<std::size_t>& usable,
                     std::vector<MultiPoly>* quotients) {
  std::vector<Term> rem;
  while (!p.is_zero()) {
    const Term& lt = p.leading();
    const long k = findDivisor(lt.mono, G, usable);
    if (k < 0) {
      rem.push_back(p.popLeading());
      continue;
    }
    const MultiPoly& g = G[static_cast<std::size_t>(k)];
    const Monomial m = lt.mono / g.leadingMonomial();
    const Rational c = lt.coeff / g.leadingCoeff();
    if (quotients) (*quotients)[static_cast<std::size_t>(k)] += MultiPoly::monomial(p.ring(), m, c);
    p -= g.mulTerm(m, c);
  }
  return MultiPoly::fromTerms(p.ring(), std::move(rem));
}

MultiPoly sPolynomial(const MultiPoly& f, const MultiPoly& g, const Monomial& l) {
  return f.mulTerm(l / f.leadingMonomial(), Rational(1) / f.leadingCoeff()) -
         g.mulTerm(l / g.leadingMonomial(), Rational(1) / g.leadingCoeff());
}

class Engine {
 public:
  Engine(const IdealPresentation& ideal, const BuchbergerOptions& opts, BuchbergerStats& stats)
      : ideal_(ideal), ring_(ideal.ring()), opts_(opts), stats_(stats) {}

  GroebnerBasis run() {
    const auto& gens = ideal_.generators();
    for (std::size_t k = 0; k < gens.size(); ++k)
      pairs_.push_back(Pair{k, 0, gens[k].leadingMonomial(), gens[k].degree(), true});

    std::optional<long> capped;
    while (!pairs_.empty()) {
      long d = pairs_.front().degree;
      for (const auto& p : pairs_) d = std::min(d, p.degree);
      if (opts_.degreeCap && d > *opts_.degreeCap) {
        capped = opts_.degreeCap;
        break;
      }
      checkDeadline(d);
      std::vector<Pair> batch;
      std::vector<Pair> rest;
      for (auto& p : pairs_) (p.degree == d ? batch : rest).push_back(std::move(p));
      pairs_ = std::move(rest);
      std::sort(batch.begin(), batch.end(), [&](const Pair& a, const Pair& b) {
        if (a.input != b.input) return a.input;
        const int c = ring_->compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
      });
      if (opts_.progress) opts_.progress(BuchbergerProgress{d, pairs_.size() + batch.size(), activeCount()});
      std::size_t done = 0;
      for (const auto& p : batch) {
        if (++done % 64 == 0) checkDeadline(d);
        MultiPoly s = p.input ? ideal_.generators()[p.i] : sPolynomial(G_[p.i], G_[p.j], p.lcm);
        MultiPoly h = reduceFull(std::move(s), G_, activeIndices(), nullptr);
        if (h.is_zero()) {
          ++stats_.reductionsToZero;
          continue;
        }
        add(h.monic());
      }
    }
    return GroebnerBasis(ring_, finalBasis(), capped);
  }

 private:
  void checkDeadline(long d) const {
    if (opts_.deadline && std::chrono::steady_clock::now() > *opts_.deadline)
      throw ResourceLimitError("Groebner basis time limit reached at degree " + std::to_string(d) + " with " +
                                   std::to_string(pairs_.size()) + " pairs remaining",
                               d, pairs_.size());
  }

  std::size_t activeCount() const { return static_cast<std::size_t>(std::count(active_.begin(), active_.end(), 1)); }

  const std::vector<std::size_t>& activeIndices() {
    if (activeDirty_) {
      activeList_.clear();
      for (std::size_t k = 0; k < G_.size(); ++k)
        if (active_[k]) activeList_.push_back(k);
      activeDirty_ = false;
    }
    return activeList_;
  }

  // Gebauer-Moeller update for the new element h.
  void add(MultiPoly h) {
    const std::size_t hi = G_.size();
    const Monomial lh = h.leadingMonomial();
    G_.push_back(std::move(h));
    active_.push_back(1);
    activeDirty_ = true;

    std::vector<Pair> candidates;
    for (std::size_t i = 0; i < hi; ++i) {
      if (!active_[i]) continue;
      const Monomial l = lcm(G_[i].leadingMonomial(), lh);
      candidates.push_back(Pair{i, hi, l, ring_->degree(l), false});
    }
    stats_.pairsCreated += candidates.size();

    // Criterion M: drop a pair whose lcm is a proper multiple of another's.
    std::vector<char> keep(candidates.size(), 1);
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      for (std::size_t b = 0; b < candidates.size(); ++b) {
        if (a == b) continue;
        if (candidates[b].lcm.divides(candidates[a].lcm) && !(candidates[b].lcm == candidates[a].lcm)) {
          keep[a] = 0;
          break;
        }
      }
    }
    // Criterion F with the product criterion: per distinct lcm keep one pair,
    // unless some pair with that lcm has coprime leading monomials.
    std::vector<Pair> fresh;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      if (!keep[a]) continue;
      bool firstOfGroup = true;
      bool anyCoprime = false;
      for (std::size_t b = 0; b < candidates.size(); ++b) {
        if (!keep[b] || !(candidates[b].lcm == candidates[a].lcm)) continue;
        if (b < a) firstOfGroup = false;
        if (G_[candidates[b].i].leadingMonomial().coprime(lh)) anyCoprime = true;
      }
      if (firstOfGroup && !anyCoprime) fresh.push_back(candidates[a]);
    }
    stats_.pairsPruned += candidates.size() - fresh.size();

    // Criterion B on existing pairs.
    std::vector<Pair> survivors;
    survivors.reserve(pairs_.size() + fresh.size());
    for (auto& p : pairs_) {
      if (!p.input && lh.divides(p.lcm)) {
        const Monomial li = lcm(G_[p.i].leadingMonomial(), lh);
        const Monomial lj = lcm(G_[p.j].leadingMonomial(), lh);
        if (!(li == p.lcm) && !(lj == p.lcm)) {
          ++stats_.pairsPruned;
          continue;
        }
      }
      survivors.push_back(std::move(p));
    }
    for (auto& p : fresh) survivors.push_back(std::move(p));
    pairs_ = std::move(survivors);

    for (std::size_t i = 0; i < hi; ++i)
      if (active_[i] && lh.divides(G_[i].leadingMonomial())) active_[i] = 0;
  }

  std::vector<MultiPoly> finalBasis() {
    const auto& idx = activeIndices();
    std::vector<MultiPoly> out;
    out.reserve(idx.size());
    for (std::size_t k : idx) {
      MultiPoly tail = G_[k];
      const Term lead = tail.popLeading();
      MultiPoly reduced = reduceFull(std::move(tail), G_, idx, nullptr);
      reduced += MultiPoly::monomial(ring_, lead.mono, lead.coeff);
      out.push_back(reduced.monic());
    }
    std::sort(out.begin(), out.end(), [&](const MultiPoly& a, const MultiPoly& b) {
      return ring_->compare(a.leadingMonomial(), b.leadingMonomial()) < 0;
    });
    return out;
  }

  const IdealPresentation& ideal_;
  RingPtr ring_;
  const BuchbergerOptions& opts_;
  BuchbergerStats& stats_;
  std::vector<MultiPoly> G_;
  std::vector<char> active_;
  std::vector<std::size_t> activeList_;
  bool activeDirty_ = true;
  std::vector<Pair> pairs_;
};

void requireCap(const GroebnerBasis& gb, long degree) {
  if (gb.degreeCap() && degree > *gb.degreeCap())
    throw Error(ErrorKind::CapExceeded, "degree " + std::to_string(degree) + " above basis cap " +
                                            std::to_string(*gb.degreeCap()));
}

std::vector<std::size_t> allIndices(const GroebnerBasis& gb) {
  std::vector<std::size_t> idx(gb.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  return idx;
}

}  // namespace

GroebnerBasis buchberger(const IdealPresentation& ideal, const BuchbergerOptions& options, BuchbergerStats* stats) {
  BuchbergerStats local;
  Engine engine(ideal, options, stats ? *stats : local);
  return engine.run();
}

bool MembershipCertificate::reconstructs(const MultiPoly& p, const GroebnerBasis& gb) const {
  MultiPoly sum = remainder;
  for (const auto& q : quotients) {
    if (q.index >= gb.size()) return false;
    sum += q.multiplier * gb.elements()[q.index];
  }
  return sum == p;
}

MembershipCertificate normalForm(const MultiPoly& p, const GroebnerBasis& gb) {
  if (!p.is_zero()) requireCap(gb, p.degree());
  std::vector<MultiPoly> quotients(gb.size(), MultiPoly(gb.ring()));
  MultiPoly rem = reduceFull(p, gb.elements(), allIndices(gb), &quotients);
  MembershipCertificate cert{{}, std::move(rem)};
  for (std::size_t k = 0; k < quotients.size(); ++k)
    if (!quotients[k].is_zero()) cert.quotients.push_back(QuotientTerm{std::move(quotients[k]), k});
  return cert;
}

MultiPoly reduce(const MultiPoly& p, const GroebnerBasis& gb) {
  if (!p.is_zero()) requireCap(gb, p.degree());
  return reduceFull(p, gb.elements(), allIndices(gb), nullptr);
}

namespace {

void enumerate(const Ring& ring, std::size_t var, long remaining, Monomial& cur, std::vector<Monomial>& out) {
  if (var == ring.arity()) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  const long w = ring.var(var).weight;
  for (long e = 0; e * w <= remaining; ++e) {
    cur[var] = static_cast<std::int32_t>(e);
    enumerate(ring, var + 1, remaining - e * w, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::vector<Monomial> monomialsOfDegree(const Ring& ring, long degree) {
  for (const auto& v : ring.vars())
    if (v.weight < 1) throw Error(ErrorKind::InvalidArgument, "monomial enumeration needs weights >= 1");
  std::vector<Monomial> out;
  if (degree < 0) return out;
  Monomial cur;
  enumerate(ring, 0, degree, cur, out);
  return out;
}

UniPoly hilbertSeries(const GroebnerBasis& gb, long upToDegree) {
  requireCap(gb, upToDegree);
  const auto leads = gb.leadingMonomials();
  std::vector<Rational> coeffs;
  for (long d = 0; d <= upToDegree; ++d) {
    long count = 0;
    for (const auto& m : monomialsOfDegree(*gb.ring(), d)) {
      bool standard = true;
      for (const auto& l : leads)
        if (l.divides(m)) {
          standard = false;
          break;
        }
      if (standard) ++count;
    }
    coeffs.emplace_back(count);
  }
  return UniPoly(std::move(coeffs));
}

bool isArtinian(const GroebnerBasis& gb) {
  const Ring& ring = *gb.ring();
  for (std::size_t v = 0; v < ring.arity(); ++v) {
    bool found = false;
    for (const auto& g : gb.elements()) {
      const Monomial& m = g.leadingMonomial();
      bool pure = m[v] > 0;
      for (std::size_t u = 0; u < ring.arity() && pure; ++u)
        if (u != v && m[u] != 0) pure = false;
      if (pure) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

long artinianDegreeBound(const GroebnerBasis& gb) {
  if (!isArtinian(gb)) throw Error(ErrorKind::InvalidArgument, "quotient is not finite-dimensional");
  const Ring& ring = *gb.ring();
  long bound = 0;
  for (std::size_t v = 0; v < ring.arity(); ++v) {
    long best = -1;
    for (const auto& g : gb.elements()) {
      const Monomial& m = g.leadingMonomial();
      bool pure = m[v] > 0;
      for (std::size_t u = 0; u < ring.arity() && pure; ++u)
        if (u != v && m[u] != 0) pure = false;
      if (pure && (best < 0 || m[v] < best)) best = m[v];
    }
    bound += (best - 1) * ring.var(v).weight;
  }
  return bound;
}

MultiPoly primitivePart(const MultiPoly& p) {
  if (p.is_zero()) return p;
  mpz_class den = 1;
  mpz_class num = 0;
  for (const auto& t : p.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.denominator().get_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coeff.numerator().get_mpz_t());
  }
  Rational scale(mpq_class(den, num));
  if (p.leadingCoeff().sign() < 0) scale = -scale;
  return p * scale;
}

}  // namespace higgs
