#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <ostream>
#include <random>
#include <vector>

#include "higgs/multipoly.hpp"
#include "higgs/unipoly.hpp"

namespace higgs {
inline void PrintTo(const MultiPoly& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const UniPoly& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const Rational& r, std::ostream* os) { *os << r.to_string(); }
}  // namespace higgs

namespace testsupport {

using higgs::MultiPoly;
using higgs::Rational;
using higgs::RingPtr;
using higgs::UniPoly;

inline Rational randomRational(std::mt19937& rng, int range = 9) {
  std::uniform_int_distribution<int> num(-range, range), den(1, 4);
  return Rational(num(rng), den(rng));
}

inline MultiPoly randomPoly(const RingPtr& ring, std::mt19937& rng, int maxTerms = 5, int maxExp = 3) {
  std::uniform_int_distribution<int> count(0, maxTerms), ex(0, maxExp);
  std::vector<higgs::Term> terms;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    higgs::Monomial m;
    for (std::size_t v = 0; v < ring->arity(); ++v) m[v] = ex(rng);
    terms.push_back({m, randomRational(rng)});
  }
  return MultiPoly::fromTerms(ring, std::move(terms));
}

inline MultiPoly randomHomogeneous(const RingPtr& ring, std::mt19937& rng, long degree, int maxTerms = 4) {
  std::vector<higgs::Monomial> monos;
  // enumerate exponent vectors of the requested weighted degree
  std::vector<int> e(ring->arity(), 0);
  auto rec = [&](auto&& self, std::size_t v, long left) -> void {
    if (v + 1 == ring->arity()) {
      const int w = ring->var(v).weight;
      if (left % w == 0) {
        e[v] = static_cast<int>(left / w);
        higgs::Monomial m;
        for (std::size_t i = 0; i < e.size(); ++i) m[i] = e[i];
        monos.push_back(m);
      }
      return;
    }
    for (long k = 0; k * ring->var(v).weight <= left; ++k) {
      e[v] = static_cast<int>(k);
      self(self, v + 1, left - k * ring->var(v).weight);
    }
  };
  rec(rec, 0, degree);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  std::vector<higgs::Term> terms;
  for (int i = 0; i < maxTerms; ++i) terms.push_back({monos[pick(rng)], randomRational(rng)});
  return MultiPoly::fromTerms(ring, std::move(terms));
}

inline UniPoly randomUniPoly(std::mt19937& rng, int maxDeg = 6) {
  std::uniform_int_distribution<int> deg(-1, maxDeg);
  std::vector<Rational> c;
  const int d = deg(rng);
  for (int i = 0; i <= d; ++i) c.push_back(randomRational(rng));
  return UniPoly(std::move(c));
}

// Plain integer polynomials: an arithmetic path that shares no code with the
// library.
namespace ip {

using P = std::vector<std::int64_t>;

inline P trim(P p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}
inline P mono(std::int64_t c, int e) {
  P p(static_cast<std::size_t>(e) + 1, 0);
  p[static_cast<std::size_t>(e)] = c;
  return trim(p);
}
inline P add(P a, const P& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return trim(a);
}
inline P neg(P a) {
  for (auto& x : a) x = -x;
  return a;
}
inline P sub(const P& a, const P& b) { return add(a, neg(b)); }
inline P mul(const P& a, const P& b) {
  if (a.empty() || b.empty()) return {};
  P r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return trim(r);
}
inline P pw(const P& a, int e) {
  P r{1};
  for (int i = 0; i < e; ++i) r = mul(r, a);
  return r;
}
inline P scale(P a, std::int64_t s) {
  for (auto& x : a) x *= s;
  return trim(a);
}
inline P truncate(P a, int d) {
  if (static_cast<int>(a.size()) > d + 1) a.resize(static_cast<std::size_t>(d) + 1);
  return trim(a);
}
// Power-series quotient through degree d; den[0] must be +-1.
inline P seriesQuot(const P& num, const P& den, int d) {
  P q(static_cast<std::size_t>(d) + 1, 0);
  for (int k = 0; k <= d; ++k) {
    std::int64_t acc = k < static_cast<int>(num.size()) ? num[static_cast<std::size_t>(k)] : 0;
    for (int j = 1; j <= k && j < static_cast<int>(den.size()); ++j)
      acc -= den[static_cast<std::size_t>(j)] * q[static_cast<std::size_t>(k - j)];
    q[static_cast<std::size_t>(k)] = acc * den[0];
  }
  return trim(q);
}
// Exact quotient, or empty optional-like flag via ok.
inline P exactQuot(const P& num, const P& den, bool& ok) {
  const int d = static_cast<int>(num.size()) - static_cast<int>(den.size());
  if (d < 0) {
    ok = num.empty();
    return {};
  }
  P q = seriesQuot(num, den, d);
  ok = mul(q, den) == num;
  return q;
}
inline std::int64_t binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}
inline bool same(const P& a, const UniPoly& b) {
  if (static_cast<int>(a.size()) != b.degree() + 1) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[static_cast<int>(i)] != Rational(static_cast<long>(a[i]))) return false;
  return true;
}

}  // namespace ip

}  // namespace testsupport

namespace testsupport {

// Exponent vectors of the given weighted degree, by direct enumeration.
inline std::vector<higgs::Monomial> monomialsOfDegree(const higgs::RingPtr& ring, long degree) {
  std::vector<higgs::Monomial> out;
  higgs::Monomial m;
  auto rec = [&](auto&& self, std::size_t v, long left) -> void {
    if (v == ring->arity()) {
      if (left == 0) out.push_back(m);
      return;
    }
    for (long k = 0; k * ring->var(v).weight <= left; ++k) {
      m[v] = static_cast<std::int32_t>(k);
      self(self, v + 1, left - k * ring->var(v).weight);
    }
    m[v] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

// Row-echelon rank over Q with rows keyed by monomial.
inline std::size_t rank(std::vector<MultiPoly> rows) {
  std::vector<MultiPoly> echelon;
  for (auto& r : rows) {
    bool changed = true;
    while (!r.is_zero() && changed) {
      changed = false;
      for (const auto& e : echelon)
        if (e.leadingMonomial() == r.leadingMonomial()) {
          r -= e * (r.leadingCoeff() / e.leadingCoeff());
          changed = true;
          break;
        }
    }
    if (!r.is_zero()) echelon.push_back(r);
  }
  return echelon.size();
}

// dim of (ring / <gens>) in degree d computed by linear algebra on the
// degree-d slice of the ideal; independent of any Groebner machinery.
inline long quotientDimension(const RingPtr& ring, const std::vector<MultiPoly>& gens, long d) {
  std::vector<MultiPoly> span;
  for (const auto& f : gens) {
    const long df = f.degree();
    if (df > d) continue;
    for (const auto& m : monomialsOfDegree(ring, d - df)) span.push_back(f.mulTerm(m, Rational(1)));
  }
  return static_cast<long>(monomialsOfDegree(ring, d).size()) - static_cast<long>(rank(std::move(span)));
}

// Multivariate division by leading terms, written independently of the library.
inline MultiPoly naiveReduce(MultiPoly p, const std::vector<MultiPoly>& basis) {
  MultiPoly rem(p.ring());
  while (!p.is_zero()) {
    bool divided = false;
    for (const auto& b : basis) {
      if (b.leadingMonomial().divides(p.leadingMonomial())) {
        p -= b.mulTerm(p.leadingMonomial() / b.leadingMonomial(), p.leadingCoeff() / b.leadingCoeff());
        divided = true;
        break;
      }
    }
    if (!divided) {
      const higgs::Term t = p.popLeading();
      rem += MultiPoly::monomial(p.ring(), t.mono, t.coeff);
    }
  }
  return rem;
}

// Buchberger's criterion: every S-polynomial reduces to zero.
inline bool isGroebner(const std::vector<MultiPoly>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const auto& f = basis[i];
      const auto& g = basis[j];
      const higgs::Monomial l = lcm(f.leadingMonomial(), g.leadingMonomial());
      const MultiPoly s = f.mulTerm(l / f.leadingMonomial(), Rational(1) / f.leadingCoeff()) -
                          g.mulTerm(l / g.leadingMonomial(), Rational(1) / g.leadingCoeff());
      if (!naiveReduce(s, basis).is_zero()) return false;
    }
  return true;
}

}  // namespace testsupport

namespace testsupport {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    std::string tmpl = (std::filesystem::temp_directory_path() / "higgs-test-XXXXXX").string();
    path = ::mkdtemp(tmpl.data());
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
};

}  // namespace testsupport
