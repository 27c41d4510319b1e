#include "higgs/multipoly.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <unordered_set>

#include "higgs/error.hpp"

namespace higgs {

bool Monomial::is_one() const {
  return std::all_of(e.begin(), e.end(), [](std::int32_t x) { return x == 0; });
}

bool Monomial::divides(const Monomial& b) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (e[i] > b.e[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& b) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (e[i] > 0 && b.e[i] > 0) return false;
  return true;
}

bool Monomial::has_negative() const {
  return std::any_of(e.begin(), e.end(), [](std::int32_t x) { return x < 0; });
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = a.e[i] + b.e[i];
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = a.e[i] - b.e[i];
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto x : m.e) {
    h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(x));
    h *= 1099511628211ull;
  }
  return h;
}

Ring::Ring(std::vector<VarSpec> vars) : vars_(std::move(vars)) {
  if (vars_.size() > kMaxVars)
    throw Error(ErrorKind::InvalidArgument, "ring has more than " + std::to_string(kMaxVars) + " variables");
  std::unordered_set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.name.empty()) throw Error(ErrorKind::InvalidArgument, "empty variable name");
    if (v.weight < 0) throw Error(ErrorKind::InvalidArgument, "negative weight for " + v.name);
    if (!seen.insert(v.name).second) throw Error(ErrorKind::InvalidArgument, "duplicate variable " + v.name);
  }
}

std::optional<std::size_t> Ring::index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return i;
  return std::nullopt;
}

std::size_t Ring::require(std::string_view name) const {
  auto i = index(name);
  if (!i) throw Error(ErrorKind::InvalidArgument, "unknown variable '" + std::string(name) + "'");
  return *i;
}

long Ring::degree(const Monomial& m) const {
  long d = 0;
  for (std::size_t i = 0; i < vars_.size(); ++i) d += static_cast<long>(vars_[i].weight) * m.e[i];
  return d;
}

int Ring::compare(const Monomial& a, const Monomial& b) const {
  const long da = degree(a);
  const long db = degree(b);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
  return 0;
}

std::string Ring::descriptor() const {
  std::string s;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (i) s += ',';
    s += vars_[i].name + ':' + std::to_string(vars_[i].weight);
  }
  return s;
}

RingPtr makeRing(std::vector<VarSpec> vars) { return std::make_shared<const Ring>(std::move(vars)); }

namespace {

std::vector<Term> normalize(const Ring& ring, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ring.greater(a.mono, b.mono); });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  return out;
}

void requireArity(const Ring& ring, const Monomial& m) {
  for (std::size_t i = ring.arity(); i < kMaxVars; ++i)
    if (m.e[i] != 0) throw Error(ErrorKind::ArityMismatch, "exponent vector exceeds ring arity");
}

}  // namespace

void MultiPoly::requireSameRing(const MultiPoly& o) const {
  if (ring_ != o.ring_ && !(*ring_ == *o.ring_))
    throw Error(ErrorKind::ArityMismatch,
                "polynomials over different rings [" + ring_->descriptor() + "] vs [" + o.ring_->descriptor() + "]");
}

MultiPoly MultiPoly::constant(RingPtr ring, const Rational& c) {
  return monomial(std::move(ring), Monomial{}, c);
}

MultiPoly MultiPoly::variable(RingPtr ring, std::string_view name) {
  const std::size_t i = ring->require(name);
  return variable(std::move(ring), i);
}

MultiPoly MultiPoly::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->arity()) throw Error(ErrorKind::ArityMismatch, "variable index out of range");
  Monomial m;
  m[index] = 1;
  return monomial(std::move(ring), m);
}

MultiPoly MultiPoly::monomial(RingPtr ring, const Monomial& m, const Rational& c) {
  requireArity(*ring, m);
  if (c.is_zero()) return MultiPoly(std::move(ring));
  return MultiPoly(std::move(ring), std::vector<Term>{Term{m, c}});
}

MultiPoly MultiPoly::fromTerms(RingPtr ring, std::vector<Term> terms) {
  for (const auto& t : terms) requireArity(*ring, t.mono);
  auto sorted = normalize(*ring, std::move(terms));
  return MultiPoly(std::move(ring), std::move(sorted));
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [&](const Term& t, const Monomial& x) { return ring_->greater(t.mono, x); });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return Rational(0);
}

Rational MultiPoly::constantTerm() const { return coefficient(Monomial{}); }

long MultiPoly::degree() const {
  if (is_zero()) throw Error(ErrorKind::InvalidArgument, "degree of zero polynomial");
  return ring_->degree(terms_.front().mono);
}

long MultiPoly::lowDegree() const {
  if (is_zero()) throw Error(ErrorKind::InvalidArgument, "degree of zero polynomial");
  return ring_->degree(terms_.back().mono);
}

bool MultiPoly::isHomogeneous() const { return is_zero() || degree() == lowDegree(); }

MultiPoly MultiPoly::homogeneousPart(long d) const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (ring_->degree(t.mono) == d) out.push_back(t);
  return MultiPoly(ring_, std::move(out));
}

MultiPoly MultiPoly::truncated(long d) const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (ring_->degree(t.mono) <= d) out.push_back(t);
  return MultiPoly(ring_, std::move(out));
}

MultiPoly MultiPoly::coefficientOf(std::size_t var, int exponent) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.mono[var] != exponent) continue;
    Term r = t;
    r.mono[var] = 0;
    out.push_back(std::move(r));
  }
  return fromTerms(ring_, std::move(out));
}

int MultiPoly::maxExponent(std::size_t var) const {
  if (is_zero()) throw Error(ErrorKind::InvalidArgument, "exponent of zero polynomial");
  int m = terms_.front().mono[var];
  for (const auto& t : terms_) m = std::max(m, t.mono[var]);
  return m;
}

int MultiPoly::minExponent(std::size_t var) const {
  if (is_zero()) throw Error(ErrorKind::InvalidArgument, "exponent of zero polynomial");
  int m = terms_.front().mono[var];
  for (const auto& t : terms_) m = std::min(m, t.mono[var]);
  return m;
}

namespace {

template <class Op>
std::vector<Term> merge(const Ring& ring, const std::vector<Term>& a, const std::vector<Term>& b, Op op) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size()) c = -1;
    else if (j == b.size()) c = 1;
    else c = ring.compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(Term{b[j].mono, op(Rational(0), b[j].coeff)});
      ++j;
    } else {
      Rational s = op(a[i].coeff, b[j].coeff);
      if (!s.is_zero()) out.push_back(Term{a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  requireSameRing(o);
  terms_ = merge(*ring_, terms_, o.terms_, [](const Rational& x, const Rational& y) { return x + y; });
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  requireSameRing(o);
  terms_ = merge(*ring_, terms_, o.terms_, [](const Rational& x, const Rational& y) { return x - y; });
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= s;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  return MultiPoly::mulTruncated(a, b, std::numeric_limits<long>::max());
}

MultiPoly MultiPoly::mulTruncated(const MultiPoly& a, const MultiPoly& b, long maxDegree) {
  a.requireSameRing(b);
  if (a.is_zero() || b.is_zero()) return MultiPoly(a.ring_);
  std::vector<Term> raw;
  raw.reserve(a.terms_.size() * b.terms_.size());
  const Ring& ring = *a.ring_;
  const bool bounded = maxDegree != std::numeric_limits<long>::max();
  for (const auto& x : a.terms_) {
    const long dx = bounded ? ring.degree(x.mono) : 0;
    for (const auto& y : b.terms_) {
      if (bounded && dx + ring.degree(y.mono) > maxDegree) continue;
      raw.push_back(Term{x.mono * y.mono, x.coeff * y.coeff});
    }
  }
  return MultiPoly(a.ring_, normalize(ring, std::move(raw)));
}

MultiPoly MultiPoly::mulTerm(const Monomial& m, const Rational& c) const {
  if (c.is_zero()) return MultiPoly(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(Term{t.mono * m, t.coeff * c});
  return MultiPoly(ring_, std::move(out));
}

MultiPoly MultiPoly::pow(const MultiPoly& p, int e) {
  if (e < 0) throw Error(ErrorKind::InvalidArgument, "negative power of MultiPoly");
  MultiPoly result = constant(p.ring_, Rational(1));
  MultiPoly base = p;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Term MultiPoly::popLeading() {
  if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "leading term of zero polynomial");
  Term t = std::move(terms_.front());
  terms_.erase(terms_.begin());
  return t;
}

MultiPoly MultiPoly::monic() const {
  if (is_zero()) return *this;
  return *this * (Rational(1) / leadingCoeff());
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (!(a.ring_ == b.ring_ || *a.ring_ == *b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

std::string MultiPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (k) os << " + ";
    os << terms_[k].coeff.to_string();
    for (std::size_t i = 0; i < ring_->arity(); ++i) {
      const int e = terms_[k].mono[i];
      if (e == 0) continue;
      os << '*' << ring_->var(i).name;
      if (e != 1) os << '^' << e;
    }
  }
  return os.str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

bool looksNumeric(std::string_view s) {
  if (s.empty()) return false;
  const char c = s[0];
  return (c >= '0' && c <= '9') || c == '-' || c == '+';
}

}  // namespace

MultiPoly parsePoly(const RingPtr& ring, std::string_view input) {
  input = trim(input);
  if (input.empty()) throw Error(ErrorKind::Parse, "empty polynomial text");
  if (input == "0") return MultiPoly(ring);
  // "x - y" becomes "x + -y"; a minus after '^', '+' or at the start is unary.
  std::string normalized;
  char prev = 0;
  for (char ch : input) {
    if (ch == '-' && prev != 0 && prev != '^' && prev != '+' && prev != '*' && prev != '/') normalized += '+';
    normalized += ch;
    if (ch != ' ') prev = ch;
  }
  const std::string_view text = normalized;
  std::vector<Term> terms;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t plus = text.find('+', start);
    if (plus == std::string_view::npos) plus = text.size();
    std::string_view termText = trim(text.substr(start, plus - start));
    start = plus + 1;
    if (termText.empty()) throw Error(ErrorKind::Parse, "empty term in '" + std::string(text) + "'");
    Term term{Monomial{}, Rational(1)};
    const bool negated = termText.front() == '-';
    if (negated) {
      termText = trim(termText.substr(1));
      if (termText.empty()) throw Error(ErrorKind::Parse, "dangling '-' in '" + std::string(text) + "'");
    }
    std::size_t fs = 0;
    bool firstFactor = true;
    while (fs <= termText.size()) {
      std::size_t star = termText.find('*', fs);
      if (star == std::string_view::npos) star = termText.size();
      std::string_view factor = trim(termText.substr(fs, star - fs));
      fs = star + 1;
      if (factor.empty()) throw Error(ErrorKind::Parse, "empty factor in '" + std::string(termText) + "'");
      if (firstFactor && looksNumeric(factor)) {
        term.coeff = Rational::parse(factor);
      } else {
        const auto caret = factor.find('^');
        std::string_view name = trim(factor.substr(0, caret));
        int exponent = 1;
        if (caret != std::string_view::npos) {
          std::string ex(trim(factor.substr(caret + 1)));
          try {
            std::size_t used = 0;
            exponent = std::stoi(ex, &used);
            if (used != ex.size()) throw std::invalid_argument(ex);
          } catch (const std::exception&) {
            throw Error(ErrorKind::Parse, "bad exponent in '" + std::string(factor) + "'");
          }
        }
        auto idx = ring->index(name);
        if (!idx) throw Error(ErrorKind::Parse, "unknown variable '" + std::string(name) + "'");
        term.mono[*idx] += exponent;
      }
      firstFactor = false;
      if (star == termText.size()) break;
    }
    if (negated) term.coeff = -term.coeff;
    terms.push_back(std::move(term));
    if (plus == text.size()) break;
  }
  return MultiPoly::fromTerms(ring, std::move(terms));
}

MultiPoly substitute(const MultiPoly& p, const RingPtr& target, std::span<const MultiPoly> images,
                     std::span<const MultiPoly> inverseImages) {
  const Ring& src = *p.ring();
  if (images.size() != src.arity())
    throw Error(ErrorKind::ArityMismatch, "substitution needs one image per source variable");
  // powers[i][e] caches images[i]^e (or inverse images for negative e).
  std::vector<std::map<int, MultiPoly>> powers(src.arity());
  auto power = [&](std::size_t i, int e) -> const MultiPoly& {
    auto it = powers[i].find(e);
    if (it != powers[i].end()) return it->second;
    MultiPoly value(target);
    if (e >= 0) {
      value = MultiPoly::pow(images[i], e);
    } else {
      if (i >= inverseImages.size())
        throw Error(ErrorKind::InvalidArgument, "negative exponent of " + src.var(i).name + " without inverse image");
      value = MultiPoly::pow(inverseImages[i], -e);
    }
    return powers[i].emplace(e, std::move(value)).first->second;
  };
  MultiPoly result(target);
  for (const auto& t : p.terms()) {
    MultiPoly acc = MultiPoly::constant(target, t.coeff);
    for (std::size_t i = 0; i < src.arity(); ++i)
      if (t.mono[i] != 0) acc = acc * power(i, t.mono[i]);
    result += acc;
  }
  return result;
}

MultiPoly embed(const MultiPoly& p, const RingPtr& target) {
  const Ring& src = *p.ring();
  std::vector<std::optional<std::size_t>> map(src.arity());
  for (std::size_t i = 0; i < src.arity(); ++i) map[i] = target->index(src.var(i).name);
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Term r{Monomial{}, t.coeff};
    for (std::size_t i = 0; i < src.arity(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!map[i]) throw Error(ErrorKind::InvalidArgument, "target ring has no variable " + src.var(i).name);
      r.mono[*map[i]] += t.mono[i];
    }
    out.push_back(std::move(r));
  }
  return MultiPoly::fromTerms(target, std::move(out));
}

}  // namespace higgs
