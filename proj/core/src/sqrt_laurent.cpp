#include "higgs/sqrt_laurent.hpp"

#include "higgs/error.hpp"

namespace higgs {

SqrtLaurentElem::SqrtLaurentElem(MultiPoly value, std::string_view sVar)
    : value_(std::move(value)), s_(value_.ring()->require(sVar)) {}

SqrtLaurentElem SqrtLaurentElem::fromBeta(const MultiPoly& p, std::string_view betaVar, const RingPtr& target,
                                          std::string_view sVar) {
  const Ring& src = *p.ring();
  const std::size_t b = src.require(betaVar);
  const std::size_t s = target->require(sVar);
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Term r{Monomial{}, t.coeff};
    for (std::size_t i = 0; i < src.arity(); ++i) {
      if (i == b) r.mono[s] += 2 * t.mono[i];
      else r.mono[target->require(src.var(i).name)] += t.mono[i];
    }
    out.push_back(std::move(r));
  }
  return SqrtLaurentElem(MultiPoly::fromTerms(target, std::move(out)), sVar);
}

int SqrtLaurentElem::windowFloor() const { return value_.is_zero() ? 0 : value_.minExponent(s_); }

bool SqrtLaurentElem::isPolynomialInBeta() const {
  for (const auto& t : value_.terms())
    if (t.mono[s_] < 0 || t.mono[s_] % 2 != 0) return false;
  return true;
}

MultiPoly SqrtLaurentElem::toBeta(const RingPtr& target, std::string_view betaVar) const {
  if (!isPolynomialInBeta())
    throw Error(ErrorKind::InvalidArgument, "element is not polynomial in beta: " + value_.to_string());
  const Ring& src = *value_.ring();
  const std::size_t b = target->require(betaVar);
  std::vector<Term> out;
  out.reserve(value_.size());
  for (const auto& t : value_.terms()) {
    Term r{Monomial{}, t.coeff};
    for (std::size_t i = 0; i < src.arity(); ++i) {
      if (t.mono[i] == 0) continue;
      if (i == s_) r.mono[b] += t.mono[i] / 2;
      else r.mono[target->require(src.var(i).name)] += t.mono[i];
    }
    out.push_back(std::move(r));
  }
  return MultiPoly::fromTerms(target, std::move(out));
}

}  // namespace higgs
