#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "higgs/error.hpp"
#include "higgs/multipoly.hpp"
#include "higgs/unipoly.hpp"

namespace higgs {

/// Weighted graded lexicographic order taken from a ring: weighted degree is
/// the primary key, ties broken lexicographically with the first declared
/// variable largest (alpha > beta > gamma for the universal ring).
struct MonomialOrder {
  RingPtr ring;

  std::string descriptor() const { return "wglex(" + ring->descriptor() + ")"; }
};

/// Homogeneous ideal given by nonzero generators.
class IdealPresentation {
 public:
  IdealPresentation(RingPtr ring, std::vector<MultiPoly> generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<MultiPoly>& generators() const { return gens_; }
  MonomialOrder order() const { return MonomialOrder{ring_}; }

 private:
  RingPtr ring_;
  std::vector<MultiPoly> gens_;
};

/// Reduced Groebner basis: monic elements sorted by increasing leading
/// monomial. When degreeCap is set the basis is only complete up to that
/// degree (exact below the cap for homogeneous ideals).
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<MultiPoly> basis, std::optional<long> degreeCap);

  const RingPtr& ring() const { return ring_; }
  const std::vector<MultiPoly>& elements() const { return basis_; }
  std::size_t size() const { return basis_.size(); }
  const std::optional<long>& degreeCap() const { return cap_; }
  MonomialOrder order() const { return MonomialOrder{ring_}; }
  std::vector<Monomial> leadingMonomials() const;

  friend bool operator==(const GroebnerBasis&, const GroebnerBasis&) = default;

 private:
  RingPtr ring_;
  std::vector<MultiPoly> basis_;
  std::optional<long> cap_;
};

struct BuchbergerProgress {
  long degree = 0;
  std::size_t pairsRemaining = 0;
  std::size_t basisSize = 0;
};

struct BuchbergerOptions {
  std::optional<long> degreeCap;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  /// Called once per processed degree; must not throw.
  std::function<void(const BuchbergerProgress&)> progress;
};

struct BuchbergerStats {
  std::size_t pairsCreated = 0;
  std::size_t pairsPruned = 0;
  std::size_t reductionsToZero = 0;
};

/// Raised when a deadline expires; carries how far the computation got.
class ResourceLimitError : public Error {
 public:
  ResourceLimitError(const std::string& what, long degreeReached, std::size_t pairsRemaining)
      : Error(ErrorKind::ResourceLimit, what), degreeReached_(degreeReached), pairsRemaining_(pairsRemaining) {}

  long degreeReached() const { return degreeReached_; }
  std::size_t pairsRemaining() const { return pairsRemaining_; }

 private:
  long degreeReached_;
  std::size_t pairsRemaining_;
};

/// Buchberger's algorithm with the normal (degree-by-degree) selection
/// strategy and Gebauer-Moeller pair pruning, including the coprime
/// leading-term criterion.
GroebnerBasis buchberger(const IdealPresentation& ideal, const BuchbergerOptions& options = {},
                         BuchbergerStats* stats = nullptr);

struct QuotientTerm {
  MultiPoly multiplier;
  std::size_t index;  // into GroebnerBasis::elements()
};

/// p = sum multiplier * basis[index] + remainder, exactly.
struct MembershipCertificate {
  std::vector<QuotientTerm> quotients;
  MultiPoly remainder;

  bool reconstructs(const MultiPoly& p, const GroebnerBasis& gb) const;
};

/// Full multivariate division by the basis. Throws CapExceeded when the basis
/// is capped below deg(p).
MembershipCertificate normalForm(const MultiPoly& p, const GroebnerBasis& gb);

/// Remainder only; same preconditions as normalForm.
MultiPoly reduce(const MultiPoly& p, const GroebnerBasis& gb);

/// Sum over d <= upToDegree of dim(quotient)_d T^d, counted from the
/// staircase of leading monomials.
UniPoly hilbertSeries(const GroebnerBasis& gb, long upToDegree);

/// True when every variable has a pure power among the leading monomials,
/// i.e. the quotient is finite-dimensional.
bool isArtinian(const GroebnerBasis& gb);

/// Degree above which an Artinian quotient vanishes.
long artinianDegreeBound(const GroebnerBasis& gb);

/// Monomials of the given weighted degree (all weights must be >= 1).
std::vector<Monomial> monomialsOfDegree(const Ring& ring, long degree);

/// Scales p to have coprime integer coefficients and a positive leading
/// coefficient.
MultiPoly primitivePart(const MultiPoly& p);

}  // namespace higgs
