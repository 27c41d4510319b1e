#pragma once

#include <array>
#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "higgs/gb_cache.hpp"
#include "higgs/groebner.hpp"
#include "higgs/multipoly.hpp"
#include "higgs/series.hpp"
#include "higgs/sqrt_laurent.hpp"
#include "higgs/unipoly.hpp"

namespace higgs {

/// Q[alpha, beta, gamma] with T-weights 1, 2, 3, written a, b, g.
RingPtr universalRing();

/// Zagier's recursion (r+1) z_{r+1} = a z_r + r b z_{r-1} + 2 g z_{r-2}.
MultiPoly zetaRec(int r);
/// z_0 .. z_r.
std::vector<MultiPoly> zetaRecUpTo(int r);

/// Two readings of the prefactor of the two-variable generating function:
/// e^{-2 gamma x} / beta, or e^{-2 gamma x / beta}.
enum class GfParse { ExpOverBeta, ExpGammaOverBeta };
std::string_view gfParseName(GfParse p);

/// Coefficient ring of the generating function: x, y of weight 1 and the
/// weight-0 symbols a, s, g with s^2 = beta.
RingPtr generatingFunctionRing();
/// Expansion of the generating function through total (x, y)-degree N.
TruncatedSeries zagierGeneratingFunction(int N, GfParse parse);

struct ZetaRS {
  int r = 0;
  int s = 0;
  /// Element of Q[a, g][s, 1/s] (ring {a, s, g}).
  SqrtLaurentElem value;
  /// Present iff the value only involves even non-negative powers of s.
  std::optional<MultiPoly> inBeta;
};
ZetaRS zetaRS(int r, int s, GfParse parse = GfParse::ExpGammaOverBeta);
/// All zeta_{r,s} with r + s <= N from one expansion.
std::vector<ZetaRS> zetaRSUpTo(int N, GfParse parse = GfParse::ExpGammaOverBeta);
/// zeta_{r,s} (2 gamma)^t / t!; throws InvalidArgument if zeta_{r,s} is not
/// polynomial under the parse.
MultiPoly zetaRST(int r, int s, int t, GfParse parse = GfParse::ExpGammaOverBeta);

/// sum_i C(r,i) C(g-t-i, g-t-s) a^{r-i} b^{s-i} (2g)^{t+i}.
MultiPoly rho(int r, int s, int t, int g);

struct PresentedRing {
  int genus = 0;
  RingPtr ring;
  std::vector<MultiPoly> relations;
  /// Index labels of the relations, e.g. "rho(1,1,0)" or "zeta_3".
  std::vector<std::string> labels;
  UniPoly targetHilbert;
  long cap = 0;
};

/// Nonzero rho_{r,s,t} with 3g-3 < r+3s+3t <= cap (cap defaults to 3g).
PresentedRing buildR(int g, std::optional<long> cap = std::nullopt);
/// <z_g, z_{g+1}, z_{g+2}>.
PresentedRing buildIg(int g);

enum class CheckStatus { Verified, Falsified, ResourceLimited };
std::string_view statusName(CheckStatus s);

struct Report {
  std::string check;
  int genus = 0;
  std::vector<std::pair<std::string, std::string>> params;
  CheckStatus status = CheckStatus::Verified;
  std::vector<std::string> witnesses;
  std::optional<long> capUsed;
  std::string gbCacheKey;
  double wallTime = 0;
  /// Additional named results (Hilbert series, selected parse, ...).
  std::vector<std::pair<std::string, std::string>> facts;
};

struct VerifyOptions {
  /// Upper bound for relation-window escalation; 0 means 3g + 9.
  long maxCap = 0;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  const GbCache* cache = nullptr;
  std::function<void(const std::string& stage, const BuchbergerProgress&)> progress;
  /// Relations removed from the window before computing (fault injection).
  std::vector<std::array<int, 3>> omitRho;
};

/// Groebner basis with an in-process memo in front of the optional disk cache.
GroebnerBasis presentationBasis(const PresentedRing& pr, const VerifyOptions& opts, std::string* keyHex = nullptr);

Report verifyPresentation(int g, const VerifyOptions& opts = {});
Report verifyNPresentation(int g, const VerifyOptions& opts = {});
/// beta^g vanishes in R_g and lies in I_g, beta^{g-1} survives in R_g, and
/// rho_{1,g-1,0} lies in both ideals.
Report verifyNewstead(int g, const VerifyOptions& opts = {});
/// Certificates for every rho in the relation window of R_g against I_g.
Report verifyRhoMembership(int g, const VerifyOptions& opts = {});
/// zeta_{r,s,t} with r+s+t <= g-1 are independent modulo I_g (and so span the
/// quotient); zeta_{r,s,t} with g <= r+s+t <= g+2 lie in I_g.
Report verifyZetaBasis(int g, const VerifyOptions& opts = {});

MembershipCertificate rhoInIg(int r, int s, int t, int g, const VerifyOptions& opts = {});

/// alpha -> (2d-1)(eta-u) + sigma, beta -> (eta-u)^2, gamma -> -(eta-u)^2 sigma / 2
/// into etaSigmaURing().
MultiPoly restrictToFd(const MultiPoly& p, int d, int g);

/// Substitutes the restriction images (sqrt(beta) -> w, treated as an
/// independent variable, later w = eta - u) with x = u, y = 1 into the
/// generating function and compares through T-degree 2g with
/// e^{sigma u} (1 - w^2 + u w)^{d-1} / (1 - w^2 - u w)^d.
bool generatingFunctionOracle(int g, int d, GfParse parse);
/// Parse reproducing the closed form for every 1 <= d <= g-1, if unique.
std::optional<GfParse> selectGfParse(int g);

/// Chern character and total Chern class of the virtual Dirac bundle.
struct DiracChernData {
  int genus = 0;
  int maxIndex = 0;
  /// ch_0 .. ch_maxIndex over universalRing() (only a, b occur).
  std::vector<MultiPoly> ch;
  /// c_0 .. c_maxIndex via Newton's identities.
  std::vector<MultiPoly> c;
  /// (1 + a + (a^2 - b)/4)^{2g-2}.
  MultiPoly expected{universalRing()};
};
DiracChernData diracChern(int g, int maxIndex);
Report verifyDirac(int g, int maxIndex = 0);

/// Newton's identities: power sums p_k = k! ch_k give elementary symmetric
/// functions c_k.
std::vector<MultiPoly> chernFromCharacter(const std::vector<MultiPoly>& ch);
/// Inverse conversion; ch_0 is the supplied rank.
std::vector<MultiPoly> characterFromChern(const std::vector<MultiPoly>& c, const Rational& rank);

/// Hypothesis-satisfying tuples of the symmetric-product vanishing lemma at
/// genus g with k, m, l <= maxIndex (default 2g).
Report verifyVanishingLemma(int g, int maxIndex = 0);
/// Restriction of the beta^g relation to every F_d, its termwise form, and
/// the generating-function parse oracle.
Report verifyBetaGRestriction(int g);
/// Poincare polynomial identities; stabilization compared through degree D.
Report verifyIdentities(int g, int stabilizationDegree = 10);

}  // namespace higgs
