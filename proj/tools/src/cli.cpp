#include "higgsc/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "higgs/error.hpp"
#include "higgs/gb_cache.hpp"
#include "higgs/poincare.hpp"
#include "higgs/rings.hpp"

namespace higgsc {

namespace {

using json = nlohmann::ordered_json;
using namespace higgs;

const std::map<std::string, std::string>& greek() {
  static const std::map<std::string, std::string> m{
      {"a", "α"}, {"b", "β"}, {"g", "γ"}, {"eta", "η"}, {"sigma", "σ"}, {"s", "√β"}};
  return m;
}

const std::map<std::string, std::string>& latexNames() {
  static const std::map<std::string, std::string> m{
      {"a", "\\alpha"}, {"b", "\\beta"}, {"g", "\\gamma"}, {"eta", "\\eta"}, {"sigma", "\\sigma"}, {"s", "\\sqrt{\\beta}"}};
  return m;
}

std::string superscript(int e) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string out = e < 0 ? "⁻" : "";
  for (char ch : std::to_string(std::abs(e))) out += digits[ch - '0'];
  return out;
}

std::string lookup(const std::map<std::string, std::string>& names, const std::string& v) {
  auto it = names.find(v);
  return it == names.end() ? v : it->second;
}

template <class Coeff, class Body>
std::string joinSigned(const std::vector<std::pair<Rational, std::string>>& terms, Coeff coeff, Body) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [c, mono] : terms) {
    const bool neg = c.sign() < 0;
    if (first) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    const Rational a = neg ? -c : c;
    if (mono.empty()) out += coeff(a);
    else out += (a.is_one() ? "" : coeff(a)) + mono;
    first = false;
  }
  return out;
}

std::string latexRational(const Rational& r) {
  if (r.is_integer()) return r.to_string();
  return "\\frac{" + r.numerator().get_str() + "}{" + r.denominator().get_str() + "}";
}

std::vector<std::string> formulas(SpaceId id) {
  switch (id) {
    case SpaceId::Jacobian: return {"P(J) = (1+t)^{2g}"};
    case SpaceId::SymProd:
      return {"P(Sigma_n) = coefficient of x^n in (1+xt)^{2g} / ((1-x)(1-xt^2))"};
    case SpaceId::SymProdInfty: return {"P(Sigma_inf) = (1+t)^{2g} / (1-t^2)"};
    case SpaceId::BG: return {"P(BG) = ((1+t)(1+t^3))^{2g} / ((1-t^2)^2 (1-t^4))"};
    case SpaceId::BGbar: return {"P(BGbar) = ((1+t)(1+t^3))^{2g} / ((1-t^2)(1-t^4))"};
    case SpaceId::N: return {"P(N) = ((1+t^3)^{2g} - t^{2g}(1+t)^{2g}) / ((1-t^2)(1-t^4))"};
    case SpaceId::Ntilde: return {"P(Ntilde) = (1+t)^{2g} P(N)"};
    case SpaceId::F:
      return {"P(F_d) = P(Sigma_dbar) + (2^{2g}-1) C(2g-2, dbar) t^dbar, dbar = 2g-2d-1"};
    case SpaceId::M: return {"P(M) = P(N) + sum_{d=1}^{g-1} t^{2(g+2d-2)} P(F_d)"};
    case SpaceId::Mtilde: return {"P(Mtilde) = (1+t)^{2g} (P(N) + sum_d t^{2(g+2d-2)} P(Sigma_dbar))"};
    case SpaceId::MGammaInv: return {"P(M)^Gamma = P(N) + sum_d t^{2(g+2d-2)} P(Sigma_dbar)"};
    case SpaceId::Mk: return {"P(M_k)^Gamma = P(N) + sum_{d=1}^{g-1+k} t^{2(g+2d-2)} P(Sigma_{dbar+k})"};
    case SpaceId::MtildeK: return {"P(Mtilde_k) = (1+t)^{2g} P(M_k)^Gamma"};
    case SpaceId::Z:
      return {"P(Z) = (t^{6g-6}-1)/(t^2-1) P(N) + sum_d (t^{6g-6}-t^{2g-4+4d})/(t^2-1) P(F_d)"};
    case SpaceId::Mbar: return {"P(Mbar) = P(M) + t^2 P(Z)"};
    case SpaceId::MtildeInfty:
      return {"P(Mtilde_inf) = (1+t)^{2g} P(N) + sum_d t^{2(g+2d-2)} P(J) P(Sigma_inf)"};
  }
  return {};
}

json coefficientList(const UniPoly& p) {
  json arr = json::array();
  for (const auto& c : p.coefficients()) arr.push_back(c.to_string());
  return arr;
}

json polyJson(const MultiPoly& p) {
  json terms = json::array();
  for (const auto& t : p.terms()) {
    json e = json::array();
    for (std::size_t i = 0; i < p.ring()->arity(); ++i) e.push_back(t.mono[i]);
    terms.push_back({{"exponents", e}, {"coefficient", t.coeff.to_string()}});
  }
  return {{"ring", p.ring()->descriptor()},
          {"canonical", p.to_string()},
          {"display", displayPoly(p)},
          {"terms", terms}};
}

json reportJson(const Report& r, bool timing) {
  json params = json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  json facts = json::object();
  for (const auto& [k, v] : r.facts) facts[k] = v;
  json j{{"check", r.check},
         {"genus", r.genus},
         {"params", params},
         {"status", std::string(statusName(r.status))},
         {"witnesses", r.witnesses},
         {"capUsed", r.capUsed ? json(*r.capUsed) : json(nullptr)},
         {"gbCacheKey", r.gbCacheKey},
         {"facts", facts}};
  if (timing) j["wallTime"] = r.wallTime;
  return j;
}

json envelope(const std::vector<std::string>& args, json result, std::vector<std::string> provenance) {
  return {{"schema", kSchemaVersion},
          {"command", {{"args", args}}},
          {"result", std::move(result)},
          {"provenance", std::move(provenance)}};
}

struct PoincareArgs {
  std::string space;
  int genus = 0;
  int n = 0, d = 0, k = 0, trunc = 0;
  CLI::Option *nOpt = nullptr, *dOpt = nullptr, *kOpt = nullptr, *truncOpt = nullptr;
  std::string format;
  bool invariant = false;
};

void addPoincareOptions(CLI::App* sub, PoincareArgs& a, const std::string& defaultFormat) {
  std::vector<std::string> names;
  for (SpaceId id : allSpaces()) names.emplace_back(spaceName(id));
  sub->add_option("--space", a.space, "Space")->required()->check(CLI::IsMember(names));
  sub->add_option("--genus", a.genus, "Genus g >= 2")->required();
  a.nOpt = sub->add_option("--n", a.n, "Symmetric power");
  a.dOpt = sub->add_option("--d", a.d, "Critical index 1 <= d <= g-1");
  a.kOpt = sub->add_option("--k", a.k, "Pole order");
  a.truncOpt = sub->add_option("--trunc", a.trunc, "Truncation degree for infinite spaces");
  a.format = defaultFormat;
  sub->add_option("--format", a.format, "Output format")->check(CLI::IsMember({"json", "table", "latex"}));
  sub->add_flag("--invariant", a.invariant, "Invariant Poincare polynomial in T (Sigma, N, M)");
}

GenusParams paramsOf(const PoincareArgs& a) {
  GenusParams p{a.genus};
  if (*a.nOpt) p.n = a.n;
  if (*a.dOpt) p.d = a.d;
  if (*a.kOpt) p.k = a.k;
  if (*a.truncOpt) p.trunc = a.trunc;
  return p;
}

UniPoly computePoincare(const PoincareArgs& a, SpaceId id) {
  const GenusParams params = paramsOf(a);
  if (!a.invariant) return poincare(id, params);
  switch (id) {
    case SpaceId::SymProd:
      if (!params.n) throw Error(ErrorKind::InvalidArgument, "space Sigma needs parameter n");
      return invariantPoincareSymProd(a.genus, *params.n);
    case SpaceId::N: return invariantPoincareN(a.genus);
    case SpaceId::M: return invariantPoincareM(a.genus);
    default: throw Error(ErrorKind::InvalidArgument, "--invariant is available for Sigma, N and M only");
  }
}

std::string bettiRow(const UniPoly& p) {
  std::string row;
  for (int i = 0; i <= p.degree(); ++i) row += (i ? " " : "") + p[i].to_string();
  return row;
}

int runPoincare(const PoincareArgs& a, bool bettiOnly, const std::vector<std::string>& args, std::ostream& out) {
  const SpaceId id = *parseSpaceName(a.space);
  const UniPoly p = computePoincare(a, id);
  const std::string var = a.invariant ? "T" : "t";
  if (a.format == "json") {
    json result{{"space", a.space}, {"genus", a.genus}};
    const GenusParams gp = paramsOf(a);
    json params = json::object();
    if (gp.n) params["n"] = *gp.n;
    if (gp.d) params["d"] = *gp.d;
    if (gp.k) params["k"] = *gp.k;
    if (gp.trunc) params["trunc"] = *gp.trunc;
    result["params"] = params;
    result["invariant"] = a.invariant;
    result["variable"] = var;
    if (bettiOnly) {
      result["betti"] = coefficientList(p);
    } else {
      result["coefficients"] = coefficientList(p);
      result["text"] = p.to_string(var);
    }
    std::vector<std::string> prov =
        a.invariant ? std::vector<std::string>{"sum over the monomial basis of the invariant subring"} : formulas(id);
    out << envelope(args, result, prov).dump(2) << "\n";
  } else if (a.format == "latex") {
    out << a.space << " & " << a.genus << " & $" << latexPoly(p, var) << "$ \\\\\n";
  } else if (bettiOnly) {
    out << bettiRow(p) << "\n";
  } else {
    std::size_t width = 6;
    for (const auto& c : p.coefficients()) width = std::max(width, c.to_string().size());
    out << "# " << a.space << " genus " << a.genus << "\n";
    out << "degree  " << std::string(width - 5, ' ') << "betti\n";
    for (int i = 0; i <= p.degree(); ++i) {
      const std::string d = std::to_string(i), c = p[i].to_string();
      out << std::string(6 - std::min<std::size_t>(6, d.size()), ' ') << d << "  "
          << std::string(width - c.size(), ' ') << c << "\n";
    }
    out << "betti: " << bettiRow(p) << "\n";
  }
  return kExitOk;
}

struct RelationsArgs {
  std::string kind;
  int genus = 0;
  CLI::Option* genusOpt = nullptr;
  std::vector<int> indices;
  std::string format = "json";
  std::string parse = "exp-gamma-over-beta";
};

struct RelationItem {
  std::string label;
  std::optional<MultiPoly> poly;
  std::string laurent;  // zeta_{r,s} outside Q[a,b,g]
};

std::vector<RelationItem> relationItems(const RelationsArgs& a) {
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (a.indices.size() < lo || a.indices.size() > hi)
      throw Error(ErrorKind::InvalidArgument, a.kind + " takes between " + std::to_string(lo) + " and " +
                                                  std::to_string(hi) + " indices");
    for (int i : a.indices)
      if (i < 0) throw Error(ErrorKind::InvalidArgument, "indices must be >= 0");
  };
  auto genus = [&]() {
    if (!*a.genusOpt) throw Error(ErrorKind::InvalidArgument, a.kind + " needs --genus");
    if (a.genus < 2) throw Error(ErrorKind::InvalidArgument, "genus must be >= 2");
    return a.genus;
  };
  const GfParse parse = a.parse == "exp-over-beta" ? GfParse::ExpOverBeta : GfParse::ExpGammaOverBeta;
  std::vector<RelationItem> items;
  if (a.kind == "zeta") {
    need(0, 1);
    if (a.indices.empty()) {
      const PresentedRing pr = buildIg(genus());
      for (std::size_t i = 0; i < pr.relations.size(); ++i) items.push_back({pr.labels[i], pr.relations[i], {}});
    } else {
      items.push_back({"zeta_" + std::to_string(a.indices[0]), zetaRec(a.indices[0]), {}});
    }
  } else if (a.kind == "zeta-rs") {
    need(0, 3);
    if (a.indices.size() == 1) throw Error(ErrorKind::InvalidArgument, "zeta-rs takes r s [t]");
    if (a.indices.empty()) {
      for (const auto& z : zetaRSUpTo(genus(), parse)) {
        const std::string label = "zeta(" + std::to_string(z.r) + "," + std::to_string(z.s) + ")";
        if (z.inBeta) items.push_back({label, *z.inBeta, {}});
        else items.push_back({label, std::nullopt, z.value.value().to_string()});
      }
    } else {
      const int r = a.indices[0], s = a.indices[1], t = a.indices.size() > 2 ? a.indices[2] : 0;
      std::string label = "zeta(" + std::to_string(r) + "," + std::to_string(s);
      label += a.indices.size() > 2 ? "," + std::to_string(t) + ")" : ")";
      const ZetaRS z = zetaRS(r, s, parse);
      if (z.inBeta) items.push_back({label, zetaRST(r, s, t, parse), {}});
      else items.push_back({label, std::nullopt, z.value.value().to_string()});
    }
  } else {
    const int g = genus();
    need(0, 3);
    if (a.indices.empty()) {
      const PresentedRing pr = buildR(g);
      for (std::size_t i = 0; i < pr.relations.size(); ++i) items.push_back({pr.labels[i], pr.relations[i], {}});
    } else {
      if (a.indices.size() != 3) throw Error(ErrorKind::InvalidArgument, "rho takes r s t");
      const int r = a.indices[0], s = a.indices[1], t = a.indices[2];
      items.push_back({"rho(" + std::to_string(r) + "," + std::to_string(s) + "," + std::to_string(t) + ")",
                       rho(r, s, t, g), {}});
    }
  }
  return items;
}

int runRelations(const RelationsArgs& a, const std::vector<std::string>& args, std::ostream& out) {
  const auto items = relationItems(a);
  if (a.format == "json") {
    json arr = json::array();
    for (const auto& it : items) {
      json j{{"label", it.label}};
      if (it.poly) {
        j["polynomial"] = polyJson(*it.poly);
        j["degree"] = it.poly->is_zero() ? json(nullptr) : json(it.poly->degree());
      } else {
        j["laurent"] = it.laurent;
      }
      arr.push_back(j);
    }
    std::vector<std::string> prov;
    if (a.kind == "zeta") prov = {"(r+1) zeta_{r+1} = alpha zeta_r + r beta zeta_{r-1} + 2 gamma zeta_{r-2}, zeta_0 = 1"};
    else if (a.kind == "rho")
      prov = {"rho_{r,s,t} = sum_i C(r,i) C(g-t-i, g-t-s) alpha^{r-i} beta^{s-i} (2 gamma)^{t+i}"};
    else
      prov = {"sum zeta_{r,s} x^r y^s = e^{-2 gamma x / beta} ((1-beta y)^2 - beta x^2)^{-1/2} "
              "((1 + x sqrt(beta) - beta y)/(1 - x sqrt(beta) - beta y))^{gamma*/(2 beta sqrt(beta))}",
              "zeta_{r,s,t} = zeta_{r,s} (2 gamma)^t / t!"};
    json result{{"kind", a.kind}, {"relations", arr}};
    if (a.kind == "zeta-rs") result["parse"] = a.parse;
    out << envelope(args, result, prov).dump(2) << "\n";
  } else {
    for (const auto& it : items) {
      std::string body = it.poly ? (a.format == "latex" ? latexPoly(*it.poly) : displayPoly(*it.poly)) : it.laurent;
      if (a.format == "latex") out << it.label << " & $" << body << "$ \\\\\n";
      else out << it.label << " = " << body << "\n";
    }
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string check;
  int genus = 0;
  int grid = 0;
  long maxCap = 0;
  int jobs = 1;
  double timeLimit = 0;
  int trunc = 10;
  std::vector<std::string> omit;
  std::string cacheDir;
  CLI::Option* cacheOpt = nullptr;
  bool noCache = false;
  bool timing = false;
  bool quiet = false;
  std::string format = "json";
};

const std::vector<std::string>& allChecks() {
  static const std::vector<std::string> c{"presentation", "n-presentation", "newstead",  "rho-membership",
                                          "zeta-basis",   "vanishing-lemma", "beta-g",   "dirac",
                                          "identities"};
  return c;
}

std::array<int, 3> parseTriple(const std::string& s) {
  std::array<int, 3> out{};
  std::istringstream is(s);
  char c1 = 0, c2 = 0;
  if (!(is >> out[0] >> c1 >> out[1] >> c2 >> out[2]) || c1 != ',' || c2 != ',' || !is.eof())
    throw Error(ErrorKind::InvalidArgument, "expected r,s,t but got '" + s + "'");
  return out;
}

int runVerify(const VerifyArgs& a, const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (a.genus < 2) throw Error(ErrorKind::InvalidArgument, "genus must be >= 2");
  if (a.jobs < 1) throw Error(ErrorKind::InvalidArgument, "--jobs must be >= 1");
  std::vector<std::string> checks = a.check == "all" ? allChecks() : std::vector<std::string>{a.check};
  VerifyOptions opts;
  opts.maxCap = a.maxCap;
  for (const auto& o : a.omit) opts.omitRho.push_back(parseTriple(o));
  if (a.timeLimit > 0)
    opts.deadline = std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(a.timeLimit));
  std::optional<GbCache> cache;
  if (!a.noCache) {
    cache.emplace(*a.cacheOpt ? std::filesystem::path(a.cacheDir) : GbCache::defaultDir());
    opts.cache = &*cache;
  }
  std::mutex errMu;
  if (!a.quiet)
    opts.progress = [&](const std::string& stage, const BuchbergerProgress& p) {
      std::lock_guard lock(errMu);
      err << "[" << stage << "] degree " << p.degree << ", pairs remaining " << p.pairsRemaining << ", basis size "
          << p.basisSize << "\n";
    };
  auto runOne = [&](const std::string& c) -> Report {
    const int g = a.genus;
    if (c == "presentation") return verifyPresentation(g, opts);
    if (c == "n-presentation") return verifyNPresentation(g, opts);
    if (c == "newstead") return verifyNewstead(g, opts);
    if (c == "rho-membership") return verifyRhoMembership(g, opts);
    if (c == "zeta-basis") return verifyZetaBasis(g, opts);
    if (c == "vanishing-lemma") return verifyVanishingLemma(g, a.grid);
    if (c == "beta-g") return verifyBetaGRestriction(g);
    if (c == "dirac") return verifyDirac(g);
    return verifyIdentities(g, a.trunc);
  };
  std::vector<std::optional<Report>> reports(checks.size());
  std::vector<std::exception_ptr> errors(checks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < checks.size();) {
      try {
        reports[i] = runOne(checks[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(a.jobs), checks.size());
  for (std::size_t i = 1; i < workers; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  bool failed = false, limitedAny = false;
  for (const auto& r : reports) {
    failed = failed || r->status == CheckStatus::Falsified;
    limitedAny = limitedAny || r->status == CheckStatus::ResourceLimited;
  }
  const std::string overall = failed ? "falsified" : (limitedAny ? "resource-limited" : "verified");
  if (a.format == "json") {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(reportJson(*r, a.timing));
    json result{{"genus", a.genus}, {"status", overall}, {"reports", arr}};
    out << envelope(args, result, {"Groebner bases: Buchberger with Gebauer-Moeller pair pruning, weighted graded lex order a > b > g",
                                   "Hilbert series counted from the staircase of leading monomials"})
               .dump(2)
        << "\n";
  } else {
    for (const auto& r : reports) {
      out << r->check << " g=" << r->genus << ": " << statusName(r->status);
      if (a.timing) out << " (" << r->wallTime << " s)";
      out << "\n";
      for (const auto& w : r->witnesses) out << "  " << w << "\n";
    }
  }
  if (failed) return kExitFailed;
  return limitedAny ? kExitResource : kExitOk;
}

struct CacheArgs {
  std::string action;
  std::string dir;
  CLI::Option* dirOpt = nullptr;
  std::string format = "json";
};

int runCache(const CacheArgs& a, const std::vector<std::string>& args, std::ostream& out) {
  const GbCache cache(*a.dirOpt ? std::filesystem::path(a.dir) : GbCache::defaultDir());
  json result{{"action", a.action}, {"dir", cache.dir().string()}};
  std::ostringstream text;
  if (a.action == "list") {
    auto entries = cache.list();
    std::sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) { return x.key < y.key; });
    json arr = json::array();
    for (const auto& e : entries) {
      arr.push_back({{"key", e.key}, {"file", e.path.filename().string()}, {"bytes", e.bytes}});
      text << e.key << "  " << e.bytes << "\n";
    }
    result["entries"] = arr;
  } else if (a.action == "clear") {
    const std::size_t removed = cache.clear();
    result["removed"] = removed;
    text << "removed " << removed << "\n";
  } else {
    const GbCacheStat s = cache.stat();
    result["entries"] = s.entries;
    result["bytes"] = s.bytes;
    text << "entries " << s.entries << "\nbytes " << s.bytes << "\n";
  }
  if (a.format == "json") out << envelope(args, result, {}).dump(2) << "\n";
  else out << text.str();
  return kExitOk;
}

int exitFor(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidArgument:
    case ErrorKind::Parse:
    case ErrorKind::ArityMismatch: return kExitUsage;
    case ErrorKind::ResourceLimit: return kExitResource;
    default: return kExitFailed;
  }
}

}  // namespace

std::string displayPoly(const MultiPoly& p) {
  const Ring& ring = *p.ring();
  std::vector<std::pair<Rational, std::string>> terms;
  for (const auto& t : p.terms()) {
    std::string mono;
    for (std::size_t i = 0; i < ring.arity(); ++i) {
      if (t.mono[i] == 0) continue;
      mono += lookup(greek(), ring.var(i).name);
      if (t.mono[i] != 1) mono += superscript(t.mono[i]);
    }
    terms.emplace_back(t.coeff, mono);
  }
  return joinSigned(terms, [](const Rational& c) { return c.to_string(); }, 0);
}

std::string latexPoly(const MultiPoly& p) {
  const Ring& ring = *p.ring();
  std::vector<std::pair<Rational, std::string>> terms;
  for (const auto& t : p.terms()) {
    std::string mono;
    for (std::size_t i = 0; i < ring.arity(); ++i) {
      if (t.mono[i] == 0) continue;
      mono += lookup(latexNames(), ring.var(i).name);
      if (t.mono[i] != 1) mono += "^{" + std::to_string(t.mono[i]) + "}";
    }
    terms.emplace_back(t.coeff, mono);
  }
  return joinSigned(terms, latexRational, 0);
}

std::string latexPoly(const UniPoly& p, const std::string& var) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (int i = 0; i <= p.degree(); ++i) {
    if (p[i].is_zero()) continue;
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^{" + std::to_string(i) + "}");
    terms.emplace_back(p[i], mono);
  }
  return joinSigned(terms, latexRational, 0);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact cohomology computations for moduli of rank 2 Higgs bundles", "higgsc"};
  app.require_subcommand(1);

  PoincareArgs pa, ba;
  auto* poincareCmd = app.add_subcommand("poincare", "Poincare polynomial of a space");
  addPoincareOptions(poincareCmd, pa, "json");
  auto* bettiCmd = app.add_subcommand("betti", "Betti numbers of a space");
  addPoincareOptions(bettiCmd, ba, "table");

  RelationsArgs ra;
  auto* relCmd = app.add_subcommand("relations", "Relation polynomials in a, b, g");
  relCmd->add_option("kind", ra.kind, "zeta | zeta-rs | rho")->required()->check(CLI::IsMember({"zeta", "zeta-rs", "rho"}));
  relCmd->add_option("indices", ra.indices, "Indices (r | r s [t] | r s t)");
  ra.genusOpt = relCmd->add_option("--genus", ra.genus, "Genus");
  relCmd->add_option("--format", ra.format, "Output format")->check(CLI::IsMember({"json", "text", "latex"}));
  relCmd->add_option("--parse", ra.parse, "Generating function prefactor reading")
      ->check(CLI::IsMember({"exp-over-beta", "exp-gamma-over-beta"}));

  VerifyArgs va;
  auto* verCmd = app.add_subcommand("verify", "Run verification suites");
  std::vector<std::string> checkNames = allChecks();
  checkNames.push_back("all");
  verCmd->add_option("check", va.check, "Suite to run")->required()->check(CLI::IsMember(checkNames));
  verCmd->add_option("--genus", va.genus, "Genus g >= 2")->required();
  verCmd->add_option("--grid", va.grid, "Largest k, m, l for the vanishing-lemma grid (default 2g)");
  verCmd->add_option("--max-cap", va.maxCap, "Largest relation window r+3s+3t (default 3g+9)");
  verCmd->add_option("--jobs", va.jobs, "Suites run concurrently");
  verCmd->add_option("--time-limit", va.timeLimit, "Wall-clock limit in seconds for Groebner computations");
  verCmd->add_option("--trunc", va.trunc, "Degree through which stabilization is compared");
  verCmd->add_option("--omit-rho", va.omit, "Drop rho(r,s,t) from the relation window, given as r,s,t");
  va.cacheOpt = verCmd->add_option("--cache-dir", va.cacheDir, "Groebner cache directory");
  verCmd->add_flag("--no-cache", va.noCache, "Do not read or write the on-disk cache");
  verCmd->add_flag("--timing", va.timing, "Include wall-clock times in the output");
  verCmd->add_flag("--quiet", va.quiet, "No progress on stderr");
  verCmd->add_option("--format", va.format, "Output format")->check(CLI::IsMember({"json", "table"}));

  CacheArgs ca;
  auto* cacheCmd = app.add_subcommand("cache", "Inspect or clear the Groebner cache");
  cacheCmd->add_option("action", ca.action, "list | clear | stat")->required()->check(CLI::IsMember({"list", "clear", "stat"}));
  ca.dirOpt = cacheCmd->add_option("--cache-dir", ca.dir, "Cache directory");
  cacheCmd->add_option("--format", ca.format, "Output format")->check(CLI::IsMember({"json", "table"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*poincareCmd) return runPoincare(pa, false, args, out);
    if (*bettiCmd) return runPoincare(ba, true, args, out);
    if (*relCmd) return runRelations(ra, args, out);
    if (*verCmd) return runVerify(va, args, out, err);
    return runCache(ca, args, out);
  } catch (const ResourceLimitError& e) {
    err << "higgsc: " << e.what() << "\n";
    return kExitResource;
  } catch (const Error& e) {
    err << "higgsc: " << e.what() << "\n";
    return exitFor(e.kind());
  } catch (const std::exception& e) {
    err << "higgsc: " << e.what() << "\n";
    return kExitFailed;
  }
}

}  // namespace higgsc
