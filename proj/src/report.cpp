#include "jhilbert/report.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include "jhilbert/oracle.hpp"

namespace jh {

using json = nlohmann::ordered_json;

namespace {

json lengthJson(const LengthValue& v) {
  if (v.isFinite()) return v.value();
  return v.isInfinite() ? json("infinite") : json("non-stabilized");
}

template <class T>
json optJson(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

int severity(int code) {
  switch (code) {
    case kExitOk: return 0;
    case kExitHypothesis: return 1;
    case kExitNonStabilized: return 2;
    case kExitCrossCheck: return 3;
    default: return 4;
  }
}

class Session {
 public:
  Session(const ProblemSpec& spec, const RunOptions& opt) : opt_(opt) {
    ctx_ = RingContext::create(spec.ring, spec.relations);
    I_ = Ideal(ctx_, spec.ideal);
    policy_.capM = opt.capM;
    policy_.validate();
    hopt_.window = opt.window;
    hopt_.policy = policy_;
    d_ = std::max(ctx_->dimension(), 0);
    report_["input"] = printProblem(spec);
    report_["seed"] = opt.seed;
    report_["char"] = ctx_->characteristic();
    report_["hypotheses"] = json::object();
    report_["results"] = json::object();
    report_["diagnostics"] = json::array();
  }

  const Ideal& I() const { return I_; }
  int d() const { return d_; }
  const RunOptions& opt() const { return opt_; }
  const TruncationPolicy& policy() const { return policy_; }
  const HilbertOptions& hilbertOptions() const { return hopt_; }
  json& results() { return report_["results"]; }
  json& hypotheses() { return report_["hypotheses"]; }

  void diag(const std::string& msg) { report_["diagnostics"].push_back(msg); }
  void raise(int code) {
    if (severity(code) > severity(exit_)) exit_ = code;
  }

  const HilbertRecord& record() {
    if (!record_) {
      record_ = fitHilbertPolynomial(I_, hopt_);
      if (!record_->stabilized) {
        diag("Hilbert fit: " + record_->reason);
        raise(kExitNonStabilized);
      }
    }
    return *record_;
  }

  const MinimalReduction& reduction() {
    if (!reduction_) reduction_ = generalMinimalReduction(I_, opt_.seed);
    return *reduction_;
  }

  bool spreadIsD() { return reduction().spread == d_; }

  /// Evaluates and records the hypothesis surrogates; returns whether the
  /// hypotheses of the formula routes are met.
  bool checkHypotheses() {
    if (hypChecked_) return hypHold_;
    hypChecked_ = true;
    const auto& mr = reduction();
    json& h = hypotheses();
    h["d"] = d_;
    h["ell"] = mr.spread;
    h["ellEqualsD"] = mr.spread == d_;
    bool gdPass = false;
    if (mr.spread == d_ && d_ >= 1) {
      auto rh = residualHeightCheck(I_, mr.reduction);
      gdPass = rh.allPass;
      json rows = json::array();
      for (const auto& r : rh.rows)
        rows.push_back({{"i", r.i}, {"codimColon", r.codimColon}, {"codimColonPlusI", r.codimColonPlusI},
                        {"pass", r.pass}});
      h["residualHeight"] = rows;
    }
    const std::string gName = "G" + std::to_string(d_);
    h[gName] = gdPass;
    h["GdAsserted"] = opt_.flags.gdAsserted;
    h["ANAsserted"] = opt_.flags.anAsserted;
    h["S2Asserted"] = opt_.flags.s2Asserted;
    const bool anAuto = artinNagataAutomatic(I_);
    h["ANAutomatic"] = anAuto;
    if (mr.spread != d_) diag("analytic spread " + std::to_string(mr.spread) + " differs from d = " + std::to_string(d_));
    if (!gdPass) diag("J does not satisfy " + gName);
    hypHold_ = mr.spread == d_ && (gdPass || opt_.flags.gdAsserted) && (anAuto || opt_.flags.anAsserted);
    if (!hypHold_) raise(kExitHypothesis);
    h["formulaRoutesApply"] = hypHold_;
    return hypHold_;
  }

  unsigned nmax() {
    if (opt_.nmax) return opt_.nmax;
    return reduction().reductionNumber + static_cast<unsigned>(d_) + 2;
  }

  RunResult finish() {
    RunResult r;
    r.report = std::move(report_);
    r.exitCode = exit_;
    return r;
  }

  // Oracle comparison for monomial m-primary ideals of a polynomial ring.
  std::optional<std::vector<std::int64_t>> oracleCoefficients() {
    if (!ctx_->relations().empty()) return std::nullopt;
    for (const auto& g : I_.generators())
      if (!g.isMonomial()) return std::nullopt;
    auto mono = oracle::fromIdeal(I_);
    if (!oracle::monPairLength(oracle::MonomialIdeal::unit(ctx_->numVars()), mono).isFinite()) return std::nullopt;
    return oracle::oracleHilbertCoefficients(mono);
  }

 private:
  RunOptions opt_;
  ContextPtr ctx_;
  Ideal I_;
  TruncationPolicy policy_;
  HilbertOptions hopt_;
  int d_ = 0;
  json report_;
  int exit_ = kExitOk;
  std::optional<HilbertRecord> record_;
  std::optional<MinimalReduction> reduction_;
  bool hypChecked_ = false;
  bool hypHold_ = false;
};

json recordJson(const HilbertRecord& rec) {
  json out;
  out["d"] = rec.d;
  out["H"] = rec.values;
  out["stabilized"] = rec.stabilized;
  if (rec.stabilized) {
    out["window"] = {rec.windowStart, rec.windowEnd};
    out["agreesFrom"] = rec.agreesFrom;
  } else {
    out["reason"] = rec.reason;
  }
  return out;
}

void compareOracle(Session& s) {
  auto e = s.oracleCoefficients();
  if (!e) {
    s.diag("oracle: input is not a monomial m-primary ideal of a polynomial ring");
    return;
  }
  s.results()["routes"]["oracle"] = *e;
  const auto& rec = s.record();
  if (rec.stabilized && rec.j != *e) {
    s.diag("oracle coefficients disagree with the fit");
    s.raise(kExitCrossCheck);
  }
}

json omegaJson(const OmegaBreakdown& om) {
  json terms = json::array();
  for (const auto& t : om.terms) {
    json tj;
    tj["name"] = t.name;
    tj["sign"] = t.sign;
    tj["value"] = optJson(t.value);
    if (!t.error.empty()) tj["error"] = t.error;
    terms.push_back(tj);
  }
  return terms;
}

void cmdHilbert(Session& s) {
  const auto& rec = s.record();
  json& r = s.results();
  r["hilbert"] = recordJson(rec);
  r["j"] = rec.stabilized ? json(rec.j) : json(nullptr);
  r["routes"] = json::object();
  if (rec.stabilized) r["routes"]["fit"] = rec.j;
  if (s.opt().oracle) compareOracle(s);
}

void cmdCoeffs(Session& s) {
  const auto& rec = s.record();
  json& r = s.results();
  r["j"] = rec.stabilized ? json(rec.j) : json(nullptr);
  r["routes"] = json::object();
  if (!rec.stabilized) return;
  r["routes"]["fit"] = rec.j;

  json differences = json::array({nullptr});
  for (int i = 1; i <= s.d(); ++i) {
    std::int64_t v = differenceSum(rec, static_cast<unsigned>(i));
    differences.push_back(v);
    if (v != rec.j[static_cast<std::size_t>(i)]) {
      s.diag("Difference sum for j_" + std::to_string(i) + " disagrees with the fit");
      s.raise(kExitCrossCheck);
    }
  }
  r["routes"]["differences"] = differences;

  const bool hyp = s.checkHypotheses();
  if (s.spreadIsD()) {
    const auto& mr = s.reduction();
    LengthValue z = jZero(s.I(), mr.reduction, s.policy());
    r["routes"]["jZero"] = lengthJson(z);
    if (!z.isFinite() || z.value() != rec.j[0]) {
      s.diag("j_0 length formula gives " + z.toString() + ", fit gives " + std::to_string(rec.j[0]));
      s.raise(kExitCrossCheck);
    }
    if (s.d() >= 1) {
      OmegaEvaluator ev(s.I(), mr.reduction, s.opt().reading, s.policy());
      json sums = json::array({nullptr});
      for (int i = 1; i <= s.d(); ++i) {
        std::vector<std::string> errs;
        LengthValue v = jViaSums(ev, static_cast<unsigned>(i), mr.reductionNumber, s.hilbertOptions().nCap, &errs);
        sums.push_back(lengthJson(v));
        for (const auto& e : errs) s.diag("sums route: " + e);
        const bool agree = v.isFinite() && v.value() == rec.j[static_cast<std::size_t>(i)];
        if (!agree) {
          s.diag("summation route for j_" + std::to_string(i) + " gives " + v.toString() + ", fit gives " +
                 std::to_string(rec.j[static_cast<std::size_t>(i)]));
          if (hyp) s.raise(kExitCrossCheck);
        }
      }
      r["routes"]["sums"] = sums;
      r["routes"]["reading"] = toString(s.opt().reading);
      LengthValue dep = jOneDepthFormula(s.I(), mr.reduction, s.policy());
      r["routes"]["depthFormulaJ1"] = lengthJson(dep);
    }
  }
  if (s.opt().oracle) compareOracle(s);
}

void cmdJmult(Session& s) {
  const auto& rec = s.record();
  json& r = s.results();
  r["j"] = rec.stabilized ? json(rec.j) : json(nullptr);
  s.checkHypotheses();
  const auto& mr = s.reduction();
  r["ell"] = mr.spread;
  r["reductionNumber"] = mr.reductionNumber;
  r["routes"] = json::object();
  if (rec.stabilized) r["routes"]["fit"] = json::array({rec.j[0]});
  if (s.spreadIsD()) {
    LengthValue z = jZero(s.I(), mr.reduction, s.policy());
    r["routes"]["jZero"] = lengthJson(z);
    if (rec.stabilized && (!z.isFinite() || z.value() != rec.j[0])) {
      s.diag("j_0 length formula disagrees with the fit");
      s.raise(kExitCrossCheck);
    }
  }
}

void cmdReduction(Session& s) {
  const auto& mr = s.reduction();
  json& r = s.results();
  s.checkHypotheses();
  json elems = json::array();
  for (const auto& x : mr.reduction.elements) elems.push_back(x.toString());
  r["elements"] = elems;
  r["attempts"] = mr.attempts;
  r["ell"] = mr.spread;
  r["reductionNumber"] = mr.reductionNumber;
  if (s.spreadIsD() && s.d() >= 1) {
    auto rr = reductionRing(s.I(), mr.reduction);
    json ring;
    ring["K"] = rr.K.toString();
    ring["oneDimensional"] = rr.oneDimensional;
    ring["imagePrimary"] = rr.imagePrimary;
    ring["warnings"] = rr.warnings;
    ring["jZero"] = lengthJson(jZero(rr, mr.reduction, s.policy()));
    ring["e1bar"] = lengthJson(eOneBar(rr, s.I(), mr.reduction, s.policy()));
    r["reductionRing"] = ring;
    for (const auto& w : rr.warnings) s.diag(w);
  }
}

void cmdDepthcheck(Session& s) {
  const bool hyp = s.checkHypotheses();
  json& r = s.results();
  if (!s.spreadIsD() || s.d() < 1) return;
  const auto& mr = s.reduction();
  auto rr = reductionRing(s.I(), mr.reduction);
  auto vv = valabregaVallaCheck(s.I(), mr.reduction, s.nmax(), rr, s.opt().flags.anAsserted, s.policy());
  json v;
  v["nmax"] = vv.nmax;
  v["perN"] = vv.perN;
  v["conditionB"] = vv.conditionB;
  v["defectSum"] = lengthJson(vv.defectSum);
  v["e1bar"] = lengthJson(vv.e1bar);
  v["conditionA"] = vv.conditionA;
  v["consistent"] = vv.consistent;
  if (!vv.depthVerdict.empty()) v["depthVerdict"] = vv.depthVerdict;
  r["depth"] = v;
  if (!vv.consistent) {
    s.diag("conditions (a) and (b) disagree");
    if (hyp) s.raise(kExitCrossCheck);
  }
  LengthValue corrected = correctedDefectSum(rr, s.I(), mr.reduction, s.policy());
  json p;
  p["correctedDefectSum"] = lengthJson(corrected);
  p["e1bar"] = lengthJson(vv.e1bar);
  p["equal"] = corrected.isFinite() && corrected == vv.e1bar;
  r["correctedSum"] = p;
  if (!p["equal"].get<bool>()) {
    s.diag("corrected defect sum differs from e_1 of the one-dimensional image");
    if (hyp) s.raise(kExitCrossCheck);
  }
  for (const auto& w : rr.warnings) s.diag(w);
}

void cmdOmega(Session& s) {
  const bool hyp = s.checkHypotheses();
  const auto& rec = s.record();
  json& r = s.results();
  r["reading"] = toString(s.opt().reading);
  r["omega"] = json::array();
  if (!s.spreadIsD() || s.d() < 1) return;
  const auto& mr = s.reduction();
  OmegaEvaluator ev(s.I(), mr.reduction, s.opt().reading, s.policy());
  bool allHold = true;
  for (unsigned n = 0; n <= s.nmax(); ++n) {
    json row;
    row["n"] = n;
    LengthValue def = ev.defect(n);
    OmegaBreakdown om = ev.omega(n);
    row["defect"] = lengthJson(def);
    row["total"] = optJson(om.total);
    row["terms"] = omegaJson(om);
    if (rec.stabilized) {
      std::int64_t rhs = deltaDefect(rec, n);
      row["rhs"] = rhs;
      bool holds = def.isFinite() && om.total && def.value() + *om.total == rhs;
      row["holds"] = holds;
      allHold = allHold && holds;
    }
    r["omega"].push_back(row);
  }
  r["masterIdentity"] = rec.stabilized ? json(allHold) : json(nullptr);
  if (rec.stabilized && !allHold) {
    s.diag(std::string("master identity fails for the ") + toString(s.opt().reading) + " reading");
    if (hyp) s.raise(kExitCrossCheck);
  }
}

void cmdNorthcott(Session& s) {
  s.checkHypotheses();
  NorthcottOptions no;
  no.seed = s.opt().seed;
  no.flags = s.opt().flags;
  no.reading = s.opt().reading;
  no.hilbert = s.hilbertOptions();
  no.policy = s.policy();
  auto rep = northcottReport(s.I(), no);
  json n;
  n["d"] = rep.d;
  n["j1"] = optJson(rep.j1);
  n["j1Route"] = rep.j1Route;
  n["j1Sums"] = optJson(rep.j1Sums);
  n["lambdaIJ"] = optJson(rep.lambdaIJ);
  n["secondTerm"] = optJson(rep.secondTerm);
  n["bound"] = optJson(rep.bound);
  n["inequalityHolds"] = rep.inequalityHolds;
  n["equality"] = rep.equality;
  n["reductionNumber"] = optJson(rep.reductionNumber);
  n["mu"] = optJson(rep.mu);
  n["mPrimary"] = rep.mPrimary;
  n["depthRI"] = rep.depthRI;
  n["equalityVerdict"] = toString(rep.equalityVerdict);
  auto cc = [](const ImplicationCheck& c) {
    return json{{"applicable", c.applicable}, {"holds", c.holds}, {"detail", c.detail}};
  };
  n["implications"] = {{"j1NonNegative", cc(rep.nonNegative)},
                    {"secondTermForcesIEqualsJ", cc(rep.secondOnlyIsJ)},
                    {"lambdaIJForcesMPrimary", cc(rep.equalsIJIsPrimary)},
                    {"zeroIffCompleteIntersection", cc(rep.zeroIsCI)}};
  if (rep.classicalGap) {
    n["classicalGap"] = *rep.classicalGap;
    n["classicalAgrees"] = rep.classicalAgrees;
  }
  if (!rep.oneDimensionalParts.empty()) {
    json parts;
    parts["defectSum"] = optJson(rep.oneDimensionalParts[0]);
    parts["lambdaQuotient"] = optJson(rep.oneDimensionalParts[1]);
    parts["torsion"] = optJson(rep.oneDimensionalParts[2]);
    n["decomposition"] = parts;
  }
  s.results()["northcott"] = n;
  s.results()["j"] = s.record().stabilized ? json(s.record().j) : json(nullptr);
  for (const auto& dmsg : rep.diagnostics) s.diag(dmsg);
  if (rep.nonStabilized) s.raise(kExitNonStabilized);
  if (rep.crossCheckFailed) s.raise(kExitCrossCheck);
}

void cmdOracle(Session& s) {
  json& r = s.results();
  auto e = s.oracleCoefficients();
  if (!e) {
    s.diag("oracle: input is not a monomial m-primary ideal of a polynomial ring");
    s.raise(kExitHypothesis);
    return;
  }
  r["routes"]["oracle"] = *e;
  auto mono = oracle::fromIdeal(s.I());
  r["colength"] = lengthJson(oracle::monPairLength(oracle::MonomialIdeal::unit(mono.numVars()), mono));
  const auto& rec = s.record();
  if (rec.stabilized) {
    r["routes"]["fit"] = rec.j;
    if (rec.j != *e) {
      s.diag("oracle coefficients disagree with the fit");
      s.raise(kExitCrossCheck);
    }
  }
  r["j"] = *e;
}

}  // namespace

const std::vector<std::string>& commandNames() {
  static const std::vector<std::string> names = {"hilbert", "coeffs", "jmult", "reduction",
                                                 "depthcheck", "omega", "northcott", "oracle"};
  return names;
}

RunResult runCommand(const std::string& command, const ProblemSpec& spec, const RunOptions& options) {
  static const std::map<std::string, std::function<void(Session&)>> table = {
      {"hilbert", cmdHilbert},     {"coeffs", cmdCoeffs}, {"jmult", cmdJmult},         {"reduction", cmdReduction},
      {"depthcheck", cmdDepthcheck}, {"omega", cmdOmega}, {"northcott", cmdNorthcott}, {"oracle", cmdOracle}};
  auto it = table.find(command);
  if (it == table.end()) throw std::invalid_argument("unknown command '" + command + "'");
  Session s(spec, options);
  try {
    it->second(s);
  } catch (const ComputationLimitError& e) {
    s.diag(std::string("computation limit: ") + e.what());
    s.raise(kExitNonStabilized);
  } catch (const std::exception& e) {
    s.diag(std::string("error: ") + e.what());
    s.raise(kExitFailure);
  }
  return s.finish();
}

namespace {

bool scalarArray(const json& v) {
  return v.is_array() && std::all_of(v.begin(), v.end(), [](const json& e) { return !e.is_structured(); });
}

void flatten(const json& v, const std::string& path, std::vector<std::pair<std::string, std::string>>& rows) {
  if (v.is_object()) {
    if (v.empty()) rows.emplace_back(path, "{}");
    for (auto it = v.begin(); it != v.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), rows);
  } else if (v.is_array() && !scalarArray(v)) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], path + "[" + std::to_string(i) + "]", rows);
  } else if (v.is_string()) {
    rows.emplace_back(path, v.get<std::string>());
  } else {
    rows.emplace_back(path, v.dump());
  }
}

}  // namespace

std::string emitReport(const json& report, ReportFormat format) {
  if (format == ReportFormat::Json) return report.dump(2) + "\n";
  std::vector<std::pair<std::string, std::string>> rows;
  for (auto it = report.begin(); it != report.end(); ++it) {
    if (it.key() == "input") continue;
    flatten(it.value(), it.key(), rows);
  }
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  std::ostringstream out;
  for (const auto& r : rows) {
    out << r.first << std::string(width - r.first.size() + 2, ' ');
    std::string value = r.second;
    std::replace(value.begin(), value.end(), '\n', ' ');
    out << value << "\n";
  }
  return out.str();
}

}  // namespace jh
