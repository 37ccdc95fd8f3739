#include "qss/report.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace qss::report {

Json toJson(const Rational& q) {
  return Json{{"num", q.numerator().get_str()}, {"den", q.denominator().get_str()}};
}

Rational rationalFromJson(const Json& j) {
  return Rational(mpz_class(j.at("num").get<std::string>()), mpz_class(j.at("den").get<std::string>()));
}

namespace {

Json finiteOrNull(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

double doubleOrInfinity(const Json& j) {
  return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>();
}

template <typename T, typename F>
Json optionalJson(const std::optional<T>& v, F&& f) {
  return v ? f(*v) : Json(nullptr);
}

std::string joinDegrees(const std::vector<int>& ds, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < ds.size(); ++i) s += (i ? sep : "") + std::to_string(ds[i]);
  return s;
}

}  // namespace

Json toJson(const OracleReport& r) {
  Json results = Json::array();
  for (const auto& s : r.results) {
    results.push_back({{"index", s.index},
                       {"t", toJson(s.t)},
                       {"discriminant_nonzero", s.discriminantNonzero},
                       {"min_gap", finiteOrNull(s.minGap)},
                       {"certified_gap_lower_bound", finiteOrNull(s.certifiedGapLowerBound)}});
  }
  return Json{{"seed", r.seed},           {"samples", r.samples},           {"successes", r.successes},
              {"failures", r.failures},   {"contradiction", r.contradiction}, {"results", results}};
}

OracleReport oracleFromJson(const Json& j) {
  OracleReport r;
  r.seed = j.at("seed").get<std::uint64_t>();
  r.samples = j.at("samples").get<int>();
  r.successes = j.at("successes").get<int>();
  r.failures = j.at("failures").get<int>();
  r.contradiction = j.at("contradiction").get<bool>();
  for (const auto& s : j.at("results")) {
    OracleSample o;
    o.index = s.at("index").get<int>();
    o.t = rationalFromJson(s.at("t"));
    o.discriminantNonzero = s.at("discriminant_nonzero").get<bool>();
    o.minGap = doubleOrInfinity(s.at("min_gap"));
    o.certifiedGapLowerBound = doubleOrInfinity(s.at("certified_gap_lower_bound"));
    r.results.push_back(std::move(o));
  }
  return r;
}

Json toJson(const Certificate& c) {
  const auto& h = c.hypotheses;
  Json hyp{{"n_ok", h.nOk},
           {"fano_ok", h.fanoOk},
           {"degree_ok", h.degreeOk},
           {"exception_hit", h.exceptionHit},
           {"small_e", h.smallE},
           {"l0_positive", h.l0Positive ? Json(*h.l0Positive) : Json(nullptr)}};
  Json charpoly = Json::array();
  for (const auto& q : c.charpolyOrigin) charpoly.push_back(q.str());
  Json roots = nullptr;
  if (c.zeroRootMultiplicity) {
    roots = {{"zero_multiplicity", *c.zeroRootMultiplicity},
             {"simple_nonzero_roots", c.simpleNonzeroRoots.value_or(0)},
             {"gcd_degree", c.gcdDegree.value_or(0)}};
  }
  Json det = nullptr;
  if (c.detLinearCoeff) {
    det = toJson(*c.detLinearCoeff);
    det["formula"] = c.detFormula;
  }
  return Json{
      {"input",
       {{"n", c.n}, {"degrees", c.inputDegrees}, {"normalized_degrees", c.degrees}}},
      {"r", c.r},
      {"d", c.degree},
      {"e", c.e},
      {"hypotheses", hyp},
      {"verdict", toString(c.verdict)},
      {"failing_hypothesis", c.failingHypothesis},
      {"delta", optionalJson(c.delta, [](const Rational& q) { return toJson(q); })},
      {"l0", optionalJson(c.l0, [](const Rational& q) { return toJson(q); })},
      {"l0_count", optionalJson(c.l0Count, [](const std::string& s) { return Json(s); })},
      {"det_linear_coeff", det},
      {"charpoly_origin", charpoly},
      {"root_structure", roots},
      {"jet_criterion", optionalJson(c.jetCriterion, [](const std::string& s) { return Json(s); })},
      {"scale_factor", c.scaleFactor},
      {"assumptions", c.assumptions},
      {"citations", c.citations},
      {"oracle", optionalJson(c.oracle, [](const OracleReport& r) { return toJson(r); })},
  };
}

Certificate certificateFromJson(const Json& j) {
  Certificate c;
  const auto& in = j.at("input");
  c.n = in.at("n").get<int>();
  c.inputDegrees = in.at("degrees").get<std::vector<int>>();
  c.degrees = in.at("normalized_degrees").get<std::vector<int>>();
  c.r = j.at("r").get<int>();
  c.degree = j.at("d").get<std::string>();
  c.e = j.at("e").get<int>();
  const auto& h = j.at("hypotheses");
  c.hypotheses.nOk = h.at("n_ok").get<bool>();
  c.hypotheses.fanoOk = h.at("fano_ok").get<bool>();
  c.hypotheses.degreeOk = h.at("degree_ok").get<bool>();
  c.hypotheses.exceptionHit = h.at("exception_hit").get<bool>();
  c.hypotheses.smallE = h.at("small_e").get<bool>();
  if (!h.at("l0_positive").is_null()) c.hypotheses.l0Positive = h.at("l0_positive").get<bool>();
  c.verdict = verdictFromString(j.at("verdict").get<std::string>());
  c.failingHypothesis = j.at("failing_hypothesis").get<std::string>();
  if (!j.at("delta").is_null()) c.delta = rationalFromJson(j.at("delta"));
  if (!j.at("l0").is_null()) c.l0 = rationalFromJson(j.at("l0"));
  if (!j.at("l0_count").is_null()) c.l0Count = j.at("l0_count").get<std::string>();
  if (!j.at("det_linear_coeff").is_null()) {
    c.detLinearCoeff = rationalFromJson(j.at("det_linear_coeff"));
    c.detFormula = j.at("det_linear_coeff").at("formula").get<std::string>();
  }
  for (const auto& q : j.at("charpoly_origin")) c.charpolyOrigin.push_back(Rational::parse(q.get<std::string>()));
  if (const auto& rs = j.at("root_structure"); !rs.is_null()) {
    c.zeroRootMultiplicity = rs.at("zero_multiplicity").get<int>();
    c.simpleNonzeroRoots = rs.at("simple_nonzero_roots").get<int>();
    c.gcdDegree = rs.at("gcd_degree").get<int>();
  }
  if (!j.at("jet_criterion").is_null()) c.jetCriterion = j.at("jet_criterion").get<std::string>();
  c.scaleFactor = j.at("scale_factor").get<int>();
  c.assumptions = j.at("assumptions").get<std::vector<std::string>>();
  c.citations = j.at("citations").get<std::vector<std::string>>();
  if (!j.at("oracle").is_null()) c.oracle = oracleFromJson(j.at("oracle"));
  return c;
}

Json toJson(const OperatorMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back({{"constant", m(i, j).constant().str()}, {"linear", m(i, j).linear(0).str()}});
    rows.push_back(std::move(row));
  }
  return Json{{"dimension", m.rows()}, {"rows", rows}};
}

std::string renderText(const OracleReport& r) {
  std::ostringstream os;
  os << "oracle: seed " << r.seed << ", " << r.successes << "/" << r.samples << " samples with nonzero discriminant";
  if (r.contradiction) os << " (CONTRADICTION)";
  os << '\n';
  for (const auto& s : r.results) {
    os << "  sample " << s.index << ": t = " << s.t << ", discriminant "
       << (s.discriminantNonzero ? "nonzero" : "ZERO") << ", min gap " << s.minGap
       << ", certified gap >= " << s.certifiedGapLowerBound << '\n';
  }
  return os.str();
}

std::string renderText(const Certificate& c) {
  std::ostringstream os;
  os << "V: n=" << c.n << " degrees=(" << joinDegrees(c.degrees, ",") << ")";
  if (c.inputDegrees.size() != c.degrees.size())
    os << " [input (" << joinDegrees(c.inputDegrees, ",") << "), linear factors removed]";
  os << '\n';
  os << "r = " << c.r << ", d = " << c.degree << ", e = " << c.e << '\n';
  const auto& h = c.hypotheses;
  os << "hypotheses: n_ok=" << h.nOk << " fano_ok=" << h.fanoOk << " degree_ok=" << h.degreeOk
     << " exception_hit=" << h.exceptionHit << " small_e=" << h.smallE
     << " l0_positive=" << (h.l0Positive ? (*h.l0Positive ? "1" : "0") : "n/a") << '\n';
  if (c.delta) os << "delta = " << *c.delta << '\n';
  if (c.l0) os << "l0 = " << *c.l0 << " (d*l0 = " << c.l0Count.value_or("?") << ")\n";
  if (!c.charpolyOrigin.empty())
    os << "G(lambda, 0) = " << UniPoly<Rational>(c.charpolyOrigin).str("lambda") << '\n';
  if (c.zeroRootMultiplicity)
    os << "roots at origin: 0 with multiplicity " << *c.zeroRootMultiplicity << ", " << c.simpleNonzeroRoots.value_or(0)
       << " simple nonzero roots, deg gcd(G, G') = " << c.gcdDegree.value_or(0) << '\n';
  if (c.detLinearCoeff)
    os << "det A(t) = " << *c.detLinearCoeff << " * t mod t^2   [" << c.detFormula << "]\n";
  if (c.jetCriterion) os << "jet criterion: " << *c.jetCriterion << '\n';
  os << "X(w) *_w = " << c.scaleFactor << " * A\n";
  os << "verdict: " << toString(c.verdict);
  if (!c.failingHypothesis.empty()) os << " (" << c.failingHypothesis << ")";
  os << '\n';
  for (const auto& a : c.assumptions) os << "assumes: " << a << '\n';
  for (const auto& a : c.citations) os << "uses: " << a << '\n';
  if (c.oracle) os << renderText(*c.oracle);
  return os.str();
}

std::string csvHeader() { return "n,degrees,r,d,e,delta,l0,det_linear_coeff,verdict"; }

std::string csvRow(const Certificate& c) {
  std::ostringstream os;
  os << c.n << ',' << joinDegrees(c.degrees, ";") << ',' << c.r << ',' << c.degree << ',' << c.e << ','
     << (c.delta ? c.delta->str() : "") << ',' << (c.l0 ? c.l0->str() : "") << ','
     << (c.detLinearCoeff ? c.detLinearCoeff->str() : "") << ',' << toString(c.verdict);
  return os.str();
}

}  // namespace qss::report
