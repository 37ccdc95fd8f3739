#include "cli.hpp"

#include "qss/quantum_operator.hpp"
#include "qss/report.hpp"
#include "qss/schubert.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <functional>
#include <ostream>
#include <thread>

namespace qss::cli {

namespace {

void addCaseOptions(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("-n,--dimension", cfg.n, "Dimension n of V")->required()->check(CLI::PositiveNumber);
  sub->add_option("-d,--degrees", cfg.degrees, "Degrees d_1,...,d_r (comma separated or repeated)")
      ->required()
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
}

void addFormatOptions(CLI::App* sub, RunConfig& cfg) {
  const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};
  sub->add_option("--format", cfg.format, "Output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  sub->add_flag_callback("--json", [&cfg] { cfg.format = Format::Json; }, "Shorthand for --format json");
  sub->add_flag_callback("--csv", [&cfg] { cfg.format = Format::Csv; }, "Shorthand for --format csv");
  sub->add_flag_callback("--text", [&cfg] { cfg.format = Format::Text; }, "Shorthand for --format text");
}

void warnNormalization(const CompleteIntersection& ci, std::ostream& err) {
  if (ci.removedLinearFactors() > 0) {
    err << "warning: dropped " << ci.removedLinearFactors()
        << " degree-1 factor(s); V is treated as a complete intersection in P^" << ci.ambientDimension() << '\n';
  }
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

int runCertify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const CompleteIntersection ci(cfg.n, cfg.degrees);
  warnNormalization(ci, err);
  const Certificate cert = certify(ci);
  switch (cfg.format) {
    case Format::Json: out << report::toJson(cert).dump(2) << '\n'; break;
    case Format::Csv: out << report::csvHeader() << '\n' << report::csvRow(cert) << '\n'; break;
    case Format::Text: out << report::renderText(cert); break;
  }
  return kExitOk;
}

int runLines(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const CompleteIntersection ci(cfg.n, cfg.degrees);
  warnNormalization(ci, err);
  std::map<int, schubert::LineInvariant> table;
  if (cfg.j) {
    table.emplace(*cfg.j, schubert::lineInvariant(ci.dimension(), ci.degrees(), *cfg.j));
  } else {
    table = schubert::lineInvariantTable(ci.dimension(), ci.degrees());
  }
  const int N = ci.ambientDimension() + 1;
  switch (cfg.format) {
    case Format::Json: {
      report::Json rows = report::Json::array();
      for (const auto& [j, inv] : table) {
        rows.push_back({{"j", j}, {"count", inv.count.get_str()}, {"value", report::toJson(inv.value)}});
      }
      out << report::Json{{"n", ci.dimension()}, {"degrees", ci.degrees()}, {"grassmannian", {{"k", 2}, {"N", N}}},
                          {"d", ci.degree().get_str()}, {"invariants", rows}}
                 .dump(2)
          << '\n';
      break;
    }
    case Format::Csv:
      out << "j,d_times_l,l\n";
      for (const auto& [j, inv] : table) out << j << ',' << inv.count.get_str() << ',' << inv.value << '\n';
      break;
    case Format::Text:
      out << "lines on " << ci.label() << " via G(2," << N << "), d = " << ci.degree().get_str() << '\n';
      for (const auto& [j, inv] : table) {
        const auto [s1, s2] = schubert::incidenceIndices(ci.dimension(), ci.degrees(), j);
        out << "  j=" << j << "  sigma_" << s1 << " * sigma_" << s2 << "  d*l_" << j << " = " << inv.count.get_str()
            << "  l_" << j << " = " << inv.value << '\n';
      }
      break;
  }
  return kExitOk;
}

int runCharpoly(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const CompleteIntersection ci(cfg.n, cfg.degrees);
  warnNormalization(ci, err);
  if (!ci.isFano() || ci.dimension() < 3) {
    err << "error: charpoly needs a Fano complete intersection with n >= 3\n";
    return kExitInvalidInput;
  }
  const int n = ci.dimension();
  const int e = ci.e();
  const auto symbolicOrigin = atOrigin(characteristicPolynomial(buildOrigin(ci, CoeffTable::symbolic(ci))));
  const auto imported = originCharPoly(n, e, Rational(ci.degreePowerProduct(), 1));

  report::Json j{{"n", n},
                 {"degrees", ci.degrees()},
                 {"e", e},
                 {"origin_symbolic", symbolicOrigin.str("lambda")},
                 {"origin", imported.str("lambda")}};
  std::string deformed;
  std::string detLinear;
  const bool deformable = e >= 3 && ci.degreeHypothesis();
  OperatorMatrix a;
  if (deformable && e <= n) {
    const Rational l0 = schubert::lineInvariant(n, ci.degrees(), 0).value;
    a = buildA(ci, CoeffTable::beauville(ci, l0));
    const auto g = charPolyG(a);
    deformed = g.str("lambda");
    detLinear = detLinearCoefficient(a).coefficient.str();
    j["l0"] = report::toJson(l0);
    j["delta"] = report::toJson(ci.delta());
    j["G_mod_t2"] = deformed;
    j["det_linear_coeff"] = detLinear;
    if (cfg.showMatrix) j["A"] = report::toJson(a);
  }

  switch (cfg.format) {
    case Format::Json: out << j.dump(2) << '\n'; break;
    case Format::Csv:
      out << "n,degrees,e,origin,G_mod_t2\n"
          << n << ',' << ci.degreeString() << ',' << e << ",\"" << imported.str("lambda") << "\",\"" << deformed
          << "\"\n";
      break;
    case Format::Text:
      out << ci.label() << ", e = " << e << '\n';
      out << "G(lambda, 0) with symbolic b_i: " << symbolicOrigin.str("lambda") << '\n';
      out << "G(lambda, 0) with sum b_i = prod d_i^d_i: " << imported.str("lambda") << '\n';
      if (!deformed.empty()) {
        out << "G(lambda, t) mod t^2 (Beauville values, interior coefficients symbolic; jets c + (l)*z1 in t):\n  "
            << deformed << '\n';
        out << "det A(t) linear coefficient: " << detLinear << '\n';
        if (cfg.showMatrix) out << report::toJson(a).dump() << '\n';
      }
      break;
  }
  return kExitOk;
}

int runSweep(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const auto cases = sweepCases(cfg.nMax, cfg.degMax, cfg.rMax);
  std::vector<std::optional<Certificate>> results(cases.size());
  std::vector<std::string> errors(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      try {
        results[i] = certify(cases[i]);
      } catch (const InternalInconsistency& ex) {
        errors[i] = ex.what();
      }
    }
  };
  unsigned threads = cfg.threads != 0 ? cfg.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(cases.size(), 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors)
    if (!e.empty()) throw InternalInconsistency(e);

  switch (cfg.format) {
    case Format::Csv:
      out << report::csvHeader() << '\n';
      for (const auto& c : results) out << report::csvRow(*c) << '\n';
      break;
    case Format::Json: {
      report::Json arr = report::Json::array();
      for (const auto& c : results) arr.push_back(report::toJson(*c));
      out << arr.dump(2) << '\n';
      break;
    }
    case Format::Text:
      for (const auto& c : results) {
        out << "n=" << c->n << " d=(" << join(c->degrees) << ") e=" << c->e << "  " << toString(c->verdict);
        if (c->detLinearCoeff) out << "  det' = " << *c->detLinearCoeff;
        out << '\n';
      }
      break;
  }
  return kExitOk;
}

int runOracle(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const CompleteIntersection ci(cfg.n, cfg.degrees);
  warnNormalization(ci, err);
  Certificate cert = certify(ci);
  cert.oracle = numericOracle(ci, cert, cfg.samples, cfg.seed);
  switch (cfg.format) {
    case Format::Json: out << report::toJson(cert).dump(2) << '\n'; break;
    case Format::Csv:
      out << "index,t,discriminant_nonzero,min_gap,certified_gap_lower_bound\n";
      for (const auto& s : cert.oracle->results) {
        out << s.index << ',' << s.t << ',' << (s.discriminantNonzero ? "true" : "false") << ',' << s.minGap << ','
            << s.certifiedGapLowerBound << '\n';
      }
      break;
    case Format::Text: out << report::renderText(cert); break;
  }
  if (cert.oracle->contradiction) {
    err << "error: oracle contradicts the certificate for " << ci.label() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace

std::vector<CompleteIntersection> sweepCases(int nMax, int degMax, int rMax) {
  std::vector<CompleteIntersection> cases;
  for (int n = 3; n <= nMax; ++n) {
    std::vector<std::vector<int>> multisets;
    std::function<void(std::vector<int>&, int)> grow = [&](std::vector<int>& cur, int lo) {
      if (!cur.empty()) multisets.push_back(cur);
      if (static_cast<int>(cur.size()) == rMax) return;
      for (int d = lo; d <= degMax; ++d) {
        cur.push_back(d);
        grow(cur, d);
        cur.pop_back();
      }
    };
    std::vector<int> cur;
    grow(cur, 2);
    std::sort(multisets.begin(), multisets.end());
    for (const auto& ds : multisets) {
      CompleteIntersection ci(n, ds);
      if (ci.isFano()) cases.push_back(std::move(ci));
    }
  }
  return cases;
}

std::variant<RunConfig, int> parseArgs(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Certify semi-simplicity of the invariant quantum cohomology of Fano complete intersections"};
  app.require_subcommand(1);

  auto* certifyCmd = app.add_subcommand("certify", "Certify one complete intersection");
  addCaseOptions(certifyCmd, cfg);
  addFormatOptions(certifyCmd, cfg);

  auto* linesCmd = app.add_subcommand("lines", "Line invariants d*l_j via Schubert calculus on G(2,N)");
  addCaseOptions(linesCmd, cfg);
  linesCmd->add_option("-j", cfg.j, "Index j (default: every admissible j)")->check(CLI::NonNegativeNumber);
  addFormatOptions(linesCmd, cfg);

  auto* charpolyCmd = app.add_subcommand("charpoly", "Characteristic polynomial G(lambda, t) mod t^2");
  addCaseOptions(charpolyCmd, cfg);
  charpolyCmd->add_flag("--matrix", cfg.showMatrix, "Also print the operator matrix A(t)");
  addFormatOptions(charpolyCmd, cfg);

  auto* sweepCmd = app.add_subcommand("sweep", "Certify every admissible (n, degrees) in a range");
  sweepCmd->add_option("--n-max", cfg.nMax, "Largest dimension")->check(CLI::Range(3, 60));
  sweepCmd->add_option("--deg-max", cfg.degMax, "Largest degree")->check(CLI::Range(2, 20));
  sweepCmd->add_option("--r-max", cfg.rMax, "Largest codimension")->check(CLI::Range(1, 10));
  sweepCmd->add_option("--seed", cfg.seed, "Seed (recorded; the sweep itself is deterministic)");
  sweepCmd->add_option("--threads", cfg.threads, "Worker threads (0: all cores)");
  addFormatOptions(sweepCmd, cfg);

  auto* oracleCmd = app.add_subcommand("oracle", "Randomized exact/numeric check of a certificate");
  addCaseOptions(oracleCmd, cfg);
  oracleCmd->add_option("--samples", cfg.samples, "Number of samples")->check(CLI::Range(1, 100000));
  oracleCmd->add_option("--seed", cfg.seed, "Random seed");
  addFormatOptions(oracleCmd, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInvalidInput;
  }

  if (certifyCmd->parsed()) cfg.command = Command::Certify;
  if (linesCmd->parsed()) cfg.command = Command::Lines;
  if (charpolyCmd->parsed()) cfg.command = Command::Charpoly;
  if (sweepCmd->parsed()) cfg.command = Command::Sweep;
  if (oracleCmd->parsed()) cfg.command = Command::Oracle;
  return cfg;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::Certify: return runCertify(config, out, err);
      case Command::Lines: return runLines(config, out, err);
      case Command::Charpoly: return runCharpoly(config, out, err);
      case Command::Sweep: return runSweep(config, out, err);
      case Command::Oracle: return runOracle(config, out, err);
    }
  } catch (const InternalInconsistency& e) {
    err << "internal inconsistency: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}

}  // namespace qss::cli
