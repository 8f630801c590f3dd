#include "cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "berger/cut_profile.hpp"
#include "berger/diameter.hpp"
#include "berger/format.hpp"
#include "berger/geodesic.hpp"
#include "berger/verify.hpp"

namespace berger::cli {
namespace {

using fmtutil::number;


enum class Format { kJson, kCsv, kTable };

struct Config {
  double i1 = 0.0;
  double i3 = 0.0;
  std::optional<std::string> format;
  std::string output;
};

Format resolve_format(const Config& cfg, Format fallback) {
  if (!cfg.format) return fallback;
  if (*cfg.format == "csv") return Format::kCsv;
  if (*cfg.format == "table") return Format::kTable;
  return Format::kJson;
}

std::string diameter_csv(const DiameterReport& r) {
  return fmt::format(
      "i1,i3,eta,regime,closed_form,numeric,maximizer_pbar3,abs_gap\n{},{},{},{},{},{},{},{}\n",
      number(r.metric.i1()), number(r.metric.i3()), number(r.metric.eta()), to_string(r.regime),
      number(r.closed_form), number(r.numeric), number(r.maximizer_pbar3), number(r.abs_gap));
}

std::string exp_json(const BergerMetric& m, double pbar3, double phi, double t, double step,
                     const Trajectory& tr) {
  const auto& q = tr.end.q;
  const auto& p = tr.end.p;
  return fmt::format(
      R"({{"i1":{},"i3":{},"pbar3":{},"phi":{},"t":{},"step":{},)"
      R"("q":{{"w":{},"x":{},"y":{},"z":{}}},"p":{{"p1":{},"p2":{},"p3":{}}},)"
      R"("drift":{{"hamiltonian":{},"momentum_norm":{},"p3":{}}}}})"
      "\n",
      number(m.i1()), number(m.i3()), number(pbar3), number(phi), number(t), number(step),
      number(q.w()), number(q.x()), number(q.y()), number(q.z()), number(p.p1), number(p.p2),
      number(p.p3), number(tr.drift.hamiltonian), number(tr.drift.momentum_norm),
      number(tr.drift.p3));
}

std::string exp_csv(const BergerMetric& m, double pbar3, double phi, double t, double step,
                    const Trajectory& tr) {
  const auto& q = tr.end.q;
  const auto& p = tr.end.p;
  return fmt::format(
      "i1,i3,pbar3,phi,t,step,w,x,y,z,p1,p2,p3,drift_hamiltonian,drift_momentum_norm,drift_p3\n"
      "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
      number(m.i1()), number(m.i3()), number(pbar3), number(phi), number(t), number(step),
      number(q.w()), number(q.x()), number(q.y()), number(q.z()), number(p.p1), number(p.p2),
      number(p.p3), number(tr.drift.hamiltonian), number(tr.drift.momentum_norm),
      number(tr.drift.p3));
}

std::string verify_output(const std::vector<PropertyResult>& results, Format f,
                          std::string_view level) {
  std::string s;
  switch (f) {
    case Format::kJson: {
      bool all = true;
      s = fmt::format(R"({{"level":{},"properties":[)", fmtutil::quoted(level));
      for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        all = all && r.passed;
        s += fmt::format(R"({}{{"name":{},"passed":{},"detail":{}}})", i ? "," : "",
                         fmtutil::quoted(r.name), r.passed ? "true" : "false", fmtutil::quoted(r.detail));
      }
      s += fmt::format(R"(],"passed":{}}})", all ? "true" : "false");
      s += '\n';
      break;
    }
    case Format::kCsv:
      s = "name,passed,detail\n";
      for (const auto& r : results) {
        s += fmt::format("{},{},{}\n", r.name, r.passed ? "true" : "false", fmtutil::quoted(r.detail));
      }
      break;
    case Format::kTable:
      for (const auto& r : results) {
        s += fmt::format("{}  {:<30} {}\n", r.passed ? "PASS" : "FAIL", r.name, r.detail);
      }
      break;
  }
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Diameter and cut time of the Berger sphere SU(2) with metric g(I1, I1, I3)",
               "berger"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--i1", cfg.i1, "metric eigenvalue I1 = I2")->required();
  app.add_option("--i3", cfg.i3, "metric eigenvalue I3")->required();
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("-o,--output", cfg.output, "write results to this file instead of stdout");

  NumericDiameterOptions dopt;
  auto* diameter = app.add_subcommand("diameter", "closed-form and numeric diameter report");
  diameter->add_option("--grid-n", dopt.grid_n, "grid size for numeric maximization")
      ->capture_default_str();
  diameter->add_option("--refine-tol", dopt.refine_tol, "golden-section tolerance in pbar3")
      ->capture_default_str();

  int profile_n = 101;
  auto* profile = app.add_subcommand("profile", "sampled cut-time profile over pbar3 in [-1, 1]");
  profile->add_option("-n", profile_n, "number of samples (>= 3)")->capture_default_str();

  double pbar3 = 0.0, phi = 0.0, t = 0.0;
  std::optional<double> step;
  auto* exp = app.add_subcommand("exp", "integrate a unit-speed geodesic from the identity");
  exp->add_option("--pbar3", pbar3, "reduced axis momentum in [-1, 1]")->required();
  exp->add_option("--phi", phi, "azimuth of the momentum (radians)")->capture_default_str();
  exp->add_option("--t", t, "arclength time")->required();
  exp->add_option("--step", step, "integration step (default t/10000)");

  std::string level = "quick";
  auto* verify = app.add_subcommand("verify", "run the property suite");
  verify->add_option("--level", level, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}))
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  std::ostringstream buffer;
  int code = kOk;
  try {
    const BergerMetric m(cfg.i1, cfg.i3);
    if (*diameter) {
      const DiameterReport r = diameter_report(m, dopt);
      buffer << (resolve_format(cfg, Format::kJson) == Format::kCsv ? diameter_csv(r)
                                                                    : to_json(r));
      if (r.abs_gap > 1e-6 * r.closed_form) {
        err << fmt::format("error: numeric diameter disagrees with closed form (gap {})\n",
                           r.abs_gap);
        code = kOracleDisagreement;
      }
    } else if (*profile) {
      const CutProfile p = sample_profile(m, profile_n);
      buffer << (resolve_format(cfg, Format::kJson) == Format::kCsv ? to_csv(p) : to_json(p));
    } else if (*exp) {
      const ReducedMomentum pb(pbar3);
      const double h = step.value_or(t > 0.0 ? t / 1e4 : 0.0);
      const Trajectory tr = exp_map_trajectory(m, initial_momentum(m, pb, phi), t, h);
      buffer << (resolve_format(cfg, Format::kJson) == Format::kCsv
                     ? exp_csv(m, pbar3, phi, t, h, tr)
                     : exp_json(m, pbar3, phi, t, h, tr));
    } else if (*verify) {
      const auto results =
          run_verification(m, level == "full" ? VerifyLevel::kFull : VerifyLevel::kQuick);
      buffer << verify_output(results, resolve_format(cfg, Format::kTable), level);
      for (const auto& r : results) {
        if (!r.passed) {
          err << "failed: " << r.name << '\n';
          code = kVerificationFailed;
        }
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (cfg.output.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << cfg.output << " for writing\n";
      return kUsage;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace berger::cli
