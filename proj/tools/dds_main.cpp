// dds: command-line front end for the double-double-slit model.
// Subcommands emit CSV/JSON artifacts with provenance headers.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dds/densities.hpp"
#include "dds/interferometry.hpp"
#include "dds/multipath.hpp"
#include "dds/numerics.hpp"
#include "dds/purification.hpp"
#include "dds/states.hpp"
#include "dds/wigner.hpp"

using json = nlohmann::json;

namespace {

constexpr const char* kVersion = "1.0.0";
constexpr const char* kSchema = "epr-dds/1";

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

std::string fmt_g17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct OutputTarget {
  std::string path;  // empty = stdout
  std::ofstream file;
  std::ostream& stream() {
    if (path.empty()) return std::cout;
    if (!file.is_open()) {
      file.open(path);
      if (!file) throw std::runtime_error("cannot open output file: " + path);
    }
    return file;
  }
};

struct FamilyOpts {
  double a = 1.0;
  std::optional<double> h, theta;
  std::optional<double> h1, b, h2;

  void add_theta_flags(CLI::App* cmd) {
    cmd->add_option("--a", a, "Gaussian width parameter a = 1/Delta^2");
    cmd->add_option("--h", h, "slit half-separation (theta family)");
    cmd->add_option("--theta", theta, "entanglement parameter in [0, pi/4]");
  }
  void add_asym_flags(CLI::App* cmd) {
    cmd->add_option("--h1", h1, "Alice slit half-separation (asymmetric family)");
    cmd->add_option("--b", b, "Bob Gaussian width parameter (asymmetric family)");
    cmd->add_option("--h2", h2, "Bob slit half-separation (asymmetric family)");
  }
  bool is_theta() const { return h.has_value(); }
  bool is_asym() const { return h1.has_value() || b.has_value() || h2.has_value(); }

  dds::ThetaParams theta_params() const {
    if (!h) throw CLI::ValidationError("theta family needs --a --h [--theta]");
    return dds::ThetaParams(a, *h, theta.value_or(0.0));
  }
  dds::AsymParams asym_params() const {
    if (!(h1 && b && h2))
      throw CLI::ValidationError("asymmetric family needs --a --h1 --b --h2");
    return dds::AsymParams(a, *h1, *b, *h2);
  }
  void require_exactly_one() const {
    if (is_theta() == is_asym())
      throw CLI::ValidationError(
          "specify exactly one state family: --a --h [--theta] or --a --h1 --b --h2");
  }
};

void write_header(std::ostream& os, const std::string& subcommand,
                  const std::vector<std::pair<std::string, std::string>>& kv) {
  os << "# schema=" << kSchema << " tool=dds version=" << kVersion
     << " subcommand=" << subcommand;
  for (const auto& [k, v] : kv) os << ' ' << k << '=' << v;
  os << '\n';
}

json help_json(const CLI::App& app) {
  json out;
  out["tool"] = "dds";
  out["version"] = kVersion;
  out["subcommands"] = json::array();
  for (const CLI::App* sub : app.get_subcommands({})) {
    json s;
    s["name"] = sub->get_name();
    s["description"] = sub->get_description();
    s["options"] = json::array();
    for (const CLI::Option* opt : sub->get_options()) {
      s["options"].push_back({{"name", opt->get_name()},
                              {"description", opt->get_description()},
                              {"required", opt->get_required()}});
    }
    out["subcommands"].push_back(s);
  }
  return out;
}

// --- density ---------------------------------------------------------------

int run_density(const FamilyOpts& fam, bool joint, int grid_points, double range_sigmas,
                OutputTarget& out) {
  fam.require_exactly_one();
  std::ostream& os = out.stream();
  dds::QuadratureSpec spec;
  spec.half_width_sigmas = range_sigmas;
  std::vector<std::pair<std::string, std::string>> kv;
  kv.emplace_back("a", fmt_g17(fam.a));

  if (fam.is_theta()) {
    const dds::ThetaParams prm = fam.theta_params();
    kv.emplace_back("h", fmt_g17(prm.h));
    kv.emplace_back("theta", fmt_g17(prm.theta));
    if (prm.h == 0.0) kv.emplace_back("warning", "degenerate-h0-coincident-slits");
    kv.emplace_back("grid_points", std::to_string(grid_points));
    kv.emplace_back("range_sigmas", fmt_g17(range_sigmas));
    write_header(os, "density", kv);
    const double half = range_sigmas * std::sqrt(prm.a);
    const dds::Grid g{-half, half, grid_points};
    if (joint) {
      os << "p1,p2,density\n";
      for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) {
          const double f = dds::joint_momentum_density_theta(
              prm, dds::MomentumPair{g.point(i), g.point(j)});
          os << fmt_g17(g.point(i)) << ',' << fmt_g17(g.point(j)) << ',' << fmt_g17(f)
             << '\n';
        }
    } else {
      os << "p1,density\n";
      for (int i = 0; i < g.n; ++i)
        os << fmt_g17(g.point(i)) << ','
           << fmt_g17(dds::momentum_density_theta(prm, g.point(i))) << '\n';
    }
  } else {
    const dds::AsymParams prm = fam.asym_params();
    kv.emplace_back("h1", fmt_g17(prm.h1));
    kv.emplace_back("b", fmt_g17(prm.b));
    kv.emplace_back("h2", fmt_g17(prm.h2));
    if (prm.h2 == 0.0) kv.emplace_back("warning", "degenerate-h2-0-full-visibility");
    kv.emplace_back("grid_points", std::to_string(grid_points));
    kv.emplace_back("range_sigmas", fmt_g17(range_sigmas));
    write_header(os, "density", kv);
    const double half = range_sigmas * std::sqrt(prm.a);
    const dds::Grid g{-half, half, grid_points};
    os << "p1,density\n";
    for (int i = 0; i < g.n; ++i)
      os << fmt_g17(g.point(i)) << ','
         << fmt_g17(dds::momentum_density_asym(prm, g.point(i))) << '\n';
  }
  return kExitOk;
}

// --- scan ------------------------------------------------------------------

int run_scan(double a, double h, int points, OutputTarget& out) {
  std::ostream& os = out.stream();
  write_header(os, "scan",
               {{"a", fmt_g17(a)}, {"h", fmt_g17(h)}, {"points", std::to_string(points)}});
  os << "theta,V_simple,V_envelope,P,sum_sq\n";
  for (int k = 0; k < points; ++k) {
    const double theta = (dds::kPi / 4.0) * k / (points - 1);
    const dds::ThetaParams prm(a, h, theta);
    const dds::ComplementarityRecord rec = dds::complementarity(prm);
    const double v_env = dds::visibility_theta(prm).visibility;
    os << fmt_g17(theta) << ',' << fmt_g17(rec.v_simple) << ',' << fmt_g17(v_env) << ','
       << fmt_g17(rec.predictability) << ',' << fmt_g17(rec.sum_sq) << '\n';
  }
  return kExitOk;
}

// --- sample ----------------------------------------------------------------

int run_sample(const FamilyOpts& fam, std::size_t n, std::uint64_t seed, int workers,
               OutputTarget& out, const std::string& summary_path) {
  const dds::ThetaParams prm = fam.theta_params();
  const dds::SampleBatch batch = dds::sample_joint(prm, n, seed, workers);

  std::ostream& os = out.stream();
  write_header(os, "sample",
               {{"a", fmt_g17(prm.a)},
                {"h", fmt_g17(prm.h)},
                {"theta", fmt_g17(prm.theta)},
                {"n", std::to_string(n)},
                {"seed", std::to_string(seed)}});
  os << "p1,p2\n";
  for (const auto& [p1, p2] : batch.samples)
    os << fmt_g17(p1) << ',' << fmt_g17(p2) << '\n';

  json summary;
  summary["schema"] = kSchema;
  summary["n"] = n;
  summary["seed"] = seed;
  summary["acceptance_rate"] = batch.acceptance_rate;
  const dds::FringeFit fit = dds::fit_visibility(batch, prm);
  summary["V_hat"] = fit.visibility_hat;
  summary["residual_rms"] = fit.residual_rms;
  if (summary_path.empty() || summary_path == "-") {
    std::cout << summary.dump(2) << '\n';
  } else {
    std::ofstream f(summary_path);
    if (!f) throw std::runtime_error("cannot open summary file: " + summary_path);
    f << summary.dump(2) << '\n';
  }
  return kExitOk;
}

// --- purify ----------------------------------------------------------------

int run_purify(const FamilyOpts& fam, int grid_points) {
  const dds::AsymParams prm = fam.asym_params();
  const dds::PurificationResult res = dds::solve_theta(prm);
  const double gap = dds::verify_purification(prm, grid_points);
  json out;
  out["schema"] = kSchema;
  out["theta"] = res.theta;
  out["sin_two_theta"] = res.sin_two_theta;
  out["visibility"] = dds::visibility_asym(prm).visibility;
  out["predictability"] = dds::predictability_theta(res.theta);
  out["wigner_gap"] = gap;
  if (prm.h2 == 0.0) out["warning"] = "h2=0: product state, visibility 1 by formula";
  std::cout << out.dump(2) << '\n';
  return kExitOk;
}

// --- multipath -------------------------------------------------------------

int run_multipath(const std::string& in_path) {
  json in;
  if (in_path.empty() || in_path == "-") {
    std::cin >> in;
  } else {
    std::ifstream f(in_path);
    if (!f) throw std::runtime_error("cannot open input file: " + in_path);
    f >> in;
  }
  if (!in.contains("amplitudes_sq") || !in["amplitudes_sq"].is_array())
    throw CLI::ValidationError("multipath input needs an 'amplitudes_sq' array");

  dds::PathEnsemble e;
  for (const auto& v : in["amplitudes_sq"]) {
    const double p = v.get<double>();
    if (!(p >= 0.0)) throw CLI::ValidationError("amplitudes_sq entries must be >= 0");
    e.amplitudes.push_back(std::sqrt(p));
  }
  const std::size_t n = e.amplitudes.size();
  if (in.contains("overlaps")) {
    if (!in["overlaps"].is_array() || in["overlaps"].size() != n)
      throw CLI::ValidationError("overlaps must be an n x n matrix");
    for (const auto& row : in["overlaps"]) {
      if (!row.is_array() || row.size() != n)
        throw CLI::ValidationError("overlaps must be an n x n matrix");
      e.overlaps.push_back(row.get<std::vector<double>>());
    }
  } else {
    e.overlaps.assign(n, std::vector<double>(n, 1.0));
  }

  const double d = dds::distinguishability(e);
  const double p = dds::predictability_n(e);
  const double c = dds::coherence(e);
  json out;
  out["schema"] = kSchema;
  out["D"] = d;
  out["P"] = p;
  out["C"] = c;
  out["identity_residuals"] = {{"D2_plus_C2_minus_1", d * d + c * c - 1.0}};
  bool unit_overlaps = true;
  for (const auto& row : e.overlaps)
    for (double v : row) unit_overlaps = unit_overlaps && v == 1.0;
  if (unit_overlaps)
    out["identity_residuals"]["P2_plus_C2_minus_1"] = p * p + c * c - 1.0;
  std::cout << out.dump(2) << '\n';
  return kExitOk;
}

// --- verify ----------------------------------------------------------------

struct Check {
  std::string name;
  double tolerance;
  double measured;
  bool pass() const { return measured <= tolerance; }
};

int run_verify(bool inject_norm_error) {
  std::vector<Check> checks;
  const double tamper = inject_norm_error ? 1.000001 : 1.0;

  {  // one-particle density normalization, theta family
    double worst = 0.0;
    for (const auto& [a, h, t] : {std::tuple{1.0, 1.0, dds::kPi / 12.0},
                                  std::tuple{1.0, 2.0, dds::kPi / 6.0},
                                  std::tuple{0.5, 1.5, dds::kPi / 4.0}}) {
      const dds::ThetaParams prm(a, h, t);
      const dds::Grid g = dds::momentum_grid(a, h);
      const double integral = dds::integrate(
          [&](double p) { return tamper * dds::momentum_density_theta(prm, p); }, g);
      worst = std::max(worst, std::abs(integral - 1.0));
    }
    checks.push_back({"density_theta_normalization", 1e-8, worst});
  }
  {  // joint density normalization
    const dds::ThetaParams prm(1.0, 1.0, dds::kPi / 6.0);
    const dds::Grid g = dds::momentum_grid(1.0, 1.0);
    const double integral = dds::integrate_2d(
        [&](double p1, double p2) {
          return dds::joint_momentum_density_theta(prm, dds::MomentumPair{p1, p2});
        },
        g, g);
    checks.push_back({"density_joint_normalization", 1e-6, std::abs(integral - 1.0)});
  }
  {  // asymmetric density normalization + oracle closure
    const dds::AsymParams prm(1.0, 1.5, 0.5, 2.0);
    const dds::Grid g = dds::momentum_grid(prm.a, prm.h1);
    const double integral = dds::integrate(
        [&](double p) { return dds::momentum_density_asym(prm, p); }, g);
    checks.push_back({"density_asym_normalization", 1e-8, std::abs(integral - 1.0)});

    std::vector<double> pts;
    for (int i = 0; i < 41; ++i) pts.push_back(-4.0 + 8.0 * i / 40.0);
    const dds::Grid g2 = dds::momentum_grid(prm.b, prm.h2);
    const dds::TabulatedMarginal marg = dds::quadrature_marginal(
        [&](double p1, double p2) { return std::norm(dds::psi_asym_momentum(prm, p1, p2)); },
        0, pts, g2);
    double worst = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
      worst = std::max(worst,
                       std::abs(marg.val[i] - dds::momentum_density_asym(prm, pts[i])));
    checks.push_back({"oracle_closure_asym", 1e-8, worst});
  }
  {  // oracle closure, theta family
    const dds::ThetaParams prm(1.0, 1.0, dds::kPi / 6.0);
    std::vector<double> pts;
    for (int i = 0; i < 41; ++i) pts.push_back(-4.0 + 8.0 * i / 40.0);
    const dds::Grid g = dds::momentum_grid(prm.a, prm.h);
    const dds::TabulatedMarginal marg = dds::quadrature_marginal(
        [&](double p1, double p2) {
          const double v = dds::psi_theta_momentum(prm, p1, p2);
          return v * v;
        },
        0, pts, g);
    double worst = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
      worst = std::max(worst,
                       std::abs(marg.val[i] - dds::momentum_density_theta(prm, pts[i])));
    checks.push_back({"oracle_closure_theta", 1e-8, worst});
  }
  {  // partial Wigner: normalization and momentum marginal
    const dds::ThetaParams prm(1.0, 1.0, 0.0);
    const dds::Grid gx = dds::position_grid(prm.a, prm.h);
    const dds::Grid gp = dds::momentum_grid(prm.a, prm.h);
    const double integral = dds::integrate_2d(
        [&](double x, double p) { return dds::wigner_partial_theta(prm, x, p); }, gx, gp);
    checks.push_back({"wigner_partial_normalization", 1e-8, std::abs(integral - 1.0)});

    double worst = 0.0;
    for (int i = 0; i < 21; ++i) {
      const double p1 = -4.0 + 8.0 * i / 20.0;
      const double marg = dds::integrate(
          [&](double x) { return dds::wigner_partial_theta(prm, x, p1); }, gx);
      worst = std::max(worst, std::abs(marg - dds::momentum_density_theta(prm, p1)));
    }
    checks.push_back({"wigner_momentum_marginal", 1e-8, worst});
  }
  {  // complementarity sweep
    double worst = 0.0;
    for (int k = 0; k < 400; ++k) {
      const dds::ThetaParams prm(1.0, 1.0, (dds::kPi / 4.0) * k / 399.0);
      worst = std::max(worst, dds::complementarity(prm).sum_sq - 1.0);
    }
    checks.push_back({"complementarity_sweep", 1e-12, worst});
  }
  {  // visibility bounds sin2t <= V <= 1
    double worst = 0.0;
    for (int ia = 1; ia <= 5; ++ia)
      for (int ih = 0; ih <= 5; ++ih)
        for (int it = 0; it <= 5; ++it) {
          const dds::ThetaParams prm(0.4 * ia, 0.5 * ih, (dds::kPi / 4.0) * it / 5.0);
          const double v = dds::visibility_theta(prm).visibility;
          worst = std::max({worst, prm.sin2t() - v, v - 1.0});
        }
    checks.push_back({"visibility_bounds", 1e-12, worst});
  }
  {  // purification round trip
    const dds::AsymParams prm(1.0, 1.5, 0.5, 2.0);
    const dds::PurificationResult res = dds::solve_theta(prm);
    const dds::ThetaParams tp(prm.a, prm.h1, res.theta);
    const double vmatch = std::abs(dds::visibility_theta(tp).visibility -
                                   dds::visibility_asym(prm).visibility);
    checks.push_back({"purification_visibility_match", 1e-12, vmatch});
    checks.push_back({"purification_wigner_gap", 1e-10, res.wigner_gap});
  }
  {  // multipath identity over pseudorandom ensembles
    double worst = 0.0;
    std::uint64_t state = 4242;
    for (int trial = 0; trial < 100; ++trial) {
      const int n = 2 + static_cast<int>(dds::splitmix64(state++) % 5);
      std::vector<double> probs(n);
      for (auto& p : probs)
        p = 0.05 + static_cast<double>(dds::splitmix64(state++) % 1000) / 1000.0;
      dds::PathEnsemble e = dds::PathEnsemble::from_probabilities(probs);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          const double o = static_cast<double>(dds::splitmix64(state++) % 1001) / 1000.0;
          e.overlaps[i][j] = e.overlaps[j][i] = o;
        }
      const double d = dds::distinguishability(e);
      const double c = dds::coherence(e);
      worst = std::max(worst, std::abs(d * d + c * c - 1.0));
    }
    checks.push_back({"multipath_identity", 1e-12, worst});
  }

  json out;
  out["schema"] = kSchema;
  out["checks"] = json::array();
  bool all_pass = true;
  for (const Check& c : checks) {
    out["checks"].push_back({{"name", c.name},
                             {"tolerance", c.tolerance},
                             {"measured", c.measured},
                             {"pass", c.pass()}});
    all_pass = all_pass && c.pass();
  }
  out["pass"] = all_pass;
  std::cout << out.dump(2) << '\n';
  return all_pass ? kExitOk : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"double-double-slit model: densities, Wigner functions, visibility and "
               "complementarity measures, purification, Monte Carlo screen simulator"};
  app.require_subcommand(0, 1);
  // long-only help: the default -h short flag would collide with --h
  app.set_help_flag("--help", "print help and exit");
  bool want_help_json = false;
  app.add_flag("--help-json", want_help_json, "print a JSON description of the CLI");

  FamilyOpts fam_density, fam_sample, fam_purify;
  OutputTarget out_density, out_scan, out_sample;
  bool joint = false;
  int grid_points = 401;
  double range_sigmas = 6.0;
  std::string format = "csv";

  CLI::App* density = app.add_subcommand("density", "emit a momentum density grid as CSV");
  density->set_help_flag("--help", "print help and exit");
  fam_density.add_theta_flags(density);
  fam_density.add_asym_flags(density);
  density->add_flag("--joint", joint, "emit the 2-D joint density (theta family)");
  density->add_option("--grid-points", grid_points, "points per axis");
  density->add_option("--range-sigmas", range_sigmas, "half range in units of sqrt(a)");
  density->add_option("--out", out_density.path, "output file (default stdout)");
  density->add_option("--format", format, "csv (default)");

  double scan_a = 1.0, scan_h = 1.0;
  int scan_points = 400;
  CLI::App* scan = app.add_subcommand(
      "scan", "theta sweep of visibility, predictability and their square sum");
  scan->set_help_flag("--help", "print help and exit");
  scan->add_option("--a", scan_a, "Gaussian width parameter");
  scan->add_option("--h", scan_h, "slit half-separation");
  scan->add_option("--points", scan_points, "number of sweep rows")
      ->check(CLI::Range(2, 1000000));
  scan->add_option("--out", out_scan.path, "output file (default stdout)");

  std::size_t sample_n = 0;
  std::uint64_t sample_seed = 0;
  int workers = 1;
  std::string summary_path;
  CLI::App* sample = app.add_subcommand(
      "sample", "Monte Carlo screen hits from the joint momentum density");
  sample->set_help_flag("--help", "print help and exit");
  fam_sample.add_theta_flags(sample);
  sample->add_option("--n", sample_n, "number of samples")
      ->required()
      ->check(CLI::Range(std::size_t{1}, std::size_t{1} << 40));
  sample->add_option("--seed", sample_seed, "RNG master seed")->required();
  sample->add_option("--workers", workers, "worker threads (output-invariant)")
      ->check(CLI::Range(1, 256));
  sample->add_option("--out", out_sample.path, "samples CSV file (default stdout)");
  sample->add_option("--summary-out", summary_path, "JSON summary file (default stdout)");

  int purify_grid = 41;
  CLI::App* purify = app.add_subcommand(
      "purify", "solve for the theta-family purification of an asymmetric state");
  purify->set_help_flag("--help", "print help and exit");
  purify->add_option("--a", fam_purify.a, "Alice Gaussian width parameter");
  fam_purify.add_asym_flags(purify);
  purify->add_option("--grid-points", purify_grid, "Wigner verification grid size");

  std::string multipath_in;
  CLI::App* multipath = app.add_subcommand(
      "multipath", "n-path distinguishability, predictability and coherence from JSON");
  multipath->set_help_flag("--help", "print help and exit");
  multipath->add_option("--in", multipath_in, "input JSON file ('-' = stdin)");

  bool inject_norm_error = false;
  CLI::App* verify =
      app.add_subcommand("verify", "run the oracle cross-check suite, report JSON");
  verify->set_help_flag("--help", "print help and exit");
  verify->add_flag("--inject-normalization-error", inject_norm_error,
                   "test fixture: perturb a normalization constant")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  if (want_help_json) {
    std::cout << help_json(app).dump(2) << '\n';
    return kExitOk;
  }

  try {
    if (density->parsed())
      return run_density(fam_density, joint, grid_points, range_sigmas, out_density);
    if (scan->parsed()) return run_scan(scan_a, scan_h, scan_points, out_scan);
    if (sample->parsed())
      return run_sample(fam_sample, sample_n, sample_seed, workers, out_sample,
                        summary_path);
    if (purify->parsed()) return run_purify(fam_purify, purify_grid);
    if (multipath->parsed()) return run_multipath(multipath_in);
    if (verify->parsed()) return run_verify(inject_norm_error);
    std::cerr << app.help() << '\n';
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const dds::NoPurificationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCheckFailure;
  }
}
