// Copyright (c) 2026 bbcluster contributors
// SPDX-License-Identifier: Apache-2.0
//
// bbcluster: command-line front end for the photon-cluster statistics
// library. Subcommands: pmf, spectrum, constants, sample, verify.
//
// Exit codes: 0 success, 1 numeric domain error, 2 usage error,
// 3 verification failure. Structural argument problems (missing or
// conflicting flags, malformed values) are usage errors; out-of-domain
// physical values are rejected by the library and map to exit 1.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bbcluster/constants.hpp"
#include "bbcluster/distributions.hpp"
#include "bbcluster/io.hpp"
#include "bbcluster/montecarlo.hpp"
#include "bbcluster/numerics.hpp"
#include "bbcluster/spectra.hpp"
#include "bbcluster/thermo.hpp"
#include "bbcluster/verification.hpp"
#include "bbcluster/version.hpp"

namespace {

using bbcluster::io::Cell;
using bbcluster::io::Table;

//! Structural argument problem; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

//! Options shared by every subcommand.
struct CommonArgs {
  std::string format = "csv";
  std::string out;
  std::string config;
};

std::string join_command(int argc, char** argv) {
  std::string cmd;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) cmd += ' ';
    cmd += argv[i];
  }
  return cmd;
}

nlohmann::json cell_to_json(const Cell& cell) {
  if (const auto* s = std::get_if<std::string>(&cell)) return *s;
  if (const auto* d = std::get_if<double>(&cell)) return *d;
  return std::get<long long>(cell);
}

std::string to_json_envelope(const Table& table, const std::string& command) {
  nlohmann::json meta{
      {"version", bbcluster::kVersion},
      {"command", command},
      {"constants",
       {{"h", bbcluster::kPlanck},
        {"c", bbcluster::kLightSpeed},
        {"k_B", bbcluster::kBoltzmann}}}};
  nlohmann::json data = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json obj;
    for (size_t i = 0; i < row.size() && i < table.header.size(); ++i)
      obj[table.header[i]] = cell_to_json(row[i]);
    data.push_back(std::move(obj));
  }
  nlohmann::json envelope{{"meta", std::move(meta)}, {"data", std::move(data)}};
  return envelope.dump(2) + "\n";
}

void emit(Table table, const CommonArgs& common, const std::string& command) {
  std::string text;
  if (common.format == "json") {
    text = to_json_envelope(table, command);
  } else {
    table.meta = bbcluster::io::meta_lines(command);
    text = bbcluster::io::to_csv(table, bbcluster::io::output_precision());
  }
  if (common.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(common.out, std::ios::binary);
  if (!file) throw UsageError("cannot open output file: " + common.out);
  file << text;
}

void add_common(CLI::App* sub, CommonArgs* common) {
  sub->add_option("--format", common->format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", common->out,
                  "Output file path (default: standard output)");
  sub->add_option("--config", common->config,
                  "key=value file supplying defaults; flags override");
}

std::string trim(const std::string& text) {
  const auto begin = text.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = text.find_last_not_of(" \t\r");
  return text.substr(begin, end - begin + 1);
}

// Expands `--config FILE` before CLI11 sees the argument list: each
// key=value line becomes a trailing `--key value` pair unless the flag
// is already present, so command-line flags always win.
void apply_config_defaults(std::vector<std::string>& args) {
  std::string path;
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size())
      path = args[i + 1];
    else if (args[i].rfind("--config=", 0) == 0)
      path = args[i].substr(9);
  }
  if (path.empty()) return;
  std::ifstream file(path);
  if (!file) throw UsageError("cannot read config file: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(file, line)) {
    ++lineno;
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#') continue;
    const auto eq = text.find('=');
    const std::string key = eq == std::string::npos ? "" : trim(text.substr(0, eq));
    const std::string value = eq == std::string::npos ? "" : trim(text.substr(eq + 1));
    if (key.empty() || value.empty())
      throw UsageError("config line " + std::to_string(lineno) +
                       ": expected key=value");
    const std::string flag = "--" + key;
    bool present = false;
    for (const auto& arg : args) {
      if (arg == flag || arg.rfind(flag + "=", 0) == 0) {
        present = true;
        break;
      }
    }
    if (!present) {
      args.push_back(flag);
      args.push_back(value);
    }
  }
}

// ---------------------------------------------------------------- pmf

struct PmfArgs {
  double tau = 0.0;
  double w = 0.0;
  double nu = 0.0;
  double temp = 0.0;
  long n_max = 0;
  std::string kind = "photons";
  bool has_tau = false, has_w = false, has_nu = false, has_temp = false;
};

int run_pmf(const PmfArgs& a, const CommonArgs& common,
            const std::string& command) {
  if (a.has_w && (a.has_nu || a.has_temp))
    throw UsageError("pmf: give either --w or --nu with --temp, not both");
  if (!a.has_w && !(a.has_nu && a.has_temp))
    throw UsageError("pmf: give either --w or --nu with --temp");
  if (a.n_max < 0) throw UsageError("pmf: --n-max must be >= 0");

  const double wv =
      a.has_w
          ? a.w
          : bbcluster::thermo::degeneracy(bbcluster::thermo::ThermalMode(
                                              a.nu, a.temp))
                .w();
  bbcluster::dist::DegeneracyParameter w(wv);

  Table t;
  if (a.kind == "photons" || a.kind == "clusters") {
    if (!a.has_tau)
      throw UsageError("pmf: --kind " + a.kind + " requires --tau");
    bbcluster::dist::PhaseVolume tau(a.tau);
    if (a.kind == "photons") {
      t.header = {"n", "probability"};
      const auto table = bbcluster::dist::be_pmf_table(a.n_max, tau, w);
      for (long n = 0; n < table.size(); ++n)
        t.rows.push_back({n, table.probs[static_cast<size_t>(n)]});
      t.rows.push_back({std::string("tail"), table.tail_mass});
    } else {
      t.header = {"k", "probability"};
      bbcluster::num::KahanSum cum;
      for (long k = 0; k <= a.n_max; ++k) {
        const double p = bbcluster::dist::cluster_count_pmf(k, tau, w);
        t.rows.push_back({k, p});
        cum.add(p);
      }
      t.rows.push_back(
          {std::string("tail"), std::max(0.0, 1.0 - cum.value())});
    }
  } else {  // sizes
    if (a.has_tau)
      throw UsageError("pmf: --kind sizes takes no --tau (size law depends on w only)");
    t.header = {"k", "probability"};
    bbcluster::num::KahanSum cum;
    for (long k = 1; k <= a.n_max; ++k) {
      const double p = bbcluster::dist::cluster_size_pmf(k, w);
      t.rows.push_back({k, p});
      cum.add(p);
    }
    t.rows.push_back({std::string("tail"), std::max(0.0, 1.0 - cum.value())});
  }
  emit(std::move(t), common, command);
  return 0;
}

// ----------------------------------------------------------- spectrum

struct SpectrumArgs {
  double temp = 0.0;
  std::string rank = "total";
  std::string space = "nu";
  int points = 200;
  double min = 0.0;
  double max = 0.0;
  bool has_min = false, has_max = false;
};

int parse_rank_number(const std::string& text) {
  char* end = nullptr;
  const long v = std::strtol(text.c_str(), &end, 10);
  if (end == text.c_str() || *end != '\0' || v < 1 || v > 1000000)
    throw UsageError(
        "spectrum: --rank must be a positive integer or one of all; total; "
        "planck");
  return static_cast<int>(v);
}

int run_spectrum(const SpectrumArgs& a, const CommonArgs& common,
                 const std::string& command) {
  namespace spectra = bbcluster::spectra;
  if (a.points < 2) throw UsageError("spectrum: --points must be at least 2");
  if (!(a.temp > 0.0))
    throw std::domain_error("spectrum: requires temp > 0");

  // Default grid is [0.01, 10] times the closed-form rank-1 peak of the
  // requested space.
  const double peak =
      a.space == "nu" ? spectra::wien_cluster_peak(1, a.temp)
                      : bbcluster::kPlanck * bbcluster::kLightSpeed /
                            (5.0 * bbcluster::kBoltzmann * a.temp);
  const double lo = a.has_min ? a.min : 0.01 * peak;
  const double hi = a.has_max ? a.max : 10.0 * peak;
  if (!(lo > 0.0) || !(hi > lo))
    throw UsageError("spectrum: needs 0 < --min < --max");

  std::vector<std::string> labels;
  if (a.rank == "total") {
    labels = {"total"};
  } else if (a.rank == "planck") {
    if (a.space != "lambda")
      throw UsageError("spectrum: --rank planck applies to --space lambda");
    labels = {"planck", "total"};
  } else if (a.rank == "all") {
    // In frequency space the rank sum reconstructs the total law; cover
    // every rank the softest grid point needs at relative 1e-10. In
    // wavelength space ranks fall off as 1/m^4 and the first ten carry
    // the structure, so "all" caps there.
    int m_hi = 10;
    if (a.space == "nu") {
      const double x_lo =
          bbcluster::kPlanck * lo / (bbcluster::kBoltzmann * a.temp);
      m_hi = spectra::planck_rank_bound(x_lo, 1e-10);
    }
    for (int m = 1; m <= m_hi; ++m) labels.push_back(std::to_string(m));
    labels.push_back("total");
  } else {
    labels = {std::to_string(parse_rank_number(a.rank)), "total"};
  }

  std::vector<spectra::SpectrumCurve> curves;
  curves.reserve(labels.size());
  for (const auto& label : labels)
    curves.push_back(
        spectra::sample_curve(a.space, label, a.temp, lo, hi, a.points));

  Table t;
  t.header.push_back(a.space == "nu" ? "nu_hz" : "lambda_m");
  for (const auto& label : labels)
    t.header.push_back(label == "total" || label == "planck" ? label
                                                             : "rank_" + label);
  for (int i = 0; i < a.points; ++i) {
    std::vector<Cell> row;
    row.reserve(curves.size() + 1);
    row.emplace_back(curves.front().abscissa[static_cast<size_t>(i)]);
    for (const auto& curve : curves)
      row.emplace_back(curve.density[static_cast<size_t>(i)]);
    t.rows.push_back(std::move(row));
  }
  emit(std::move(t), common, command);
  return 0;
}

// ---------------------------------------------------------- constants

int run_constants(const CommonArgs& common, const std::string& command) {
  const auto cc = bbcluster::spectra::clusterization_constants();
  // The wavelength comparison is temperature-free; evaluate once at a
  // representative solar-like temperature.
  const auto cmp = bbcluster::spectra::compare_lambda_spectra(6000.0);

  Table t;
  t.header = {"key", "value"};
  t.rows.push_back({std::string("phi"), cc.phi});
  t.rows.push_back({std::string("theta"), cc.theta});
  t.rows.push_back({std::string("zeta3_ratio"), cc.zeta3_ratio});
  t.rows.push_back({std::string("n_fraction"), cc.n_fraction});
  for (size_t m = 0; m < cc.sigma_m.size(); ++m)
    t.rows.push_back(
        {std::string("sigma_") + std::to_string(m + 1), cc.sigma_m[m]});
  t.rows.push_back({std::string("sigma_total"), cc.sigma_total});
  t.rows.push_back({std::string("peak_ratio"), cmp.peak_ratio});
  t.rows.push_back({std::string("peak_offset_rel"), cmp.peak_offset_rel});
  emit(std::move(t), common, command);
  return 0;
}

// ------------------------------------------------------------- sample

struct SampleArgs {
  double tau = 0.0;
  double w = 0.0;
  long samples = 0;
  std::uint64_t seed = 0;
  std::string method = "compound";
};

int run_sample(const SampleArgs& a, const CommonArgs& common,
               const std::string& command) {
  namespace mc = bbcluster::mc;
  if (a.samples < 1) throw UsageError("sample: --samples must be at least 1");

  const mc::SamplerConfig config{a.tau, a.w, a.samples, a.seed};
  const mc::SampleReport report = a.method == "compound"
                                      ? mc::sample_compound(config)
                                      : mc::sample_nbd_direct(config);

  Table t;
  t.header = {"key", "value"};
  t.rows.push_back({std::string("tau"), report.config.tau});
  t.rows.push_back({std::string("w"), report.config.w});
  t.rows.push_back({std::string("n_samples"),
                    static_cast<long long>(report.config.n_samples)});
  t.rows.push_back(
      {std::string("seed"), static_cast<long long>(report.config.seed)});
  t.rows.push_back({std::string("method"), a.method});
  t.rows.push_back({std::string("empirical_mean"), report.empirical_mean});
  t.rows.push_back({std::string("tvd"), report.tvd});
  t.rows.push_back({std::string("chi2_stat"), report.chi2_stat});
  t.rows.push_back(
      {std::string("chi2_dof"), static_cast<long long>(report.chi2_dof)});
  t.rows.push_back({std::string("chi2_p"), report.chi2_p});
  for (long n = 0; n < report.empirical.size(); ++n)
    t.rows.push_back({std::string("pmf_") + std::to_string(n),
                      report.empirical.probs[static_cast<size_t>(n)]});
  for (size_t k = 0; k < report.cluster_counts.size(); ++k)
    t.rows.push_back({std::string("cluster_") + std::to_string(k),
                      static_cast<long long>(report.cluster_counts[k])});
  emit(std::move(t), common, command);
  return 0;
}

// ------------------------------------------------------------- verify

int run_verify(const std::string& level, const CommonArgs& common,
               const std::string& command) {
  namespace verify = bbcluster::verify;
  const auto results = verify::run_acceptance(level == "full");

  Table t;
  t.header = {"id", "name", "status", "detail"};
  for (const auto& r : results) {
    const char* status = r.status == verify::Status::kPass   ? "pass"
                         : r.status == verify::Status::kFail ? "fail"
                                                             : "skip";
    t.rows.push_back(
        {static_cast<long long>(r.id), r.name, std::string(status), r.detail});
  }
  emit(std::move(t), common, command);
  return verify::all_passed(results) ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Photon-cluster statistics of blackbody radiation"};
  app.set_version_flag("--version", std::string(bbcluster::kVersion));
  app.require_subcommand(1);

  PmfArgs pmf;
  CommonArgs pmf_common;
  auto* pmf_cmd = app.add_subcommand(
      "pmf", "Photon, cluster-count, or cluster-size probability tables");
  auto* opt_tau = pmf_cmd->add_option("--tau", pmf.tau, "Phase volume");
  auto* opt_w = pmf_cmd->add_option("--w", pmf.w, "Degeneracy parameter");
  auto* opt_nu = pmf_cmd->add_option("--nu", pmf.nu, "Mode frequency in Hz");
  auto* opt_temp =
      pmf_cmd->add_option("--temp", pmf.temp, "Temperature in kelvin");
  pmf_cmd->add_option("--n-max", pmf.n_max, "Last tabulated index")
      ->required();
  pmf_cmd->add_option("--kind", pmf.kind, "Which law to tabulate")
      ->check(CLI::IsMember({"photons", "clusters", "sizes"}));
  opt_nu->needs(opt_temp);
  add_common(pmf_cmd, &pmf_common);

  SpectrumArgs spec;
  CommonArgs spec_common;
  auto* spec_cmd = app.add_subcommand(
      "spectrum", "Per-rank and total spectral energy densities");
  spec_cmd->add_option("--temp", spec.temp, "Temperature in kelvin")
      ->required();
  spec_cmd->add_option("--rank", spec.rank,
                       "Rank m, or one of: all, total, planck");
  spec_cmd->add_option("--space", spec.space, "Abscissa variable")
      ->check(CLI::IsMember({"nu", "lambda"}));
  spec_cmd->add_option("--points", spec.points, "Grid size");
  auto* opt_min = spec_cmd->add_option("--min", spec.min, "Grid start");
  auto* opt_max = spec_cmd->add_option("--max", spec.max, "Grid end");
  add_common(spec_cmd, &spec_common);

  CommonArgs const_common;
  auto* const_cmd = app.add_subcommand(
      "constants", "Universal constants of the cluster decomposition");
  add_common(const_cmd, &const_common);

  SampleArgs sample;
  CommonArgs sample_common;
  auto* sample_cmd =
      app.add_subcommand("sample", "Monte Carlo sampling report");
  sample_cmd->add_option("--tau", sample.tau, "Phase volume")->required();
  sample_cmd->add_option("--w", sample.w, "Degeneracy parameter")->required();
  sample_cmd->add_option("--samples", sample.samples, "Number of draws")
      ->required();
  sample_cmd->add_option("--seed", sample.seed, "Stream seed");
  sample_cmd->add_option("--method", sample.method, "Sampling route")
      ->check(CLI::IsMember({"compound", "direct"}));
  add_common(sample_cmd, &sample_common);

  std::string level = "fast";
  CommonArgs verify_common;
  auto* verify_cmd =
      app.add_subcommand("verify", "Run the acceptance criteria");
  verify_cmd->add_option("--level", level, "Check depth")
      ->check(CLI::IsMember({"fast", "full"}));
  add_common(verify_cmd, &verify_common);

  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    apply_config_defaults(args);
  } catch (const UsageError& e) {
    std::cerr << "bbcluster: " << e.what() << '\n';
    return 2;
  }

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const std::string command = join_command(argc, argv);
  try {
    if (pmf_cmd->parsed()) {
      pmf.has_tau = opt_tau->count() > 0;
      pmf.has_w = opt_w->count() > 0;
      pmf.has_nu = opt_nu->count() > 0;
      pmf.has_temp = opt_temp->count() > 0;
      return run_pmf(pmf, pmf_common, command);
    }
    if (spec_cmd->parsed()) {
      spec.has_min = opt_min->count() > 0;
      spec.has_max = opt_max->count() > 0;
      return run_spectrum(spec, spec_common, command);
    }
    if (const_cmd->parsed()) return run_constants(const_common, command);
    if (sample_cmd->parsed()) return run_sample(sample, sample_common, command);
    if (verify_cmd->parsed()) return run_verify(level, verify_common, command);
  } catch (const UsageError& e) {
    std::cerr << "bbcluster: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "bbcluster: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
