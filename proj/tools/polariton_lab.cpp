// Command-line front end: figure-style data tables, parameter sweeps and the
// self-check suite for the two-mode / multimode polariton library.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "json.hpp"
#include "polariton/dicke.hpp"
#include "polariton/fock_oracle.hpp"
#include "polariton/microscopic.hpp"
#include "polariton/quench.hpp"
#include "polariton/verification.hpp"

using json = nlohmann::json;
using namespace polariton;
using two_mode::TwoModeParams;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void add_row(std::initializer_list<double> values) {
    rows.emplace_back(values);
  }
};

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

void write_table(const std::string& path, const Table& table,
                 const std::string& format) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open output file: " + path);
  if (format == "csv") {
    for (size_t c = 0; c < table.columns.size(); ++c)
      out << (c ? "," : "") << table.columns[c];
    out << "\n";
    for (const auto& row : table.rows) {
      for (size_t c = 0; c < row.size(); ++c)
        out << (c ? "," : "") << format_number(row[c]);
      out << "\n";
    }
  } else {
    json records = json::array();
    for (const auto& row : table.rows) {
      json rec;
      for (size_t c = 0; c < row.size(); ++c) rec[table.columns[c]] = row[c];
      records.push_back(std::move(rec));
    }
    out << records.dump(2) << "\n";
  }
  if (!out) throw Error("failed writing output file: " + path);
}

struct RunConfig {
  json cfg = json::object();
  std::string out_prefix;
  std::string format = "csv";

  double get(const std::string& key, double fallback) const {
    return cfg.contains(key) ? cfg.at(key).get<double>() : fallback;
  }
  int get_int(const std::string& key, int fallback) const {
    return cfg.contains(key) ? cfg.at(key).get<int>() : fallback;
  }

  std::string path(const std::string& suffix) const {
    const std::string ext = format == "csv" ? ".csv" : ".json";
    return suffix.empty() ? out_prefix + ext : out_prefix + "_" + suffix + ext;
  }
  void emit(const std::string& suffix, const Table& table) const {
    const std::string p = path(suffix);
    write_table(p, table, format);
    std::cout << "wrote " << p << " (" << table.rows.size() << " rows)\n";
  }
};

// Populations of both polaritons with and without the diamagnetic term;
// the coupling-only model can be unstable, which is reported as NaN rows.
void fig1_row(Table& table, double x, double omega_a, double lambda) {
  TwoModeParams trk;
  trk.omega_a = omega_a;
  trk.lambda = lambda;
  trk.D = two_mode::trk_D(lambda, trk.omega_b);
  const auto [nu_trk, nl_trk] = two_mode::populations(trk);

  double nu_bare = kNaN, nl_bare = kNaN;
  try {
    TwoModeParams bare = trk;
    bare.D = 0.0;
    std::tie(nu_bare, nl_bare) = two_mode::populations(bare);
  } catch (const UnstableHamiltonian&) {
  }
  table.add_row({x, nu_trk, nl_trk, nu_bare, nl_bare});
}

int cmd_fig1(const RunConfig& rc) {
  const int steps = rc.get_int("steps", 101);
  const double lambda_max = rc.get("lambda_max", 0.5);

  Table a;
  a.columns = {"lambda", "nU_trk", "nL_trk", "nU_noA2", "nL_noA2"};
  a.add_row({0.0, 0.0, 0.0, 0.0, 0.0});
  for (int i = 1; i < steps; ++i)
    fig1_row(a, lambda_max * i / (steps - 1), 1.0,
             lambda_max * i / (steps - 1));
  rc.emit("a", a);

  Table b;
  b.columns = {"delta", "nU_trk", "nL_trk", "nU_noA2", "nL_noA2"};
  const double lambda = rc.get("lambda", 0.2);
  for (int i = 0; i < steps; ++i) {
    const double delta = -0.5 + 1.0 * i / (steps - 1);
    fig1_row(b, delta, 1.0 + delta, lambda);
  }
  rc.emit("b", b);
  return 0;
}

int cmd_fig2(const RunConfig& rc) {
  TwoModeParams p;
  p.lambda = rc.get("lambda", 0.1);
  p.omega_a = 1.0 + rc.get("delta", 0.0);
  p.D = two_mode::trk_D(p.lambda, p.omega_b);
  p.validate();

  quench::BathSpec bath;
  bath.gamma = rc.get("gamma", 0.01);
  bath.omega_min = rc.get("omega_min", 0.5);
  bath.omega_max = rc.get("omega_max", 1.6);
  bath.grid_size = rc.get_int("grid_size", 2000);
  const double t_final = rc.get("t_final", 25.0 / bath.gamma);

  const auto res = quench::propagate_decomposition(p, bath, t_final);
  const auto amps = quench::asymptotic_amplitudes(res);
  const auto spec = quench::propagate_covariance(res);

  Table modes;
  modes.columns = {"omega", "phiU_sq", "phiL_sq"};
  for (int j = 0; j < res.bath.frequencies.size(); ++j)
    modes.add_row({res.bath.frequencies[j],
                   std::norm(amps(0, j)) / res.bath.delta_omega,
                   std::norm(amps(1, j)) / res.bath.delta_omega});
  rc.emit("modes", modes);

  Table spectrum;
  spectrum.columns = {"omega", "S_omega"};
  for (int j = 0; j < res.bath.frequencies.size(); ++j)
    spectrum.add_row({res.bath.frequencies[j], spec.spectrum[j]});
  rc.emit("spectrum", spectrum);

  std::cout << "total photons " << format_number(spec.total_photons)
            << ", weights " << format_number(spec.weight_upper) << " / "
            << format_number(spec.weight_lower) << "\n";
  return 0;
}

void fig3_row(Table& table, double x, double omega_a, double lambda,
              int cavity_modes, int matter_modes) {
  const auto r = microscopic::compare_multimode_vs_effective(
      omega_a, 1.0, lambda, cavity_modes, matter_modes, 0.0);
  table.add_row({x, r.n_upper_multimode, r.n_lower_multimode,
                 r.n_upper_effective, r.n_lower_effective, r.rel_diff_upper,
                 r.rel_diff_lower});
}

int cmd_fig3(const RunConfig& rc) {
  const int steps = rc.get_int("steps", 11);
  const int kc = rc.get_int("cavity_modes", 25);
  const int lm = rc.get_int("matter_modes", 5);
  const std::vector<std::string> cols = {
      "x",      "nU_multimode", "nL_multimode", "nU_effective",
      "nL_effective", "rel_diff_U",   "rel_diff_L"};

  Table a;
  a.columns = cols;
  a.columns[0] = "lambda";
  for (int i = 0; i < steps; ++i) {
    const double lambda = 0.05 + 0.25 * i / (steps - 1);
    fig3_row(a, lambda, 1.0, lambda, kc, lm);
  }
  rc.emit("a", a);

  Table b;
  b.columns = cols;
  b.columns[0] = "delta";
  const double lambda = rc.get("lambda", 0.2);
  for (int i = 0; i < steps; ++i) {
    const double delta = -0.5 + 1.0 * i / (steps - 1);
    fig3_row(b, delta, 1.0 + delta, lambda, kc, lm);
  }
  rc.emit("b", b);
  return 0;
}

int cmd_fig4(const RunConfig& rc) {
  const int steps = rc.get_int("steps", 41);
  const double lambda = rc.get("lambda", 0.25);
  const double D = two_mode::trk_D(lambda, 1.0);

  auto field = [&](double omega_a, double eta, double u) {
    TwoModeParams p;
    p.omega_a = omega_a;
    p.lambda = lambda;
    p.D = D;
    p.eta = eta;
    p.u = u;
    const auto [nu, nl] = two_mode::populations(p);
    return (nu - nl) / (nu + nl);
  };

  Table a;  // resonant, (u, eta) plane
  a.columns = {"u", "eta", "rel_pop_diff", "u_locus"};
  for (int i = 0; i < steps; ++i) {
    const double eta = D * i / (steps - 1);
    const double u_star = two_mode::equal_population_u(1.0, 1.0, lambda, D, eta);
    for (int j = 0; j < steps; ++j) {
      const double u = -D + 2.0 * D * j / (steps - 1);
      a.add_row({u, eta, field(1.0, eta, u), u_star});
    }
  }
  rc.emit("a", a);

  Table b;  // eta fixed to the cavity-harmonic value, (u, delta) plane
  b.columns = {"u", "delta", "rel_pop_diff", "u_locus"};
  for (int i = 0; i < steps; ++i) {
    const double delta = -0.5 + 1.0 * i / (steps - 1);
    const double omega_a = 1.0 + delta;
    const double eta = 0.23 * lambda * lambda / omega_a;
    const double u_star =
        two_mode::equal_population_u(omega_a, 1.0, lambda, D, eta);
    for (int j = 0; j < steps; ++j) {
      const double u = -D + 2.0 * D * j / (steps - 1);
      b.add_row({u, delta, field(omega_a, eta, u), u_star});
    }
  }
  rc.emit("b", b);
  return 0;
}

int cmd_fig5(const RunConfig& rc) {
  const int steps = rc.get_int("steps", 30);
  dicke::DickeParams base;
  base.n = rc.get_int("n", 5);
  base.cavity_cutoff = rc.get_int("cavity_cutoff", 10);

  Table spectra;
  spectra.columns = {"lambda",    "E_G",       "E_1L",       "E_1U",
                     "E_2L",      "E_1L1U",    "E_2U",       "Eeff_G",
                     "Eeff_1L",   "Eeff_1U",   "Eeff_2L",    "Eeff_1L1U",
                     "Eeff_2U"};
  Table pops;
  pops.columns = {"lambda", "nU_dicke", "nL_dicke", "nU_eff", "nL_eff"};

  for (int i = 0; i < steps; ++i) {
    const double lambda = 0.01 + 0.29 * i / (steps - 1);
    dicke::DickeParams p = base;
    p.lambda = lambda;
    p.D = two_mode::trk_D(lambda, p.omega_b);
    p.eta = 0.23 * lambda * lambda / p.omega_a;
    p.u = two_mode::equal_population_u(p.omega_a, p.omega_b, lambda, p.D, p.eta);
    const auto cmp = dicke::compare_with_effective(p);
    spectra.add_row({lambda, cmp.dicke_energies[0], cmp.dicke_energies[1],
                     cmp.dicke_energies[2], cmp.dicke_energies[3],
                     cmp.dicke_energies[4], cmp.dicke_energies[5],
                     cmp.effective_energies[0], cmp.effective_energies[1],
                     cmp.effective_energies[2], cmp.effective_energies[3],
                     cmp.effective_energies[4], cmp.effective_energies[5]});
    pops.add_row({lambda, cmp.n_upper_dicke, cmp.n_lower_dicke,
                  cmp.n_upper_effective, cmp.n_lower_effective});
  }
  rc.emit("spectra", spectra);
  rc.emit("populations", pops);
  return 0;
}

int cmd_sweep(const RunConfig& rc) {
  if (!rc.cfg.contains("parameter"))
    throw InvalidSelection("sweep: config must name a \"parameter\"");
  const std::string parameter = rc.cfg.at("parameter").get<std::string>();
  const double lo = rc.get("min", 0.0);
  const double hi = rc.get("max", 0.0);
  const int steps = rc.get_int("steps", 0);
  if (steps < 2) throw InvalidSelection("sweep: need steps >= 2");
  if (!(hi > lo)) throw InvalidSelection("sweep: need max > min");

  TwoModeParams base;
  base.omega_a = rc.get("omega_a", 1.0);
  base.omega_b = rc.get("omega_b", 1.0);
  base.lambda = rc.get("lambda", 0.0);
  base.D = rc.get("D", 0.0);
  base.eta = rc.get("eta", 0.0);
  base.u = rc.get("u", 0.0);
  const bool trk = rc.cfg.value("trk", false);

  auto at = [&](double value) {
    TwoModeParams p = base;
    if (parameter == "lambda")
      p.lambda = value;
    else if (parameter == "delta")
      p.omega_a = p.omega_b + value;
    else if (parameter == "D")
      p.D = value;
    else if (parameter == "eta")
      p.eta = value;
    else if (parameter == "u")
      p.u = value;
    else if (parameter == "omega_a")
      p.omega_a = value;
    else
      throw InvalidSelection("sweep: unknown parameter \"" + parameter + "\"");
    if (trk) p.D = two_mode::trk_D(p.lambda, p.omega_b);
    return p;
  };

  // reject unstable points up front, before any table is produced
  for (int i = 0; i < steps; ++i)
    at(lo + (hi - lo) * i / (steps - 1)).validate();

  std::vector<std::vector<double>> rows(steps);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < steps; ++i) {
    const double value = lo + (hi - lo) * i / (steps - 1);
    const TwoModeParams p = at(value);
    const auto [wu, wl] = two_mode::polariton_frequencies(p);
    const auto [nu, nl] = two_mode::populations(p);
    rows[i] = {value, wu, wl, nu, nl};
  }

  Table table;
  table.columns = {"value", "omega_U", "omega_L", "n_U", "n_L"};
  table.rows = std::move(rows);
  rc.emit("", table);
  return 0;
}

int cmd_verify() {
  const auto checks = verification::run_all_checks();
  bool ok = true;
  for (const auto& c : checks) {
    std::cout << (c.passed ? "[ ok ] " : "[FAIL] ") << c.name << ": "
              << c.detail << "\n";
    ok = ok && c.passed;
  }
  std::cout << (ok ? "all checks passed\n" : "some checks FAILED\n");
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quadratic light-matter models: polariton populations, quench "
               "spectra and finite-size comparisons"};
  app.require_subcommand(0, 1);
  std::string config_path, out_path, format;
  int threads = 0;
  app.add_option("--config", config_path, "JSON run configuration");
  app.add_option("--out", out_path, "output path prefix");
  app.add_option("--format", format, "output format: csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--threads", threads, "worker thread count");
  for (const char* name : {"fig1", "fig2", "fig3", "fig4", "fig5", "sweep"})
    app.add_subcommand(name, std::string("emit the ") + name + " data tables")
        ->fallthrough();  // global flags may follow the subcommand name
  app.add_subcommand("verify", "run the invariant and oracle suite")
      ->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    RunConfig rc;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw ConfigNotFound("config file not found: " + config_path);
      try {
        in >> rc.cfg;
      } catch (const json::exception& e) {
        throw Error("config parse error: " + std::string(e.what()));
      }
    }

    std::string command;
    if (!app.get_subcommands().empty())
      command = app.get_subcommands().front()->get_name();
    else if (rc.cfg.contains("command"))
      command = rc.cfg.at("command").get<std::string>();
    if (command.empty())
      throw InvalidSelection(
          "no command given (subcommand or \"command\" config key)");

    // flags override config keys
    rc.out_prefix = !out_path.empty()
                        ? out_path
                        : rc.cfg.value("out", command);
    rc.format = !format.empty() ? format : rc.cfg.value("format", "csv");
    if (rc.format != "csv" && rc.format != "json")
      throw InvalidSelection("format must be csv or json");

    int nthreads = threads;
    if (nthreads <= 0)
      if (const char* env = std::getenv("POLARITON_LAB_THREADS"))
        nthreads = std::atoi(env);
#ifdef _OPENMP
    if (nthreads > 0) omp_set_num_threads(nthreads);
#endif

    if (command == "fig1") return cmd_fig1(rc);
    if (command == "fig2") return cmd_fig2(rc);
    if (command == "fig3") return cmd_fig3(rc);
    if (command == "fig4") return cmd_fig4(rc);
    if (command == "fig5") return cmd_fig5(rc);
    if (command == "sweep") return cmd_sweep(rc);
    if (command == "verify") return cmd_verify();
    throw InvalidSelection("unknown command: " + command);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
