// Batch front end: loop synthesis, holonomy verification, adiabatic
// simulation, array embedding, and coefficient dumps, with JSON/CSV reports.

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "holoop/adiasim.hpp"
#include "holoop/arrayembed.hpp"
#include "holoop/coeffora.hpp"
#include "holoop/holocheck.hpp"
#include "holoop/loopsynth.hpp"
#include "holoop/matcore.hpp"

using json = nlohmann::ordered_json;
using namespace holoop;

namespace {

constexpr double kDefaultTolClosure = 1e-9;
constexpr double kDefaultTolWilson1Q = 2e-3;
constexpr double kDefaultTolWilson2Q = 5e-3;
constexpr Index kDefaultWilsonSteps = 4096;
constexpr double kStepsPerUnitTime = 100.0;

struct JobConfig {
  std::string command;
  std::string gate = "identity";
  std::string matrix_file;
  std::string variant = "doubled";
  std::vector<int> windings;
  int eigvec = 0;
  Index n_main = 1;
  std::vector<Index> targets;
  std::vector<Index> wilson_steps = {kDefaultWilsonSteps};
  std::vector<double> T_list = {50, 100, 200, 400};
  Index sim_steps = 0;  // 0 = derive as 100*T
  int coeff_terms = 12;
  std::string out_path;
  std::string format = "json";
  bool strict_alpha = false;
  double tol_closure = kDefaultTolClosure;
  double tol_wilson = 0.0;  // 0 = pick by gate arity
  std::string samples_path;
  Index samples_grid = 101;
};

json complex_to_json(const Complex& z) {
  return json{{"re", z.real()}, {"im", z.imag()}};
}

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& rows) {
  if (!rows.is_array() || rows.empty())
    throw Error("matrix file: expected a non-empty array of rows");
  const Index r = static_cast<Index>(rows.size());
  const Index c = static_cast<Index>(rows[0].size());
  ComplexMatrix m(r, c);
  for (Index i = 0; i < r; ++i) {
    for (Index j = 0; j < c; ++j) {
      const json& e = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (e.is_number()) {
        m(i, j) = Complex(e.get<double>(), 0.0);
      } else if (e.is_array() && e.size() == 2) {
        m(i, j) = Complex(e[0].get<double>(), e[1].get<double>());
      } else if (e.is_object()) {
        m(i, j) = Complex(e.value("re", 0.0), e.value("im", 0.0));
      } else {
        throw Error("matrix file: entries must be numbers, [re,im], or {re,im}");
      }
    }
  }
  return m;
}

std::string iso_timestamp() {
  const std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

gatelog::GateSpec load_gate(const JobConfig& cfg) {
  if (!cfg.matrix_file.empty()) {
    std::ifstream in(cfg.matrix_file);
    if (!in) throw Error("cannot open matrix file: " + cfg.matrix_file);
    json j;
    in >> j;
    return gatelog::gate_generator(gatelog::resolve_gate(matrix_from_json(j)));
  }
  return gatelog::gate_generator(gatelog::resolve_gate(cfg.gate), cfg.gate);
}

loopsynth::LoopPlan build_plan(const JobConfig& cfg, const gatelog::GateSpec& gate) {
  const auto policy = cfg.strict_alpha ? loopsynth::AlphaPolicy::bump_winding
                                       : loopsynth::AlphaPolicy::keep_zero;
  if (cfg.variant == "minimal") {
    const int n = cfg.windings.empty() ? 1 : cfg.windings.front();
    return loopsynth::plan_minimal(gate, cfg.eigvec, n, policy);
  }
  if (cfg.variant == "doubled")
    return loopsynth::plan_doubled(gate, cfg.windings, policy);
  throw Error("unknown variant: " + cfg.variant);
}

double wilson_tolerance(const JobConfig& cfg, const gatelog::GateSpec& gate) {
  if (cfg.tol_wilson > 0.0) return cfg.tol_wilson;
  return gate.dim() <= 2 ? kDefaultTolWilson1Q : kDefaultTolWilson2Q;
}

json config_echo(const JobConfig& cfg, double tol_wilson_effective) {
  json j;
  j["command"] = cfg.command;
  j["gate"] = cfg.gate;
  if (!cfg.matrix_file.empty()) j["matrix_file"] = cfg.matrix_file;
  j["variant"] = cfg.variant;
  j["windings"] = cfg.windings;
  j["eigvec"] = cfg.eigvec;
  j["n_main"] = cfg.n_main;
  j["targets"] = cfg.targets;
  j["wilson_steps"] = cfg.wilson_steps;
  j["T_list"] = cfg.T_list;
  j["sim_steps"] = cfg.sim_steps;
  j["strict_alpha"] = cfg.strict_alpha;
  j["tol_closure"] = cfg.tol_closure;
  j["tol_wilson"] = tol_wilson_effective;
  j["format"] = cfg.format;
  return j;
}

json plan_summary(const loopsynth::LoopPlan& plan) {
  json j;
  j["variant"] = plan.variant == loopsynth::Variant::minimal ? "minimal" : "doubled";
  j["dim"] = plan.dim();
  j["k"] = plan.k;
  j["windings"] = plan.windings;
  json lambdas = json::array(), alphas = json::array(), nus = json::array();
  if (plan.variant == loopsynth::Variant::minimal) {
    lambdas.push_back(plan.gate.Lambda(plan.eigvec_index));
  } else {
    for (Index m = 0; m < plan.gate.Lambda.size(); ++m)
      lambdas.push_back(plan.gate.Lambda(m));
  }
  for (Index m = 0; m < plan.alphas.size(); ++m) alphas.push_back(plan.alphas(m));
  for (Index m = 0; m < plan.nus.size(); ++m) nus.push_back(plan.nus(m));
  j["lambda"] = lambdas;
  j["alpha"] = alphas;
  j["nu"] = nus;
  j["collapsed_directions"] = plan.collapsed;
  if (plan.variant == loopsynth::Variant::minimal) {
    j["eigvec_index"] = plan.eigvec_index;
    j["s"] = plan.s_param;
  }
  j["closure_residual"] = loopsynth::closure_residual(plan);
  return j;
}

void export_loop_samples(const loopsynth::LoopPlan& plan, Index grid,
                         const std::string& path) {
  if (grid < 2) throw Error("samples grid must be >= 2");
  std::ofstream out(path);
  if (!out) throw Error("cannot open output file: " + path);
  const Index dim = plan.dim();
  out << "dim," << dim << ",k," << plan.k << "\n";
  char buf[32];
  for (Index g = 0; g < grid; ++g) {
    const double t = static_cast<double>(g) / static_cast<double>(grid - 1);
    const ComplexMatrix h = loopsynth::hamiltonian_at(plan, t);
    std::snprintf(buf, sizeof(buf), "%.17g", t);
    out << buf;
    for (Index i = 0; i < dim; ++i) {
      for (Index j = 0; j < dim; ++j) {
        std::snprintf(buf, sizeof(buf), "%.17g", h(i, j).real());
        out << ',' << buf;
        std::snprintf(buf, sizeof(buf), "%.17g", h(i, j).imag());
        out << ',' << buf;
      }
    }
    out << "\n";
  }
}

void emit(const json& report, const JobConfig& cfg) {
  if (cfg.out_path.empty()) {
    std::cout << report.dump(2) << std::endl;
    return;
  }
  std::ofstream out(cfg.out_path);
  if (!out) throw Error("cannot open output file: " + cfg.out_path);
  out << report.dump(2) << std::endl;
}

void emit_csv(const std::string& text, const JobConfig& cfg) {
  if (cfg.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out_path);
  if (!out) throw Error("cannot open output file: " + cfg.out_path);
  out << text;
}

int run_synth(const JobConfig& cfg, json& report, bool verify, bool simulate) {
  const auto t0 = std::chrono::steady_clock::now();
  const gatelog::GateSpec gate = load_gate(cfg);
  const double tol_wilson = wilson_tolerance(cfg, gate);
  report["config"] = config_echo(cfg, tol_wilson);

  const loopsynth::LoopPlan plan = build_plan(cfg, gate);
  report["plan"] = plan_summary(plan);
  bool pass = report["plan"]["closure_residual"].get<double>() <= cfg.tol_closure;

  if (!cfg.samples_path.empty())
    export_loop_samples(plan, cfg.samples_grid, cfg.samples_path);

  if (verify) {
    json distances = json::array();
    double last_distance = 0.0;
    for (Index n : cfg.wilson_steps) {
      const auto rep = holocheck::wilson_holonomy(plan, n);
      distances.push_back(json{{"steps", n},
                               {"target_distance", rep.target_distance},
                               {"isospectral_residual", rep.isospectral_residual}});
      last_distance = rep.target_distance;
    }
    report["wilson"] = distances;
    if (last_distance > tol_wilson) pass = false;
  }

  if (simulate) {
    json rows = json::array();
    double prev_fidelity = -1.0;
    for (double T : cfg.T_list) {
      const Index steps = cfg.sim_steps > 0
                              ? cfg.sim_steps
                              : static_cast<Index>(kStepsPerUnitTime * T);
      const auto run = adiasim::realized_gate(plan, T, steps);
      rows.push_back(json{{"T", T},
                          {"steps", steps},
                          {"fidelity", run.fidelity},
                          {"leakage", run.leakage}});
      prev_fidelity = run.fidelity;
    }
    (void)prev_fidelity;
    report["simulation"] = rows;
  }

  const auto t1 = std::chrono::steady_clock::now();
  report["wall_clock_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  report["pass"] = pass;

  if (cfg.format == "csv" && simulate) {
    std::ostringstream csv;
    csv << "T,fidelity,leakage\n";
    for (const auto& row : report["simulation"])
      csv << row["T"].get<double>() << ',' << row["fidelity"].get<double>() << ','
          << row["leakage"].get<double>() << '\n';
    emit_csv(csv.str(), cfg);
  } else {
    emit(report, cfg);
  }
  return pass ? 0 : 2;
}

int run_embed(const JobConfig& cfg, json& report) {
  const auto t0 = std::chrono::steady_clock::now();
  const gatelog::GateSpec gate = load_gate(cfg);
  const double tol_wilson = wilson_tolerance(cfg, gate);
  report["config"] = config_echo(cfg, tol_wilson);

  const arrayembed::ArrayLayout layout{cfg.n_main};
  const auto policy = cfg.strict_alpha ? loopsynth::AlphaPolicy::bump_winding
                                       : loopsynth::AlphaPolicy::keep_zero;
  arrayembed::LocalLoop loop;
  if (cfg.targets.size() == 1) {
    loop = arrayembed::embed_single(gate.U, cfg.targets[0], layout, cfg.windings,
                                    policy);
  } else if (cfg.targets.size() == 2) {
    loop = arrayembed::embed_two(gate.U, cfg.targets[0], cfg.targets[1], layout,
                                 cfg.windings, policy);
  } else {
    throw Error("embed: need one or two target qubits");
  }
  report["plan"] = plan_summary(loop.plan);

  const Index steps = cfg.wilson_steps.empty() ? kDefaultWilsonSteps
                                               : cfg.wilson_steps.back();
  const auto rep = arrayembed::verify_local_action(loop, gate.U, steps);
  report["embedding"] = json{{"n_main", cfg.n_main},
                             {"targets", cfg.targets},
                             {"wilson_steps", steps},
                             {"holonomy_distance", rep.holonomy_distance},
                             {"spectator_commutant", rep.spectator_commutant},
                             {"ancilla_offdiag", rep.ancilla_offdiag},
                             {"closure_residual", rep.closure_residual}};
  const bool pass = rep.holonomy_distance <= tol_wilson &&
                    rep.spectator_commutant <= 1e-6 &&
                    rep.ancilla_offdiag <= 1e-9 &&
                    rep.closure_residual <= 1e-8;
  const auto t1 = std::chrono::steady_clock::now();
  report["wall_clock_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  report["pass"] = pass;
  emit(report, cfg);
  return pass ? 0 : 2;
}

int run_coeffs(const JobConfig& cfg) {
  const gatelog::GateSpec gate = load_gate(cfg);
  const double lambda = gate.Lambda(cfg.eigvec);
  const int n = cfg.windings.empty() ? 1 : cfg.windings.front();
  const double a2 = (n * kPi) * (n * kPi) - lambda * lambda;
  const double alpha = std::sqrt(std::max(a2, 0.0));
  const auto tr = coeffora::recursion_coeffs(lambda, alpha, -lambda, cfg.coeff_terms);

  std::ostringstream csv;
  csv << "n,b_re,b_im,c_re,c_im,d_re,d_im\n";
  for (size_t m = 0; m < tr.c.size(); ++m) {
    csv << m << ',' << tr.b[m].real() << ',' << tr.b[m].imag() << ','
        << tr.c[m].real() << ',' << tr.c[m].imag() << ',' << tr.d[m].real() << ','
        << tr.d[m].imag() << '\n';
  }
  emit_csv(csv.str(), cfg);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"holoop: closed-form holonomic gate loops and their verification"};
  app.require_subcommand(1);

  JobConfig cfg;
  std::string windings_arg, targets_arg, wilson_arg, t_arg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--gate", cfg.gate, "named gate (see docs) or use --matrix-file");
    sub->add_option("--matrix-file", cfg.matrix_file, "JSON file with a raw unitary");
    sub->add_option("--variant", cfg.variant, "minimal|doubled")
        ->check(CLI::IsMember({"minimal", "doubled"}));
    sub->add_option("--windings", windings_arg, "comma-separated winding integers");
    sub->add_option("--eigvec", cfg.eigvec, "eigenvector index (minimal variant)");
    sub->add_flag("--strict-alpha", cfg.strict_alpha,
                  "bump windings instead of keeping collapsed alpha=0 directions");
    sub->add_option("--tol-closure", cfg.tol_closure, "closure residual tolerance");
    sub->add_option("--tol-wilson", cfg.tol_wilson, "Wilson distance tolerance");
    sub->add_option("--out", cfg.out_path, "output file (default stdout)");
    sub->add_option("--format", cfg.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  CLI::App* synth = app.add_subcommand("synth", "build a loop and check closure");
  add_common(synth);
  synth->add_option("--samples", cfg.samples_path, "CSV path for H(t) samples");
  synth->add_option("--grid", cfg.samples_grid, "sample grid size");

  CLI::App* verify = app.add_subcommand("verify", "Wilson-line holonomy check");
  add_common(verify);
  verify->add_option("--wilson-steps", wilson_arg, "comma-separated step counts");

  CLI::App* simulate = app.add_subcommand("simulate", "adiabatic Schrodinger sweep");
  add_common(simulate);
  simulate->add_option("--T", t_arg, "comma-separated total evolution times");
  simulate->add_option("--sim-steps", cfg.sim_steps, "integration steps (0=100*T)");

  CLI::App* embed = app.add_subcommand("embed", "embed a local gate into an array");
  add_common(embed);
  embed->add_option("--n-main", cfg.n_main, "number of main qubits");
  embed->add_option("--targets", targets_arg, "comma-separated target qubits");
  embed->add_option("--wilson-steps", wilson_arg, "comma-separated step counts");

  CLI::App* coeffs = app.add_subcommand("coeffs", "recursion coefficient dump (CSV)");
  add_common(coeffs);
  coeffs->add_option("--terms", cfg.coeff_terms, "highest coefficient index");

  CLI::App* full = app.add_subcommand("report", "synth + verify (+ simulate with --T)");
  add_common(full);
  full->add_option("--wilson-steps", wilson_arg, "comma-separated step counts");
  full->add_option("--T", t_arg, "comma-separated total evolution times");
  full->add_option("--sim-steps", cfg.sim_steps, "integration steps (0=100*T)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  auto parse_list = [](const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    return out;
  };

  try {
    if (!windings_arg.empty()) {
      cfg.windings.clear();
      for (double v : parse_list(windings_arg)) cfg.windings.push_back(static_cast<int>(v));
    }
    if (!targets_arg.empty()) {
      cfg.targets.clear();
      for (double v : parse_list(targets_arg)) cfg.targets.push_back(static_cast<Index>(v));
    }
    if (!wilson_arg.empty()) {
      cfg.wilson_steps.clear();
      for (double v : parse_list(wilson_arg))
        cfg.wilson_steps.push_back(static_cast<Index>(v));
    }
    if (!t_arg.empty()) cfg.T_list = parse_list(t_arg);

    json report;
    report["timestamp"] = iso_timestamp();
    if (synth->parsed()) {
      cfg.command = "synth";
      report["command"] = cfg.command;
      return run_synth(cfg, report, false, false);
    }
    if (verify->parsed()) {
      cfg.command = "verify";
      report["command"] = cfg.command;
      return run_synth(cfg, report, true, false);
    }
    if (simulate->parsed()) {
      cfg.command = "simulate";
      report["command"] = cfg.command;
      return run_synth(cfg, report, false, true);
    }
    if (embed->parsed()) {
      cfg.command = "embed";
      report["command"] = cfg.command;
      if (cfg.targets.empty()) cfg.targets = {1};
      return run_embed(cfg, report);
    }
    if (coeffs->parsed()) {
      cfg.command = "coeffs";
      return run_coeffs(cfg);
    }
    cfg.command = "report";
    report["command"] = cfg.command;
    return run_synth(cfg, report, true, !t_arg.empty());
  } catch (const NoConvergenceError& e) {
    std::cerr << "numerical failure: " << e.what() << std::endl;
    return 3;
  } catch (const SingularError& e) {
    std::cerr << "numerical failure: " << e.what() << std::endl;
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 1;
  }
}
