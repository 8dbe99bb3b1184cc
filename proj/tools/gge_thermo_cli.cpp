// Command-line front end: load operator bundles, run sweeps and checks, and
// emit CSV/JSON for figures and reports. Exit codes: 0 success, 1 invalid
// input or infeasible problem, 2 numerical non-convergence.

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "gge_thermo/bloch_map.hpp"
#include "gge_thermo/landauer.hpp"
#include "gge_thermo/maxent.hpp"
#include "gge_thermo/parallel.hpp"
#include "gge_thermo/passivity.hpp"
#include "gge_thermo/random.hpp"
#include "gge_thermo/serialization.hpp"
#include "gge_thermo/states.hpp"
#include "gge_thermo/thermal_ops.hpp"

namespace {

using namespace gge_thermo;

constexpr double kInf = std::numeric_limits<double>::infinity();

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  return json::parse(in);  // throws json::parse_error with position info
}

void write_text(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
}

void write_json(const std::string& path, const json& payload) {
  write_text(path, payload.dump(2) + "\n");
}

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> grid(count);
  if (count == 1) {
    grid[0] = lo;
    return grid;
  }
  for (int i = 0; i < count; ++i) grid[i] = lo + (hi - lo) * i / (count - 1);
  return grid;
}

// ---- gge-solve ----------------------------------------------------------

struct GgeSolveArgs {
  std::string input, output;
  double tol = 1e-9;
  int max_iter = 1000;
};

int run_gge_solve(const GgeSolveArgs& args) {
  json bundle = load_json(args.input);
  if (!bundle.contains("charges") || !bundle.contains("targets"))
    throw invalid_operator_error("input bundle needs fields charges, targets");
  std::vector<HermitianOperator> charges;
  for (const auto& cj : bundle.at("charges")) charges.push_back(hermitian_from_json(cj));
  std::vector<double> targets = bundle.at("targets").get<std::vector<double>>();

  GGESolution sol = solve_gge(charges, targets, {args.tol, args.max_iter, 1e3});
  write_json(args.output, to_json(sol));
  if (!sol.converged) {
    std::cerr << "solver did not converge: residual " << sol.residual << " after "
              << sol.iterations << " iterations\n";
    return 2;
  }
  return 0;
}

// ---- erasure-curve ------------------------------------------------------

struct CurveArgs {
  double beta = 1.0, alpha = 1.0;
  double eps_min = 0.0, eps_max = 5.0;
  int eps_count = 100;
  std::string output, format = "csv";
};

int run_erasure_curve(const CurveArgs& args) {
  if (args.eps_count < 1) throw invalid_operator_error("eps-count must be positive");
  std::vector<double> grid = linspace(args.eps_min, args.eps_max, args.eps_count);
  std::vector<TradeoffPoint> curve(grid.size());
  parallel_for(static_cast<long>(grid.size()), [&](long i) {
    ErasureCosts c = analytic_erasure_costs(grid[i], args.beta, args.alpha);
    curve[i] = {grid[i], c.dH, c.dQ,
                args.beta * c.dH + args.alpha * c.dQ - std::log(2.0)};
  });
  if (args.format == "csv") {
    write_text(args.output, tradeoff_curve_csv(curve));
  } else {
    json points = json::array();
    for (const auto& p : curve)
      points.push_back(json{{"epsilon", p.eps},
                            {"dH", p.dH},
                            {"dQ", p.dQ},
                            {"identity_residual", p.identity_residual}});
    write_json(args.output, json{{"beta", args.beta}, {"alpha", args.alpha},
                                 {"points", std::move(points)}});
  }
  return 0;
}

// ---- erasure-simulate ---------------------------------------------------

struct SimulateArgs {
  double eps = 1.0, beta = 1.0, alpha = 1.0, tail_tol = 1e-8;
  int steps = 1000;
  bool summary_only = false;
  std::string output;
};

int run_erasure_simulate(const SimulateArgs& args) {
  ProtocolTrace trace =
      simulate_erasure_protocol(args.eps, args.beta, args.alpha, args.steps, args.tail_tol);
  json payload = to_json(trace);
  if (args.summary_only) payload.erase("steps");
  ErasureCosts exact = analytic_erasure_costs(args.eps, args.beta, args.alpha);
  payload["analytic"] = json{{"dH_tot", exact.dH}, {"dQ_tot", exact.dQ}};
  write_json(args.output, payload);
  return 0;
}

// ---- discrete-cost ------------------------------------------------------

struct DiscreteArgs {
  double alpha = 1.0, hbar = 1.0, tail_tol = 1e-12;
  std::string output;
};

int run_discrete_cost(const DiscreteArgs& args) {
  double value = discrete_spin_bath_cost(args.alpha, args.hbar, args.tail_tol);
  write_json(args.output, json{{"alpha", args.alpha},
                               {"hbar", args.hbar},
                               {"value", value},
                               {"continuous_reference", std::log(2.0) / args.alpha}});
  return 0;
}

// ---- passivity-check ----------------------------------------------------

struct PassivityArgs {
  std::string input, output;
  int copies = 1;
  double tol = 1e-10;
};

int run_passivity_check(const PassivityArgs& args) {
  json bundle = load_json(args.input);
  if (!bundle.contains("state") || !bundle.contains("charge"))
    throw invalid_operator_error("input bundle needs fields state, charge");
  DensityMatrix rho = state_from_json(bundle.at("state"));
  HermitianOperator charge = hermitian_from_json(bundle.at("charge"));

  json payload;
  if (args.copies == 1) {
    ErgotropyResult r = ergotropy(rho, charge, args.tol);
    payload = to_json(r, commutator_norm(rho, charge), 1);
  } else {
    double value = n_copy_ergotropy(rho, charge, args.copies);
    payload = json{{"value", value},
                   {"passive", value <= args.tol},
                   {"commutator_norm", commutator_norm(rho, charge)},
                   {"n", args.copies},
                   {"witness_permutation", json::array()}};
  }
  write_json(args.output, payload);
  return 0;
}

// ---- cp-check -----------------------------------------------------------

struct CpArgs {
  std::string input, output;
  double r = 1.0, epsilon = 0.0, tol = 1e-10;
  int scan_grid = 0;  // 0 disables the boundary scan
};

int run_cp_check(const CpArgs& args) {
  BlochMapSpec map = BlochMapSpec::pancake(args.r, args.epsilon);
  if (!args.input.empty()) {
    json j = load_json(args.input);
    if (!j.contains("linear") || !j.contains("offset"))
      throw invalid_operator_error("map JSON needs fields linear, offset");
    for (int row = 0; row < 3; ++row)
      for (int col = 0; col < 3; ++col)
        map.linear(row, col) = j.at("linear").at(row).at(col).get<double>();
    for (int i = 0; i < 3; ++i) map.offset(i) = j.at("offset").at(i).get<double>();
  }

  ChoiMatrix c = choi(map);
  Eigen::VectorXd ev = c.eigenvalues();
  json payload = {{"completely_positive", c.min_eigenvalue >= -args.tol},
                  {"min_eigenvalue", c.min_eigenvalue},
                  {"choi_eigenvalues", std::vector<double>(ev.data(), ev.data() + ev.size())},
                  {"trace_preservation_residual", c.trace_preservation_residual}};
  if (args.input.empty()) {
    payload["r"] = args.r;
    payload["epsilon"] = args.epsilon;
  }
  if (args.scan_grid > 0) {
    CpBoundary b = cp_boundary_scan(args.epsilon, args.scan_grid);
    payload["scan"] = json{{"r_star", b.r_star}, {"grid_step", b.grid_step}};
  }
  write_json(args.output, payload);
  return 0;
}

// ---- landauer-verify ----------------------------------------------------

struct LandauerArgs {
  std::string input, output;
  int trials = 1000;
  std::uint64_t seed = 0;
};

LandauerReport random_landauer_instance(std::uint64_t seed) {
  Rng rng(seed);
  HermitianOperator h_s = diagonal_operator({0.0, 1.0});
  Matrix v = random_unitary(4, rng);
  Matrix hr_diag = Matrix::Zero(4, 4), qr_diag = Matrix::Zero(4, 4);
  for (int i = 0; i < 4; ++i) {
    hr_diag(i, i) = i;  // commensurate with the system gap
    qr_diag(i, i) = rng.uniform(0.0, 3.0);
  }
  auto rotate = [&](const Matrix& m) {
    Matrix r = v * m * v.adjoint();
    return HermitianOperator(0.5 * (r + r.adjoint().eval()));
  };
  ChargeSet bath({rotate(hr_diag), rotate(qr_diag)},
                 {rng.uniform(0.3, 2.0), rng.uniform(0.3, 2.0)});
  DensityMatrix rho = random_density_matrix(2, rng);
  HermitianOperator total(kron(h_s.matrix(), identity_matrix(4)) +
                          kron(identity_matrix(2), bath.charges()[0].matrix()));
  Matrix u = random_conserving_unitary(total, rng, 1e-6);
  return verify_landauer(rho, bath, u, {2, 4});
}

int run_landauer_verify(const LandauerArgs& args) {
  if (!args.input.empty()) {
    json bundle = load_json(args.input);
    for (const char* field : {"rho_S", "bath", "unitary", "dims"})
      if (!bundle.contains(field))
        throw invalid_operator_error(std::string("input bundle needs field ") + field);
    DensityMatrix rho = state_from_json(bundle.at("rho_S"));
    ChargeSet bath = charge_set_from_json(bundle.at("bath"));
    Matrix u = matrix_from_json(bundle.at("unitary"));
    auto dims = bundle.at("dims").get<std::vector<int>>();
    if (dims.size() != 2) throw invalid_operator_error("dims must have two entries");
    LandauerReport report = verify_landauer(rho, bath, u, {dims[0], dims[1]});
    write_json(args.output, to_json(report));
    return 0;
  }

  if (args.trials < 1) throw invalid_operator_error("trials must be positive");
  std::vector<double> residuals(args.trials), slacks(args.trials);
  parallel_for(args.trials, [&](long i) {
    LandauerReport r =
        random_landauer_instance(args.seed * 0x9E3779B97F4A7C15ull + 0x51ED2701 + i);
    residuals[i] = r.identity_residual;
    slacks[i] = r.slack;
  });
  double max_residual = 0.0, min_slack = kInf;
  for (int i = 0; i < args.trials; ++i) {
    max_residual = std::max(max_residual, residuals[i]);
    min_slack = std::min(min_slack, slacks[i]);
  }
  write_json(args.output, json{{"trials", args.trials},
                               {"seed", args.seed},
                               {"max_identity_residual", max_residual},
                               {"min_slack", min_slack},
                               {"identity_holds", max_residual <= 1e-9},
                               {"bound_holds", min_slack >= -1e-9}});
  return 0;
}

// ---- thermalop-check ----------------------------------------------------

struct ThermalOpArgs {
  std::string input, output;
  double threshold = 1e-9;
};

int run_thermalop_check(const ThermalOpArgs& args) {
  json bundle = load_json(args.input);
  ThermalOpSpec spec = thermal_op_spec_from_json(bundle);
  std::vector<double> residuals = conservation_residuals(spec);
  bool member = true;
  for (double r : residuals) member &= (r <= args.threshold);
  json payload = {{"residuals", residuals},
                  {"threshold", args.threshold},
                  {"is_member", member}};

  if (bundle.contains("state")) {
    DensityMatrix rho = state_from_json(bundle.at("state"));
    DensityMatrix out = apply_thermal_operation(spec, rho);
    payload["output_state"] = to_json(out);
    // Joint-expectation change of each total charge across the dilation.
    DensityMatrix gamma = gge_state(spec.bath_charges);
    DensityMatrix joint = tensor(rho, gamma);
    Matrix evolved = spec.unitary * joint.matrix() * spec.unitary.adjoint();
    json deltas = json::array();
    for (std::size_t i = 0; i < spec.system_charges.size(); ++i) {
      Matrix total =
          kron(spec.system_charges.charges()[i].matrix(),
               identity_matrix(spec.bath_charges.dim())) +
          kron(identity_matrix(spec.system_charges.dim()),
               spec.bath_charges.charges()[i].matrix());
      deltas.push_back(((evolved - joint.matrix()) * total).trace().real());
    }
    payload["total_charge_deltas"] = std::move(deltas);
  }
  write_json(args.output, payload);
  return 0;
}

// ---- demo ---------------------------------------------------------------

struct DemoArgs {
  std::string output_dir = "demo_output";
};

int run_demo(const DemoArgs& args) {
  namespace fs = std::filesystem;
  fs::create_directories(args.output_dir);
  auto path = [&](const std::string& name) {
    return (fs::path(args.output_dir) / name).string();
  };

  // Energy-charge tradeoff curves for the three bath-temperature pairs.
  const std::vector<std::pair<double, double>> pairs = {{1.0, 1.0}, {2.0, 1.0}, {1.0, 2.0}};
  std::vector<double> grid = linspace(0.0, 10.0, 401);
  double max_identity_residual = 0.0;
  for (auto [beta, alpha] : pairs) {
    std::vector<TradeoffPoint> curve(grid.size());
    parallel_for(static_cast<long>(grid.size()), [&, beta = beta, alpha = alpha](long i) {
      ErasureCosts c = analytic_erasure_costs(grid[i], beta, alpha);
      curve[i] = {grid[i], c.dH, c.dQ, beta * c.dH + alpha * c.dQ - std::log(2.0)};
    });
    for (const auto& p : curve)
      max_identity_residual = std::max(max_identity_residual, std::abs(p.identity_residual));
    std::ostringstream name;
    name << "fig2_tradeoff_beta" << beta << "_alpha" << alpha << ".csv";
    write_text(path(name.str()), tradeoff_curve_csv(curve));
  }

  // Discrete vs continuous erasure cost against the spin-bath parameter.
  {
    std::ostringstream csv;
    csv << "alpha,discrete,continuous\n";
    for (int i = 0; i < 300; ++i) {
      double alpha = std::pow(10.0, -2.0 + 3.5 * i / 299.0);  // 0.01 .. ~31.6
      csv << csv_double(alpha) << ',' << csv_double(discrete_spin_bath_cost(alpha)) << ','
          << csv_double(std::log(2.0) / alpha) << '\n';
    }
    write_text(path("fig3_discrete_cost.csv"), csv.str());
  }

  json summary;

  {
    ErasureCosts at_zero = analytic_erasure_costs(0.0, 1.0, 1.0);
    ErasureCosts at_inf = analytic_erasure_costs(kInf, 1.0, 1.0);
    summary["tradeoff"] = {{"max_identity_residual", max_identity_residual},
                           {"endpoint_eps0", {{"dH", at_zero.dH}, {"dQ", at_zero.dQ}}},
                           {"endpoint_eps_inf", {{"dH", at_inf.dH}, {"dQ", at_inf.dQ}}}};
  }

  {
    ChoiMatrix c = choi(BlochMapSpec::pancake());
    Eigen::VectorXd ev = c.eigenvalues();
    CpBoundary b = cp_boundary_scan(0.0, 1000);
    summary["pancake"] = {
        {"choi_eigenvalues", std::vector<double>(ev.data(), ev.data() + ev.size())},
        {"min_eigenvalue", c.min_eigenvalue},
        {"completely_positive", c.min_eigenvalue >= -1e-10},
        {"boundary_r_star_eps0", b.r_star}};
  }

  {
    // Population inversion of the commuting product-weight state.
    Matrix w = Matrix::Zero(2, 2);
    w(0, 0) = std::exp(-3.0);
    w(1, 1) = std::exp(-1.0);
    DensityMatrix inverted(w / w.trace().real());
    summary["passivity_gallery"] = {
        {"inversion_energy_ergotropy", ergotropy(inverted, diagonal_operator({0.0, 1.0})).value},
        {"inversion_combined_ergotropy",
         ergotropy(inverted, diagonal_operator({3.0, 1.0})).value}};

    ChargeSet spin({HermitianOperator(Matrix::Zero(2, 2)), HermitianOperator(spin_x()),
                    HermitianOperator(spin_y()), HermitianOperator(spin_z())},
                   {1.0, 0.0, 0.0, 1.0});
    DensityMatrix aligned = gge_state(spin);
    summary["passivity_gallery"]["spin_lx_ergotropy"] =
        ergotropy(aligned, HermitianOperator(spin_x())).value;
    summary["passivity_gallery"]["spin_lz_ergotropy"] =
        ergotropy(aligned, HermitianOperator(spin_z())).value;
  }

  {
    const int trials = 200;
    std::vector<double> residuals(trials), slacks(trials);
    parallel_for(trials, [&](long i) {
      LandauerReport r = random_landauer_instance(0x9E3779B97F4A7C15ull + 0x51ED2701 + i);
      residuals[i] = r.identity_residual;
      slacks[i] = r.slack;
    });
    double max_residual = 0.0, min_slack = kInf;
    for (int i = 0; i < trials; ++i) {
      max_residual = std::max(max_residual, residuals[i]);
      min_slack = std::min(min_slack, slacks[i]);
    }
    summary["landauer_bound"] = {{"trials", trials},
                                 {"max_identity_residual", max_residual},
                                 {"min_slack", min_slack}};
  }

  summary["discrete_cost"] = {{"alpha_50", discrete_spin_bath_cost(50.0)},
                              {"alpha_1", discrete_spin_bath_cost(1.0)},
                              {"alpha_0p01", discrete_spin_bath_cost(0.01)},
                              {"continuous_at_1", std::log(2.0)}};

  {
    CoherenceInjectionReport demo = coherence_injection_demo();
    summary["coherence_injection"] = {
        {"offdiag_from_middle", demo.offdiag_from_middle},
        {"energy_residual_on_middle", demo.energy_residual_on_middle},
        {"energy_residual_on_gibbs", demo.energy_residual_on_gibbs},
        {"conservation_residual", demo.conservation_residual},
        {"channel_moment_residuals", demo.channel_moment_residuals}};
  }

  {
    GGESolution sol =
        solve_gge({HermitianOperator(pauli_x()), HermitianOperator(pauli_y())}, {0.3, 0.4});
    summary["gge_solver"] = {{"targets", {0.3, 0.4}},
                             {"achieved", sol.achieved},
                             {"residual", sol.residual},
                             {"iterations", sol.iterations}};
  }

  write_json(path("summary.json"), summary);
  std::cout << "demo outputs written to " << args.output_dir << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical toolkit for thermodynamics with multiple conserved charges"};
  app.set_config("--config", "", "Read defaults from an INI/TOML file");
  app.require_subcommand(1);

  GgeSolveArgs gge_args;
  auto* gge = app.add_subcommand(
      "gge-solve", "Solve the maximum-entropy multiplier problem for a charge/target bundle");
  gge->add_option("--input", gge_args.input, "JSON bundle with charges and targets")->required();
  gge->add_option("--output", gge_args.output, "Output path (default stdout)");
  gge->add_option("--tol", gge_args.tol, "Expectation residual tolerance");
  gge->add_option("--max-iter", gge_args.max_iter, "Iteration cap");

  CurveArgs curve_args;
  auto* curve = app.add_subcommand(
      "erasure-curve", "Closed-form energy-charge erasure tradeoff over a swap-level grid");
  curve->add_option("--beta", curve_args.beta, "Inverse temperature of the thermal bath");
  curve->add_option("--alpha", curve_args.alpha, "Inverse temperature of the charge bath");
  curve->add_option("--eps-min", curve_args.eps_min, "Grid start");
  curve->add_option("--eps-max", curve_args.eps_max, "Grid end");
  curve->add_option("--eps-count", curve_args.eps_count, "Grid size");
  curve->add_option("--output", curve_args.output, "Output path (default stdout)");
  curve->add_option("--format", curve_args.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  SimulateArgs sim_args;
  auto* sim = app.add_subcommand("erasure-simulate", "Finite-step two-bath erasure protocol run");
  sim->add_option("--eps", sim_args.eps, "Swap level");
  sim->add_option("--beta", sim_args.beta, "Inverse temperature of the thermal bath");
  sim->add_option("--alpha", sim_args.alpha, "Inverse temperature of the charge bath");
  sim->add_option("--steps", sim_args.steps, "Level-raising increments");
  sim->add_option("--tail-tol", sim_args.tail_tol, "Residual population cutoff");
  sim->add_flag("--summary", sim_args.summary_only, "Omit the per-step ledger");
  sim->add_option("--output", sim_args.output, "Output path (default stdout)");

  DiscreteArgs disc_args;
  auto* disc =
      app.add_subcommand("discrete-cost", "Erasure cost against a spin bath with quantised levels");
  disc->add_option("--alpha", disc_args.alpha, "Spin-bath parameter")->required();
  disc->add_option("--hbar", disc_args.hbar, "Level quantum");
  disc->add_option("--tail-tol", disc_args.tail_tol, "Series tail bound");
  disc->add_option("--output", disc_args.output, "Output path (default stdout)");

  PassivityArgs pass_args;
  auto* pass =
      app.add_subcommand("passivity-check", "Ergotropy and passivity of a state/charge bundle");
  pass->add_option("--input", pass_args.input, "JSON bundle with state and charge")->required();
  pass->add_option("--copies", pass_args.copies, "Number of copies")->check(CLI::PositiveNumber);
  pass->add_option("--tol", pass_args.tol, "Passivity tolerance");
  pass->add_option("--output", pass_args.output, "Output path (default stdout)");

  CpArgs cp_args;
  auto* cp =
      app.add_subcommand("cp-check", "Choi spectrum and complete positivity of a qubit Bloch map");
  cp->add_option("--r", cp_args.r, "Equatorial shrink radius");
  cp->add_option("--epsilon", cp_args.epsilon, "Residual z offset");
  cp->add_option("--input", cp_args.input, "JSON Bloch map {linear, offset} (overrides --r)");
  cp->add_option("--tol", cp_args.tol, "Eigenvalue tolerance");
  cp->add_option("--scan", cp_args.scan_grid, "Boundary scan grid size (0 = off)");
  cp->add_option("--output", cp_args.output, "Output path (default stdout)");

  LandauerArgs land_args;
  auto* land = app.add_subcommand("landauer-verify",
                                  "Entropy-production identity and bound for joint unitaries");
  land->add_option("--input", land_args.input,
                   "JSON bundle {rho_S, bath, unitary, dims}; omit for randomized trials");
  land->add_option("--trials", land_args.trials, "Randomized trial count");
  land->add_option("--seed", land_args.seed, "Random seed");
  land->add_option("--output", land_args.output, "Output path (default stdout)");

  ThermalOpArgs top_args;
  auto* top = app.add_subcommand("thermalop-check", "Conservation residuals of a dilation bundle");
  top->add_option("--input", top_args.input, "JSON bundle {system, bath, unitary[, state]}")
      ->required();
  top->add_option("--threshold", top_args.threshold, "Membership threshold");
  top->add_option("--output", top_args.output, "Output path (default stdout)");

  DemoArgs demo_args;
  auto* demo = app.add_subcommand("demo", "Write figure-ready CSVs and a summary report");
  demo->add_option("--output", demo_args.output_dir, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (gge->parsed()) return run_gge_solve(gge_args);
    if (curve->parsed()) return run_erasure_curve(curve_args);
    if (sim->parsed()) return run_erasure_simulate(sim_args);
    if (disc->parsed()) return run_discrete_cost(disc_args);
    if (pass->parsed()) return run_passivity_check(pass_args);
    if (cp->parsed()) return run_cp_check(cp_args);
    if (land->parsed()) return run_landauer_verify(land_args);
    if (top->parsed()) return run_thermalop_check(top_args);
    if (demo->parsed()) return run_demo(demo_args);
  } catch (const infeasible_targets_error& e) {
    std::cerr << "infeasible targets: " << e.what() << "\n";
    return 1;
  } catch (const degenerate_charges_error& e) {
    std::cerr << "degenerate charges: " << e.what() << "\n";
    return 1;
  } catch (const nonfinite_result_error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 2;
  } catch (const json::parse_error& e) {
    std::cerr << "malformed JSON input: " << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "invalid JSON structure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
