// Command-line front end: closed-form and brute-force propagation in the
// single-excitation subspace, the two-step W-state protocol, the timing
// surface, and the cross-validation batteries.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wcav/analytic.hpp"
#include "wcav/oracle.hpp"
#include "wcav/protocol.hpp"
#include "wcav/subspace.hpp"
#include "wcav/timing.hpp"
#include "wcav/verify.hpp"

namespace {

using namespace wcav;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitVerification = 2;

// Round-trip-safe double formatting (17 significant digits).
std::string fmt_g(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<double> parse_number_list(const std::string& text,
                                      const std::string& what) {
  std::vector<double> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stod(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CLI::ValidationError(what, "not a number: '" + item + "'");
    }
  }
  return out;
}

SubspaceState parse_initial(const std::string& spec, std::size_t n_atoms) {
  if (spec == "photon") {
    std::vector<Complex> amps(n_atoms + 1, Complex{0.0, 0.0});
    amps.back() = Complex{1.0, 0.0};
    return SubspaceState(std::move(amps));
  }
  if (spec.rfind("excite:", 0) == 0) {
    const std::size_t q = std::stoul(spec.substr(7));
    if (q < 1 || q > n_atoms) {
      throw CLI::ValidationError("--initial", "excited atom index out of range");
    }
    std::vector<Complex> amps(n_atoms + 1, Complex{0.0, 0.0});
    amps[q - 1] = Complex{1.0, 0.0};
    return SubspaceState(std::move(amps));
  }
  if (spec.rfind("w-minus:", 0) == 0) {
    const std::size_t m = std::stoul(spec.substr(8));
    return make_w_state(m, -1, n_atoms);
  }
  if (spec.rfind("list:", 0) == 0) {
    // list:re:im,re:im,... over the N+1 basis slots
    std::vector<Complex> amps;
    std::stringstream ss(spec.substr(5));
    std::string pair;
    while (std::getline(ss, pair, ',')) {
      const std::size_t colon = pair.find(':');
      if (colon == std::string::npos) {
        throw CLI::ValidationError("--initial", "expected re:im pair, got '" + pair + "'");
      }
      amps.emplace_back(std::stod(pair.substr(0, colon)),
                        std::stod(pair.substr(colon + 1)));
    }
    if (amps.size() != n_atoms + 1) {
      throw CLI::ValidationError("--initial", "amplitude list length must be N+1");
    }
    return SubspaceState(std::move(amps));
  }
  throw CLI::ValidationError(
      "--initial", "unknown preset '" + spec +
                       "' (use excite:q, photon, w-minus:M or list:...)");
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw CLI::ValidationError("--out", "cannot open '" + path + "'");
  out << content;
  if (!out) throw CLI::ValidationError("--out", "write failed for '" + path + "'");
}

std::string state_row(double t, const std::vector<Complex>& amps) {
  std::ostringstream row;
  row << fmt_g(t);
  double norm2 = 0.0;
  for (const Complex& a : amps) {
    row << ',' << fmt_g(a.real()) << ',' << fmt_g(a.imag());
    norm2 += std::norm(a);
  }
  row << ',' << fmt_g(std::sqrt(norm2)) << ',' << fmt_g(std::norm(amps.back()));
  return row.str();
}

struct SimulateArgs {
  std::string couplings;
  std::string initial = "excite:1";
  std::string times;
  double t_max = -1.0;
  int steps = -1;
  std::string propagator = "analytic";
  std::string format = "csv";
  std::string out;
  std::size_t photon_cutoff = 2;
};

void check_format(const std::string& format) {
  if (format != "csv" && format != "text") {
    throw CLI::ValidationError("--format", "must be csv or text");
  }
}

int run_simulate(const SimulateArgs& args) {
  check_format(args.format);
  CouplingConfig config(parse_number_list(args.couplings, "--couplings"));
  const std::size_t n = config.size();
  SubspaceState initial = parse_initial(args.initial, n);

  std::vector<double> times = parse_number_list(args.times, "--times");
  if (times.empty() && args.steps >= 0) {
    if (args.t_max < 0.0) {
      throw CLI::ValidationError("--t-max", "required together with --steps");
    }
    for (int j = 0; j <= args.steps; ++j) {
      times.push_back(args.t_max * static_cast<double>(j) /
                      static_cast<double>(std::max(args.steps, 1)));
    }
  }

  const bool csv_format = args.format == "csv";
  std::ostringstream csv;
  if (csv_format) {
    csv << "t";
    for (std::size_t k = 1; k <= n; ++k) csv << ",re_" << k << ",im_" << k;
    csv << ",re_photon,im_photon,norm,photon_prob\n";
  } else {
    csv << "trajectory:\n";
  }

  std::optional<SubspaceHamiltonian> h;
  std::optional<FullSpaceConfig> full_cfg;
  std::optional<FullVector> full_initial;
  if (args.propagator == "oracle") {
    h = build_subspace_hamiltonian(config);
  } else if (args.propagator == "full") {
    full_cfg.emplace(n, args.photon_cutoff);
    full_initial = embed_single_excitation(*full_cfg, initial);
  } else if (args.propagator != "analytic") {
    throw CLI::ValidationError("--propagator", "must be analytic, oracle or full");
  }

  for (double t : times) {
    std::vector<Complex> amps;
    if (full_cfg) {
      FullVector evolved = full_space_propagate(*full_cfg, config, *full_initial, t);
      amps = project_single_excitation(*full_cfg, evolved).amplitudes;
    } else if (h) {
      amps = oracle_propagate(*h, initial, t).amplitudes();
    } else {
      amps = propagate_general(config, initial, t).amplitudes();
    }
    if (csv_format) {
      csv << state_row(t, amps) << "\n";
    } else {
      csv << "  record:\n    t: " << fmt_g(t) << "\n";
      double norm2 = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        csv << "    atom_" << (k + 1) << ": " << fmt_g(amps[k].real()) << " "
            << fmt_g(amps[k].imag()) << "\n";
        norm2 += std::norm(amps[k]);
      }
      norm2 += std::norm(amps[n]);
      csv << "    photon: " << fmt_g(amps[n].real()) << " "
          << fmt_g(amps[n].imag()) << "\n";
      csv << "    norm: " << fmt_g(std::sqrt(norm2)) << "\n";
      csv << "    photon_prob: " << fmt_g(std::norm(amps[n])) << "\n";
    }
  }
  write_output(args.out, csv.str());
  return kExitOk;
}

void append_state(std::ostream& out, const std::string& key,
                  const SubspaceState& state, const std::string& indent) {
  out << indent << key << ":\n";
  for (std::size_t k = 0; k < state.n_atoms(); ++k) {
    out << indent << "  atom_" << (k + 1) << ": " << fmt_g(state[k].real())
        << " " << fmt_g(state[k].imag()) << "\n";
  }
  out << indent << "  photon: " << fmt_g(state.photon().real()) << " "
      << fmt_g(state.photon().imag()) << "\n";
  out << indent << "  norm: " << fmt_g(state.norm()) << "\n";
}

struct ProtocolArgs {
  std::size_t m1 = 0, m2 = 0;
  std::string propagator = "analytic";
  std::string strategy = "auto";
  std::string format = "text";
  double f_small = 1.0;
  std::string out;
};

int run_protocol(const ProtocolArgs& args) {
  check_format(args.format);
  std::optional<Strategy> override;
  if (args.strategy == "group1") {
    override = Strategy::kPrepGroup1;
  } else if (args.strategy == "group2") {
    override = Strategy::kPrepGroup2;
  } else if (args.strategy != "auto") {
    throw CLI::ValidationError("--strategy", "must be auto, group1 or group2");
  }
  PropagatorKind kind;
  if (args.propagator == "analytic") {
    kind = PropagatorKind::kAnalytic;
  } else if (args.propagator == "oracle") {
    kind = PropagatorKind::kOracle;
  } else {
    throw CLI::ValidationError("--propagator", "must be analytic or oracle");
  }

  ProtocolTrace trace =
      run_full_protocol(args.m1, args.m2, kind, args.f_small, override);
  const ProtocolPlan& plan = trace.plan;
  const std::string strategy_name = plan.strategy == Strategy::kPrepGroup1
                                        ? "PREP_GROUP_1"
                                        : "PREP_GROUP_2";

  if (args.format == "csv") {
    // Flat key,value rows; complex amplitudes split into .re/.im.
    std::ostringstream csv;
    csv << "key,value\n";
    csv << "m1," << plan.m1 << "\nm2," << plan.m2 << "\n";
    csv << "strategy," << strategy_name << "\n";
    csv << "prep_size," << plan.prep_size << "\n";
    csv << "ratio," << fmt_g(plan.ratio) << "\n";
    csv << "f_prepared," << fmt_g(plan.f_prepared) << "\n";
    csv << "f_other," << fmt_g(plan.f_other) << "\n";
    csv << "f_aux," << fmt_g(plan.f_aux) << "\n";
    csv << "tau," << fmt_g(plan.tau) << "\n";
    csv << "theta," << fmt_g(plan.theta) << "\n";
    auto emit_state = [&csv](const std::string& key, const SubspaceState& s) {
      for (std::size_t k = 0; k < s.n_atoms(); ++k) {
        csv << key << ".atom_" << (k + 1) << ".re," << fmt_g(s[k].real()) << "\n";
        csv << key << ".atom_" << (k + 1) << ".im," << fmt_g(s[k].imag()) << "\n";
      }
      csv << key << ".photon.re," << fmt_g(s.photon().real()) << "\n";
      csv << key << ".photon.im," << fmt_g(s.photon().imag()) << "\n";
    };
    emit_state("after_step1", trace.after_step1);
    emit_state("prepared_state", trace.prepared_state);
    emit_state("final_state", trace.final_state);
    csv << "fidelity_final," << fmt_g(trace.fidelity_final) << "\n";
    csv << "cavity_reset_step1," << (trace.cavity_reset_step1 ? "true" : "false")
        << "\n";
    csv << "cavity_reset_step2," << (trace.cavity_reset_step2 ? "true" : "false")
        << "\n";
    write_output(args.out, csv.str());
    return kExitOk;
  }

  std::ostringstream out;
  out << "protocol:\n";
  out << "  m1: " << plan.m1 << "\n  m2: " << plan.m2 << "\n";
  out << "  strategy: " << strategy_name << "\n";
  out << "  prep_size: " << plan.prep_size << "\n";
  out << "  ratio: " << fmt_g(plan.ratio) << "\n";
  out << "  f_prepared: " << fmt_g(plan.f_prepared) << "\n";
  out << "  f_other: " << fmt_g(plan.f_other) << "\n";
  out << "  f_aux: " << fmt_g(plan.f_aux) << "\n";
  out << "  tau: " << fmt_g(plan.tau) << "\n";
  out << "  theta: " << fmt_g(plan.theta) << "\n";
  append_state(out, "after_step1", trace.after_step1, "  ");
  append_state(out, "prepared_state", trace.prepared_state, "  ");
  append_state(out, "final_state", trace.final_state, "  ");
  out << "  fidelity_final: " << fmt_g(trace.fidelity_final) << "\n";
  out << "  cavity_reset_step1: " << (trace.cavity_reset_step1 ? "true" : "false")
      << "\n";
  out << "  cavity_reset_step2: " << (trace.cavity_reset_step2 ? "true" : "false")
      << "\n";
  write_output(args.out, out.str());
  return kExitOk;
}

struct Figure1Args {
  std::size_t m1_max = 0, m2_max = 0;
  std::string grid_spec;
  std::string out;
};

int run_figure1(const Figure1Args& args) {
  std::size_t m1_max = args.m1_max, m2_max = args.m2_max;
  if (!args.grid_spec.empty()) {
    const std::size_t x = args.grid_spec.find('x');
    if (x == std::string::npos) {
      throw CLI::ValidationError("--grid", "expected M1xM2, e.g. 25x25");
    }
    try {
      m1_max = std::stoul(args.grid_spec.substr(0, x));
      m2_max = std::stoul(args.grid_spec.substr(x + 1));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--grid", "expected M1xM2, e.g. 25x25");
    }
  } else if (m1_max == 0 && m2_max == 0) {
    throw CLI::ValidationError("figure1", "give grid bounds or --grid M1xM2");
  }
  std::vector<TimingRecord> grid = figure1_grid(m1_max, m2_max);
  std::ostringstream csv;
  csv << "m1,m2,tau_tilde,theta_tilde,total\n";
  for (const TimingRecord& rec : grid) {
    csv << rec.m1 << ',' << rec.m2 << ',' << fmt_g(rec.tau_tilde) << ','
        << fmt_g(rec.theta_tilde) << ',' << fmt_g(rec.total) << "\n";
  }
  write_output(args.out, csv.str());
  return kExitOk;
}

struct VerifyArgs {
  std::uint64_t seed = 42;
  int trials = 100;
  std::size_t n_max = 8;
  double tolerance = 1.0;
  std::string format = "text";
  bool corrupt = false;
  std::string out;
};

int run_verify(const VerifyArgs& args) {
  check_format(args.format);
  if (!(args.tolerance > 0.0)) {
    throw CLI::ValidationError("--tolerance", "must be positive");
  }
  VerifyOptions options;
  options.seed = args.seed;
  options.trials = args.trials;
  options.n_max = args.n_max;
  options.tolerance_scale = args.tolerance;
  options.corrupt_analytic = args.corrupt;
  std::vector<BatteryResult> results = run_verification(options);
  if (args.format == "csv") {
    std::ostringstream csv;
    csv << "battery,cases,max_deviation,tolerance,passed\n";
    for (const BatteryResult& r : results) {
      csv << r.name << ',' << r.cases << ',' << fmt_g(r.max_deviation) << ','
          << fmt_g(r.tolerance) << ',' << (r.passed ? "true" : "false") << "\n";
    }
    write_output(args.out, csv.str());
  } else {
    write_output(args.out, format_report(results));
  }
  return all_passed(results) ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cavity-catalyzed W-state generation simulator"};
  app.require_subcommand(1);

  SimulateArgs sim;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "Propagate a single-excitation state and emit a CSV trajectory");
  simulate->add_option("--couplings", sim.couplings,
                       "Comma-separated per-atom couplings, e.g. 1,2,3")
      ->required();
  simulate->add_option("--initial", sim.initial,
                       "Initial state: excite:q, photon, w-minus:M or "
                       "list:re:im,... (default excite:1)");
  simulate->add_option("--times", sim.times, "Comma-separated sample times");
  simulate->add_option("--t-max", sim.t_max, "End time for --steps sampling");
  simulate->add_option("--steps", sim.steps,
                       "Number of uniform intervals in [0, t-max]");
  simulate->add_option("--propagator", sim.propagator,
                       "analytic (closed form), oracle (eigendecomposition) or "
                       "full (truncated full space)");
  simulate->add_option("--photon-cutoff", sim.photon_cutoff,
                       "Photon cutoff for --propagator full (default 2)");
  simulate->add_option("--format", sim.format, "csv (default) or text");
  simulate->add_option("--out", sim.out, "Output path (default stdout)");

  ProtocolArgs prot;
  CLI::App* protocol = app.add_subcommand(
      "protocol", "Run the two-step W-state protocol and emit the trace");
  protocol->add_option("m1,--m1", prot.m1, "Atoms in group 1")->required();
  protocol->add_option("m2,--m2", prot.m2, "Atoms in group 2")->required();
  protocol->add_option("--propagator", prot.propagator, "analytic or oracle");
  protocol->add_option("--strategy", prot.strategy,
                       "auto (prep the larger group), group1 or group2");
  protocol->add_option("--f-small", prot.f_small,
                       "Reference coupling of the smaller-coupling group");
  protocol->add_option("--format", prot.format, "text (default) or csv");
  protocol->add_option("--out", prot.out, "Output path (default stdout)");

  Figure1Args fig;
  CLI::App* figure1 = app.add_subcommand(
      "figure1", "Emit the dimensionless generation-time grid as CSV");
  figure1->add_option("m1_max", fig.m1_max, "Grid bound for m1");
  figure1->add_option("m2_max", fig.m2_max, "Grid bound for m2");
  figure1->add_option("--grid", fig.grid_spec, "Grid bounds as M1xM2, e.g. 25x25");
  figure1->add_option("--out", fig.out, "Output path (default stdout)");

  VerifyArgs ver;
  CLI::App* verify = app.add_subcommand(
      "verify", "Run the cross-validation batteries (exit 2 on failure)");
  verify->add_option("--seed", ver.seed, "RNG seed (default 42)");
  verify->add_option("--trials", ver.trials, "Random trials per battery")
      ->check(CLI::PositiveNumber);
  verify->add_option("--n-max", ver.n_max, "Largest random atom count")
      ->check(CLI::Range(std::size_t{1}, std::size_t{12}));
  verify->add_option("--tolerance", ver.tolerance,
                     "Scale factor applied to every battery tolerance");
  verify->add_option("--format", ver.format, "text (default) or csv");
  verify->add_flag("--corrupt-analytic", ver.corrupt,
                   "Test hook: perturb the analytic path so the harness fails")
      ->group("");  // hidden
  verify->add_option("--out", ver.out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
    if (simulate->parsed()) return run_simulate(sim);
    if (protocol->parsed()) return run_protocol(prot);
    if (figure1->parsed()) return run_figure1(fig);
    return run_verify(ver);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}
