#include "qprobe/cli/commands.hpp"

#include "qprobe/cli/reproduce.hpp"
#include "qprobe/cli/serialize.hpp"
#include "qprobe/cli/state_spec.hpp"
#include "qprobe/random.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

namespace qprobe::cli {

namespace {

struct CommonOptions {
  std::string output;
  bool timings = false;
};

struct Outcome {
  int code = kSuccess;
  json inputs = json::object();
  json results = json::object();
  json verdict;
};

void add_common(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("-o,--output", common.output, "Write the report to this file instead of stdout");
  cmd->add_flag("--timings", common.timings, "Include wall-clock timings in the report");
}

void add_state_params(CLI::App* cmd, StateSpec& spec) {
  cmd->add_option("--d", spec.d, "Local dimension")->check(CLI::PositiveNumber);
  cmd->add_option("--alpha", spec.alpha, "Isotropic mixing parameter");
  cmd->add_option("--f", spec.f, "Werner parameter f = Tr(F rho)");
  cmd->add_option("--v", spec.v, "Werner weight v on the symmetric subspace");
  cmd->add_option("--which", spec.which, "Bell state: phi+, phi-, psi+, psi-");
  cmd->add_option("--k", spec.k, "gamma: local dimension")->check(CLI::PositiveNumber);
  cmd->add_option("--n", spec.n, "gamma: Schmidt-number parameter")->check(CLI::PositiveNumber);
  cmd->add_option("--eps", spec.eps, "gamma: epsilon");
}

std::uint64_t require_seed(const std::optional<std::uint64_t>& seed, const char* why) {
  if (!seed) throw InputError(std::string("--seed is required ") + why);
  return *seed;
}

Outcome diagnose(const StateSpec& spec, std::optional<int> rudolph_trials, std::optional<std::uint64_t> seed) {
  Outcome o;
  o.inputs["state"] = state_spec_json(spec);
  const DensityMatrix rho = build_state(spec);
  o.results["report"] = report_json(full_report(rho));
  if (rudolph_trials) {
    if (*rudolph_trials < 1) throw InputError("--rudolph-trials must be >= 1");
    const std::uint64_t s = require_seed(seed, "with --rudolph-trials");
    o.inputs["rudolph_trials"] = *rudolph_trials;
    o.inputs["seed"] = s;
    o.results["rudolph"] = rudolph_json(rudolph_checks(rho, *rudolph_trials, s));
  }
  return o;
}

Outcome reconstruct(const StateSpec& probe_spec, const ChannelSpec& channel_spec, double noise,
                    std::optional<std::uint64_t> seed) {
  Outcome o;
  if (!(noise >= 0.0) || !std::isfinite(noise)) throw InputError("--noise must be >= 0");
  o.inputs["probe"] = state_spec_json(probe_spec);
  o.inputs["channel"] = channel_spec_json(channel_spec);
  o.inputs["noise"] = noise;
  std::uint64_t s = 0;
  if (noise > 0.0 || channel_is_random(channel_spec)) {
    s = require_seed(seed, "for noisy reconstructions and random channels");
  } else if (seed) {
    s = *seed;
  }
  if (seed) o.inputs["seed"] = s;

  const DensityMatrix probe = build_state(probe_spec);
  if (probe.dim_a() != probe.dim_b()) throw InputError("probe must have dA == dB");
  const KrausChannel ch = build_channel(channel_spec, probe.dim_a(), derive_seed(s, 1));
  o.results["channel"] = channel_json(ch);
  try {
    o.results["reconstruction"] = reconstruction_json(run_aaqpt(ch, probe, noise, derive_seed(s, 0)));
  } catch (const UnfaithfulProbe& e) {
    o.code = kVerdict;
    o.results["probe_report"] = report_json(full_report(probe));
    o.verdict = {{"status", "unfaithful_probe"}, {"sigma_min", real_json(e.sigma_min())},
                 {"sigma_max", real_json(e.sigma_max())}};
  }
  return o;
}

struct OptimizeOverrides {
  std::optional<int> d;
  std::optional<int> max_outer;
  std::optional<double> step;
  std::optional<int> projection_iters;
  std::optional<double> projection_tol;
  std::optional<double> objective_tol;
  std::optional<int> restarts;
  std::optional<std::uint64_t> seed;
  std::string config;
};

SeesawConfig seesaw_config(const OptimizeOverrides& over) {
  SeesawConfig cfg;
  bool have_d = false;
  bool have_seed = false;
  if (!over.config.empty()) {
    json file = load_json_file(over.config);
    const json& in = file.contains("inputs") ? file.at("inputs") : file;
    if (!in.is_object()) throw InputError("config: expected a JSON object");
    try {
      if (in.contains("d")) { cfg.d = in.at("d").get<int>(); have_d = true; }
      if (in.contains("max_outer")) cfg.max_outer = in.at("max_outer").get<int>();
      if (in.contains("step")) cfg.step = in.at("step").get<double>();
      if (in.contains("projection_iters")) cfg.projection_iters = in.at("projection_iters").get<int>();
      if (in.contains("projection_tol")) cfg.projection_tol = in.at("projection_tol").get<double>();
      if (in.contains("objective_tol")) cfg.objective_tol = in.at("objective_tol").get<double>();
      if (in.contains("restarts")) cfg.restarts = in.at("restarts").get<int>();
      if (in.contains("seed")) { cfg.seed = in.at("seed").get<std::uint64_t>(); have_seed = true; }
    } catch (const json::exception& e) {
      throw InputError(std::string("config: ") + e.what());
    }
  }
  if (over.d) { cfg.d = *over.d; have_d = true; }
  if (over.max_outer) cfg.max_outer = *over.max_outer;
  if (over.step) cfg.step = *over.step;
  if (over.projection_iters) cfg.projection_iters = *over.projection_iters;
  if (over.projection_tol) cfg.projection_tol = *over.projection_tol;
  if (over.objective_tol) cfg.objective_tol = *over.objective_tol;
  if (over.restarts) cfg.restarts = *over.restarts;
  if (over.seed) { cfg.seed = *over.seed; have_seed = true; }
  if (!have_d) throw InputError("--d is required");
  if (!have_seed) throw InputError("--seed is required for optimize");
  try {
    cfg.validate();
  } catch (const DomainError& e) {
    throw InputError(e.what());
  }
  if (cfg.step == 0.0) cfg.step = cfg.effective_step();
  return cfg;
}

Outcome optimize_cmd(const OptimizeOverrides& over) {
  const SeesawConfig cfg = seesaw_config(over);
  Outcome o;
  o.inputs = {{"d", cfg.d},
              {"max_outer", cfg.max_outer},
              {"step", cfg.step},
              {"projection_iters", cfg.projection_iters},
              {"projection_tol", cfg.projection_tol},
              {"objective_tol", cfg.objective_tol},
              {"restarts", cfg.restarts},
              {"seed", cfg.seed}};
  const SeesawResult r = optimize(cfg);
  o.results["seesaw"] = seesaw_json(r);
  const DensityMatrix best = DensityMatrix::normalized(r.best_state, {cfg.d, cfg.d}, {1e-12, 1e-7, 1e-12});
  o.results["best_state_report"] = report_json(full_report(best));
  return o;
}

Outcome filter_cmd(const StateSpec& spec, const FilterSpec& filter) {
  Outcome o;
  o.inputs["state"] = state_spec_json(spec);
  o.inputs["filter"] = filter_spec_json(filter);
  const DensityMatrix rho = build_state(spec);
  const FilterPair filters = build_filters(filter, rho.dims());
  if (filters.a().rows() != rho.dim_a() || filters.b().rows() != rho.dim_b()) {
    throw InputError("filter dimensions do not match the state");
  }
  try {
    o.results["analysis"] = filter_analysis_json(filter_analysis(rho, filters));
  } catch (const AnnihilatedState& e) {
    o.code = kVerdict;
    o.verdict = {{"status", "annihilated_state"}, {"weight", real_json(e.weight())}};
  }
  return o;
}

Outcome reproduce_cmd(const ReproduceOptions& opts, std::ostream& err) {
  Outcome o;
  o.inputs = {{"seed", opts.seed}, {"seesaw_restarts", opts.seesaw_restarts}};
  if (opts.seesaw_restarts < 1) throw InputError("--restarts must be >= 1");
  json rows = json::array();
  bool all = true;
  for (const ReproduceRow& row : reproduce_rows(opts)) {
    err << (row.passed ? "[PASS] " : "[FAIL] ") << row.id << ". " << row.title << "\n";
    rows.push_back({{"id", row.id}, {"title", row.title}, {"passed", row.passed}, {"measured", row.measured}});
    all = all && row.passed;
  }
  o.results["rows"] = std::move(rows);
  o.results["faithfulness_table"] = comparison_table();
  o.results["trace_out_demo"] = trace_out_demo();
  o.results["all_passed"] = all;
  o.code = all ? kSuccess : kVerdict;
  return o;
}

int emit(const std::string& command, const Outcome& o, const CommonOptions& common, double seconds,
         std::ostream& out, std::ostream& err) {
  json report{{"schema_version", kSchemaVersion}, {"command", command}, {"inputs", o.inputs}, {"results", o.results}};
  if (!o.verdict.is_null()) report["verdict"] = o.verdict;
  if (common.timings) report["timings"] = {{"wall_seconds", seconds}};
  const std::string text = dump(report);
  if (common.output.empty()) {
    out << text;
  } else {
    std::ofstream file(common.output);
    if (!file) {
      err << "error: cannot write " << common.output << "\n";
      return kUsage;
    }
    file << text;
  }
  return o.code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bipartite-state diagnostics, ancilla-assisted process tomography and PPT see-saw search", "qprobe"};
  app.require_subcommand(1);
  CommonOptions common;

  StateSpec state;
  std::optional<int> rudolph_trials;
  std::optional<std::uint64_t> seed;
  auto* diagnose_cmd = app.add_subcommand("diagnose", "Entanglement and faithfulness report for a state");
  diagnose_cmd->add_option("--state", state.name, "Zoo state name");
  diagnose_cmd->add_option("--file", state.file, "MatrixFile with the state");
  add_state_params(diagnose_cmd, state);
  diagnose_cmd->add_option("--rudolph-trials", rudolph_trials, "Also run the local-operation property checks");
  diagnose_cmd->add_option("--seed", seed, "Seed for randomized checks");
  add_common(diagnose_cmd, common);

  StateSpec probe;
  ChannelSpec channel;
  double noise = 0.0;
  auto* reconstruct_cmd = app.add_subcommand("reconstruct", "Simulate and invert ancilla-assisted tomography");
  reconstruct_cmd->add_option("--probe", probe.name, "Zoo state name of the probe");
  reconstruct_cmd->add_option("--probe-file", probe.file, "MatrixFile with the probe");
  add_state_params(reconstruct_cmd, probe);
  reconstruct_cmd->add_option("--channel", channel.name,
                              "identity, depolarizing, dephasing, random-unitary, random-cptp");
  reconstruct_cmd->add_option("--channel-file", channel.file, "Kraus-list channel file");
  reconstruct_cmd->add_option("--p", channel.p, "Depolarizing/dephasing strength");
  reconstruct_cmd->add_option("--kraus", channel.kraus, "Kraus rank of random-cptp")->check(CLI::PositiveNumber);
  reconstruct_cmd->add_option("--noise", noise, "Frobenius norm of the Gaussian perturbation of the output state");
  reconstruct_cmd->add_option("--seed", seed, "Seed for noise and random channels");
  add_common(reconstruct_cmd, common);

  OptimizeOverrides over;
  auto* optimize_sub = app.add_subcommand("optimize", "See-saw maximization of the CCNR norm over PPT states");
  optimize_sub->add_option("--d", over.d, "Local dimension");
  optimize_sub->add_option("--seed", over.seed, "Seed (required)");
  optimize_sub->add_option("--restarts", over.restarts);
  optimize_sub->add_option("--max-outer", over.max_outer);
  optimize_sub->add_option("--step", over.step);
  optimize_sub->add_option("--projection-iters", over.projection_iters);
  optimize_sub->add_option("--projection-tol", over.projection_tol);
  optimize_sub->add_option("--objective-tol", over.objective_tol);
  optimize_sub->add_option("--config", over.config, "JSON file with overrides (same keys as report inputs)");
  add_common(optimize_sub, common);

  StateSpec filter_state;
  FilterSpec filter;
  auto* filter_sub = app.add_subcommand("filter", "Local filtering before/after analysis");
  filter_sub->add_option("--state", filter_state.name, "Zoo state name");
  filter_sub->add_option("--file", filter_state.file, "MatrixFile with the state");
  add_state_params(filter_sub, filter_state);
  filter_sub->add_option("--filter", filter.name, "werner or identity");
  filter_sub->add_option("--filter-file", filter.file, "JSON file with filters A and B");
  add_common(filter_sub, common);

  ReproduceOptions repro;
  auto* reproduce_sub = app.add_subcommand("reproduce-paper", "Evaluate the full reproduction table");
  reproduce_sub->add_option("--seed", repro.seed, "Seed for randomized rows");
  reproduce_sub->add_option("--restarts", repro.seesaw_restarts, "See-saw restarts per dimension");
  add_common(reproduce_sub, common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  std::string command;
  std::function<Outcome()> body;
  if (diagnose_cmd->parsed()) {
    command = "diagnose";
    body = [&] { return diagnose(state, rudolph_trials, seed); };
  } else if (reconstruct_cmd->parsed()) {
    command = "reconstruct";
    body = [&] { return reconstruct(probe, channel, noise, seed); };
  } else if (optimize_sub->parsed()) {
    command = "optimize";
    body = [&] { return optimize_cmd(over); };
  } else if (filter_sub->parsed()) {
    command = "filter";
    body = [&] { return filter_cmd(filter_state, filter); };
  } else {
    command = "reproduce-paper";
    body = [&] { return reproduce_cmd(repro, err); };
  }

  try {
    const Outcome o = body();
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return emit(command, o, common, seconds, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const InvalidOperator& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
  }
  return kUsage;
}

}  // namespace qprobe::cli
