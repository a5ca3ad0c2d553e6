#include "qtraj/cli.hpp"

#include <cmath>
#include <iostream>

#include <CLI11.hpp>

#include "qtraj/scenario_io.hpp"

namespace qtraj::cli {

namespace {

constexpr const char* VERSION = "qtraj 0.1.0";

int guard(const std::function<void()>& body) {
  try {
    body();
    return EXIT_OK;
  } catch (const ParseError& e) {
    std::cerr << "parse error at key " << e.key << ": " << e.what() << "\n";
    return EXIT_PARSE;
  } catch (const BudgetExceeded& e) {
    std::cerr << "enumeration budget exceeded: " << e.what() << "\n";
    return EXIT_BUDGET;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return EXIT_IO;
  } catch (const std::invalid_argument& e) {  // DomainError and friends
    std::cerr << "domain error: " << e.what() << "\n";
    return EXIT_DOMAIN;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return EXIT_DOMAIN;
  }
}

ScenarioFile load_with_overrides(const std::string& path, const Overrides& ov) {
  ScenarioFile sf = load_scenario(path);
  if (ov.seed) sf.seed = *ov.seed;
  if (ov.trajectories) {
    if (*ov.trajectories < 1)
      throw DomainError("trajectory override must be a positive count");
    sf.trajectories = *ov.trajectories;
  }
  return sf;
}

struct FigurePreset {
  const char* name;
  GateKind kind;
  bool y_minus_prep;
  double theta;
  int steps;
  int per_init;
  std::vector<double> init_beta_sq;
  std::uint64_t seed;
};

// Pinned figure bundles (the captions state no numeric parameters).
const FigurePreset FIG3A{"fig3a", GateKind::CNOT, false, 0.1, 200, 10,
                         {0.2, 0.4, 0.6, 0.8}, 20250101ULL};
const FigurePreset FIG3B{"fig3b", GateKind::SWAP, false, 0.1, 200, 10,
                         {0.2, 0.4, 0.6, 0.8}, 20250101ULL};
const FigurePreset FIG4{"fig4", GateKind::CNOT, true, 0.1, 1500, 7,
                        {0.2, 0.5, 0.8}, 20250101ULL};

void emit_figure(const FigurePreset& preset, const std::string& out_path,
                 std::uint64_t seed) {
  std::ostringstream out;
  out << "# " << preset.name << ": "
      << (preset.kind == GateKind::CNOT ? "cnot" : "swap")
      << " theta=" << format_double(preset.theta)
      << " env_prep=" << (preset.y_minus_prep ? "y_minus" : "zero")
      << " env_meas=z steps=" << preset.steps << " seed=" << seed << "\n";
  out << "# trajectories: " << preset.per_init << " per initial beta_sq in {";
  for (std::size_t i = 0; i < preset.init_beta_sq.size(); ++i)
    out << (i ? ", " : "") << format_double(preset.init_beta_sq[i]);
  out << "}\n";
  out << "traj,step,beta_sq\n";

  int traj_id = 0;
  for (const double bsq : preset.init_beta_sq) {
    Scenario s;
    s.family = GateFamily::make(preset.kind, preset.theta);
    s.prep = preset.y_minus_prep ? EnvPrep::y_minus() : EnvPrep::zero();
    s.meas = EnvMeas::basis_z();
    s.init = PureQbit::make(std::sqrt(1.0 - bsq), std::sqrt(bsq));
    s.steps = preset.steps;
    const CompiledScenario cs = CompiledScenario::compile(s);
    for (int t = 0; t < preset.per_init; ++t, ++traj_id) {
      const TrajectoryRecord rec =
          run_trajectory(cs, seed, static_cast<std::uint64_t>(traj_id));
      for (int k = 0; k <= preset.steps; ++k)
        out << traj_id << ',' << k << ','
            << format_double(rec.beta_sq_at(static_cast<std::size_t>(k))) << "\n";
    }
  }
  write_file_atomic(out_path, out.str());
}

}  // namespace

int cmd_run(const std::string& scenario_path, const std::string& out_path,
            const Overrides& ov) {
  return guard([&] {
    const ScenarioFile sf = load_with_overrides(scenario_path, ov);
    const CompiledScenario cs = CompiledScenario::compile(sf.scenario);
    const auto records = run_ensemble(cs, sf.seed, sf.trajectories);
    write_file_atomic(out_path, trajectory_csv(records, cs.pure_mode));
  });
}

int cmd_enumerate(const std::string& scenario_path, const std::string& out_path,
                  const Overrides& ov) {
  return guard([&] {
    const ScenarioFile sf = load_with_overrides(scenario_path, ov);
    const CompiledScenario cs = CompiledScenario::compile(sf.scenario);
    const ExactMixture mix = enumerate_outcomes(cs, sf.scenario.steps);

    const DensityMatrix mean = mix.mean();
    const auto iterated = iterate_channel(to_density(sf.scenario.init), cs.channel,
                                          sf.scenario.steps);
    const double dev = max_entry_distance(mean, iterated.back());

    double prob_sum = 0.0;
    ordered_json branches = ordered_json::array();
    for (const auto& b : mix.branches) {
      prob_sum += b.probability;
      branches.push_back(ordered_json{{"sequence", b.sequence},
                                      {"probability", b.probability},
                                      {"state", state_to_json(b.state)}});
    }

    ordered_json j;
    j["scenario"] = scenario_to_json(sf);
    j["branch_count"] = mix.branches.size();
    j["probability_sum"] = prob_sum;
    j["pruned_mass"] = mix.pruned_mass;
    j["mean_state"] = state_to_json(State{mean});
    j["max_dev_from_iterate"] = dev;
    j["branches"] = std::move(branches);
    write_file_atomic(out_path, j.dump(2) + "\n");
  });
}

int cmd_figure(const std::string& name, const std::string& out_path,
               std::optional<std::uint64_t> seed) {
  const FigurePreset* preset = nullptr;
  if (name == "fig3a") preset = &FIG3A;
  else if (name == "fig3b") preset = &FIG3B;
  else if (name == "fig4") preset = &FIG4;
  if (preset == nullptr) {
    std::cerr << "parse error: unknown figure name \"" << name
              << "\" (expected fig3a, fig3b or fig4)\n";
    return EXIT_PARSE;
  }
  return guard([&] { emit_figure(*preset, out_path, seed.value_or(preset->seed)); });
}

int cmd_info(const std::string& scenario_path, const std::string& out_path,
             const Overrides& ov) {
  return guard([&] {
    const ScenarioFile sf = load_with_overrides(scenario_path, ov);
    const CompiledScenario cs = CompiledScenario::compile(sf.scenario);
    const auto mean_states = iterate_channel(to_density(sf.scenario.init), cs.channel,
                                             sf.scenario.steps);

    ordered_json report = ordered_json::array();
    for (int k = 0; k <= sf.scenario.steps; ++k) {
      const DensityMatrix& rho = mean_states[static_cast<std::size_t>(k)];
      ordered_json row;
      row["step"] = k;
      row["mean_state"] = state_to_json(State{rho});
      row["entropy"] = von_neumann_entropy(rho);
      if (k < sf.scenario.steps && cs.instrument.has_value()) {
        const InfoGain ig = info_gain(rho, *cs.instrument);
        row["delta_s"] = ig.delta_s;
        row["s_meas"] = ig.s_meas;
        if (ig.ratio_finite)
          row["ratio"] = ig.ratio;
        else
          row["ratio"] = nullptr;  // flagged infinite: delta_s below 1e-15
      }
      report.push_back(std::move(row));
    }

    ordered_json j;
    j["scenario"] = scenario_to_json(sf);
    j["report"] = std::move(report);
    write_file_atomic(out_path, j.dump(2) + "\n");
  });
}

int run(int argc, const char* const* argv) {
  CLI::App app{"discrete q-bit system/environment trajectory simulator"};
  app.set_version_flag("--version", VERSION);
  app.require_subcommand(1);

  std::string scenario_path, out_path, figure_name;
  std::uint64_t seed_flag = 0;
  int traj_flag = 0;
  bool seed_set = false, traj_set = false;

  auto add_common = [&](CLI::App* sub, bool with_scenario) {
    if (with_scenario)
      sub->add_option("--scenario", scenario_path, "scenario JSON path")->required();
    sub->add_option("--out", out_path, "output path")->required();
    sub->add_option("--seed", seed_flag, "override the scenario seed")
        ->each([&](const std::string&) { seed_set = true; });
    return sub;
  };

  auto* c_run = add_common(app.add_subcommand("run", "run a trajectory ensemble, emit CSV"), true);
  c_run->add_option("--trajectories", traj_flag, "override the trajectory count")
      ->each([&](const std::string&) { traj_set = true; });
  auto* c_enum = add_common(
      app.add_subcommand("enumerate", "enumerate all outcome sequences, emit JSON"), true);
  auto* c_fig = app.add_subcommand("figure", "emit a preset figure dataset");
  c_fig->add_option("name", figure_name, "fig3a | fig3b | fig4")->required();
  c_fig->add_option("--out", out_path, "output path")->required();
  c_fig->add_option("--seed", seed_flag, "override the preset seed")
      ->each([&](const std::string&) { seed_set = true; });
  auto* c_info = add_common(
      app.add_subcommand("info", "per-step entropy and information report, emit JSON"), true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return EXIT_PARSE;
  }

  Overrides ov;
  if (seed_set) ov.seed = seed_flag;
  if (traj_set) ov.trajectories = traj_flag;

  if (c_run->parsed()) return cmd_run(scenario_path, out_path, ov);
  if (c_enum->parsed()) return cmd_enumerate(scenario_path, out_path, ov);
  if (c_fig->parsed())
    return cmd_figure(figure_name, out_path,
                      seed_set ? std::optional<std::uint64_t>{seed_flag} : std::nullopt);
  if (c_info->parsed()) return cmd_info(scenario_path, out_path, ov);
  return EXIT_PARSE;
}

}  // namespace qtraj::cli
