#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qtraj/channel.hpp"
#include "qtraj/rng.hpp"

namespace qtraj {

struct EnvMeas {
  enum class Kind { BasisZ, BasisX, Discrimination, Efficiency, None };
  Kind kind{Kind::BasisZ};
  double q{1.0};  // POVM parameter, unused for bases / none

  static EnvMeas basis_z() { return {Kind::BasisZ, 1.0}; }
  static EnvMeas basis_x() { return {Kind::BasisX, 1.0}; }
  static EnvMeas discrimination(double q) { return {Kind::Discrimination, q}; }
  static EnvMeas efficiency(double q) { return {Kind::Efficiency, q}; }
  static EnvMeas none() { return {Kind::None, 1.0}; }
};

struct NoiseIncrement {
  enum class Kind { JumpDN, Wiener, FFlag, NullResult, None };
  Kind kind{Kind::None};
  double value{0.0};  // dN in {0,1}; dW in {+-sqrt(dt)}; F in {0,1}
};

// A full experiment description: interaction family, environment preparation
// and measurement, initial system state, step count, timestep.
struct Scenario {
  GateFamily family;
  EnvPrep prep;
  EnvMeas meas;
  State init;
  int steps{0};
  double dt{1.0};

  void validate() const;
  // Pure-state trajectories survive only with a pure init, pure preparation
  // and a projective environment basis; everything else runs on densities.
  bool pure_mode() const;
  std::uint64_t hash() const;
};

// The scenario with its induced system-level instrument and channel, built
// once and shared by every trajectory.
struct CompiledScenario {
  Scenario scenario;
  Mat4 gate;
  std::optional<Instrument> instrument;  // empty for meas = none
  KrausChannel channel;
  bool pure_mode{false};

  static CompiledScenario compile(const Scenario& s);
  NoiseIncrement noise_for(const std::string& label) const;
};

struct TrajectoryStep {
  std::string outcome;
  double probability{1.0};
  NoiseIncrement noise;
  State post;
};

struct TrajectoryRecord {
  std::uint64_t seed{0};
  std::uint64_t scenario_hash{0};
  State initial;
  std::vector<TrajectoryStep> steps;

  const State& state_at(std::size_t n) const {  // n = 0 is the initial state
    return n == 0 ? initial : steps[n - 1].post;
  }
  double beta_sq_at(std::size_t n) const;
};

// One exact step: weak gate on state ⊗ prep, environment measurement via the
// conditional instrument (or the unconditional channel when meas = none),
// branch chosen by the injected uniform draw.
std::pair<MeasurementOutcome, NoiseIncrement> step(const State& state,
                                                   const CompiledScenario& cs,
                                                   double u);

// Deterministic function of (scenario, seed); draw k comes from
// uniform01(seed, trajectory_index, k).
TrajectoryRecord run_trajectory(const CompiledScenario& cs, std::uint64_t seed,
                                std::uint64_t trajectory_index = 0);

std::vector<TrajectoryRecord> run_ensemble(const CompiledScenario& cs,
                                           std::uint64_t seed, int trajectories);

// Distance min over global phase: sqrt(|a|^2 + |b|^2 - 2|<a,b>|).
double dist_up_to_phase(const Vec2& a, const Vec2& b);

// Residual between the exact conditioned step and the jump-unraveling
// prediction: branch 0 uses the nonlinear no-jump drift, branch 1 the jump map
// L|psi>/sqrt(<L^dag L>). L must come from lindblad_from_weak.
double jump_sse_residual(const PureQbit& state, const Mat2& l, double dt, int branch);

enum class DiffusionScheme { Unitary, RealNoise };

// Residual between the exact conditioned step and the diffusion predictions:
// Unitary compares the x-basis step against i L |psi> dW; RealNoise compares
// the y_- preparation z-measured step against the real-noise diffusion form.
// Branch 0 pairs with dW = -sqrt(dt), branch 1 with +sqrt(dt).
double diffusion_sse_residual(const PureQbit& state, const Mat2& l, double dt,
                              int branch, DiffusionScheme scheme);

// Exact conditioned density step for partial-information scenarios; returns
// the outcome together with the recorded F value.
std::pair<MeasurementOutcome, double> sme_step(const DensityMatrix& rho,
                                               const CompiledScenario& cs, double u);

// Residual of the exact mixed-prep z-measured step against the stochastic
// master equation increment for the given branch F.
double sme_residual(const DensityMatrix& rho, const GateFamily& family,
                    double w0, double dt, int branch);

}  // namespace qtraj
