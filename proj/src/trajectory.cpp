#include "qtraj/trajectory.hpp"

#include <bit>
#include <cmath>

namespace qtraj {

namespace {

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t x) {
  for (int i = 0; i < 8; ++i) {
    h ^= (x >> (8 * i)) & 0xFFu;
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint64_t fnv1a(std::uint64_t h, double d) {
  return fnv1a(h, std::bit_cast<std::uint64_t>(d));
}

Instrument env_basis_z() {
  Mat2 p0, p1;
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;
  return Instrument::make({{"0", {p0}}, {"1", {p1}}});
}

Instrument env_basis_x() {
  Mat2 pp, pm;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      pp(i, j) = 0.5;
      pm(i, j) = (i == j) ? 0.5 : -0.5;
    }
  return Instrument::make({{"+", {pp}}, {"-", {pm}}});
}

bool prep_is_z_eigenstate(const EnvPrep& prep) {
  if (prep.kind != EnvPrep::Kind::Pure) return false;
  return std::abs(prep.state[0]) < 1e-12 || std::abs(prep.state[1]) < 1e-12;
}

}  // namespace

void Scenario::validate() const {
  if (steps < 0) throw DomainError("steps must be nonnegative");
  if (!(dt > 0.0)) throw DomainError("dt must be positive");
  GateFamily::make(family.kind, family.theta);
  if (std::holds_alternative<PureQbit>(init)) {
    const auto& psi = std::get<PureQbit>(init);
    PureQbit::make(psi.alpha, psi.beta);
  } else {
    std::get<DensityMatrix>(init).validate();
  }
}

bool Scenario::pure_mode() const {
  if (!std::holds_alternative<PureQbit>(init)) return false;
  if (prep.kind != EnvPrep::Kind::Pure) return false;
  return meas.kind == EnvMeas::Kind::BasisZ || meas.kind == EnvMeas::Kind::BasisX;
}

std::uint64_t Scenario::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  h = fnv1a(h, static_cast<std::uint64_t>(family.kind));
  h = fnv1a(h, family.theta);
  h = fnv1a(h, static_cast<std::uint64_t>(prep.kind));
  for (const auto& x : prep.state.a) {
    h = fnv1a(h, x.real());
    h = fnv1a(h, x.imag());
  }
  h = fnv1a(h, prep.w0);
  h = fnv1a(h, prep.w1);
  h = fnv1a(h, static_cast<std::uint64_t>(meas.kind));
  h = fnv1a(h, meas.q);
  if (std::holds_alternative<PureQbit>(init)) {
    const auto& psi = std::get<PureQbit>(init);
    h = fnv1a(h, std::uint64_t{1});
    h = fnv1a(h, psi.alpha.real());
    h = fnv1a(h, psi.alpha.imag());
    h = fnv1a(h, psi.beta.real());
    h = fnv1a(h, psi.beta.imag());
  } else {
    const auto& rho = std::get<DensityMatrix>(init);
    h = fnv1a(h, std::uint64_t{2});
    for (const auto& x : rho.m.a) {
      h = fnv1a(h, x.real());
      h = fnv1a(h, x.imag());
    }
  }
  h = fnv1a(h, static_cast<std::uint64_t>(steps));
  h = fnv1a(h, dt);
  return h;
}

CompiledScenario CompiledScenario::compile(const Scenario& s) {
  s.validate();
  CompiledScenario cs;
  cs.scenario = s;
  cs.gate = weak_gate(s.family);
  switch (s.meas.kind) {
    case EnvMeas::Kind::BasisZ:
      cs.instrument = conditional_instrument(cs.gate, s.prep, env_basis_z());
      break;
    case EnvMeas::Kind::BasisX:
      cs.instrument = conditional_instrument(cs.gate, s.prep, env_basis_x());
      break;
    case EnvMeas::Kind::Discrimination:
      cs.instrument = conditional_instrument(cs.gate, s.prep, discrimination_povm(s.meas.q));
      break;
    case EnvMeas::Kind::Efficiency:
      cs.instrument = conditional_instrument(cs.gate, s.prep, efficiency_povm(s.meas.q));
      break;
    case EnvMeas::Kind::None:
      break;
  }
  cs.channel = unconditional_channel(cs.gate, s.prep);
  cs.pure_mode = s.pure_mode();
  return cs;
}

NoiseIncrement CompiledScenario::noise_for(const std::string& label) const {
  const double sqrt_dt = std::sqrt(scenario.dt);
  switch (scenario.meas.kind) {
    case EnvMeas::Kind::None:
      return {NoiseIncrement::Kind::None, 0.0};
    case EnvMeas::Kind::BasisX:
      // "+" rotates the relative phase by -theta, pairing with dW = -sqrt(dt).
      return {NoiseIncrement::Kind::Wiener, label == "+" ? -sqrt_dt : +sqrt_dt};
    case EnvMeas::Kind::BasisZ:
      if (scenario.prep.kind == EnvPrep::Kind::Diagonal)
        return {NoiseIncrement::Kind::FFlag, label == "0" ? 0.0 : 1.0};
      if (prep_is_z_eigenstate(scenario.prep))
        return {NoiseIncrement::Kind::JumpDN, label == "0" ? 0.0 : 1.0};
      // real-noise diffusion: outcome 0 pairs with -sqrt(dt)
      return {NoiseIncrement::Kind::Wiener, label == "0" ? -sqrt_dt : +sqrt_dt};
    case EnvMeas::Kind::Discrimination:
      return {NoiseIncrement::Kind::FFlag, label == "0" ? 0.0 : 1.0};
    case EnvMeas::Kind::Efficiency:
      if (label == "2") return {NoiseIncrement::Kind::NullResult, 0.0};
      return {NoiseIncrement::Kind::FFlag, label == "0" ? 0.0 : 1.0};
  }
  return {NoiseIncrement::Kind::None, 0.0};
}

std::pair<MeasurementOutcome, NoiseIncrement> step(const State& state,
                                                   const CompiledScenario& cs,
                                                   double u) {
  if (!cs.instrument.has_value()) {
    MeasurementOutcome out;
    out.label = "-";
    out.probability = 1.0;
    out.post_state = apply_channel(to_density(state), cs.channel);
    return {out, cs.noise_for(out.label)};
  }
  MeasurementOutcome out = cs.instrument->apply(state, u);
  return {out, cs.noise_for(out.label)};
}

double TrajectoryRecord::beta_sq_at(std::size_t n) const {
  const State& s = state_at(n);
  if (std::holds_alternative<PureQbit>(s)) return std::get<PureQbit>(s).beta_sq();
  return std::get<DensityMatrix>(s).population1();
}

TrajectoryRecord run_trajectory(const CompiledScenario& cs, std::uint64_t seed,
                                std::uint64_t trajectory_index) {
  TrajectoryRecord rec;
  rec.seed = seed;
  rec.scenario_hash = cs.scenario.hash();
  // density-matrix promotion for every non-pure-mode scenario
  rec.initial = cs.pure_mode ? cs.scenario.init : State{to_density(cs.scenario.init)};
  rec.steps.reserve(static_cast<std::size_t>(cs.scenario.steps));

  State current = rec.initial;
  for (int k = 0; k < cs.scenario.steps; ++k) {
    const double u = uniform01(seed, trajectory_index, static_cast<std::uint64_t>(k));
    auto [outcome, noise] = step(current, cs, u);
    current = outcome.post_state;
    rec.steps.push_back({outcome.label, outcome.probability, noise, current});
  }
  return rec;
}

std::vector<TrajectoryRecord> run_ensemble(const CompiledScenario& cs,
                                           std::uint64_t seed, int trajectories) {
  std::vector<TrajectoryRecord> out;
  out.reserve(static_cast<std::size_t>(trajectories));
  for (int t = 0; t < trajectories; ++t)
    out.push_back(run_trajectory(cs, seed, static_cast<std::uint64_t>(t)));
  return out;
}

double dist_up_to_phase(const Vec2& a, const Vec2& b) {
  // explicit minimizing phase keeps full precision for nearly equal vectors
  const c64 ov = inner(a, b);
  const c64 phase = std::abs(ov) > 1e-300 ? std::conj(ov) / std::abs(ov) : c64{1.0, 0.0};
  return (a - phase * b).norm();
}

namespace {

// Recover (kind, theta) from a Lindblad operator produced by lindblad_from_weak.
GateFamily family_from_lindblad(const Mat2& l, double dt) {
  const double diag = std::abs(l(1, 1));
  const double off = std::abs(l(0, 1));
  const double rest = std::abs(l(0, 0)) + std::abs(l(1, 0));
  if (rest > 1e-12 || (diag > 1e-12 && off > 1e-12))
    throw DomainError("Lindblad operator is not of the weak CNOT/SWAP form");
  const double rate = std::max(diag, off);
  if (rate <= 0.0) throw DomainError("Lindblad operator vanishes");
  const double theta = rate * std::sqrt(dt);
  return GateFamily::make(diag > off ? GateKind::CNOT : GateKind::SWAP, theta);
}

Vec2 exact_branch_post(const GateFamily& family, const EnvPrep& prep,
                       const Instrument& env_inst, const PureQbit& psi, int branch,
                       double* prob_out) {
  const Instrument inst = conditional_instrument(weak_gate(family), prep, env_inst);
  const Mat2& a = inst.outcomes[static_cast<std::size_t>(branch)].ops[0];
  Vec2 w = a * psi.vec();
  const double p = w.norm_sq();
  if (prob_out) *prob_out = p;
  if (p < tol::zero_probability)
    throw ZeroProbability("conditioned branch has vanishing probability");
  return (1.0 / std::sqrt(p)) * w;
}

}  // namespace

double jump_sse_residual(const PureQbit& state, const Mat2& l, double dt, int branch) {
  if (branch != 0 && branch != 1) throw DomainError("branch must be 0 or 1");
  const GateFamily family = family_from_lindblad(l, dt);
  const Vec2 psi = state.vec();
  const Mat2 ldl = l.dagger() * l;
  const double exp_ldl = inner(psi, ldl * psi).real();

  Vec2 predicted;
  if (branch == 1) {
    if (exp_ldl < tol::zero_probability)
      throw DomainError("jump branch has <L^dag L> ~ 0");
    predicted = (1.0 / std::sqrt(exp_ldl)) * (l * psi);
  } else {
    const Vec2 drift = (l.dagger() * l) * psi;
    predicted = psi - c64{0.5 * dt, 0.0} * (drift - c64{exp_ldl, 0.0} * psi);
  }
  const Vec2 exact = exact_branch_post(family, EnvPrep::zero(), env_basis_z(), state,
                                       branch, nullptr);
  return dist_up_to_phase(exact, predicted);
}

double diffusion_sse_residual(const PureQbit& state, const Mat2& l, double dt,
                              int branch, DiffusionScheme scheme) {
  if (branch != 0 && branch != 1) throw DomainError("branch must be 0 or 1");
  const GateFamily family = family_from_lindblad(l, dt);
  if (family.kind != GateKind::CNOT)
    throw DomainError("diffusion schemes use the CNOT-type Lindblad operator");
  const Vec2 psi = state.vec();
  const double sqrt_dt = std::sqrt(dt);
  const double dw = (branch == 0) ? -sqrt_dt : +sqrt_dt;

  Vec2 predicted;
  Vec2 exact;
  if (scheme == DiffusionScheme::Unitary) {
    predicted = psi + (I_UNIT * dw) * (l * psi);
    exact = exact_branch_post(family, EnvPrep::zero(), env_basis_x(), state, branch,
                              nullptr);
  } else {
    const c64 exp_l = inner(psi, l * psi);
    const Mat2 ldl = l.dagger() * l;
    const double exp_ldl = inner(psi, ldl * psi).real();
    const double mean_dw = 2.0 * std::real(std::conj(exp_l)) * dt;
    const double dz = dw - mean_dw;
    const Vec2 drift = std::conj(exp_l) * (l * psi) -
                       c64{0.5 * std::norm(exp_l), 0.0} * psi -
                       c64{0.5, 0.0} * (ldl * psi);
    const Vec2 stoch = (l * psi) - exp_l * psi;
    predicted = psi + c64{dt, 0.0} * drift + c64{dz, 0.0} * stoch;
    (void)exp_ldl;
    exact = exact_branch_post(family, EnvPrep::y_minus(), env_basis_z(), state, branch,
                              nullptr);
  }
  return dist_up_to_phase(exact, predicted);
}

std::pair<MeasurementOutcome, double> sme_step(const DensityMatrix& rho,
                                               const CompiledScenario& cs, double u) {
  const bool partial_info = cs.scenario.prep.kind == EnvPrep::Kind::Diagonal ||
                            cs.scenario.meas.kind == EnvMeas::Kind::Discrimination ||
                            cs.scenario.meas.kind == EnvMeas::Kind::Efficiency;
  if (!partial_info)
    throw MixedScenario("sme_step needs a mixed preparation or a partial-information POVM");
  auto [outcome, noise] = step(State{rho}, cs, u);
  // F = 0/1 per outcome; -1 flags the efficiency POVM's null result.
  double f = -1.0;
  if (noise.kind == NoiseIncrement::Kind::FFlag) f = noise.value;
  return {outcome, f};
}

double sme_residual(const DensityMatrix& rho, const GateFamily& family,
                    double w0, double dt, int branch) {
  if (family.kind != GateKind::CNOT)
    throw DomainError("the stochastic master equation form covers the CNOT family");
  if (branch != 0 && branch != 1) throw DomainError("branch must be 0 or 1");
  const double w1 = 1.0 - w0;
  const Instrument inst =
      conditional_instrument(weak_gate(family), EnvPrep::mixed(w0, w1), env_basis_z());

  // exact conditioned update
  const std::size_t n = static_cast<std::size_t>(branch);
  Mat2 num;
  for (const auto& a : inst.outcomes[n].ops) num = num + a * rho.m * a.dagger();
  const double p = num.trace().real();
  if (p < tol::zero_probability) throw ZeroProbability("branch probability vanishes");
  const Mat2 exact = c64{1.0 / p, 0.0} * num;

  const double p0 = inst.outcome_probability(0, State{rho});
  const double p1 = inst.outcome_probability(1, State{rho});

  const LindbladGen gen = lindblad_from_weak(family, dt);
  const Mat2& l = gen.lindblad_ops[0];
  const Mat2 ldl = l.dagger() * l;
  const double exp_ldl = (ldl * rho.m).trace().real();
  const double f = static_cast<double>(branch);

  const Mat2 centered = ldl - c64{exp_ldl, 0.0} * Mat2::identity();
  const Mat2 anti = centered * rho.m + rho.m * centered;
  const double drift_w = w0 / p0 * (1.0 - f) + w1 / p1 * f;
  const double gain_w = w1 / p0 * (1.0 - f) + w0 / p1 * f;
  const Mat2 gain = l * rho.m * l.dagger() - c64{exp_ldl, 0.0} * rho.m;
  const Mat2 predicted =
      rho.m + c64{-0.5 * drift_w * dt, 0.0} * anti + c64{gain_w * dt, 0.0} * gain;

  return (exact - predicted).max_abs();
}

}  // namespace qtraj
