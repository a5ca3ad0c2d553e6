#include "qtraj/analysis.hpp"

#include <cmath>

namespace qtraj {

DensityMatrix ExactMixture::mean() const {
  Mat2 acc;
  for (const auto& b : branches) {
    const Mat2 rho = to_density(b.state).m;
    acc = acc + c64{b.probability, 0.0} * rho;
  }
  // renormalize by the surviving mass so pruning cannot skew the mean
  double mass = 0.0;
  for (const auto& b : branches) mass += b.probability;
  acc = c64{1.0 / mass, 0.0} * acc;
  acc = c64{0.5, 0.0} * (acc + acc.dagger());
  return DensityMatrix::make(acc);
}

ExactMixture enumerate_outcomes(const CompiledScenario& cs, int n) {
  constexpr std::size_t budget = std::size_t{1} << 20;
  if (!cs.instrument.has_value())
    throw MixedScenario("enumeration needs an environment measurement");

  ExactMixture out;
  const State init =
      cs.pure_mode ? cs.scenario.init : State{to_density(cs.scenario.init)};

  struct Node {
    std::string seq;
    double prob;
    State state;
    int depth;
  };
  std::vector<Node> stack{{std::string{}, 1.0, init, 0}};
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    if (node.depth == n) {
      out.branches.push_back({std::move(node.seq), node.prob, std::move(node.state)});
      if (out.branches.size() > budget)
        throw BudgetExceeded("enumeration exceeds 2^20 branches");
      continue;
    }
    const auto& inst = *cs.instrument;
    for (std::size_t m = inst.outcomes.size(); m-- > 0;) {
      const double p = inst.outcome_probability(m, node.state);
      const double joint = node.prob * p;
      if (joint < tol::zero_probability) {
        out.pruned_mass += joint;
        continue;
      }
      const MeasurementOutcome mo = inst.condition(m, node.state);
      stack.push_back({node.seq + inst.outcomes[m].label, joint, mo.post_state,
                       node.depth + 1});
      if (stack.size() + out.branches.size() > budget)
        throw BudgetExceeded("enumeration exceeds 2^20 branches");
    }
  }
  return out;
}

EnsembleSummary ensemble_average(const std::vector<TrajectoryRecord>& records) {
  if (records.empty()) throw DomainError("no records to average");
  const std::uint64_t hash = records.front().scenario_hash;
  const std::size_t nsteps = records.front().steps.size();
  for (const auto& r : records) {
    if (r.scenario_hash != hash || r.steps.size() != nsteps)
      throw MixedScenario("records come from different scenarios");
  }

  EnsembleSummary sum;
  sum.trajectories = static_cast<int>(records.size());
  sum.seed = records.front().seed;
  sum.mean.reserve(nsteps + 1);
  sum.beta_sq_histogram.assign(nsteps + 1, std::vector<double>(20, 0.0));
  sum.absorbed_at_0.assign(nsteps + 1, 0);
  sum.absorbed_at_1.assign(nsteps + 1, 0);

  const double inv_n = 1.0 / static_cast<double>(records.size());
  for (std::size_t k = 0; k <= nsteps; ++k) {
    Mat2 acc;
    for (const auto& r : records) {
      acc = acc + c64{inv_n, 0.0} * to_density(r.state_at(k)).m;
      const double b = r.beta_sq_at(k);
      const int bin = std::min(19, static_cast<int>(b * 20.0));
      sum.beta_sq_histogram[k][static_cast<std::size_t>(bin)] += 1.0;
      if (b <= tol::absorption) ++sum.absorbed_at_0[k];
      if (b >= 1.0 - tol::absorption) ++sum.absorbed_at_1[k];
    }
    acc = c64{0.5, 0.0} * (acc + acc.dagger());
    sum.mean.push_back(DensityMatrix::make(acc));
  }
  return sum;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const auto eig = eig_hermitian(rho.m);
  double s = 0.0;
  for (double lambda : eig.values)
    if (lambda > 0.0) s -= lambda * std::log2(lambda);
  return s;
}

double entanglement_entropy(const Vec4& joint) {
  if (std::abs(joint.norm_sq() - 1.0) > tol::construct)
    throw DomainError("joint state is not normalized");
  const Mat2 reduced = partial_trace_env(outer(joint, joint));
  return von_neumann_entropy(DensityMatrix::make(reduced));
}

InfoGain info_gain(const DensityMatrix& prior, const Instrument& instrument) {
  InfoGain out;
  const double s_prior = von_neumann_entropy(prior);
  std::vector<double> probs;
  double mean_post_entropy = 0.0;
  for (std::size_t n = 0; n < instrument.outcomes.size(); ++n) {
    const double p = instrument.outcome_probability(n, State{prior});
    probs.push_back(p);
    if (p < tol::zero_probability) continue;
    const MeasurementOutcome mo = instrument.condition(n, State{prior});
    mean_post_entropy += p * von_neumann_entropy(to_density(mo.post_state));
  }
  out.delta_s = s_prior - mean_post_entropy;
  out.s_meas = shannon_entropy(probs);
  if (std::abs(out.delta_s) <= tol::zero_probability) {
    out.ratio_finite = false;
    out.ratio = 0.0;
  } else {
    out.ratio = out.s_meas / out.delta_s;
  }
  return out;
}

std::pair<double, double> asymptotic_no_jump(double alpha_sq, double beta_sq,
                                             double theta, int n) {
  if (std::abs(alpha_sq + beta_sq - 1.0) > tol::construct)
    throw DomainError("populations must sum to 1");
  const double decay = std::exp(-static_cast<double>(n) * theta * theta);
  const double denom = alpha_sq + beta_sq * decay;
  return {alpha_sq / denom, beta_sq * decay / denom};
}

std::pair<double, double> exact_no_jump(double alpha_sq, double beta_sq,
                                        double theta, int n) {
  if (std::abs(alpha_sq + beta_sq - 1.0) > tol::construct)
    throw DomainError("populations must sum to 1");
  const double decay = std::pow(std::cos(theta), 2.0 * static_cast<double>(n));
  const double denom = alpha_sq + beta_sq * decay;
  return {alpha_sq / denom, beta_sq * decay / denom};
}

double max_entry_distance(const DensityMatrix& a, const DensityMatrix& b) {
  return (a.m - b.m).max_abs();
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  const Mat2 d = a.m - b.m;
  // traceless Hermitian: eigenvalues +-sqrt(x^2 + |y|^2)
  const double x = d(0, 0).real();
  return std::sqrt(x * x + std::norm(d(0, 1)));
}

}  // namespace qtraj
