#include "qtraj/measurement.hpp"

#include <cmath>

namespace qtraj {

DensityMatrix to_density(const State& s) {
  if (std::holds_alternative<PureQbit>(s))
    return DensityMatrix::from_pure(std::get<PureQbit>(s));
  return std::get<DensityMatrix>(s);
}

Instrument Instrument::make(std::vector<Outcome> outcomes) {
  Instrument inst{std::move(outcomes)};
  const double err = inst.completeness_error();
  if (err > tol::iterative)
    throw DomainError("instrument effects do not sum to identity (error " +
                      std::to_string(err) + ")");
  for (std::size_t n = 0; n < inst.outcomes.size(); ++n) {
    const auto eig = eig_hermitian(inst.effect(n));
    if (eig.values[1] < -tol::construct)
      throw DomainError("effect " + inst.outcomes[n].label + " is not positive");
  }
  return inst;
}

Mat2 Instrument::effect(std::size_t n) const {
  Mat2 e;
  for (const auto& a : outcomes[n].ops) e = e + a.dagger() * a;
  return e;
}

double Instrument::completeness_error() const {
  Mat2 sum;
  for (std::size_t n = 0; n < outcomes.size(); ++n) sum = sum + effect(n);
  return (sum - Mat2::identity()).max_abs();
}

double Instrument::outcome_probability(std::size_t n, const State& s) const {
  if (std::holds_alternative<PureQbit>(s)) {
    const Vec2 psi = std::get<PureQbit>(s).vec();
    double p = 0.0;
    for (const auto& a : outcomes[n].ops) p += (a * psi).norm_sq();
    return p;
  }
  const Mat2& rho = std::get<DensityMatrix>(s).m;
  double p = 0.0;
  for (const auto& a : outcomes[n].ops) p += (a * rho * a.dagger()).trace().real();
  return p;
}

MeasurementOutcome Instrument::condition(std::size_t n, const State& s) const {
  const double p = outcome_probability(n, s);
  if (p < tol::zero_probability)
    throw ZeroProbability("branch " + outcomes[n].label + " has vanishing probability");

  MeasurementOutcome out;
  out.label = outcomes[n].label;
  out.probability = p;
  const auto& ops = outcomes[n].ops;
  if (std::holds_alternative<PureQbit>(s) && ops.size() == 1) {
    const Vec2 w = ops[0] * std::get<PureQbit>(s).vec();
    out.post_state = PureQbit::normalized(w[0], w[1]);
  } else {
    const Mat2 rho = to_density(s).m;
    Mat2 num;
    for (const auto& a : ops) num = num + a * rho * a.dagger();
    Mat2 post = c64{1.0 / p, 0.0} * num;
    // re-hermitize against rounding drift
    post = c64{0.5, 0.0} * (post + post.dagger());
    out.post_state = DensityMatrix::make(post);
  }
  return out;
}

MeasurementOutcome Instrument::apply(const State& s, double u) const {
  std::vector<double> probs(outcomes.size());
  for (std::size_t n = 0; n < outcomes.size(); ++n) probs[n] = outcome_probability(n, s);

  std::size_t pick = outcomes.size();
  double cum = 0.0;
  for (std::size_t n = 0; n < outcomes.size(); ++n) {
    cum += probs[n];
    if (u < cum) {
      pick = n;
      break;
    }
  }
  if (pick == outcomes.size()) {
    // u fell past the accumulated total (rounding); take the last live branch.
    for (std::size_t n = outcomes.size(); n-- > 0;) {
      if (probs[n] > 0.0) {
        pick = n;
        break;
      }
    }
    if (pick == outcomes.size()) throw ZeroProbability("all outcome probabilities vanish");
  }
  return condition(pick, s);
}

Instrument projective_axis(const std::array<double, 3>& n) {
  const double len = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
  if (std::abs(len - 1.0) > 1e-10) throw DomainError("measurement axis must have unit norm");
  Mat2 ns;
  for (std::size_t k = 0; k < 3; ++k) ns = ns + c64{n[k], 0.0} * sigma(k + 1);
  const Mat2 plus = c64{0.5, 0.0} * (Mat2::identity() + ns);
  const Mat2 minus = c64{0.5, 0.0} * (Mat2::identity() - ns);
  return Instrument::make({{"+", {plus}}, {"-", {minus}}});
}

Instrument weak_asymmetric(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw DomainError("epsilon must lie in (0, 1)");
  Mat2 a0, a1;
  a0(0, 0) = 1.0;
  a0(1, 1) = std::sqrt(1.0 - epsilon);
  a1(1, 1) = std::sqrt(epsilon);
  return Instrument::make({{"0", {a0}}, {"1", {a1}}});
}

Instrument weak_balanced(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw DomainError("epsilon must lie in (0, 1)");
  Mat2 a0, a1;
  a0(0, 0) = std::sqrt(0.5 * (1.0 + epsilon));
  a0(1, 1) = std::sqrt(0.5 * (1.0 - epsilon));
  a1(0, 0) = std::sqrt(0.5 * (1.0 - epsilon));
  a1(1, 1) = std::sqrt(0.5 * (1.0 + epsilon));
  return Instrument::make({{"0", {a0}}, {"1", {a1}}});
}

Instrument discrimination_povm(double q) {
  if (!(q > 0.5 && q <= 1.0)) throw DomainError("discrimination q must lie in (1/2, 1]");
  Mat2 a0, a1;
  a0(0, 0) = std::sqrt(q);
  a0(1, 1) = std::sqrt(1.0 - q);
  a1(0, 0) = std::sqrt(1.0 - q);
  a1(1, 1) = std::sqrt(q);
  return Instrument::make({{"0", {a0}}, {"1", {a1}}});
}

Instrument efficiency_povm(double q) {
  if (!(q > 0.0 && q <= 1.0)) throw DomainError("detector efficiency q must lie in (0, 1]");
  Mat2 a0, a1, a2;
  a0(0, 0) = std::sqrt(q);
  a1(1, 1) = std::sqrt(q);
  a2(0, 0) = std::sqrt(1.0 - q);
  a2(1, 1) = std::sqrt(1.0 - q);
  return Instrument::make({{"0", {a0}}, {"1", {a1}}, {"2", {a2}}});
}

double shannon_entropy(const std::vector<double>& probs) {
  double sum = 0.0;
  for (double p : probs) {
    if (p < -tol::construct) throw DomainError("negative probability");
    sum += p;
  }
  if (std::abs(sum - 1.0) > tol::iterative)
    throw DomainError("probabilities sum to " + std::to_string(sum));
  double s = 0.0;
  for (double p : probs)
    if (p > 0.0) s -= p * std::log2(p);
  return s;
}

}  // namespace qtraj
