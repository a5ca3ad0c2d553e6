#pragma once

#include <string>
#include <variant>
#include <vector>

#include "qtraj/states.hpp"

namespace qtraj {

using State = std::variant<PureQbit, DensityMatrix>;

DensityMatrix to_density(const State& s);

struct MeasurementOutcome {
  std::string label;
  double probability{0.0};
  State post_state;
};

// A POVM together with per-outcome update operators A_nk. Effects are derived,
// E_n = sum_k A_nk^dag A_nk; the update operators are what fixes post states.
struct Instrument {
  struct Outcome {
    std::string label;
    std::vector<Mat2> ops;
  };
  std::vector<Outcome> outcomes;

  static Instrument make(std::vector<Outcome> outcomes);

  Mat2 effect(std::size_t n) const;
  double completeness_error() const;  // max |sum E_n - 1|
  double outcome_probability(std::size_t n, const State& s) const;

  // Post-measurement state for a pinned outcome n; pure stays pure iff the
  // outcome carries a single update operator.
  MeasurementOutcome condition(std::size_t n, const State& s) const;

  // Outcome selected by cumulative probabilities in declared label order using
  // the injected uniform draw u in [0,1). Pure in (state, u).
  MeasurementOutcome apply(const State& s, double u) const;
};

// Two projectors (1 +- n.sigma)/2. With this model's sigma_z the "+" outcome
// of the z axis is |1><1|.
Instrument projective_axis(const std::array<double, 3>& n);

// A_0 = |0><0| + sqrt(1-eps)|1><1|, A_1 = sqrt(eps)|1><1|.
Instrument weak_asymmetric(double epsilon);

// A_j = sqrt((1 +- eps)/2)|0><0| + sqrt((1 -+ eps)/2)|1><1|.
Instrument weak_balanced(double epsilon);

// A_0 = sqrt(q)|0><0| + sqrt(1-q)|1><1| and the mirror image; q in (1/2, 1].
Instrument discrimination_povm(double q);

// Detector of efficiency q: A_0 = sqrt(q)|0><0|, A_1 = sqrt(q)|1><1|,
// A_2 = sqrt(1-q) * 1; q in (0, 1].
Instrument efficiency_povm(double q);

// -sum p log2 p with 0 log 0 := 0; probabilities must sum to 1 within 1e-10.
double shannon_entropy(const std::vector<double>& probs);

}  // namespace qtraj
