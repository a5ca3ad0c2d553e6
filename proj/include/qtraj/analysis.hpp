#pragma once

#include "qtraj/trajectory.hpp"

namespace qtraj {

// One conditioned branch of the exact outcome tree.
struct Branch {
  std::string sequence;  // concatenated outcome labels, step order
  double probability{1.0};
  State state;
};

struct ExactMixture {
  std::vector<Branch> branches;
  double pruned_mass{0.0};  // upper bound on probability dropped by pruning

  DensityMatrix mean() const;
};

// Brute-force enumeration of every outcome sequence of length n; branches with
// cumulative probability below 1e-15 are pruned into pruned_mass. Throws
// BudgetExceeded past 2^20 live branches.
ExactMixture enumerate_outcomes(const CompiledScenario& cs, int n);

struct EnsembleSummary {
  std::vector<DensityMatrix> mean;           // per step, 0..steps
  std::vector<std::vector<double>> beta_sq_histogram;  // per step, 20 bins over [0,1]
  std::vector<int> absorbed_at_0;            // per step counts, |beta|^2 <= 1e-3
  std::vector<int> absorbed_at_1;            // per step counts, |beta|^2 >= 1-1e-3
  int trajectories{0};
  std::uint64_t seed{0};
};

EnsembleSummary ensemble_average(const std::vector<TrajectoryRecord>& records);

// -sum lambda log2 lambda over the eigenvalues; in [0,1] for a q-bit.
double von_neumann_entropy(const DensityMatrix& rho);

// Entropy of the reduced state of the system half of a joint pure state.
double entanglement_entropy(const Vec4& joint);

struct InfoGain {
  double delta_s{0.0};   // S(rho) - sum_n p_n S(rho_n), bits
  double s_meas{0.0};    // Shannon entropy of the outcome distribution, bits
  double ratio{0.0};     // s_meas / delta_s
  bool ratio_finite{true};
};

InfoGain info_gain(const DensityMatrix& prior, const Instrument& instrument);

// No-jump populations from the exponential closed form; the exact recursion
// uses cos^{2n}(theta) instead and the two differ at O(n theta^4).
std::pair<double, double> asymptotic_no_jump(double alpha_sq, double beta_sq,
                                             double theta, int n);

// Exact no-jump populations (|alpha_n|^2, |beta_n|^2) after n 0-outcomes.
std::pair<double, double> exact_no_jump(double alpha_sq, double beta_sq,
                                        double theta, int n);

// max-entry distance, handy for mean-state comparisons
double max_entry_distance(const DensityMatrix& a, const DensityMatrix& b);

// trace distance for 2x2 densities: singular value of the traceless difference
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace qtraj
