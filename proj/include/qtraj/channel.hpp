#pragma once

#include <vector>

#include "qtraj/measurement.hpp"

namespace qtraj {

// Environment q-bit preparation: a pure vector or a z-diagonal mixture.
struct EnvPrep {
  enum class Kind { Pure, Diagonal };
  Kind kind{Kind::Pure};
  Vec2 state{{c64{1.0, 0.0}, c64{0.0, 0.0}}};  // Pure
  double w0{1.0}, w1{0.0};                     // Diagonal

  static EnvPrep zero();
  static EnvPrep y_minus();  // (|0> - i|1>)/sqrt(2)
  static EnvPrep pure(const Vec2& v);
  static EnvPrep mixed(double w0, double w1);

  // Branches as (weight, pure vector) pairs; one branch for pure preparations.
  std::vector<std::pair<double, Vec2>> branches() const;
};

struct KrausChannel {
  std::vector<Mat2> ops;

  double completeness_error() const;  // max |sum O^dag O - 1|
};

struct LindbladGen {
  Mat2 hamiltonian;            // zero for the scoped gate families
  std::vector<Mat2> lindblad_ops;  // units 1/sqrt(time)
  double dt{1.0};
};

// System-level instrument induced by measuring the environment with
// `env_instrument` after U acts on system ⊗ prepared environment.
// Outcome n carries operators (1 ⊗ <l| B_nk) U (1 ⊗ |e_i>) sqrt(w_i) over the
// env basis l, env update ops k, and preparation branches i.
Instrument conditional_instrument(const Mat4& u, const EnvPrep& prep,
                                  const Instrument& env_instrument);

// Canonical Kraus set from the M-matrix route: decompose U over the 16
// product-operator basis sigma_a ⊗ sigma_b, form M = <E|B^dag B|E>,
// eigendecompose, keep O_k = sqrt(lambda_k) sum_j mu_kj A_j for lambda_k above
// the rank cutoff. Mixed preparations fold the branch index into the Kraus
// index with sqrt(w_i) weights.
KrausChannel unconditional_channel(const Mat4& u, const EnvPrep& prep);

DensityMatrix apply_channel(const DensityMatrix& rho, const KrausChannel& ch);

// n-fold composition, returning all intermediate states (size n+1, [0] = rho).
std::vector<DensityMatrix> iterate_channel(const DensityMatrix& rho,
                                           const KrausChannel& ch, int n);

// CNOT -> L = sqrt(theta^2/dt)|1><1|; SWAP -> L = sqrt(theta^2/dt)|0><1|.
// The Z_S correction removes the first-order term, so hamiltonian = 0.
LindbladGen lindblad_from_weak(const GateFamily& family, double dt);

// d rho/dt = -i[H, rho] + sum_k (L rho L^dag - 1/2 {L^dag L, rho}).
Mat2 lindblad_rhs(const DensityMatrix& rho, const LindbladGen& gen);

}  // namespace qtraj
