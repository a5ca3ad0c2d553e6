#pragma once

#include <array>

#include "qtraj/algebra.hpp"

namespace qtraj {

// Pauli operators in this model's convention: |0> and |1> are the sigma_z
// eigenstates with eigenvalues -1 and +1, i.e. sigma_z = diag(-1, +1).
// sigma_y = [[0, i], [-i, 0]] keeps the cyclic algebra sx*sy = i*sz intact.
Mat2 sigma_x();
Mat2 sigma_y();
Mat2 sigma_z();
// sigma(0) = identity, sigma(1..3) = x, y, z.
Mat2 sigma(std::size_t i);

struct PureQbit {
  c64 alpha{1.0, 0.0};  // amplitude of |0>
  c64 beta{0.0, 0.0};   // amplitude of |1>

  // checked factory: |alpha|^2 + |beta|^2 = 1 within tolerance
  static PureQbit make(c64 alpha, c64 beta);
  // renormalizes; throws ZeroProbability on a null vector
  static PureQbit normalized(c64 alpha, c64 beta);

  Vec2 vec() const { return Vec2{{alpha, beta}}; }
  double beta_sq() const { return std::norm(beta); }
};

// |<a|b>| = 1 criterion; states are physical rays, never compared amplitude-wise.
bool same_state_up_to_phase(const PureQbit& a, const PureQbit& b, double tol = 1e-10);

struct BlochPoint {
  double theta{0.0};  // polar angle in [0, pi]
  double phi{0.0};    // azimuth in [0, 2*pi)
  double r{0.0};      // purity radius in [0, 1]
};

struct DensityMatrix {
  Mat2 m;

  // checked factory: Hermitian, unit trace, eigenvalues >= -1e-12
  static DensityMatrix make(const Mat2& m);
  static DensityMatrix from_pure(const PureQbit& psi);
  static DensityMatrix maximally_mixed();

  double population1() const { return m(1, 1).real(); }
  double purity() const { return (m * m).trace().real(); }
  void validate() const;
};

enum class GateKind { CNOT, SWAP };

struct GateFamily {
  GateKind kind{GateKind::CNOT};
  double theta{0.0};  // interaction angle, [0, pi/2]

  static GateFamily make(GateKind kind, double theta);
};

// State/gate constructors.
PureQbit pure_from_bloch(double theta, double phi);
DensityMatrix mixed_from_bloch(double theta, double phi, double r);
BlochPoint bloch_of(const DensityMatrix& rho);

// 1*cos(varphi) + i (n . sigma) sin(varphi); n a unit 3-vector.
Mat2 axis_angle_unitary(const std::array<double, 3>& n, double varphi);

// Full CNOT / SWAP from their basis action tables (unitary and Hermitian).
Mat4 strong_gate(GateKind kind);

// Uncorrected one-parameter family exp(-i theta U) = 1 cos(theta) - i U sin(theta).
Mat4 exponential_family(GateKind kind, double theta);

// Z_S(theta) * exp(-i theta U_kind): the phase-corrected interaction used by
// every scenario. Z_S(theta) = exp(-i sigma_z theta / 2) ⊗ 1.
Mat4 weak_gate(const GateFamily& family);

// Coefficients R with O = sum_ij R_ij sigma_i ⊗ sigma_j, R_ij = Tr{O (si⊗sj)}/4.
Mat4 pauli_rep(const Mat4& op);
Mat4 pauli_rep_reconstruct(const Mat4& coeffs);

}  // namespace qtraj
