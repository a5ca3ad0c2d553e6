#include "qtraj/states.hpp"

#include <cmath>

namespace qtraj {

namespace {
constexpr double PI = 3.14159265358979323846;
}

Mat2 sigma_x() {
  Mat2 m;
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

Mat2 sigma_y() {
  Mat2 m;
  m(0, 1) = I_UNIT;
  m(1, 0) = -I_UNIT;
  return m;
}

Mat2 sigma_z() {
  Mat2 m;
  m(0, 0) = -1.0;
  m(1, 1) = 1.0;
  return m;
}

Mat2 sigma(std::size_t i) {
  switch (i) {
    case 0: return Mat2::identity();
    case 1: return sigma_x();
    case 2: return sigma_y();
    case 3: return sigma_z();
    default: throw DomainError("sigma index must be 0..3");
  }
}

PureQbit PureQbit::make(c64 alpha, c64 beta) {
  const double n = std::norm(alpha) + std::norm(beta);
  if (std::abs(n - 1.0) > tol::construct)
    throw DomainError("pure state is not normalized: |alpha|^2+|beta|^2 = " + std::to_string(n));
  return PureQbit{alpha, beta};
}

PureQbit PureQbit::normalized(c64 alpha, c64 beta) {
  const double n = std::sqrt(std::norm(alpha) + std::norm(beta));
  if (n < tol::zero_probability)
    throw ZeroProbability("cannot normalize a null state vector");
  return PureQbit{alpha / n, beta / n};
}

bool same_state_up_to_phase(const PureQbit& a, const PureQbit& b, double tolerance) {
  const c64 ov = std::conj(a.alpha) * b.alpha + std::conj(a.beta) * b.beta;
  return std::abs(std::abs(ov) - 1.0) <= tolerance;
}

DensityMatrix DensityMatrix::make(const Mat2& m) {
  DensityMatrix rho{m};
  rho.validate();
  return rho;
}

void DensityMatrix::validate() const {
  if (hermiticity_error(m) > tol::construct)
    throw DomainError("density matrix is not Hermitian");
  if (std::abs(m.trace().real() - 1.0) > tol::construct || std::abs(m.trace().imag()) > tol::construct)
    throw DomainError("density matrix trace != 1");
  // eigenvalues of a Hermitian 2x2: (tr +- sqrt(tr^2 - 4 det))/2
  const double tr = m.trace().real();
  const double det = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).real();
  const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
  const double lmin = 0.5 * (tr - disc);
  if (lmin < -tol::construct)
    throw DomainError("density matrix has negative eigenvalue " + std::to_string(lmin));
}

DensityMatrix DensityMatrix::from_pure(const PureQbit& psi) {
  return DensityMatrix{outer(psi.vec(), psi.vec())};
}

DensityMatrix DensityMatrix::maximally_mixed() {
  return DensityMatrix{c64{0.5, 0.0} * Mat2::identity()};
}

GateFamily GateFamily::make(GateKind kind, double theta) {
  if (!(theta >= 0.0 && theta <= PI / 2.0 + tol::construct))
    throw DomainError("interaction angle must lie in [0, pi/2]");
  return GateFamily{kind, theta};
}

PureQbit pure_from_bloch(double theta, double phi) {
  if (!(theta >= 0.0 && theta <= PI))
    throw DomainError("bloch theta out of [0, pi]");
  if (!(phi >= 0.0 && phi < 2.0 * PI))
    throw DomainError("bloch phi out of [0, 2*pi)");
  const c64 em = std::exp(c64{0.0, -phi / 2.0});
  const c64 ep = std::exp(c64{0.0, +phi / 2.0});
  return PureQbit{std::cos(theta / 2.0) * em, std::sin(theta / 2.0) * ep};
}

DensityMatrix mixed_from_bloch(double theta, double phi, double r) {
  if (!(r >= 0.0 && r <= 1.0 + tol::construct))
    throw DomainError("bloch radius out of [0, 1]");
  if (!(theta >= 0.0 && theta <= PI))
    throw DomainError("bloch theta out of [0, pi]");
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  const double p = 0.5 * (1.0 + r);
  const double q = 0.5 * (1.0 - r);
  Mat2 m;
  m(0, 0) = p * c * c + q * s * s;
  m(1, 1) = p * s * s + q * c * c;
  // e^{-i phi} on |0><1| keeps r=1 identical to the pure parametrization.
  m(0, 1) = r * c * s * std::exp(c64{0.0, -phi});
  m(1, 0) = std::conj(m(0, 1));
  return DensityMatrix::make(m);
}

BlochPoint bloch_of(const DensityMatrix& rho) {
  const double z = (rho.m(0, 0) - rho.m(1, 1)).real();  // = r cos(theta)
  const c64 w = 2.0 * rho.m(0, 1);                      // = r sin(theta) e^{-i phi}
  const double r = std::sqrt(z * z + std::norm(w));
  if (r < 1e-14) return BlochPoint{0.0, 0.0, 0.0};
  const double theta = std::atan2(std::abs(w), z);
  double phi = 0.0;
  if (std::abs(w) > 1e-14) {
    phi = -std::arg(w);
    if (phi < 0.0) phi += 2.0 * PI;
    if (phi >= 2.0 * PI) phi -= 2.0 * PI;
  }
  return BlochPoint{theta, phi, std::min(r, 1.0)};
}

Mat2 axis_angle_unitary(const std::array<double, 3>& n, double varphi) {
  const double len = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
  if (std::abs(len - 1.0) > 1e-10)
    throw DomainError("rotation axis must have unit norm");
  Mat2 ns;
  for (std::size_t k = 0; k < 3; ++k) ns = ns + c64{n[k], 0.0} * sigma(k + 1);
  return c64{std::cos(varphi), 0.0} * Mat2::identity() +
         I_UNIT * std::sin(varphi) * ns;
}

Mat4 strong_gate(GateKind kind) {
  Mat4 m;
  if (kind == GateKind::CNOT) {
    m(0, 0) = 1.0;  // |00> -> |00>
    m(1, 1) = 1.0;  // |01> -> |01>
    m(3, 2) = 1.0;  // |10> -> |11>
    m(2, 3) = 1.0;  // |11> -> |10>
  } else {
    m(0, 0) = 1.0;  // |00> -> |00>
    m(2, 1) = 1.0;  // |01> -> |10>
    m(1, 2) = 1.0;  // |10> -> |01>
    m(3, 3) = 1.0;  // |11> -> |11>
  }
  return m;
}

Mat4 exponential_family(GateKind kind, double theta) {
  return c64{std::cos(theta), 0.0} * Mat4::identity() -
         I_UNIT * std::sin(theta) * strong_gate(kind);
}

Mat4 weak_gate(const GateFamily& family) {
  // Z_S(theta) with sigma_z = diag(-1, +1): system |0> rows pick up e^{+i theta/2}.
  Mat2 zs;
  zs(0, 0) = std::exp(c64{0.0, +family.theta / 2.0});
  zs(1, 1) = std::exp(c64{0.0, -family.theta / 2.0});
  return tensor(zs, Mat2::identity()) * exponential_family(family.kind, family.theta);
}

Mat4 pauli_rep(const Mat4& op) {
  Mat4 coeffs;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      coeffs(i, j) = 0.25 * (op * tensor(sigma(i), sigma(j))).trace();
  return coeffs;
}

Mat4 pauli_rep_reconstruct(const Mat4& coeffs) {
  Mat4 op;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      op = op + coeffs(i, j) * tensor(sigma(i), sigma(j));
  return op;
}

}  // namespace qtraj
