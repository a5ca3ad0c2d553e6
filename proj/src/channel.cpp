#include "qtraj/channel.hpp"

#include <cmath>

namespace qtraj {

namespace {

void check_unitary(const Mat4& u) {
  const double err = unitarity_error(u);
  if (err > 1e-10)
    throw NotUnitary("interaction is not unitary (max deviation " + std::to_string(err) + ")");
}

// (1 ⊗ <bra| B) U (1 ⊗ |ket>) as a system operator.
Mat2 env_sandwich(const Mat4& u, const Vec2& bra_row, const Vec2& ket) {
  Mat2 r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      c64 s = 0.0;
      for (std::size_t l = 0; l < 2; ++l)
        for (std::size_t e = 0; e < 2; ++e)
          s += std::conj(bra_row[l]) * u(2 * i + l, 2 * j + e) * ket[e];
      r(i, j) = s;
    }
  return r;
}

}  // namespace

EnvPrep EnvPrep::zero() {
  return EnvPrep{};
}

EnvPrep EnvPrep::y_minus() {
  EnvPrep p;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  p.state = Vec2{{c64{inv_sqrt2, 0.0}, c64{0.0, -inv_sqrt2}}};
  return p;
}

EnvPrep EnvPrep::pure(const Vec2& v) {
  if (std::abs(v.norm_sq() - 1.0) > tol::construct)
    throw DomainError("environment preparation vector is not normalized");
  EnvPrep p;
  p.state = v;
  return p;
}

EnvPrep EnvPrep::mixed(double w0, double w1) {
  if (w0 < 0.0 || w1 < 0.0 || std::abs(w0 + w1 - 1.0) > tol::construct)
    throw DomainError("mixture weights must be nonnegative and sum to 1");
  EnvPrep p;
  p.kind = Kind::Diagonal;
  p.w0 = w0;
  p.w1 = w1;
  return p;
}

std::vector<std::pair<double, Vec2>> EnvPrep::branches() const {
  if (kind == Kind::Pure) return {{1.0, state}};
  std::vector<std::pair<double, Vec2>> out;
  if (w0 > 0.0) out.push_back({w0, Vec2{{c64{1.0, 0.0}, c64{0.0, 0.0}}}});
  if (w1 > 0.0) out.push_back({w1, Vec2{{c64{0.0, 0.0}, c64{1.0, 0.0}}}});
  return out;
}

double KrausChannel::completeness_error() const {
  Mat2 sum;
  for (const auto& o : ops) sum = sum + o.dagger() * o;
  return (sum - Mat2::identity()).max_abs();
}

namespace {

// Singular decomposition B = sum_r s_r u_r w_r^dag via the Hermitian kernel;
// rank-1 environment operators (projectors) must yield exactly one system
// operator so purity survives conditioning.
std::vector<std::pair<double, Vec2>> right_singular_pairs(const Mat2& b) {
  const EigSys<2> eig = eig_hermitian(b.dagger() * b);
  std::vector<std::pair<double, Vec2>> out;
  for (std::size_t r = 0; r < 2; ++r) {
    if (eig.values[r] <= 1e-24) continue;
    out.push_back({std::sqrt(eig.values[r]), eig.vectors[r]});
  }
  return out;
}

}  // namespace

Instrument conditional_instrument(const Mat4& u, const EnvPrep& prep,
                                  const Instrument& env_instrument) {
  check_unitary(u);
  const auto prep_branches = prep.branches();

  std::vector<Instrument::Outcome> outcomes;
  outcomes.reserve(env_instrument.outcomes.size());
  for (const auto& env_out : env_instrument.outcomes) {
    Instrument::Outcome sys_out;
    sys_out.label = env_out.label;
    for (const auto& [w, ket] : prep_branches) {
      for (const auto& b : env_out.ops) {
        // Tracing the environment after (1 ⊗ B) in the basis of B's left
        // singular vectors gives one operator per singular value:
        // <u_r| B = s_r w_r^dag, so K_r = s_r (1 ⊗ <w_r|) U (1 ⊗ |e_i>).
        for (const auto& [s, w_r] : right_singular_pairs(b)) {
          Mat2 k = env_sandwich(u, w_r, ket);
          k = c64{s * std::sqrt(w), 0.0} * k;
          if (k.frobenius() > 1e-14) sys_out.ops.push_back(k);
        }
      }
    }
    outcomes.push_back(std::move(sys_out));
  }
  return Instrument::make(std::move(outcomes));
}

KrausChannel unconditional_channel(const Mat4& u, const EnvPrep& prep) {
  check_unitary(u);
  KrausChannel ch;
  for (const auto& [w, ket] : prep.branches()) {
    // U = sum_{ab} sigma_a ⊗ (R_ab sigma_b): A_(ab) = sigma_a, B_(ab) = R_ab sigma_b.
    const Mat4 coeffs = pauli_rep(u);
    std::array<Mat2, 4> sig;
    for (std::size_t i = 0; i < 4; ++i) sig[i] = sigma(i);

    // v^(m)_j = <m|B_j|E>; M = sum_m v^(m) v^(m)^dag has at most two
    // nonvanishing eigenvalues.
    std::vector<c64> m(16 * 16, c64{});
    std::array<std::array<c64, 16>, 2> v{};
    for (std::size_t mrow = 0; mrow < 2; ++mrow)
      for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) {
          const std::size_t j = 4 * a + b;
          c64 s = 0.0;
          for (std::size_t e = 0; e < 2; ++e) s += sig[b](mrow, e) * ket[e];
          v[mrow][j] = coeffs(a, b) * s;
        }
    for (std::size_t j = 0; j < 16; ++j)
      for (std::size_t jp = 0; jp < 16; ++jp)
        m[j * 16 + jp] = v[0][j] * std::conj(v[0][jp]) + v[1][j] * std::conj(v[1][jp]);

    const EigSysDyn eig = eig_hermitian_dyn(m, 16);
    for (std::size_t k = 0; k < 16; ++k) {
      if (eig.values[k] <= tol::kraus_rank_cut) break;
      Mat2 o;
      for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b)
          o = o + eig.vectors[k][4 * a + b] * sig[a];
      o = c64{std::sqrt(eig.values[k] * w), 0.0} * o;
      ch.ops.push_back(o);
    }
  }
  const double err = ch.completeness_error();
  if (err > tol::iterative)
    throw NotUnitary("extracted Kraus set violates completeness (error " +
                     std::to_string(err) + ")");
  return ch;
}

DensityMatrix apply_channel(const DensityMatrix& rho, const KrausChannel& ch) {
  Mat2 out;
  for (const auto& o : ch.ops) out = out + o * rho.m * o.dagger();
  out = c64{0.5, 0.0} * (out + out.dagger());
  return DensityMatrix::make(out);
}

std::vector<DensityMatrix> iterate_channel(const DensityMatrix& rho,
                                           const KrausChannel& ch, int n) {
  if (n < 0) throw DomainError("iteration count must be nonnegative");
  std::vector<DensityMatrix> seq;
  seq.reserve(static_cast<std::size_t>(n) + 1);
  seq.push_back(rho);
  for (int k = 0; k < n; ++k) seq.push_back(apply_channel(seq.back(), ch));
  return seq;
}

LindbladGen lindblad_from_weak(const GateFamily& family, double dt) {
  if (!(dt > 0.0)) throw DomainError("dt must be positive");
  const double rate = std::sqrt(family.theta * family.theta / dt);
  Mat2 l;
  if (family.kind == GateKind::CNOT) {
    l(1, 1) = rate;  // sqrt(theta^2/dt) |1><1|
  } else {
    l(0, 1) = rate;  // sqrt(theta^2/dt) |0><1|
  }
  LindbladGen gen;
  gen.lindblad_ops.push_back(l);
  gen.dt = dt;
  return gen;
}

Mat2 lindblad_rhs(const DensityMatrix& rho, const LindbladGen& gen) {
  Mat2 out = -I_UNIT * (gen.hamiltonian * rho.m - rho.m * gen.hamiltonian);
  for (const auto& l : gen.lindblad_ops) {
    const Mat2 ldl = l.dagger() * l;
    out = out + l * rho.m * l.dagger() -
          c64{0.5, 0.0} * (ldl * rho.m + rho.m * ldl);
  }
  return out;
}

}  // namespace qtraj
