#include "qtraj/algebra.hpp"

#include <algorithm>
#include <numeric>

namespace qtraj {

Vec4 tensor(const Vec2& a, const Vec2& b) {
  Vec4 r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) r[2 * i + j] = a[i] * b[j];
  return r;
}

Mat4 tensor(const Mat2& a, const Mat2& b) {
  Mat4 r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l)
          r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return r;
}

Mat2 partial_trace_env(const Mat4& m) {
  Mat2 r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      r(i, j) = m(2 * i + 0, 2 * j + 0) + m(2 * i + 1, 2 * j + 1);
  return r;
}

namespace {

// Make the first component above threshold real positive.
template <typename VecT>
void fix_phase(VecT& v, std::size_t n) {
  double mx = 0.0;
  for (std::size_t i = 0; i < n; ++i) mx = std::max(mx, std::abs(v[i]));
  if (mx == 0.0) return;
  for (std::size_t i = 0; i < n; ++i) {
    const double m = std::abs(v[i]);
    if (m > 1e-8 * mx) {
      const c64 ph = std::conj(v[i]) / m;
      for (std::size_t j = 0; j < n; ++j) v[j] *= ph;
      return;
    }
  }
}

void check_hermitian(double err) {
  if (err > 1e-10)
    throw NotHermitian("matrix is not Hermitian (max deviation " + std::to_string(err) + ")");
}

// Cyclic Jacobi for a complex Hermitian matrix held row-major in `m`.
// Returns eigenvalues on the diagonal of `m` and accumulates rotations into `v`.
void jacobi_sweeps(std::vector<c64>& m, std::vector<c64>& v, std::size_t n) {
  auto at = [n](std::vector<c64>& x, std::size_t i, std::size_t j) -> c64& {
    return x[i * n + j];
  };
  for (std::size_t i = 0; i < n; ++i) at(v, i, i) = 1.0;

  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(at(m, i, i)));
  scale = std::max(scale, 1.0);

  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(at(m, p, q));
    if (std::sqrt(off) < 1e-14 * scale) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const c64 apq = at(m, p, q);
        const double mag = std::abs(apq);
        if (mag < 1e-300) continue;
        const c64 f = apq / mag;  // phase so that conj(f)*apq is real positive
        const double app = at(m, p, p).real();
        const double aqq = at(m, q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                      : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // J block: [[c, s], [-conj(f) s, conj(f) c]]; apply M <- J^dag M J, V <- V J.
        for (std::size_t i = 0; i < n; ++i) {
          const c64 mip = at(m, i, p);
          const c64 miq = at(m, i, q);
          at(m, i, p) = c * mip - std::conj(f) * s * miq;
          at(m, i, q) = s * mip + std::conj(f) * c * miq;
          const c64 vip = at(v, i, p);
          const c64 viq = at(v, i, q);
          at(v, i, p) = c * vip - std::conj(f) * s * viq;
          at(v, i, q) = s * vip + std::conj(f) * c * viq;
        }
        for (std::size_t j = 0; j < n; ++j) {
          const c64 mpj = at(m, p, j);
          const c64 mqj = at(m, q, j);
          at(m, p, j) = c * mpj - f * s * mqj;
          at(m, q, j) = s * mpj + f * c * mqj;
        }
        at(m, p, q) = 0.0;
        at(m, q, p) = 0.0;
        at(m, p, p) = at(m, p, p).real();
        at(m, q, q) = at(m, q, q).real();
      }
    }
  }
}

EigSysDyn eig_dyn_impl(std::vector<c64> m, std::size_t n) {
  std::vector<c64> v(n * n, c64{});
  jacobi_sweeps(m, v, n);

  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return m[a * n + a].real() > m[b * n + b].real();
  });

  EigSysDyn out;
  out.values.resize(n);
  out.vectors.assign(n, std::vector<c64>(n));
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = m[idx[k] * n + idx[k]].real();
    for (std::size_t i = 0; i < n; ++i) out.vectors[k][i] = v[i * n + idx[k]];
    fix_phase(out.vectors[k], n);
  }
  return out;
}

}  // namespace

EigSys<2> eig_hermitian(const Mat2& m) {
  check_hermitian(hermiticity_error(m));
  const double a = m(0, 0).real();
  const double d = m(1, 1).real();
  const c64 b = m(0, 1);
  const double disc = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(b));
  const double lp = 0.5 * (a + d) + disc;
  const double lm = 0.5 * (a + d) - disc;

  EigSys<2> out;
  out.values = {lp, lm};
  if (std::abs(b) < 1e-300 && disc < 1e-300) {
    // degenerate diagonal: basis vectors in index order
    out.vectors[0][0] = 1.0;
    out.vectors[1][1] = 1.0;
    return out;
  }
  if (std::abs(b) < 1e-14 * (std::abs(a) + std::abs(d) + 1.0)) {
    if (a >= d) {
      out.vectors[0][0] = 1.0;
      out.vectors[1][1] = 1.0;
    } else {
      out.vectors[0][1] = 1.0;
      out.vectors[1][0] = 1.0;
    }
    return out;
  }
  const double g = lp - a;  // real
  Vec2 vp, vm;
  vp[0] = b;
  vp[1] = g;
  vm[0] = -g;
  vm[1] = std::conj(b);
  const double np = vp.norm();
  const double nm = vm.norm();
  vp = (1.0 / np) * vp;
  vm = (1.0 / nm) * vm;
  fix_phase(vp.a, 2);
  fix_phase(vm.a, 2);
  out.vectors = {vp, vm};
  return out;
}

EigSys<4> eig_hermitian(const Mat4& m) {
  check_hermitian(hermiticity_error(m));
  std::vector<c64> buf(m.a.begin(), m.a.end());
  const EigSysDyn dyn = eig_dyn_impl(std::move(buf), 4);
  EigSys<4> out;
  for (std::size_t k = 0; k < 4; ++k) {
    out.values[k] = dyn.values[k];
    for (std::size_t i = 0; i < 4; ++i) out.vectors[k][i] = dyn.vectors[k][i];
  }
  return out;
}

EigSysDyn eig_hermitian_dyn(const std::vector<c64>& m, std::size_t n) {
  double err = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      err = std::max(err, std::abs(m[i * n + j] - std::conj(m[j * n + i])));
  check_hermitian(err);
  return eig_dyn_impl(m, n);
}

}  // namespace qtraj
