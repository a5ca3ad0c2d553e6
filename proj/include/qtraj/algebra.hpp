#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "qtraj/errors.hpp"

namespace qtraj {

using c64 = std::complex<double>;

inline constexpr c64 I_UNIT{0.0, 1.0};

template <std::size_t N>
struct Vec {
  std::array<c64, N> a{};

  c64& operator[](std::size_t i) { return a[i]; }
  const c64& operator[](std::size_t i) const { return a[i]; }

  double norm_sq() const {
    double s = 0.0;
    for (const auto& x : a) s += std::norm(x);
    return s;
  }
  double norm() const { return std::sqrt(norm_sq()); }

  friend Vec operator+(Vec lhs, const Vec& rhs) {
    for (std::size_t i = 0; i < N; ++i) lhs.a[i] += rhs.a[i];
    return lhs;
  }
  friend Vec operator-(Vec lhs, const Vec& rhs) {
    for (std::size_t i = 0; i < N; ++i) lhs.a[i] -= rhs.a[i];
    return lhs;
  }
  friend Vec operator*(const c64& s, Vec v) {
    for (auto& x : v.a) x *= s;
    return v;
  }
};

using Vec2 = Vec<2>;
using Vec4 = Vec<4>;

template <std::size_t N>
struct Mat {
  std::array<c64, N * N> a{};

  c64& operator()(std::size_t i, std::size_t j) { return a[i * N + j]; }
  const c64& operator()(std::size_t i, std::size_t j) const { return a[i * N + j]; }

  static Mat identity() {
    Mat m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  Mat dagger() const {
    Mat m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) m(i, j) = std::conj((*this)(j, i));
    return m;
  }

  c64 trace() const {
    c64 t = 0.0;
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& x : a) m = std::max(m, std::abs(x));
    return m;
  }

  double frobenius() const {
    double s = 0.0;
    for (const auto& x : a) s += std::norm(x);
    return std::sqrt(s);
  }

  friend Mat operator+(Mat lhs, const Mat& rhs) {
    for (std::size_t i = 0; i < N * N; ++i) lhs.a[i] += rhs.a[i];
    return lhs;
  }
  friend Mat operator-(Mat lhs, const Mat& rhs) {
    for (std::size_t i = 0; i < N * N; ++i) lhs.a[i] -= rhs.a[i];
    return lhs;
  }
  friend Mat operator*(const c64& s, Mat m) {
    for (auto& x : m.a) x *= s;
    return m;
  }
  friend Mat operator*(const Mat& lhs, const Mat& rhs) {
    Mat m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const c64 lik = lhs(i, k);
        if (lik == c64{}) continue;
        for (std::size_t j = 0; j < N; ++j) m(i, j) += lik * rhs(k, j);
      }
    return m;
  }
  friend Vec<N> operator*(const Mat& m, const Vec<N>& v) {
    Vec<N> r;
    for (std::size_t i = 0; i < N; ++i) {
      c64 s = 0.0;
      for (std::size_t j = 0; j < N; ++j) s += m(i, j) * v[j];
      r[i] = s;
    }
    return r;
  }
};

using Mat2 = Mat<2>;
using Mat4 = Mat<4>;

template <std::size_t N>
c64 inner(const Vec<N>& x, const Vec<N>& y) {
  c64 s = 0.0;
  for (std::size_t i = 0; i < N; ++i) s += std::conj(x[i]) * y[i];
  return s;
}

template <std::size_t N>
Mat<N> outer(const Vec<N>& x, const Vec<N>& y) {
  Mat<N> m;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) m(i, j) = x[i] * std::conj(y[j]);
  return m;
}

template <std::size_t N>
double hermiticity_error(const Mat<N>& m) {
  return (m - m.dagger()).max_abs();
}

template <std::size_t N>
double unitarity_error(const Mat<N>& m) {
  return (m.dagger() * m - Mat<N>::identity()).max_abs();
}

// Kronecker products with index convention |i>⊗|j> -> 2i+j (system is the high bit).
Vec4 tensor(const Vec2& a, const Vec2& b);
Mat4 tensor(const Mat2& a, const Mat2& b);

// Trace over the low (environment) index; preserves the total trace.
Mat2 partial_trace_env(const Mat4& m);

template <std::size_t N>
struct EigSys {
  std::array<double, N> values{};     // sorted descending
  std::array<Vec<N>, N> vectors{};    // orthonormal, phase-fixed
};

// Closed form for 2x2, cyclic Jacobi otherwise. Eigenvectors get a deterministic
// phase: the first component above threshold is made real positive.
EigSys<2> eig_hermitian(const Mat2& m);
EigSys<4> eig_hermitian(const Mat4& m);

// Same Jacobi kernel for the channel module's 16x16 M-matrix.
struct EigSysDyn {
  std::vector<double> values;
  std::vector<std::vector<c64>> vectors;
};
EigSysDyn eig_hermitian_dyn(const std::vector<c64>& m, std::size_t n);

}  // namespace qtraj
