#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtraj/algebra.hpp"
#include "qtraj/rng.hpp"
#include "qtraj/states.hpp"

using namespace qtraj;

namespace {

Mat2 random_mat2(SplitMix& rng) {
  Mat2 m;
  for (auto& x : m.a) x = c64{2.0 * rng.next01() - 1.0, 2.0 * rng.next01() - 1.0};
  return m;
}

Mat2 random_hermitian2(SplitMix& rng) {
  const Mat2 g = random_mat2(rng);
  return c64{0.5, 0.0} * (g + g.dagger());
}

Mat4 random_hermitian4(SplitMix& rng) {
  Mat4 g;
  for (auto& x : g.a) x = c64{2.0 * rng.next01() - 1.0, 2.0 * rng.next01() - 1.0};
  return c64{0.5, 0.0} * (g + g.dagger());
}

const Vec2 e0{{c64{1.0, 0.0}, c64{0.0, 0.0}}};
const Vec2 e1{{c64{0.0, 0.0}, c64{1.0, 0.0}}};

}  // namespace

TEST_CASE("tensor index convention: system is the high bit") {
  const Vec4 v = tensor(e0, e1);  // |0> ⊗ |1> -> index 1
  CHECK(std::abs(v[1] - c64{1.0, 0.0}) < 1e-15);
  CHECK(std::abs(v[0]) + std::abs(v[2]) + std::abs(v[3]) < 1e-15);
}

TEST_CASE("tensor of identities is the 4x4 identity") {
  CHECK((tensor(Mat2::identity(), Mat2::identity()) - Mat4::identity()).max_abs() ==
        doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("CNOT assembles from |0><0| ⊗ 1 + |1><1| ⊗ sigma_x") {
  const Mat4 built = tensor(outer(e0, e0), Mat2::identity()) +
                     tensor(outer(e1, e1), sigma_x());
  CHECK((built - strong_gate(GateKind::CNOT)).max_abs() < 1e-15);
  // same matrix entries row by row
  const Mat4 m = strong_gate(GateKind::CNOT);
  CHECK(m(0, 0) == c64{1.0, 0.0});
  CHECK(m(1, 1) == c64{1.0, 0.0});
  CHECK(m(3, 2) == c64{1.0, 0.0});
  CHECK(m(2, 3) == c64{1.0, 0.0});
}

TEST_CASE("tensor is bilinear and satisfies the mixed-product rule") {
  SplitMix rng(11);
  for (int it = 0; it < 100; ++it) {
    const Mat2 a = random_mat2(rng), b = random_mat2(rng);
    const Mat2 c = random_mat2(rng), d = random_mat2(rng);
    CHECK((tensor(a + b, c) - (tensor(a, c) + tensor(b, c))).max_abs() < 1e-12);
    CHECK((tensor(a, b) * tensor(c, d) - tensor(a * c, b * d)).max_abs() < 1e-12);
  }
}

TEST_CASE("partial trace of a Bell projector is maximally mixed") {
  Vec4 bell;
  bell[0] = 1.0 / std::sqrt(2.0);
  bell[3] = 1.0 / std::sqrt(2.0);
  const Mat2 reduced = partial_trace_env(outer(bell, bell));
  CHECK((reduced - c64{0.5, 0.0} * Mat2::identity()).max_abs() < 1e-15);
}

TEST_CASE("partial trace of a product is the system factor times Tr of the other") {
  SplitMix rng(12);
  for (int it = 0; it < 100; ++it) {
    const Mat2 a = random_mat2(rng), b = random_mat2(rng);
    const Mat2 lhs = partial_trace_env(tensor(a, b));
    CHECK((lhs - b.trace() * a).max_abs() < 1e-12);
  }
}

TEST_CASE("partial trace preserves the total trace") {
  SplitMix rng(13);
  Mat4 g;
  for (auto& x : g.a) x = c64{rng.next01(), rng.next01()};
  CHECK(std::abs(partial_trace_env(g).trace() - g.trace()) < 1e-13);
}

TEST_CASE("partial trace of the weak-CNOT joint state") {
  // joint = 0.6|00> + 0.8 cos(0.1)|10> - 0.8 i sin(0.1)|11>
  Vec4 joint;
  joint[0] = 0.6;
  joint[2] = 0.8 * std::cos(0.1);
  joint[3] = c64{0.0, -0.8 * std::sin(0.1)};
  const Mat2 rho = partial_trace_env(outer(joint, joint));
  CHECK(rho(0, 0).real() == doctest::Approx(0.36).epsilon(1e-14));
  CHECK(rho(1, 1).real() == doctest::Approx(0.64).epsilon(1e-14));
  CHECK(std::abs(rho(0, 1) - c64{0.48 * std::cos(0.1), 0.0}) < 1e-14);
}

TEST_CASE("2x2 eigensystem: sigma_x") {
  const auto eig = eig_hermitian(sigma_x());
  CHECK(eig.values[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(eig.values[1] == doctest::Approx(-1.0).epsilon(1e-14));
  // eigenvectors are the x-basis states, phase-fixed to real positive first entry
  CHECK(std::abs(eig.vectors[0][0] - c64{1.0 / std::sqrt(2.0), 0.0}) < 1e-12);
  CHECK(std::abs(eig.vectors[0][1] - c64{1.0 / std::sqrt(2.0), 0.0}) < 1e-12);
  CHECK(std::abs(eig.vectors[1][0] - c64{1.0 / std::sqrt(2.0), 0.0}) < 1e-12);
  CHECK(std::abs(eig.vectors[1][1] + c64{1.0 / std::sqrt(2.0), 0.0}) < 1e-12);
}

TEST_CASE("2x2 eigensystem: degenerate case returns the index-order basis") {
  const auto eig = eig_hermitian(c64{0.5, 0.0} * Mat2::identity());
  CHECK(eig.values[0] == doctest::Approx(0.5));
  CHECK(eig.values[1] == doctest::Approx(0.5));
  CHECK(std::abs(eig.vectors[0][0] - c64{1.0, 0.0}) < 1e-14);
  CHECK(std::abs(eig.vectors[1][1] - c64{1.0, 0.0}) < 1e-14);
}

TEST_CASE("eig_hermitian rejects non-Hermitian input") {
  Mat2 m;
  m(0, 1) = c64{1.0, 0.0};
  CHECK_THROWS_AS((void)eig_hermitian(m), NotHermitian);
}

TEST_CASE("eigendecomposition reconstructs 1000 random Hermitian matrices") {
  SplitMix rng(14);
  for (int it = 0; it < 1000; ++it) {
    const Mat2 m = random_hermitian2(rng);
    const auto eig = eig_hermitian(m);
    Mat2 rebuilt;
    for (std::size_t k = 0; k < 2; ++k)
      rebuilt = rebuilt + c64{eig.values[k], 0.0} * outer(eig.vectors[k], eig.vectors[k]);
    CHECK((rebuilt - m).max_abs() < 1e-10);
    CHECK(std::abs(inner(eig.vectors[0], eig.vectors[1])) < 1e-10);
    CHECK(eig.values[0] >= eig.values[1]);
  }
}

TEST_CASE("4x4 Jacobi reconstructs 1000 random Hermitian matrices") {
  SplitMix rng(15);
  for (int it = 0; it < 1000; ++it) {
    const Mat4 m = random_hermitian4(rng);
    const auto eig = eig_hermitian(m);
    Mat4 rebuilt;
    for (std::size_t k = 0; k < 4; ++k)
      rebuilt = rebuilt + c64{eig.values[k], 0.0} * outer(eig.vectors[k], eig.vectors[k]);
    CHECK((rebuilt - m).max_abs() < 1e-10);
    for (std::size_t k = 0; k < 4; ++k) {
      CHECK(std::abs(eig.vectors[k].norm() - 1.0) < 1e-10);
      for (std::size_t l = k + 1; l < 4; ++l)
        CHECK(std::abs(inner(eig.vectors[k], eig.vectors[l])) < 1e-10);
    }
    for (std::size_t k = 0; k + 1 < 4; ++k) CHECK(eig.values[k] >= eig.values[k + 1]);
  }
}

TEST_CASE("eigenvalues sort descending and phases are deterministic") {
  SplitMix rng(16);
  const Mat4 m = random_hermitian4(rng);
  const auto a = eig_hermitian(m);
  const auto b = eig_hermitian(m);
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(a.values[k] == b.values[k]);
    for (std::size_t i = 0; i < 4; ++i) CHECK(a.vectors[k][i] == b.vectors[k][i]);
    // first significant component real positive
    for (std::size_t i = 0; i < 4; ++i) {
      if (std::abs(a.vectors[k][i]) > 1e-6) {
        CHECK(a.vectors[k][i].imag() == doctest::Approx(0.0).epsilon(1e-10));
        CHECK(a.vectors[k][i].real() > 0.0);
        break;
      }
    }
  }
}
