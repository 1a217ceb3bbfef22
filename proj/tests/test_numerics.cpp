#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "susyqm/numerics.hpp"

using namespace susyqm;
using doctest::Approx;

TEST_CASE("grid span keeps zero on symmetric grids") {
  const GridSpec g = GridSpec::symmetric(6.0, 1e-3);
  CHECK(g.count == 12001);
  CHECK(g.x(6000) == Approx(0.0).epsilon(1e-14));
  CHECK_THROWS_AS(GridSpec::span(1.0, 0.0, 0.1), GridError);
  CHECK_THROWS_AS(GridSpec::span(0.0, 1.0, -0.1), GridError);
}

TEST_CASE("grid function validation") {
  CHECK_THROWS_AS(GridFunction(0.0, 0.1, {}), GridError);
  CHECK_THROWS_AS(GridFunction(0.0, 0.0, {1.0}), GridError);
  CHECK_THROWS_AS(GridFunction(0.0, 0.1, {1.0, NAN}), GridError);
}

TEST_CASE("gaussian norm, interpolation and derivative") {
  const GridSpec g = GridSpec::symmetric(8.0, 1e-2);
  const auto f = GridFunction::sample([](double x) { return std::exp(-x * x / 2.0); }, g);
  CHECK(f.squared_norm() == Approx(std::sqrt(std::numbers::pi)).epsilon(1e-12));
  CHECK(f.normalized().squared_norm() == Approx(1.0).epsilon(1e-14));
  CHECK(f.interpolate(0.123) == Approx(std::exp(-0.123 * 0.123 / 2.0)).epsilon(1e-8));
  const GridFunction d = derivative4(f);
  CHECK(d.size() == f.size() - 4);
  double worst = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double x = d.x(i);
    worst = std::max(worst, std::abs(d[i] + x * std::exp(-x * x / 2.0)));
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("inner product and sign changes") {
  const GridSpec g = GridSpec::span(0.0, std::numbers::pi, 1e-3);
  const auto s1 = GridFunction::sample([](double x) { return std::sin(x); }, g);
  const auto s2 = GridFunction::sample([](double x) { return std::sin(2 * x); }, g);
  CHECK(std::abs(inner_product(s1, s2)) < 1e-6);
  const auto s5 = GridFunction::sample([](double x) { return std::sin(5 * x + 0.1); }, g);
  CHECK(count_sign_changes(s5) == 5);
}

TEST_CASE("special functions against std") {
  for (double x : {0.1, 0.5, 1.0, 1.5, 2.5, 7.3, 20.0}) {
    CHECK(gamma_fn(x) == Approx(std::tgamma(x)).epsilon(1e-13));
    CHECK(log_gamma(x) == Approx(std::lgamma(x)).epsilon(1e-13));
  }
  CHECK(digamma(1.0) == Approx(-0.57721566490153286).epsilon(1e-13));
  CHECK(digamma(0.5) == Approx(-1.9635100260214235).epsilon(1e-13));
  CHECK(digamma(1.5) == Approx(0.03648997397857652).epsilon(1e-12));
  CHECK_THROWS_AS(gamma_fn(0.0), DomainError);
  CHECK_THROWS_AS(digamma(-1.0), DomainError);
}

TEST_CASE("property: digamma recurrence psi(x+1) = psi(x) + 1/x") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(0.05, 30.0);
  for (int i = 0; i < 200; ++i) {
    const double x = u(rng);
    CHECK(digamma(x + 1.0) - digamma(x) == Approx(1.0 / x).epsilon(1e-11));
  }
}

TEST_CASE("quadrature") {
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  CHECK(integrate([](double x) { return std::exp(-x * x); }, -kInf, kInf) == Approx(sqrt_pi).epsilon(1e-10));
  CHECK(integrate([](double x) { return std::exp(-x * x); }, 0.0, kInf) == Approx(sqrt_pi / 2).epsilon(1e-10));
  CHECK(integrate([](double x) { return std::exp(-x * x); }, -kInf, 0.0) == Approx(sqrt_pi / 2).epsilon(1e-10));
  // log singularity at an endpoint
  CHECK(integrate([](double x) { return std::log(x); }, 0.0, 1.0) == Approx(-1.0).epsilon(1e-9));
  CHECK(integrate([](double x) { return x * x * std::log(x * x) * std::exp(-x * x); }, 0.0, kInf) ==
        Approx(std::sqrt(std::numbers::pi) / 4.0 * (digamma(1.5))).epsilon(1e-9));
  CHECK(integrate([](double x) { return x; }, 1.0, 0.0) == Approx(-0.5));
  QuadratureOptions tight{1e-15, 3, 10};
  CHECK_THROWS_AS(integrate([](double x) { return std::sin(50 * x); }, 0.0, 10.0, tight), AccuracyError);
}

TEST_CASE("pencil solver agrees with Eigen on random SPD pencils") {
  std::mt19937 rng(11);
  std::normal_distribution<double> n01;
  for (int trial = 0; trial < 5; ++trial) {
    const int n = 3 + trial * 2;
    Matrix B(n, n), C(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        B(i, j) = n01(rng);
        C(i, j) = n01(rng);
      }
    Matrix S = B * B.transpose() + n * Matrix::Identity(n, n);
    Matrix H = C + C.transpose();
    const auto pairs = solve_pencil(MatrixPencil(S, H));
    Eigen::GeneralizedSelfAdjointEigenSolver<Matrix> ref(H, S);
    REQUIRE(pairs.size() == static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      CHECK(pairs[k].value == Approx(ref.eigenvalues()(k)).epsilon(1e-10));
      CHECK(pairs[k].coeffs.dot(S * pairs[k].coeffs) == Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("pencil validation") {
  Matrix S = Matrix::Identity(2, 2);
  Matrix H(2, 2);
  H << 1, 2, 3, 4;
  CHECK_THROWS_AS(MatrixPencil(S, H), DomainError);
  Matrix bad(2, 2);
  bad << 1, 2, 2, 1;  // indefinite
  CHECK_THROWS_AS(solve_pencil(MatrixPencil(bad, S)), ConditioningError);
  CHECK_THROWS_AS(MatrixPencil(Matrix::Identity(2, 2), Matrix::Identity(3, 3)), DomainError);
}

TEST_CASE("numerov reproduces the oscillator ground state") {
  // -psi'' + x^2 psi = psi has psi = exp(-x^2/2)
  const GridSpec g = GridSpec::span(0.0, 3.0, 1e-3);
  const auto r = numerov_integrate([](double x) { return x * x; }, 1.0, g, 1.0, 0.0);
  CHECK_FALSE(r.diverged);
  double worst = 0.0;
  for (std::size_t i = 0; i < r.psi.size(); ++i)
    worst = std::max(worst, std::abs(r.psi[i] - std::exp(-r.psi.x(i) * r.psi.x(i) / 2.0)));
  CHECK(worst < 1e-7);
}

TEST_CASE("numerov divergence sign brackets the level") {
  const GridSpec g = GridSpec::span(0.0, 6.0, 1e-3);
  auto sign = [&](double E) {
    return numerov_integrate([](double x) { return x * x; }, E, g, 1.0, 0.0, 1e6).last_sign;
  };
  CHECK(sign(0.9) == 1);
  CHECK(sign(1.1) == -1);
  CHECK(bisect(sign, 0.5, 1.5, 1e-10) == Approx(1.0).epsilon(1e-8));
  CHECK_THROWS_AS(bisect(sign, 0.1, 0.5, 1e-6), BracketError);
}
