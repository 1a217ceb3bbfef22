#include <cmath>

#include "doctest.h"
#include "susyqm/reference_tables.hpp"
#include "susyqm/shooting.hpp"

using namespace susyqm;
using doctest::Approx;

namespace {
double sho(double x) { return x * x; }
double v_minus(double x) { return x * x * x * x - 2.0 * std::abs(x); }
double v_plus(double x) { return x * x * x * x + 2.0 * std::abs(x); }
}  // namespace

TEST_CASE("divergence signs") {
  ShootingProblem p{sho, Parity::Even, 6.0, 1e-3, 0.5, 1.5};
  CHECK(divergence_sign(p, 0.9) == Divergence::Positive);
  CHECK(divergence_sign(p, 1.1) == Divergence::Negative);
  ShootingProblem q{v_minus, Parity::Even, 3.0, 1e-3, -0.5, 0.5};
  CHECK(divergence_sign(q, 0.0) == Divergence::Decays);
  ShootingProblem odd{v_minus, Parity::Odd, 4.0, 1e-3, 1.9, 2.0};
  CHECK(divergence_sign(odd, 1.9) != divergence_sign(odd, 2.0));
}

TEST_CASE("problem validation") {
  CHECK_THROWS_AS((ShootingProblem{[](double x) { return x * x + x; }, Parity::Even, 6.0, 1e-3, 0.0, 2.0}.validate()),
                  DomainError);
  CHECK_THROWS_AS((ShootingProblem{sho, Parity::Even, 2.0, 1e-3, 0.0, 2.0}.validate()), DomainError);
}

TEST_CASE("oscillator ladder") {
  for (int n = 0; n < 6; ++n) {
    const LevelResult r = find_level_n(sho, n, 2.0 * n + 0.5, 2.0 * n + 1.5);
    CHECK(r.energy == Approx(2.0 * n + 1.0).epsilon(1e-6));
    CHECK(r.parity == parity_of_level(n));
    CHECK(r.nodes == n / 2);
  }
}

TEST_CASE("mislabeled levels and bad brackets") {
  ShootingProblem p{sho, Parity::Even, 6.0, 1e-3, 0.5, 1.5};
  try {
    find_level(p, 2);
    FAIL("expected MislabeledLevelError");
  } catch (const MislabeledLevelError& e) {
    CHECK(e.measured_nodes() == 0);
  }
  ShootingProblem q{sho, Parity::Even, 6.0, 1e-3, 1.2, 2.5};
  CHECK_THROWS_AS(find_level(q, 0), BracketError);
}

TEST_CASE("quartic-plus-kink spectra in both sectors") {
  const auto& var_minus = reference::kVariationalMinus[9];
  const auto& var_plus = reference::kVariationalPlus[9];
  std::vector<double> minus, plus;
  for (int n = 1; n <= 7; ++n) {
    const auto [lo, hi] = variational_bracket(var_minus[n]);
    minus.push_back(find_level_n(v_minus, n, lo, hi).energy);
  }
  for (int n = 0; n <= 6; ++n) {
    const auto [lo, hi] = variational_bracket(var_plus[n]);
    plus.push_back(find_level_n(v_plus, n, lo, hi).energy);
  }
  for (int i = 0; i < 7; ++i) {
    CHECK(std::abs(minus[i] - reference::kShooting[i]) <= 1e-3);
    CHECK(std::abs(plus[i] - reference::kShooting[i]) <= 1e-3);
  }
  for (int n = 0; n <= 4; ++n) CHECK(std::abs(minus[n] - plus[n]) <= 1e-5);
  // Frozen values of this implementation (dx = 1e-3).
  CHECK(minus[0] == Approx(1.9695075).epsilon(1e-7));
  CHECK(minus[6] == Approx(29.2325546).epsilon(1e-7));
}

TEST_CASE("property: determinism and dx convergence") {
  const auto [lo, hi] = variational_bracket(9.39868);
  const double a = find_level_n(v_minus, 3, lo, hi).energy;
  const double b = find_level_n(v_minus, 3, lo, hi).energy;
  CHECK(a == b);
  for (int n : {1, 4}) {
    const auto br = variational_bracket(reference::kVariationalMinus[9][n]);
    const double coarse = find_level_n(v_minus, n, br.first, br.second, 1e-3).energy;
    const double fine = find_level_n(v_minus, n, br.first, br.second, 5e-4).energy;
    CHECK(std::abs(coarse - fine) <= 1e-6);
  }
}
