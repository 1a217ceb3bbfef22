#include <cmath>
#include <numbers>

#include "doctest.h"
#include "susyqm/lpt.hpp"
#include "susyqm/reference_tables.hpp"
#include "susyqm/superpotential.hpp"

using namespace susyqm;
using doctest::Approx;

TEST_CASE("reparametrized potentials hit both endpoints") {
  const auto minus = Reparametrization::eps_x2(Sector::Minus);
  const auto plus = Reparametrization::eps_x2(Sector::Plus);
  const auto quartic = Reparametrization::quartic();
  for (double x : {-2.1, -0.4, 0.3, 1.0, 2.7}) {
    CHECK(minus.potential(x, 0.0) == Approx(x * x - 1.0).epsilon(1e-12));
    CHECK(plus.potential(x, 1.0) == Approx(std::pow(x, 4) + 2 * std::abs(x)).epsilon(1e-12));
    CHECK(minus.potential(x, 1.0) == Approx(std::pow(x, 4) - 2 * std::abs(x)).epsilon(1e-12));
    CHECK(quartic.potential(x, 1.0) == Approx(std::pow(x, 4) / 4).epsilon(1e-12));
    CHECK(quartic.taylor_term(0, x) == Approx(std::pow(0.25, 2.0 / 3.0) * x * x).epsilon(1e-12));
    const double L = std::log(x * x);
    CHECK(minus.taylor_term(1, x) == Approx(x * x * L - 0.5 * L - std::numbers::ln2).epsilon(1e-12));
  }
}

TEST_CASE("property: Taylor partial sums converge for |delta| <= 0.5") {
  for (const auto& rep : {Reparametrization::eps_x2(Sector::Minus), Reparametrization::eps_x2(Sector::Plus),
                          Reparametrization::quartic()})
    for (double d : {-0.5, -0.2, 0.25, 0.5})
      for (double x : {-1.7, -0.6, 0.45, 1.2}) {
        double sum = 0.0, p = 1.0;
        for (int m = 0; m <= 30; ++m) {
          sum += rep.taylor_term(m, x) * p;
          p *= d;
        }
        CHECK(sum == Approx(rep.potential(x, d)).epsilon(1e-10));
      }
}

TEST_CASE("Taylor terms at the origin") {
  const auto minus = Reparametrization::eps_x2(Sector::Minus);
  CHECK(minus.taylor_term(0, 0.0) == -1.0);
  CHECK(std::isinf(minus.taylor_term(1, 0.0)));
  CHECK(minus.taylor_term(1, 0.0) > 0.0);
  CHECK(Reparametrization::quartic().taylor_term(2, 0.0) == 0.0);
}

TEST_CASE("order zero") {
  CHECK(order0_solve(Reparametrization::eps_x2(Sector::Minus)).b0 == Approx(0.0).scale(1.0).epsilon(1e-14));
  CHECK(order0_solve(Reparametrization::eps_x2(Sector::Plus)).b0 == Approx(2.0));
  const Order0 q = order0_solve(Reparametrization::quartic());
  CHECK(q.b0 == Approx(0.629961).epsilon(1e-6));
  CHECK(q.omega == Approx(0.629961).epsilon(1e-6));
}

TEST_CASE("first order energies: closed form vs quadrature") {
  for (Sector s : {Sector::Minus, Sector::Plus}) {
    const auto rep = Reparametrization::eps_x2(s);
    CHECK(b1_quadrature(rep) == Approx(b1_closed_form(rep)).epsilon(1e-8));
  }
  CHECK(b1_closed_form(Reparametrization::eps_x2(Sector::Plus)) == Approx(-0.27036).epsilon(2e-5));
  CHECK(std::abs(b1_closed_form(Reparametrization::eps_x2(Sector::Minus)) - reference::kLptMinus) <= 1e-4);
  const auto q = Reparametrization::quartic();
  CHECK(b1_quadrature(q) == Approx(b1_closed_form(q)).epsilon(1e-8));
  CHECK(std::abs(order0_solve(q).b0 + b1_closed_form(q) - reference::kLptQuartic) <= 1e-4);
}

TEST_CASE("delta expansion of the eps x^2 problem") {
  for (Sector s : {Sector::Minus, Sector::Plus}) {
    DeltaExpansion ex(Reparametrization::eps_x2(s));
    ex.extend_to(3);
    CHECK(ex.b()[1] == Approx(b1_closed_form(ex.reparametrization())).epsilon(1e-8));
    CHECK(ex.energy_at(0.0) == ex.b()[0]);
    CHECK(ex.energy_at(1.0) == Approx(ex.b()[0] + ex.b()[1] + ex.b()[2] + ex.b()[3]));
    for (int n = 1; n <= 3; ++n) {
      CHECK(ex.riccati_residual(n) <= 1e-5);
      CHECK(ex.parity_defect(n) <= 1e-6);
      CHECK(ex.w(n)[ex.w(n).nearest_index(0.0)] == 0.0);
    }
    MESSAGE("sector " << to_string(s) << ": B = " << ex.b()[0] << ", " << ex.b()[1] << ", " << ex.b()[2] << ", "
                      << ex.b()[3]);
  }
  const DeltaExpansion first = [] {
    DeltaExpansion e(Reparametrization::eps_x2(Sector::Plus));
    e.extend_to(1);
    return e;
  }();
  CHECK(std::abs(first.energy_at(1.0) - reference::kLptPlus) <= 1e-4);
}

TEST_CASE("wavefunctions from the expansion") {
  DeltaExpansion ex(Reparametrization::eps_x2(Sector::Minus));
  ex.extend_to(1);
  const GridSpec g = GridSpec::symmetric(6.0, 1e-3);
  const GridFunction psi0 = ex.wavefunction_at(0.0, g);
  CHECK(psi0[g.count / 2] == Approx(std::pow(std::numbers::pi, -0.25)).epsilon(1e-8));
  const GridFunction psi = ex.wavefunction_at(1.0, g);
  const GridFunction exact = ground_state(Superpotential::sign_monomial(1.0, 1), g);
  const double overlap = std::abs(inner_product(psi, exact));
  MESSAGE("overlap with the exact zero mode: " << overlap);
  CHECK(overlap >= 0.9);
  CHECK_THROWS_AS(ex.wavefunction_at(1.0, GridSpec::symmetric(7.0, 1e-3)), GridError);
  CHECK_THROWS_AS(ex.wavefunction_at(-40.0, g), BrokenTruncationError);
}
