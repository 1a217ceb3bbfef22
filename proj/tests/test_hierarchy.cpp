#include <cmath>
#include <numbers>

#include "doctest.h"
#include "susyqm/hierarchy.hpp"

using namespace susyqm;
using doctest::Approx;

TEST_CASE("shifted oscillator chain pairing") {
  const HierarchyChain chain = HierarchyChain::shifted_oscillator(5);
  const PairingTable t = chain_energies(chain, 4);
  CHECK(t.max_deviation == 0.0);
  bool found = false;
  for (const PairingRow& r : t.rows)
    if (r.member == 0 && r.level == 3 && r.shift == 3) {
      CHECK(r.shifted_energy == Approx(7.0));
      found = true;
    }
  CHECK(found);
  for (const PairingRow& r : t.rows)
    if (r.shift == 0) CHECK(r.shifted_energy == r.energy);
  CHECK_THROWS_AS(chain_energies(HierarchyChain::shifted_oscillator(1), 3), DomainError);
}

TEST_CASE("chain validation and Riccati consistency") {
  const HierarchyChain chain = HierarchyChain::shifted_oscillator(4, 1.3);
  for (int k = 0; k + 1 < chain.depth(); ++k)
    for (double x : {-2.0, -0.3, 0.0, 1.7}) {
      CHECK(chain.potential(k + 1, x) - chain.potential(k, x) == Approx(2.0 * chain.member(k).w.dw(x)));
      CHECK(chain.potential_from_w(k + 1, x) == Approx(chain.potential(k + 1, x)));
    }
  std::vector<HierarchyMember> bad{{Superpotential::odd_monomial(1, 0), 2.0, std::nullopt},
                                   {Superpotential::odd_monomial(1, 0), 1.0, std::nullopt}};
  CHECK_THROWS_AS(HierarchyChain{bad}, DomainError);
}

TEST_CASE("property: V_k via W' sums equals V_k via ground-state logs") {
  const HierarchyChain chain = HierarchyChain::shifted_oscillator(4);
  const GridSpec g = GridSpec::symmetric(5.0, 1e-2);
  for (int k = 1; k < chain.depth(); ++k) {
    const GridFunction v = chain.potential_from_ground_states(k, g);
    double worst = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) worst = std::max(worst, std::abs(v[i] - chain.potential_from_w(k, v.x(i))));
    CHECK(worst < 1e-6);
  }
}

TEST_CASE("shape invariant spectra") {
  const auto sho = shape_invariant_spectrum(oscillator_model(), 0.0, 4);
  REQUIRE(sho.size() == 5);
  for (int j = 0; j <= 4; ++j) CHECK(sho[j] == Approx(2.0 * j));
  CHECK(shape_invariant_spectrum(oscillator_model(), 0.0, 0) == std::vector<double>{0.0});

  const double e2 = 1.7;
  const ShapeInvariantModel h = hydrogen_model(e2);
  for (int l = 0; l < 4; ++l) CHECK(shape_invariance_deviation(h, l) <= 1e-9);
  const auto hs = shape_invariant_spectrum(h, 2, 5);
  const double e4 = e2 * e2;
  for (int j = 0; j <= 5; ++j) CHECK(hs[j] == Approx(e4 / 4 * (1.0 / 9.0 - 1.0 / ((3.0 + j) * (3.0 + j)))).epsilon(1e-13));

  ShapeInvariantModel broken = oscillator_model();
  broken.remainder = [](double) { return 3.0; };
  CHECK_THROWS_AS(shape_invariant_spectrum(broken, 0.0, 2), DomainError);
}

TEST_CASE("hydrogen levels") {
  CHECK(hydrogen_levels(0, 0, 2.0) == Approx(-1.0));
  CHECK(hydrogen_levels(1, 1, 2.0) == Approx(-1.0 / 9.0));
  CHECK(hydrogen_levels(0, 2, 4.0) == Approx(4.0 * hydrogen_levels(0, 2, 2.0)));
  for (int l = 0; l < 3; ++l) {
    const auto e = hydrogen_levels_engine(l, 4, 2.0);
    for (int j = 0; j <= 4; ++j) CHECK(std::abs(e[j] / hydrogen_levels(l, j, 2.0) - 1.0) < 1e-12);
  }
}

namespace {
double radial_reference(int n, int l, double a, double r) {
  // u_{n,l}(r) = r R_{n,l}(r) from the associated Laguerre form.
  const double rho = 2.0 * r / (n * a);
  const double norm = std::sqrt(std::pow(2.0 / (n * a), 3) * std::tgamma(n - l) / (2.0 * n * std::tgamma(n + l + 1)));
  return r * norm * std::exp(-rho / 2) * std::pow(rho, l) * std::assoc_laguerre(n - l - 1, 2 * l + 1, rho);
}
}  // namespace

TEST_CASE("hydrogen radial functions from the ladder") {
  const double e2 = 2.0, a = 1.0;
  const GridSpec g = GridSpec::span(1e-3, 250.0, 1e-3);
  for (int l = 0; l < 3; ++l)
    for (int j = 0; j < 4; ++j) {
      const HydrogenState s = hydrogen_wavefunction(l, j, e2, g);
      CHECK(s.nodes == j);
      CHECK(s.grid_norm == Approx(1.0).epsilon(1e-6));
      const int n = l + j + 1;
      const double sign = s.psi.interpolate(0.5) * radial_reference(n, l, a, 0.5) > 0 ? 1.0 : -1.0;
      for (double r : {0.3, 1.0, 2.5, 7.0})
        CHECK(sign * s.psi.interpolate(r) == Approx(radial_reference(n, l, a, r)).epsilon(1e-7));
    }
  const auto s0 = hydrogen_wavefunction(0, 0, e2, g);
  const auto s1 = hydrogen_wavefunction(0, 1, e2, g);
  CHECK(std::abs(inner_product(s0.psi, s1.psi)) < 1e-6);
  CHECK_THROWS_AS(hydrogen_wavefunction(0, 0, e2, GridSpec::span(0.0, 10.0, 0.01)), GridError);
}

TEST_CASE("infinite well partner") {
  const double L = std::numbers::pi;
  const GridSpec g = GridSpec::span(1e-3, L - 1e-3, 1e-3);
  const WellPartner p1 = infinite_well_partner(L, 1, g);
  CHECK(p1.e_minus == Approx(3.0));
  CHECK(p1.e_plus == Approx(3.0));
  // psi+_0 is proportional to sin^2 x
  const double c = p1.psi_plus.interpolate(L / 2);
  CHECK(p1.psi_plus.interpolate(0.7) == Approx(c * std::sin(0.7) * std::sin(0.7)).epsilon(1e-9));
  CHECK(infinite_well_partner(L, 2, g).e_minus == Approx(8.0));
  for (int n = 1; n <= 4; ++n) CHECK(infinite_well_partner(L, n, g).max_deviation <= 1e-6);
  CHECK_THROWS_AS(infinite_well_partner(L, 0, g), NoPartnerError);
  CHECK_THROWS_AS(infinite_well_partner(L, 1, GridSpec::span(0.0, 1.0, 0.01)), GridError);
}
