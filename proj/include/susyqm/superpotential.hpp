#pragma once

#include <optional>
#include <string>
#include <variant>

#include "susyqm/common.hpp"
#include "susyqm/numerics.hpp"

namespace susyqm {

// W(x) = g x^(2n+1)
struct OddMonomial {
  double g;
  int n;
};

// W(x) = g eps(x) x^(2n), eps(0) = 0
struct SignMonomial {
  double g;
  int n;
};

// Radial hydrogen hierarchy, W(r) = e^2 / (2 nu) - nu / r with nu = l + j + 1.
// j is the zero-based position in the hierarchy (j = 0 factorizes H_1).
struct CoulombRadial {
  double e2;
  int l;
  int j;
};

// Infinite well on (0, L): W(x) = -(pi/L) cot(pi x / L)
struct WellCotangent {
  double L;
};

// Sampled W and W'. Evaluation outside the grid clamps to the end samples.
struct Tabulated {
  GridFunction w;
  GridFunction dw;
};

class Superpotential {
 public:
  using Family = std::variant<OddMonomial, SignMonomial, CoulombRadial, WellCotangent, Tabulated>;

  Superpotential(Family family);

  static Superpotential odd_monomial(double g, int n) { return Superpotential(OddMonomial{g, n}); }
  static Superpotential sign_monomial(double g, int n) { return Superpotential(SignMonomial{g, n}); }
  static Superpotential coulomb_radial(double e2, int l, int j) { return Superpotential(CoulombRadial{e2, l, j}); }
  static Superpotential well_cotangent(double L) { return Superpotential(WellCotangent{L}); }
  static Superpotential tabulated(GridFunction w, GridFunction dw) {
    return Superpotential(Tabulated{std::move(w), std::move(dw)});
  }
  // Samples an arbitrary W and its derivative onto `grid`.
  static Superpotential tabulated(const RealFunction& w, const RealFunction& dw, const GridSpec& grid);

  const Family& family() const { return family_; }
  std::string name() const;

  double w(double x) const;
  // Classical derivative; at the kink of SignMonomial n = 0 this is 0 and the
  // delta contribution is reported separately by PartnerPair::spike().
  double dw(double x) const;
  // An antiderivative of W. Zero at x = 0 for the families defined there; the
  // half-line families use log-type closed forms with their own constant.
  double antiderivative(double x) const;
  // Coefficient c of a c * delta(x) term in W' (only SignMonomial n = 0 has one).
  std::optional<double> derivative_delta_weight() const;

  Superpotential negated() const;

 private:
  Family family_;
  std::optional<GridFunction> tab_integral_;
  bool negate_ = false;
};

// V_minus carries weight `minus_weight` * delta(x - position); V_plus likewise.
struct DeltaSpike {
  double position;
  double minus_weight;
  double plus_weight;
};

class PartnerPair {
 public:
  explicit PartnerPair(Superpotential w) : w_(std::move(w)) {}

  double v_minus(double x) const;
  double v_plus(double x) const;
  double v(Sector s, double x) const { return s == Sector::Minus ? v_minus(x) : v_plus(x); }
  RealFunction v_minus_fn() const;
  RealFunction v_plus_fn() const;
  std::optional<DeltaSpike> spike() const;
  const Superpotential& superpotential() const { return w_; }

 private:
  Superpotential w_;
};

PartnerPair partner_potentials(const Superpotential& w);

struct SusyStatus {
  bool preserved;
  // Sector whose zero-energy state exp(-+ int W) is normalizable, when preserved.
  std::optional<Sector> zero_mode;
};

// Asymptotic sign test at x = +-x_big (half-line families use their own domain
// ends; Tabulated uses its end samples).
SusyStatus susy_status(const Superpotential& w, double x_big = 20.0);

// N exp(-int_0^x W) on `grid`, normalized so the trapezoid norm is 1.
// Throws BrokenSusyError when the minus sector has no normalizable zero mode.
GridFunction ground_state(const Superpotential& w, const GridSpec& grid);

// Closed-form normalization of exp(-g x^(2n+2) / (2n+2)).
double odd_monomial_norm(double g, int n);

// A = W + d/dx and A^dagger = W - d/dx on the interior grid (two samples are
// dropped at each end). dx > 0.1 adds an accuracy warning to `diag`.
GridFunction apply_A(const Superpotential& w, const GridFunction& psi, Diagnostics* diag = nullptr);
GridFunction apply_Adag(const Superpotential& w, const GridFunction& psi, Diagnostics* diag = nullptr);

}  // namespace susyqm
