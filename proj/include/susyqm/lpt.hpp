#pragma once

#include <vector>

#include "susyqm/numerics.hpp"

namespace susyqm {

// delta-reparametrized potentials interpolating between a harmonic baseline
// (delta = 0) and the target problem (delta = 1).
struct Reparametrization {
  enum class Family {
    EpsX2,    // (x^2)^(1+d) -+ (4x^2)^(d/2): target x^4 -+ 2|x|
    Quartic,  // c^(2+d) (x^2)^(1+d), c = (1/4)^(1/3): target x^4 / 4
  };
  Family family;
  Sector sector = Sector::Minus;  // EpsX2 only

  static Reparametrization eps_x2(Sector s) { return {Family::EpsX2, s}; }
  static Reparametrization quartic() { return {Family::Quartic, Sector::Minus}; }

  double potential(double x, double delta) const;
  // V_m(x): coefficient of delta^m in the Taylor series of V(x; delta) about 0.
  // At x = 0 the analytic limit is returned (+-infinity for the EpsX2 log terms).
  double taylor_term(int m, double x) const;
  std::vector<RealFunction> taylor_potential(int order) const;
};

struct Order0 {
  double omega;  // W_0(x) = omega x
  double b0;
};

// Fits the order-0 potential to alpha x^2 + beta. Throws UnsupportedBaselineError
// if it is not harmonic-plus-constant.
Order0 order0_solve(const Reparametrization& rep);

// B_1 from the digamma closed forms.
double b1_closed_form(const Reparametrization& rep);
// B_1 = <phi0|V_1|phi0> by adaptive quadrature over the whole line.
double b1_quadrature(const Reparametrization& rep, double tol = 1e-12);

class DeltaExpansion {
 public:
  // `half_width` sets the internal grid [-half_width, half_width]; W_m is
  // trusted on [-trusted, trusted], where the tail truncation is negligible.
  explicit DeltaExpansion(Reparametrization rep, double dx = 1e-3, double half_width = 8.0, double trusted = 6.0);

  const Reparametrization& reparametrization() const { return rep_; }
  int order() const { return static_cast<int>(b_.size()) - 1; }
  double omega() const { return omega_; }
  const std::vector<double>& b() const { return b_; }
  // W_m on the internal grid.
  const GridFunction& w(int m) const { return w_.at(static_cast<std::size_t>(m)); }
  // W_m interpolated onto `grid`, which must lie inside the trusted window.
  GridFunction w_on(int m, const GridSpec& grid) const;
  double trusted_half_width() const { return trusted_; }

  // Computes (B_n, W_n) for n = order() + 1 from the supplied V_n.
  void order_n_step(const RealFunction& v_n);
  // Runs order_n_step with the reparametrization's own Taylor terms up to `n`.
  void extend_to(int n);

  double energy_at(double delta) const;
  // Normalized exp(-int_0^x sum_m W_m delta^m). Throws BrokenTruncationError
  // when the truncated W does not confine (wrong sign at either trusted edge).
  GridFunction wavefunction_at(double delta, const GridSpec& grid) const;

  // max |V_n - B_n - sum_k W_k W_{n-k} + W_n'| over 0.05 <= |x| <= 3.5.
  double riccati_residual(int n) const;
  // max |W_n(x) + W_n(-x)| over the trusted window.
  double parity_defect(int n) const;

 private:
  double phi0_sq(double x) const;

  Reparametrization rep_;
  GridSpec grid_;
  double trusted_;
  double omega_;
  std::vector<double> b_;
  std::vector<GridFunction> w_;
};

}  // namespace susyqm
