#pragma once

#include <complex>
#include <functional>

#include "susyqm/numerics.hpp"

namespace susyqm {

// W = g eps(x): V-+ = g^2 -+ 2g delta(x), a delta well (minus) and barrier (plus).
// Incident wave A e^{ikx} from the left, B e^{-ikx} reflected, C e^{ikx}
// transmitted, k = sqrt(E - g^2). A = 1 throughout.
struct ScatteringSolution {
  Sector sector;
  double g;
  double energy;
  double k;
  std::complex<double> b_over_a;
  std::complex<double> c_over_a;
  double reflection;
  double transmission;

  std::complex<double> psi(double x) const;
};

// Throws SubThresholdError for E <= g^2.
ScatteringSolution scatter(Sector sector, double g, double energy);

struct BoundState {
  double energy;
  std::function<double(double)> psi;
};

// E = 0, psi = sqrt(g) e^{-g|x|}. The barrier has no bound state: the plus
// sector throws NoBoundStateError.
BoundState bound_state(double g, Sector sector = Sector::Minus);

struct SusyMapReport {
  std::complex<double> factor;    // A psi- = factor * psi+
  double max_relative_deviation;  // over grid samples with x != 0
  double ratio_variance;          // spread of (A psi-)/psi+ across samples
  double bound_state_residual;    // max |A psi_0| over the same samples
  std::size_t samples;
  bool passed;                    // max_relative_deviation <= 1e-8
};

// Applies A = g eps(x) + d/dx analytically to the minus-sector solution and
// compares with the plus-sector solution at the same k.
SusyMapReport susy_map_check(double g, double energy, const GridSpec& grid);

}  // namespace susyqm
