#pragma once

#include <optional>
#include <vector>

#include "susyqm/numerics.hpp"

namespace susyqm {

enum class Envelope {
  CubicExp,  // exp(-|x|^3 / 3)
  Gaussian,  // exp(-x^2 / 2)
};

// f_j(x) = x^j * envelope(x), j = 0 .. size-1.
struct BasisSpec {
  Envelope envelope;
  int size;

  double f(int j, double x) const;
  // Analytic second derivative of f_j.
  double f2(int j, double x) const;
};

// Closed-form S and H for V = x^4 -+ 2|x| (g = 1) in the CubicExp basis of size m.
MatrixPencil build_pencil_eps_x2(int m, Sector sector);

// S_kl = int f_k f_l, H_kl = int f_k (-f_l'' + V f_l), split at x = 0 and
// symmetrized. Throws AccuracyError when an integral does not converge.
MatrixPencil build_pencil_quadrature(const BasisSpec& basis, const RealFunction& V, double tol = 1e-12);

struct VariationalLevel {
  double energy;
  Parity parity;
  Vector coeffs;  // S-normalized, first significant entry positive
};

struct VariationalResult {
  BasisSpec basis;
  std::optional<Sector> sector;
  std::vector<VariationalLevel> levels;

  std::vector<double> energies() const;
  // phi_n = sum_j alpha^n_j f_j sampled on `grid`.
  GridFunction wavefunction(int n, const GridSpec& grid) const;
};

// Ordered by energy, ties (within 1e-10) broken even-parity first.
VariationalResult solve_variational(const MatrixPencil& pencil, const BasisSpec& basis,
                                    std::optional<Sector> sector = std::nullopt);

// Energies of the g != 1 problem from the g = 1 ones: E(g) = g^(2/3) E(1).
inline double scale_eps_x2_energy(double e1, double g) { return std::cbrt(g * g) * e1; }

// Delta(x) = -phi'' + V phi - E phi with three-point differences, on the grid
// with one sample dropped at each end.
GridFunction residual(const GridFunction& phi, double E, const RealFunction& V);

}  // namespace susyqm
