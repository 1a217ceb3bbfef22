#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "susyqm/common.hpp"

namespace susyqm {

// Uniform grid x_i = x0 + i*dx, i in [0, count).
struct GridSpec {
  double x0 = 0.0;
  double dx = 1e-3;
  std::size_t count = 0;

  // Grid from a to b inclusive. (b - a) is rounded to a whole number of steps,
  // so symmetric spans keep x = 0 as a sample when a/dx is integral.
  static GridSpec span(double a, double b, double dx);
  static GridSpec symmetric(double half_width, double dx) { return span(-half_width, half_width, dx); }

  double x(std::size_t i) const { return x0 + static_cast<double>(i) * dx; }
  double x_end() const { return x(count - 1); }
};

class GridFunction {
 public:
  GridFunction(double x0, double dx, std::vector<double> values);
  GridFunction(const GridSpec& grid, std::vector<double> values)
      : GridFunction(grid.x0, grid.dx, std::move(values)) {}

  static GridFunction sample(const RealFunction& f, const GridSpec& grid);

  double x0() const { return x0_; }
  double dx() const { return dx_; }
  std::size_t size() const { return values_.size(); }
  double x(std::size_t i) const { return x0_ + static_cast<double>(i) * dx_; }
  double x_end() const { return x(size() - 1); }
  GridSpec grid() const { return {x0_, dx_, values_.size()}; }

  double operator[](std::size_t i) const { return values_[i]; }
  double& operator[](std::size_t i) { return values_[i]; }
  const std::vector<double>& values() const { return values_; }

  // Trapezoid estimate of the integral of |psi|^2.
  double squared_norm() const;
  double max_abs() const;
  // Index of the sample closest to x (clamped to the grid).
  std::size_t nearest_index(double x) const;
  // Local cubic interpolation; x outside the grid clamps to the end samples.
  double interpolate(double x) const;

  GridFunction normalized() const;
  GridFunction scaled(double factor) const;

 private:
  double x0_;
  double dx_;
  std::vector<double> values_;
};

// Trapezoid inner product over the overlap of two grids with equal spacing.
double inner_product(const GridFunction& a, const GridFunction& b);

// Sign changes between consecutive nonzero samples.
int count_sign_changes(const GridFunction& f, std::size_t begin = 0,
                       std::size_t end = std::numeric_limits<std::size_t>::max());

// Fourth-order central first derivative on samples [2, n-2); result lives on
// the trimmed grid starting at x0 + 2 dx.
GridFunction derivative4(const GridFunction& f);

// Collects non-fatal warnings from operations that can degrade gracefully.
struct Diagnostics {
  std::vector<std::string> warnings;
};

// ---- special functions -----------------------------------------------------

// Lanczos approximation (g = 7, 9 terms). Throws DomainError for x <= 0.
double gamma_fn(double x);
double log_gamma(double x);
// psi(x) = Gamma'(x)/Gamma(x): recurrence up to x > 6, then asymptotic series.
double digamma(double x);

// ---- quadrature ------------------------------------------------------------

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct QuadratureOptions {
  double tol = 1e-10;
  int max_depth = 50;
  std::size_t max_intervals = 20000;
};

// Globally adaptive Gauss-Kronrod (7/15). Accepts when the summed error
// estimate is below tol * max(1, |I|). Infinite limits use x = t/(1-t^2).
// Endpoints are never evaluated, so integrable endpoint singularities are fine.
double integrate(const RealFunction& f, double a, double b, const QuadratureOptions& opts);
inline double integrate(const RealFunction& f, double a, double b, double tol = 1e-10) {
  return integrate(f, a, b, QuadratureOptions{tol});
}

// ---- generalized symmetric-definite eigenproblem ---------------------------

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// H alpha = E S alpha with S symmetric positive definite.
class MatrixPencil {
 public:
  MatrixPencil(Matrix S, Matrix H);

  int size() const { return static_cast<int>(S_.rows()); }
  const Matrix& S() const { return S_; }
  const Matrix& H() const { return H_; }

 private:
  Matrix S_;
  Matrix H_;
};

struct Eigenpair {
  double value;
  Vector coeffs;  // alpha^T S alpha = 1
};

// Cholesky reduction S = L L^T followed by cyclic Jacobi on L^-1 H L^-T.
// Ascending eigenvalues. Throws ConditioningError if S is not positive definite.
std::vector<Eigenpair> solve_pencil(const MatrixPencil& pencil);

// Cyclic Jacobi for a dense symmetric matrix; columns of `vectors` are eigenvectors.
void jacobi_eigen(const Matrix& A, Vector& values, Matrix& vectors);

// ---- ODE integration and root bracketing -----------------------------------

struct NumerovResult {
  GridFunction psi;
  // Set when |psi| crossed the blow-up threshold; psi then stops at that sample.
  bool diverged = false;
  int last_sign = 0;
};

// Integrates -psi'' + (V - E) psi = 0 forward on `grid` from (psi, psi') at
// grid.x0. The second sample comes from a fourth-order Taylor step using
// one-sided differences of V, so a kink in V at x0 is harmless.
NumerovResult numerov_integrate(const RealFunction& V, double E, const GridSpec& grid,
                                double psi_start, double dpsi_start, double blowup = 1e150);

// f returns a sign (-1, 0, +1). Bisects until the bracket width is <= tol and
// returns its midpoint. Throws BracketError when f(lo) == f(hi).
double bisect(const std::function<int(double)>& f, double lo, double hi, double tol);

}  // namespace susyqm
