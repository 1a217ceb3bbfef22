#pragma once

#include <optional>
#include <vector>

#include "susyqm/numerics.hpp"

namespace susyqm {

// F(x) = sum a_j x^j solving F'' - 2 g sigma x^2 F' + E F = 0 on the half-line
// where eps(x) = sigma, so psi = F exp(-g|x|^3/3).
struct FrobeniusSeries {
  double a0;
  double a1;
  double energy;
  double g;
  int sigma;
  std::vector<double> a;           // a_0 .. a_J
  std::optional<int> overflow_at;  // index where |a_j| passed 1e300, if any

  int j_max() const { return static_cast<int>(a.size()) - 1; }
  double evaluate(double x) const;  // Horner over a_0..a_J
};

// a_2 = -E a_0 / 2, a_j = (2 g sigma (j-3) a_{j-3} - E a_{j-2}) / (j (j-1)).
// Stops early (and records overflow_at) once a coefficient exceeds 1e300.
FrobeniusSeries recurrence_coeffs(double a0, double a1, double energy, double g, int sigma, int j_max = 200);

// psi(x) = F(x) exp(-g|x|^3/3) with sigma = +1 for x >= 0 and -1 for x < 0; the
// branches share a_0 and a_1 so value and slope match at 0. Adds a radius
// warning when a branch overflowed or its last term is not negligible.
GridFunction evaluate_candidate(double a0, double a1, double energy, double g, const GridSpec& grid,
                                int j_max = 200, Diagnostics* diag = nullptr);

// Smallest d with a_j = 0 for every d < j <= J, when the series truncates.
std::optional<int> truncation_index(const FrobeniusSeries& s);
// First j >= 1 with a_j = a_{j+1} = 0.
std::optional<int> consecutive_zero_index(const FrobeniusSeries& s);

// F'' - 2 g sigma x^2 F' + E F for F truncated after a_N.
double truncated_residual(const FrobeniusSeries& s, int n, double x);
// sum_{j=N+1}^{N+3} j(j-1)|a_j||x|^(j-2) + |E||a_{N+1}||x|^(N+1), which bounds
// |truncated_residual|. Requires N + 3 <= J.
double dropped_term_bound(const FrobeniusSeries& s, int n, double x);

struct HeunParameters {
  double alpha;
  double beta;
  double gamma;
  double z_scale;  // z = z_scale * x
};

// y'' + (-gamma - 3z^2) y' + (alpha + beta z - 3z) y = 0 reduced to the F equation.
HeunParameters heun_parameters(double g, double energy);

// The Heun equation rewritten in x and multiplied by z_scale^2: returns the
// coefficients (of F', of F) at x, to compare with (-2 g x^2, E).
std::pair<double, double> heun_coefficients_in_x(const HeunParameters& p, double x);

}  // namespace susyqm
