#include "susyqm/heun.hpp"

#include <cmath>

namespace susyqm {

double FrobeniusSeries::evaluate(double x) const {
  double s = 0.0;
  for (std::size_t j = a.size(); j-- > 0;) s = s * x + a[j];
  return s;
}

FrobeniusSeries recurrence_coeffs(double a0, double a1, double energy, double g, int sigma, int j_max) {
  if (j_max < 2) throw DomainError("recurrence needs j_max >= 2");
  if (!(g > 0.0)) throw DomainError("recurrence needs g > 0");
  if (sigma != 1 && sigma != -1) throw DomainError("sigma must be +1 or -1");
  FrobeniusSeries s{a0, a1, energy, g, sigma, {a0, a1, -0.5 * energy * a0}, std::nullopt};
  for (int j = 3; j <= j_max; ++j) {
    const double aj = (2.0 * g * sigma * (j - 3) * s.a[j - 3] - energy * s.a[j - 2]) / (j * (j - 1.0));
    if (!std::isfinite(aj) || std::abs(aj) > 1e300) {
      s.overflow_at = j;
      break;
    }
    s.a.push_back(aj);
  }
  return s;
}

GridFunction evaluate_candidate(double a0, double a1, double energy, double g, const GridSpec& grid, int j_max,
                                Diagnostics* diag) {
  const FrobeniusSeries right = recurrence_coeffs(a0, a1, energy, g, 1, j_max);
  const FrobeniusSeries left = recurrence_coeffs(a0, a1, energy, g, -1, j_max);
  bool radius_warned = false;
  auto warn = [&](const std::string& msg) {
    if (diag && !radius_warned) diag->warnings.push_back(msg);
    radius_warned = true;
  };
  if (right.overflow_at || left.overflow_at) warn("series coefficients overflowed before j_max");

  std::vector<double> values(grid.count);
  for (std::size_t i = 0; i < grid.count; ++i) {
    const double x = grid.x(i);
    const FrobeniusSeries& s = x >= 0.0 ? right : left;
    const double f = s.evaluate(x);
    const double last = std::abs(s.a.back() * std::pow(x, s.j_max()));
    if (last > 1e-12 * std::max(1.0, std::abs(f))) warn("series not converged at |x| = " + std::to_string(std::abs(x)));
    values[i] = f * std::exp(-g * std::abs(x * x * x) / 3.0);
  }
  return GridFunction(grid, std::move(values));
}

std::optional<int> truncation_index(const FrobeniusSeries& s) {
  int d = s.j_max();
  while (d >= 0 && s.a[static_cast<std::size_t>(d)] == 0.0) --d;
  if (d == s.j_max() || s.overflow_at) return std::nullopt;
  return std::max(d, 0);
}

std::optional<int> consecutive_zero_index(const FrobeniusSeries& s) {
  for (int j = 1; j + 1 <= s.j_max(); ++j)
    if (s.a[static_cast<std::size_t>(j)] == 0.0 && s.a[static_cast<std::size_t>(j) + 1] == 0.0) return j;
  return std::nullopt;
}

double truncated_residual(const FrobeniusSeries& s, int n, double x) {
  if (n < 0 || n > s.j_max()) throw DomainError("truncation order out of range");
  double f = 0.0, d1 = 0.0, d2 = 0.0;
  for (int j = n; j >= 0; --j) {
    const double aj = s.a[static_cast<std::size_t>(j)];
    f += aj * std::pow(x, j);
    if (j >= 1) d1 += j * aj * std::pow(x, j - 1);
    if (j >= 2) d2 += j * (j - 1.0) * aj * std::pow(x, j - 2);
  }
  return d2 - 2.0 * s.g * s.sigma * x * x * d1 + s.energy * f;
}

double dropped_term_bound(const FrobeniusSeries& s, int n, double x) {
  if (n < 0 || n + 3 > s.j_max()) throw DomainError("dropped_term_bound needs N + 3 <= j_max");
  const double ax = std::abs(x);
  double b = 0.0;
  for (int j = n + 1; j <= n + 3; ++j) b += j * (j - 1.0) * std::abs(s.a[static_cast<std::size_t>(j)]) * std::pow(ax, j - 2);
  return b + std::abs(s.energy) * std::abs(s.a[static_cast<std::size_t>(n) + 1]) * std::pow(ax, n + 1);
}

HeunParameters heun_parameters(double g, double energy) {
  if (!(g > 0.0)) throw DomainError("heun_parameters needs g > 0");
  return {std::pow(1.5 / g, 2.0 / 3.0) * energy, 3.0, 0.0, std::cbrt(2.0 * g / 3.0)};
}

std::pair<double, double> heun_coefficients_in_x(const HeunParameters& p, double x) {
  const double s = p.z_scale;
  const double z = s * x;
  return {s * (-p.gamma - 3.0 * z * z), s * s * (p.alpha + p.beta * z - 3.0 * z)};
}

}  // namespace susyqm
