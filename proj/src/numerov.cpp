#include <cmath>

#include "susyqm/numerics.hpp"

namespace susyqm {

NumerovResult numerov_integrate(const RealFunction& V, double E, const GridSpec& grid, double psi_start,
                                double dpsi_start, double blowup) {
  if (grid.count < 3) throw GridError("numerov_integrate needs at least three grid points");
  if (!(grid.dx > 0.0)) throw GridError("numerov_integrate needs dx > 0");
  const double h = grid.dx;
  const double h2 = h * h;
  const std::size_t n = grid.count;

  std::vector<double> q(n);
  for (std::size_t i = 0; i < n; ++i) {
    q[i] = V(grid.x(i)) - E;
    if (!std::isfinite(q[i])) throw GridError("potential is not finite on the integration grid");
  }

  std::vector<double> psi;
  psi.reserve(n);
  psi.push_back(psi_start);

  // Taylor step: psi'' = q psi, psi''' = q' psi + q psi', psi'''' = q'' psi + 2 q' psi' + q psi''.
  const double dq = (-3.0 * q[0] + 4.0 * q[1] - q[2]) / (2.0 * h);
  const double d2q = (q[0] - 2.0 * q[1] + q[2]) / h2;
  const double p2 = q[0] * psi_start;
  const double p3 = dq * psi_start + q[0] * dpsi_start;
  const double p4 = d2q * psi_start + 2.0 * dq * dpsi_start + q[0] * p2;
  psi.push_back(psi_start + h * dpsi_start + h2 / 2.0 * p2 + h2 * h / 6.0 * p3 + h2 * h2 / 24.0 * p4);

  NumerovResult out{GridFunction(grid.x0, h, {psi_start}), false, 0};
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double next = (2.0 * psi[i] * (1.0 + 5.0 * h2 * q[i] / 12.0) - psi[i - 1] * (1.0 - h2 * q[i - 1] / 12.0)) /
                        (1.0 - h2 * q[i + 1] / 12.0);
    psi.push_back(next);
    if (!std::isfinite(next) || std::abs(next) > blowup) {
      out.diverged = true;
      if (!std::isfinite(next)) psi.pop_back();
      break;
    }
  }
  out.last_sign = psi.back() > 0.0 ? 1 : (psi.back() < 0.0 ? -1 : 0);
  out.psi = GridFunction(grid.x0, h, std::move(psi));
  return out;
}

double bisect(const std::function<int(double)>& f, double lo, double hi, double tol) {
  if (!(tol > 0.0)) throw DomainError("bisect: tolerance must be positive");
  if (lo > hi) std::swap(lo, hi);
  const int s_lo = f(lo);
  const int s_hi = f(hi);
  if (s_lo == 0) return lo;
  if (s_hi == 0) return hi;
  if (s_lo == s_hi) throw BracketError("bisect: function has the same sign at both bracket ends");
  for (int iter = 0; iter < 200 && hi - lo > tol; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const int s = f(mid);
    if (s == 0) return mid;
    if (s == s_lo)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace susyqm
