#include "susyqm/shooting.hpp"

#include <cmath>

namespace susyqm {

namespace {

constexpr double kBlowup = 1e6;

NumerovResult shoot(const ShootingProblem& p, double E) {
  const GridSpec grid = GridSpec::span(0.0, p.x_max, p.dx);
  const bool even = p.parity == Parity::Even;
  return numerov_integrate(p.V, E, grid, even ? 1.0 : 0.0, even ? 0.0 : 1.0, kBlowup);
}

// Interior sign changes up to where the solution has decayed to 1e-3 of its
// peak past the outer turning point; the growing tail is ignored.
int count_nodes(const ShootingProblem& p, const GridFunction& psi, double E) {
  std::size_t turning = 0;
  for (std::size_t i = 0; i < psi.size(); ++i)
    if (p.V(psi.x(i)) < E) turning = i;
  double peak = 0.0;
  for (std::size_t i = 0; i <= turning && i < psi.size(); ++i) peak = std::max(peak, std::abs(psi[i]));
  std::size_t cut = psi.size();
  for (std::size_t i = turning; i < psi.size(); ++i)
    if (std::abs(psi[i]) < 1e-3 * peak) {
      cut = i;
      break;
    }
  return count_sign_changes(psi, 1, cut);
}

}  // namespace

void ShootingProblem::validate() const {
  if (!(dx > 0.0) || !(x_max > 10.0 * dx)) throw DomainError("shooting needs dx > 0 and x_max well above dx");
  if (!(e_lo < e_hi)) throw DomainError("energy bracket must satisfy e_lo < e_hi");
  for (int i = 1; i <= 16; ++i) {
    const double x = x_max * i / 16.0;
    const double a = V(x), b = V(-x);
    if (std::abs(a - b) > 1e-12 * std::max(1.0, std::abs(a))) throw DomainError("shooting potential must be even");
  }
  if (V(x_max) - e_hi < 10.0) throw DomainError("x_max too small: V(x_max) - E_hi must be at least 10");
}

Divergence divergence_sign(const ShootingProblem& p, double E) {
  const NumerovResult r = shoot(p, E);
  if (r.diverged) return r.last_sign > 0 ? Divergence::Positive : Divergence::Negative;
  const std::size_t n = r.psi.size();
  const double end = std::abs(r.psi[n - 1]);
  if (end <= 1e-3 * r.psi.max_abs()) return Divergence::Decays;
  // Below the threshold but still growing at x_max: report the sign there.
  if (end > std::abs(r.psi[n - 2])) return r.last_sign > 0 ? Divergence::Positive : Divergence::Negative;
  throw InconclusiveError("solution neither diverged nor decayed by x_max");
}

LevelResult find_level(const ShootingProblem& p_in, int node_target) {
  ShootingProblem p = p_in;
  p.validate();
  int calls = 0;
  for (int attempt = 0;; ++attempt) {
    try {
      calls = 0;
      auto sign = [&](double E) {
        ++calls;
        return static_cast<int>(divergence_sign(p, E));
      };
      const double e = bisect(sign, p.e_lo, p.e_hi, 1e-9);
      const NumerovResult r = shoot(p, e);
      const int nodes = count_nodes(p, r.psi, e);
      if (nodes != node_target)
        throw MislabeledLevelError("converged solution has " + std::to_string(nodes) + " half-line nodes, expected " +
                                       std::to_string(node_target),
                                   nodes);
      return {e, p.parity, nodes, p.x_max, calls};
    } catch (const InconclusiveError&) {
      if (attempt >= 4) throw;
      p.x_max *= 1.5;
    }
  }
}

double choose_x_max(const RealFunction& V, double e_hi, double dx) {
  const double step = std::max(dx, 1e-2);
  double action = 0.0;
  double prev = std::max(0.0, V(0.0) - e_hi);
  for (double x = step; x < 1e4; x += step) {
    const double gap = V(x) - e_hi;
    if (gap > 0.0) action += 0.5 * step * (std::sqrt(std::max(prev, 0.0)) + std::sqrt(gap));
    else action = 0.0;
    prev = gap;
    if (gap >= 50.0 && action >= 25.0) return std::ceil(x / dx) * dx;
  }
  throw DomainError("potential does not confine at energy " + std::to_string(e_hi));
}

LevelResult find_level_n(const RealFunction& V, int n, double e_lo, double e_hi, double dx) {
  if (n < 0) throw DomainError("level index must be >= 0");
  ShootingProblem p{V, parity_of_level(n), choose_x_max(V, e_hi, dx), dx, e_lo, e_hi};
  return find_level(p, n / 2);
}

}  // namespace susyqm
