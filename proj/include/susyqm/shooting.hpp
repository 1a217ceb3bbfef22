#pragma once

#include <vector>

#include "susyqm/numerics.hpp"

namespace susyqm {

// Bound states of an even potential, integrated on [0, x_max] with parity
// conditions at the origin: (psi, psi') = (1, 0) for even, (0, 1) for odd.
struct ShootingProblem {
  RealFunction V;
  Parity parity;
  double x_max;
  double dx = 1e-3;
  double e_lo;
  double e_hi;

  // Throws DomainError unless V is even (sampled, 1e-12) and V(x_max) - e_hi >= 10.
  void validate() const;
};

enum class Divergence { Negative = -1, Decays = 0, Positive = 1 };

// Sign of psi where |psi| first exceeds 1e6 (or at x_max when it is still
// growing there), or Decays when psi(x_max) is below 1e-3 of its maximum.
// Throws InconclusiveError when the tail neither grows nor decays.
Divergence divergence_sign(const ShootingProblem& p, double E);

struct LevelResult {
  double energy;
  Parity parity;
  int nodes;     // half-line interior nodes of the solution at `energy`
  double x_max;  // possibly widened from the problem's value
  int bisections;
};

// Bisects the divergence sign to a bracket width of 1e-9. Throws BracketError if
// the bracket ends agree and MislabeledLevelError when the node count of the
// converged solution differs from node_target.
LevelResult find_level(const ShootingProblem& p, int node_target);

// Smallest x_max with V(x_max) - e_hi >= 50 and at least 25 units of WKB
// action under the barrier beyond the outer turning point.
double choose_x_max(const RealFunction& V, double e_hi, double dx = 1e-3);

// Full-line level n of an even potential searched in [e_lo, e_hi]: parity from
// n, half-line node target floor(n/2).
LevelResult find_level_n(const RealFunction& V, int n, double e_lo, double e_hi, double dx = 1e-3);

// Bracket around a variational estimate, widened downward because variational
// energies are upper bounds: [E - 0.5 - 0.05 E, E + 0.5].
inline std::pair<double, double> variational_bracket(double e_var) {
  return {e_var - 0.5 - 0.05 * std::abs(e_var), e_var + 0.5};
}

}  // namespace susyqm
