#pragma once

#include <string>
#include <vector>

#include "susyqm/numerics.hpp"

namespace susyqm {

// Truncated boson Fock space (n < n_max) tensored with one fermion mode.
// Basis index of |n, m> is n + n_max * m, so for n_max = 2 the order is
// |0,0>, |1,0>, |0,1>, |1,1>.
struct FockOperators {
  int n_max;
  Matrix a, adag;  // boson ladder (x identity on the fermion)
  Matrix b, bdag;  // fermion ladder (x identity on the boson)
  Matrix Q, Qdag;  // Q = a^dagger b, Q^dagger = b^dagger a
  Matrix H;        // a^dagger a + b^dagger b

  int index(int n, int m) const { return n + n_max * m; }
  int dim() const { return 2 * n_max; }
};

FockOperators build_operators(int n_max);

struct AlgebraViolation {
  std::string identity;
  int row;
  int col;
  double value;
};

struct LevelDegeneracy {
  int level;
  int multiplicity;
};

struct AlgebraReport {
  int n_max = 0;
  double tol = 1e-12;
  // Max entrywise deviation of each identity on its checked subspace.
  double anticommutator_deviation = 0.0;  // {Q, Q^dagger} - H, safe block
  double nilpotency_deviation = 0.0;      // Q^2 and (Q^dagger)^2, full space
  double commutator_deviation = 0.0;      // [Q, H] and [Q^dagger, H], safe block
  std::vector<AlgebraViolation> violations;
  std::vector<LevelDegeneracy> degeneracies;  // levels 0 .. n_max - 2

  bool passed() const { return violations.empty(); }
};

// Checks the super-algebra on the truncation-safe block (boson number
// n <= n_max - 2) and the level degeneracies of H there.
AlgebraReport check_superalgebra(int n_max, double tol = 1e-12);

}  // namespace susyqm
