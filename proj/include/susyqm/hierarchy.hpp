#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "susyqm/numerics.hpp"
#include "susyqm/superpotential.hpp"

namespace susyqm {

// H_k = A_k^dagger A_k + E0_k with A_k = W_k + d/dx, so V_k = W_k^2 - W_k' + E0_k.
struct HierarchyMember {
  Superpotential w;
  double e0;
  // Known low-lying levels of H_k (ascending, level 0 first), when available.
  std::optional<std::vector<double>> spectrum;
};

class HierarchyChain {
 public:
  explicit HierarchyChain(std::vector<HierarchyMember> members);

  // W_k = g x and E0_k = g (1 + 2k): member k is the oscillator -d^2/dx^2 + g^2 x^2
  // shifted by 2 g k, with exact spectra of `levels` entries attached.
  static HierarchyChain shifted_oscillator(int depth, double g = 1.0, int levels = 8);

  int depth() const { return static_cast<int>(members_.size()); }
  const HierarchyMember& member(int k) const { return members_.at(static_cast<std::size_t>(k)); }

  double potential(int k, double x) const;
  // V_k rebuilt as V_0 + sum_{i<k} 2 W_i'.
  double potential_from_w(int k, double x) const;
  // V_k rebuilt as V_0 - 2 (ln prod_{i<k} psi0_i)'' with sampled ground states and
  // second differences; the result drops one sample at each end of `grid`.
  GridFunction potential_from_ground_states(int k, const GridSpec& grid) const;

 private:
  std::vector<HierarchyMember> members_;
};

struct PairingRow {
  int member;  // n
  int level;   // k
  int shift;   // j
  double shifted_energy;  // E^{n+j}_{k-j}
  double energy;          // E^n_k
};

struct PairingTable {
  std::vector<PairingRow> rows;
  double max_deviation = 0.0;
};

// Every relation E^{n+j}_{k-j} = E^n_k available from the attached spectra
// (a member without a spectrum contributes only its ground energy).
PairingTable chain_energies(const HierarchyChain& chain, int max_level);

struct ShapeInvariantModel {
  std::string name;
  std::function<double(double)> next_param;                 // a_{k+1} = f(a_k)
  std::function<double(double)> remainder;                  // R(a)
  std::function<Superpotential(double)> superpotential;     // W(x; a)
  double sample_lo;  // sampling window for the invariance check
  double sample_hi;
};

// W = x for every a, R = 2.
ShapeInvariantModel oscillator_model();
// a = l, W(r; a) = e^2/(2(a+1)) - (a+1)/r, R(a) = e^4/(4a^2) - e^4/(4(a+1)^2).
ShapeInvariantModel hydrogen_model(double e2);

// max |V+(x; a) - V-(x; f(a)) - R(f(a))| over `samples` evenly spaced points.
double shape_invariance_deviation(const ShapeInvariantModel& model, double a, int samples = 9);

// E_0 = 0 and E_j = sum_{k=1..j} R(a_k) for j = 0..levels. Throws DomainError when
// the invariance check fails (tolerance 1e-9) at any parameter used.
std::vector<double> shape_invariant_spectrum(const ShapeInvariantModel& model, double a, int levels);

// E = -1/(a^2 (l+j+1)^2) with Bohr radius a = 2/e^2.
double hydrogen_levels(int l, int j, double e2);
// The same energies from the shape-invariance engine, shifted by the ground
// energy of the first member: E_j - e^4/(4(l+1)^2), j = 0..levels.
std::vector<double> hydrogen_levels_engine(int l, int levels, double e2);

struct HydrogenState {
  GridFunction psi;
  double energy;
  int nodes;
  double grid_norm;  // trapezoid norm of psi before any rescaling
};

// u_{l+j+1,l}(r) built by applying A^dagger_0 ... A^dagger_{j-1} to the seed
// r^(l+j+1) exp(-r/(a(l+j+1))). The algebra is carried out exactly on
// polynomial-times-exponential form; normalization uses the closed-form seed
// norm and the energy-difference prefactors. Throws GridError unless the grid
// starts at r > 0.
HydrogenState hydrogen_wavefunction(int l, int j, double e2, const GridSpec& grid);

struct WellPartner {
  double e_minus;            // E-_n
  GridFunction psi_minus;    // on `grid`
  double e_plus;             // E+_{n-1}
  GridFunction psi_plus;     // closed form, on the interior grid used by apply_A
  GridFunction psi_plus_ladder;  // (E-_n)^{-1/2} A psi-_n
  double max_deviation;      // max |psi_plus - psi_plus_ladder|
};

// Infinite well on (0, L). Throws NoPartnerError for n = 0 and GridError if the
// grid leaves the open interval.
WellPartner infinite_well_partner(double L, int n, const GridSpec& grid);

}  // namespace susyqm
