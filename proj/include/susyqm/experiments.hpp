#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "susyqm/common.hpp"
#include "susyqm/report.hpp"

// Table-producing drivers behind each command-line subcommand.
namespace susyqm::experiments {

// Bad option values; the command line maps these to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// SUSYQM_GRID_DX when set (must parse as a positive number), else `fallback`.
double grid_dx(double fallback);

Sector parse_sector(const std::string& s);
// "minus", "plus" or "both" (nullopt).
std::optional<Sector> parse_sector_or_both(const std::string& s);

struct PartnerConfig {
  std::string family;  // odd-monomial | sign-monomial | well-cotangent
  int n = 0;
  std::optional<double> g;
  double L = 1.0;
  double x_max = 2.0;
  double dx = 0.01;
};
// Columns x, v_minus, v_plus, w; a delta spike goes to the notes.
Table run_partner(const PartnerConfig& c);

struct VariationalConfig {
  std::string problem = "eps-x2";  // eps-x2 | quartic | sho
  Sector sector = Sector::Minus;
  int m_first = 1;
  int m_last = 1;
  bool coefficients = false;
  bool compare = false;
  // Emit (x, psi, residual) for this level instead of the energy table.
  std::optional<int> wavefunction;
  double x_max = 4.0;
  double dx = 0.01;
};
Table run_variational(const VariationalConfig& c);

struct ShootConfig {
  std::optional<Sector> sector = Sector::Minus;  // nullopt: both
  int levels = 7;
  double dx = 1e-3;
  bool compare = false;
};
// Minus sector levels 1..levels (the zero mode is exact), plus sector 0..levels-1.
Table run_shoot(const ShootConfig& c);

struct LptConfig {
  std::string problem = "eps-x2";  // eps-x2 | quartic
  std::optional<Sector> sector;    // eps-x2 only; nullopt: both
  int order = 1;
  double delta = 1.0;
  bool compare = false;
};
Table run_lpt(const LptConfig& c);

struct ScatterConfig {
  std::optional<Sector> sector;
  double g = 1.0;
  double energy = 2.0;
};
Table run_scatter(const ScatterConfig& c);

struct HydrogenConfig {
  int l = 0;
  int levels = 5;
  double e2 = 2.0;
  double dx = 1e-3;
};
Table run_hydrogen(const HydrogenConfig& c);

struct HeunConfig {
  double energy = 1.0;
  double g = 1.0;
  int j_max = 200;
  Parity parity = Parity::Even;
  bool wavefunction = false;
  double x_max = 3.0;
  double dx = 0.01;
};
Table run_heun(const HeunConfig& c);

struct SuperalgebraConfig {
  int n_max = 6;
  double tol = 1e-12;
};
// Adds the note ("status", "fail") when an identity is violated.
Table run_superalgebra(const SuperalgebraConfig& c);

}  // namespace susyqm::experiments
