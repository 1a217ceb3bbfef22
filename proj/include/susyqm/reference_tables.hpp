#pragma once

#include <array>
#include <vector>

// Published five-decimal values for the x^4 -+ 2|x| problem (g = 1) and the
// x^4/4 oscillator, used by --compare-thesis and the regression tests.
namespace susyqm::reference {

// Row m-1 holds the levels obtained with m basis functions.
inline const std::vector<std::vector<double>> kVariationalMinus = {
    {0.00000},
    {0.00000, 2.04441},
    {0.00000, 2.04441, 5.76541},
    {0.00000, 1.97852, 5.76541, 10.00191},
    {0.00000, 1.97852, 5.54135, 10.00191, 14.94174},
    {0.00000, 1.97115, 5.54135, 9.49446, 14.94174, 20.37028},
    {0.00000, 1.97115, 5.51302, 9.49446, 14.06558, 20.37028, 26.29953},
    {0.00000, 1.96991, 5.51302, 9.41370, 14.06558, 19.02962, 26.29953, 32.64399},
    {0.00000, 1.96991, 5.50842, 9.41370, 13.90148, 19.02962, 24.43194, 32.64399},
    {0.00000, 1.96963, 5.50842, 9.39868, 13.90148, 18.73498, 24.43194, 30.18755},
};

inline const std::vector<std::vector<double>> kVariationalPlus = {
    {2.31447},
    {2.31447, 6.13324},
    {2.04493, 6.13324, 10.54940},
    {2.04493, 5.63655, 10.54940, 15.63469},
    {1.99066, 5.63655, 9.66470, 15.63469, 21.21933},
    {1.99066, 5.53888, 9.66470, 14.30956, 21.21933, 27.28556},
    {1.97666, 5.53888, 9.46567, 14.30956, 19.36916, 27.28556, 33.76558},
    {1.97666, 5.51611, 9.46567, 13.98107, 19.36916, 24.86727, 33.76558},
    {1.97235, 5.51611, 9.41524, 13.98107, 18.85787, 24.86727, 30.72924},
    {1.97235, 5.51007, 9.41524, 13.89369, 18.85787, 24.13659, 30.72924},
};

// Shooting results: E-_1..E-_7, which equal E+_0..E+_6.
inline constexpr std::array<double, 7> kShooting = {1.96951, 5.50718, 9.39427, 13.85837,
                                                    18.64598, 23.80719, 29.23255};
// Percentage deviations variational (m = 10) vs shooting.
inline constexpr std::array<double, 7> kDeviationMinus = {0.00609, 0.02252, 0.04694, 0.31108,
                                                          0.47731, 2.62421, 3.26691};
inline constexpr std::array<double, 7> kDeviationPlus = {0.14420, 0.05248, 0.22322, 0.25486,
                                                         1.13638, 1.38362, 5.11994};

// Ground state of -d^2/dx^2 + x^4/4 in the Gaussian-envelope basis.
struct QuarticEntry {
  int m;
  double energy;
  double deviation_percent;
};
inline constexpr double kQuarticExact = 0.667986;
inline constexpr std::array<QuarticEntry, 3> kQuarticLadder = {{{1, 0.6875, 2.9}, {3, 0.680159, 1.8}, {5, 0.668530, 0.08}}};

// First-order logarithmic perturbation theory ground energies.
inline constexpr double kLptMinus = 0.30685;
inline constexpr double kLptPlus = 1.72964;
inline constexpr double kLptQuartic = 0.6415;

}  // namespace susyqm::reference
