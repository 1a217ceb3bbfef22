#include <array>
#include <cmath>
#include <numbers>

#include "susyqm/numerics.hpp"

namespace susyqm {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

// Lanczos series for Gamma(z + 1), valid for z >= -0.5.
double lanczos_sum(double z) {
  double a = kLanczosCoeffs[0];
  for (std::size_t k = 1; k < kLanczosCoeffs.size(); ++k) a += kLanczosCoeffs[k] / (z + static_cast<double>(k));
  return a;
}

void require_positive(double x, const char* name) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw DomainError(std::string(name) + ": argument must be positive and finite");
}

}  // namespace

double gamma_fn(double x) {
  require_positive(x, "gamma_fn");
  using std::numbers::pi;
  if (x < 0.5) return pi / (std::sin(pi * x) * gamma_fn(1.0 - x));
  const double z = x - 1.0;
  const double t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * lanczos_sum(z);
}

double log_gamma(double x) {
  require_positive(x, "log_gamma");
  using std::numbers::pi;
  if (x < 0.5) return std::log(pi / std::sin(pi * x)) - log_gamma(1.0 - x);
  const double z = x - 1.0;
  const double t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(lanczos_sum(z));
}

double digamma(double x) {
  require_positive(x, "digamma");
  double shift = 0.0;
  while (x <= 6.0) {
    shift -= 1.0 / x;
    x += 1.0;
  }
  // Asymptotic series in 1/x^2 with Bernoulli coefficients B_2k / (2k).
  const double r = 1.0 / (x * x);
  const double series =
      r * (1.0 / 12 -
           r * (1.0 / 120 -
                r * (1.0 / 252 -
                     r * (1.0 / 240 - r * (1.0 / 132 - r * (691.0 / 32760 - r * (1.0 / 12)))))));
  return shift + std::log(x) - 0.5 / x - series;
}

}  // namespace susyqm
