#include "susyqm/variational.hpp"

#include <algorithm>
#include <cmath>

namespace susyqm {

namespace {

double ipow(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

double envelope_value(Envelope e, double x) {
  return e == Envelope::CubicExp ? std::exp(-std::abs(x * x * x) / 3.0) : std::exp(-x * x / 2.0);
}

}  // namespace

double BasisSpec::f(int j, double x) const { return ipow(x, j) * envelope_value(envelope, x); }

double BasisSpec::f2(int j, double x) const {
  const double p = j;
  const double low = j >= 2 ? p * (p - 1.0) * ipow(x, j - 2) : 0.0;
  double poly;
  if (envelope == Envelope::CubicExp)
    poly = low - 2.0 * (p + 1.0) * sign_eps(x) * ipow(x, j + 1) + ipow(x, j + 4);
  else
    poly = low - (2.0 * p + 1.0) * ipow(x, j) + ipow(x, j + 2);
  return poly * envelope_value(envelope, x);
}

MatrixPencil build_pencil_eps_x2(int m, Sector sector) {
  if (m < 1) throw DomainError("basis size must be >= 1");
  const double pm = sector == Sector::Minus ? -1.0 : 1.0;
  Matrix S = Matrix::Zero(m, m);
  Matrix H = Matrix::Zero(m, m);
  for (int k = 1; k <= m; ++k)
    for (int l = 1; l <= m; ++l) {
      if ((k + l) % 2 != 0) continue;
      const double kl = k + l;
      S(k - 1, l - 1) = std::pow(1.5, (kl - 4.0) / 3.0) * gamma_fn((kl - 1.0) / 3.0);
      const double bracket = ((l - 1.0) * (l - 2.0) - (l + pm) * (kl - 3.0)) / (kl - 3.0);
      H(k - 1, l - 1) = -2.0 * std::pow(1.5, (kl - 3.0) / 3.0) * bracket * gamma_fn(kl / 3.0);
    }
  // The closed form is symmetric only up to rounding in the bracket.
  H = 0.5 * (H + H.transpose());
  return MatrixPencil(S, H);
}

MatrixPencil build_pencil_quadrature(const BasisSpec& basis, const RealFunction& V, double tol) {
  if (basis.size < 1) throw DomainError("basis size must be >= 1");
  const int m = basis.size;
  Matrix S = Matrix::Zero(m, m);
  Matrix H = Matrix::Zero(m, m);
  auto both_halves = [&](const RealFunction& g) { return integrate(g, -kInf, 0.0, tol) + integrate(g, 0.0, kInf, tol); };
  for (int k = 0; k < m; ++k)
    for (int l = 0; l < m; ++l) {
      if (l >= k) S(k, l) = both_halves([&](double x) { return basis.f(k, x) * basis.f(l, x); });
      H(k, l) = both_halves([&](double x) { return basis.f(k, x) * (-basis.f2(l, x) + V(x) * basis.f(l, x)); });
    }
  S = S.selfadjointView<Eigen::Upper>();
  H = 0.5 * (H + H.transpose());
  return MatrixPencil(S, H);
}

std::vector<double> VariationalResult::energies() const {
  std::vector<double> out;
  for (const auto& lv : levels) out.push_back(lv.energy);
  return out;
}

GridFunction VariationalResult::wavefunction(int n, const GridSpec& grid) const {
  const VariationalLevel& lv = levels.at(static_cast<std::size_t>(n));
  return GridFunction::sample(
      [&](double x) {
        double s = 0.0;
        for (int j = 0; j < lv.coeffs.size(); ++j) s += lv.coeffs(j) * basis.f(j, x);
        return s;
      },
      grid);
}

VariationalResult solve_variational(const MatrixPencil& pencil, const BasisSpec& basis, std::optional<Sector> sector) {
  if (pencil.size() != basis.size) throw DomainError("pencil size does not match the basis size");
  VariationalResult res{basis, sector, {}};
  for (Eigenpair& ep : solve_pencil(pencil)) {
    Vector c = std::move(ep.coeffs);
    double even = 0.0, odd = 0.0;
    for (int j = 0; j < c.size(); ++j) (j % 2 == 0 ? even : odd) += c(j) * c(j);
    const Parity parity = even >= odd ? Parity::Even : Parity::Odd;
    // Even potentials decouple the parity blocks; clear roundoff on the other block.
    if (std::min(even, odd) <= 1e-20 * std::max(even, odd))
      for (int j = parity == Parity::Even ? 1 : 0; j < c.size(); j += 2) c(j) = 0.0;
    const double big = c.cwiseAbs().maxCoeff();
    for (int j = 0; j < c.size(); ++j)
      if (std::abs(c(j)) > 1e-12 * big) {
        if (c(j) < 0.0) c = -c;
        break;
      }
    res.levels.push_back({ep.value, parity, std::move(c)});
  }
  std::stable_sort(res.levels.begin(), res.levels.end(), [](const VariationalLevel& a, const VariationalLevel& b) {
    if (std::abs(a.energy - b.energy) > 1e-10 * std::max(1.0, std::abs(a.energy))) return a.energy < b.energy;
    return a.parity == Parity::Even && b.parity == Parity::Odd;
  });
  return res;
}

GridFunction residual(const GridFunction& phi, double E, const RealFunction& V) {
  if (phi.size() < 3) throw GridError("residual needs at least three samples");
  const double h2 = phi.dx() * phi.dx();
  std::vector<double> out(phi.size() - 2);
  for (std::size_t i = 1; i + 1 < phi.size(); ++i) {
    const double d2 = (phi[i - 1] - 2.0 * phi[i] + phi[i + 1]) / h2;
    out[i - 1] = -d2 + (V(phi.x(i)) - E) * phi[i];
  }
  return GridFunction(phi.x(1), phi.dx(), std::move(out));
}

}  // namespace susyqm
