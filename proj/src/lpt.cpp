#include "susyqm/lpt.hpp"

#include <cmath>
#include <numbers>

namespace susyqm {

namespace {

constexpr double kQuarticC = 0.62996052494743658;  // (1/4)^(1/3)

double factorial(int m) {
  double f = 1.0;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

}  // namespace

double Reparametrization::potential(double x, double delta) const {
  const double x2 = x * x;
  if (family == Family::Quartic) return std::pow(kQuarticC, 2.0 + delta) * std::pow(x2, 1.0 + delta);
  return std::pow(x2, 1.0 + delta) + riccati_sign(sector) * std::pow(4.0 * x2, delta / 2.0);
}

double Reparametrization::taylor_term(int m, double x) const {
  if (m < 0) throw DomainError("Taylor order must be >= 0");
  const double x2 = x * x;
  const double fact = factorial(m);
  if (family == Family::Quartic) {
    if (x == 0.0) return 0.0;
    return kQuarticC * kQuarticC * x2 * std::pow(std::log(kQuarticC * x2), m) / fact;
  }
  const double pm = sector == Sector::Minus ? -1.0 : 1.0;
  if (x == 0.0) {
    if (m == 0) return pm;
    // x^2 (ln x^2)^m -> 0 while (ln 2 + ln|x|)^m -> (-inf)^m.
    const double inf = std::numeric_limits<double>::infinity();
    return pm * (m % 2 == 0 ? inf : -inf);
  }
  const double L = std::log(x2);
  return (x2 * std::pow(L, m) + pm * std::pow(std::numbers::ln2 + 0.5 * L, m)) / fact;
}

std::vector<RealFunction> Reparametrization::taylor_potential(int order) const {
  if (order < 0) throw DomainError("Taylor order must be >= 0");
  std::vector<RealFunction> out;
  for (int m = 0; m <= order; ++m) out.push_back([rep = *this, m](double x) { return rep.taylor_term(m, x); });
  return out;
}

Order0 order0_solve(const Reparametrization& rep) {
  // Fit alpha x^2 + beta through two points, then verify elsewhere.
  const double v1 = rep.taylor_term(0, 1.0);
  const double v2 = rep.taylor_term(0, 2.0);
  const double alpha = (v2 - v1) / 3.0;
  const double beta = v1 - alpha;
  for (double x : {0.0, 0.3, -0.7, 1.5, -2.5, 4.0})
    if (std::abs(rep.taylor_term(0, x) - (alpha * x * x + beta)) > 1e-12 * std::max(1.0, std::abs(alpha * x * x)))
      throw UnsupportedBaselineError("order-0 potential is not harmonic plus a constant");
  if (!(alpha > 0.0)) throw UnsupportedBaselineError("order-0 potential is not confining");
  const double omega = std::sqrt(alpha);
  return {omega, beta + omega};
}

double b1_closed_form(const Reparametrization& rep) {
  const double psi32 = digamma(1.5);
  if (rep.family == Reparametrization::Family::Quartic) return 0.5 * kQuarticC * psi32;
  const double pm = rep.sector == Sector::Minus ? -1.0 : 1.0;
  return 0.5 * psi32 + pm * (0.5 * digamma(0.5) + std::numbers::ln2);
}

double b1_quadrature(const Reparametrization& rep, double tol) {
  const Order0 o = order0_solve(rep);
  const double norm = std::sqrt(o.omega / std::numbers::pi);
  auto f = [&](double x) { return norm * std::exp(-o.omega * x * x) * rep.taylor_term(1, x); };
  return integrate(f, -kInf, 0.0, tol) + integrate(f, 0.0, kInf, tol);
}

DeltaExpansion::DeltaExpansion(Reparametrization rep, double dx, double half_width, double trusted)
    : rep_(rep), grid_(GridSpec::symmetric(half_width, dx)), trusted_(trusted) {
  if (!(trusted > 0.0 && trusted < half_width)) throw GridError("trusted window must lie inside the internal grid");
  if (std::abs(grid_.x(grid_.count / 2)) > 1e-12) throw GridError("internal LPT grid must contain x = 0");
  const Order0 o = order0_solve(rep_);
  omega_ = o.omega;
  b_.push_back(o.b0);
  w_.push_back(GridFunction::sample([this](double x) { return omega_ * x; }, grid_));
}

double DeltaExpansion::phi0_sq(double x) const {
  return std::sqrt(omega_ / std::numbers::pi) * std::exp(-omega_ * x * x);
}

GridFunction DeltaExpansion::w_on(int m, const GridSpec& grid) const {
  if (grid.x0 < -trusted_ - 1e-12 || grid.x_end() > trusted_ + 1e-12)
    throw GridError("requested grid leaves the trusted LPT window");
  const GridFunction& src = w(m);
  return GridFunction::sample([&](double x) { return src.interpolate(x); }, grid);
}

void DeltaExpansion::order_n_step(const RealFunction& v_n) {
  const int n = order() + 1;
  const std::size_t count = grid_.count;
  const std::size_t i0 = count / 2;

  // Cross terms sum_{k=1}^{n-1} W_k W_{n-k} on the grid.
  std::vector<double> cross(count, 0.0);
  for (int k = 1; k < n; ++k)
    for (std::size_t i = 0; i < count; ++i) cross[i] += w(k)[i] * w(n - k)[i];
  const GridFunction cross_fn(grid_, cross);

  // Per-cell integrals of phi0^2 and phi0^2 (V_n - cross).
  std::vector<double> cell_norm(count - 1), cell_src(count - 1);
  QuadratureOptions opts{1e-13, 50, 2000};
  for (std::size_t i = 0; i + 1 < count; ++i) {
    const double a = grid_.x(i), b = grid_.x(i + 1);
    cell_norm[i] = integrate([this](double y) { return phi0_sq(y); }, a, b, opts);
    cell_src[i] = integrate([&](double y) { return phi0_sq(y) * (v_n(y) - cross_fn.interpolate(y)); }, a, b, opts);
  }
  double norm = 0.0, src = 0.0;
  for (std::size_t i = 0; i + 1 < count; ++i) {
    norm += cell_norm[i];
    src += cell_src[i];
  }
  const double bn = src / norm;

  // W_n(x) = phi0^-2 int_0^x phi0^2 (B_n - V_n + cross). The integrand has zero
  // total over each half-line, so beyond |x| = 1 the tail form avoids the
  // exp(x^2) amplification of cancellation error.
  std::vector<double> g(count - 1);
  for (std::size_t i = 0; i + 1 < count; ++i) g[i] = bn * cell_norm[i] - cell_src[i];
  std::vector<double> prefix(count, 0.0);  // prefix[i] = sum of cells [0, i)
  for (std::size_t i = 0; i + 1 < count; ++i) prefix[i + 1] = prefix[i] + g[i];
  std::vector<double> suffix(count, 0.0);  // suffix[i] = sum of cells [i, count-1)
  for (std::size_t i = count - 1; i-- > 0;) suffix[i] = suffix[i + 1] + g[i];

  std::vector<double> wn(count, 0.0);
  for (std::size_t i = 0; i < count; ++i) {
    const double x = grid_.x(i);
    double integral;
    if (i >= i0)
      integral = x <= 1.0 ? prefix[i] - prefix[i0] : -suffix[i];
    else
      integral = x >= -1.0 ? -(prefix[i0] - prefix[i]) : prefix[i];
    wn[i] = integral / phi0_sq(x);
  }
  b_.push_back(bn);
  w_.emplace_back(grid_, std::move(wn));
}

void DeltaExpansion::extend_to(int n) {
  while (order() < n) {
    const int m = order() + 1;
    order_n_step([rep = rep_, m](double x) { return rep.taylor_term(m, x); });
  }
}

double DeltaExpansion::energy_at(double delta) const {
  double e = 0.0, p = 1.0;
  for (double b : b_) {
    e += b * p;
    p *= delta;
  }
  return e;
}

GridFunction DeltaExpansion::wavefunction_at(double delta, const GridSpec& grid) const {
  const std::size_t count = grid_.count;
  const std::size_t i0 = count / 2;
  std::vector<double> wsum(count, 0.0);
  double p = 1.0;
  for (const GridFunction& wm : w_) {
    for (std::size_t i = 0; i < count; ++i) wsum[i] += p * wm[i];
    p *= delta;
  }
  const std::size_t lo = w_.front().nearest_index(-trusted_);
  const std::size_t hi = w_.front().nearest_index(trusted_);
  if (!(wsum[hi] > 0.0) || !(wsum[lo] < 0.0))
    throw BrokenTruncationError("truncated superpotential does not confine; the wavefunction is not normalizable");

  // Exponent by cumulative trapezoid from x = 0.
  std::vector<double> expo(count, 0.0);
  const double h = grid_.dx;
  for (std::size_t i = i0 + 1; i < count; ++i) expo[i] = expo[i - 1] + 0.5 * h * (wsum[i - 1] + wsum[i]);
  for (std::size_t i = i0; i-- > 0;) expo[i] = expo[i + 1] - 0.5 * h * (wsum[i] + wsum[i + 1]);
  const GridFunction expo_fn(grid_, std::move(expo));

  if (grid.x0 < -trusted_ - 1e-12 || grid.x_end() > trusted_ + 1e-12)
    throw GridError("requested grid leaves the trusted LPT window");
  return GridFunction::sample([&](double x) { return std::exp(-expo_fn.interpolate(x)); }, grid).normalized();
}

double DeltaExpansion::riccati_residual(int n) const {
  if (n < 0 || n > order()) throw DomainError("order not computed");
  const GridFunction& wn = w(n);
  const double h = grid_.dx;
  const std::size_t count = grid_.count;
  double worst = 0.0;
  for (std::size_t i = 2; i + 2 < count; ++i) {
    const double x = grid_.x(i);
    if (std::abs(x) < 0.05 || std::abs(x) > 3.5) continue;
    const double d = (wn[i - 2] - 8.0 * wn[i - 1] + 8.0 * wn[i + 1] - wn[i + 2]) / (12.0 * h);
    double quad = 0.0;
    for (int k = 0; k <= n; ++k) quad += w(k)[i] * w(n - k)[i];
    const double r = rep_.taylor_term(n, x) - b_[static_cast<std::size_t>(n)] - quad + d;
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

double DeltaExpansion::parity_defect(int n) const {
  const GridFunction& wn = w(n);
  const std::size_t count = grid_.count;
  double worst = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const double x = grid_.x(i);
    if (x < 0.0 || x > trusted_) continue;
    worst = std::max(worst, std::abs(wn[i] + wn[count - 1 - i]));
  }
  return worst;
}

}  // namespace susyqm
