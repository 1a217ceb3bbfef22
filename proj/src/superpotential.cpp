#include "susyqm/superpotential.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace susyqm {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

double ipow(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

void require_half_line(double r) {
  if (!(r > 0.0)) throw DomainError("Coulomb radial superpotential is defined for r > 0 only");
}

void require_in_well(double x, double L) {
  if (!(x > 0.0 && x < L)) throw DomainError("well superpotential is defined on the open interval (0, L)");
}

}  // namespace

Superpotential::Superpotential(Family family) : family_(std::move(family)) {
  std::visit(overloaded{
                 [](const OddMonomial& f) {
                   if (!(f.g > 0.0) || f.n < 0) throw DomainError("OddMonomial needs g > 0 and n >= 0");
                 },
                 [](const SignMonomial& f) {
                   if (!(f.g > 0.0) || f.n < 0) throw DomainError("SignMonomial needs g > 0 and n >= 0");
                 },
                 [](const CoulombRadial& f) {
                   if (!(f.e2 > 0.0) || f.l < 0 || f.j < 0)
                     throw DomainError("CoulombRadial needs e^2 > 0, l >= 0, j >= 0");
                 },
                 [](const WellCotangent& f) {
                   if (!(f.L > 0.0)) throw DomainError("WellCotangent needs L > 0");
                 },
                 [](const Tabulated&) {},
             },
             family_);

  if (const auto* t = std::get_if<Tabulated>(&family_)) {
    if (t->w.size() != t->dw.size() || std::abs(t->w.x0() - t->dw.x0()) > 1e-12 ||
        std::abs(t->w.dx() - t->dw.dx()) > 1e-15)
      throw GridError("tabulated W and W' must share a grid");
    // Cumulative trapezoid anchored at the sample nearest x = 0.
    const GridFunction& w = t->w;
    const std::size_t n = w.size();
    std::vector<double> acc(n, 0.0);
    const std::size_t i0 = w.nearest_index(0.0);
    for (std::size_t i = i0 + 1; i < n; ++i) acc[i] = acc[i - 1] + 0.5 * w.dx() * (w[i - 1] + w[i]);
    for (std::size_t i = i0; i-- > 0;) acc[i] = acc[i + 1] - 0.5 * w.dx() * (w[i] + w[i + 1]);
    tab_integral_ = GridFunction(w.x0(), w.dx(), std::move(acc));
  }
}

Superpotential Superpotential::tabulated(const RealFunction& w, const RealFunction& dw, const GridSpec& grid) {
  return tabulated(GridFunction::sample(w, grid), GridFunction::sample(dw, grid));
}

std::string Superpotential::name() const {
  std::string base = std::visit(overloaded{
                                    [](const OddMonomial&) { return std::string("odd-monomial"); },
                                    [](const SignMonomial&) { return std::string("sign-monomial"); },
                                    [](const CoulombRadial&) { return std::string("coulomb-radial"); },
                                    [](const WellCotangent&) { return std::string("well-cotangent"); },
                                    [](const Tabulated&) { return std::string("tabulated"); },
                                },
                                family_);
  return negate_ ? "-" + base : base;
}

double Superpotential::w(double x) const {
  const double v = std::visit(overloaded{
                                  [x](const OddMonomial& f) { return f.g * ipow(x, 2 * f.n + 1); },
                                  [x](const SignMonomial& f) { return f.g * sign_eps(x) * ipow(x, 2 * f.n); },
                                  [x](const CoulombRadial& f) {
                                    require_half_line(x);
                                    const double nu = f.l + f.j + 1;
                                    return f.e2 / (2.0 * nu) - nu / x;
                                  },
                                  [x](const WellCotangent& f) {
                                    require_in_well(x, f.L);
                                    const double k = std::numbers::pi / f.L;
                                    return -k / std::tan(k * x);
                                  },
                                  [x](const Tabulated& f) { return f.w.interpolate(x); },
                              },
                              family_);
  return negate_ ? -v : v;
}

double Superpotential::dw(double x) const {
  const double v = std::visit(overloaded{
                                  [x](const OddMonomial& f) { return f.g * (2 * f.n + 1) * ipow(x, 2 * f.n); },
                                  [x](const SignMonomial& f) {
                                    if (f.n == 0) return 0.0;
                                    return 2.0 * f.n * f.g * sign_eps(x) * ipow(x, 2 * f.n - 1);
                                  },
                                  [x](const CoulombRadial& f) {
                                    require_half_line(x);
                                    const double nu = f.l + f.j + 1;
                                    return nu / (x * x);
                                  },
                                  [x](const WellCotangent& f) {
                                    require_in_well(x, f.L);
                                    const double k = std::numbers::pi / f.L;
                                    const double s = std::sin(k * x);
                                    return k * k / (s * s);
                                  },
                                  [x](const Tabulated& f) { return f.dw.interpolate(x); },
                              },
                              family_);
  return negate_ ? -v : v;
}

double Superpotential::antiderivative(double x) const {
  const double v = std::visit(overloaded{
                                  [x](const OddMonomial& f) {
                                    const int p = 2 * f.n + 2;
                                    return f.g * ipow(x, p) / p;
                                  },
                                  [x](const SignMonomial& f) {
                                    const int p = 2 * f.n + 1;
                                    return f.g * ipow(std::abs(x), p) / p;
                                  },
                                  [x](const CoulombRadial& f) {
                                    require_half_line(x);
                                    const double nu = f.l + f.j + 1;
                                    return f.e2 / (2.0 * nu) * x - nu * std::log(x);
                                  },
                                  [x](const WellCotangent& f) {
                                    require_in_well(x, f.L);
                                    return -std::log(std::sin(std::numbers::pi * x / f.L));
                                  },
                                  [this, x](const Tabulated&) { return tab_integral_->interpolate(x); },
                              },
                              family_);
  return negate_ ? -v : v;
}

std::optional<double> Superpotential::derivative_delta_weight() const {
  if (const auto* f = std::get_if<SignMonomial>(&family_); f && f->n == 0)
    return negate_ ? -2.0 * f->g : 2.0 * f->g;
  return std::nullopt;
}

Superpotential Superpotential::negated() const {
  Superpotential copy(*this);
  copy.negate_ = !negate_;
  return copy;
}

double PartnerPair::v_minus(double x) const {
  const double w = w_.w(x);
  return w * w - w_.dw(x);
}

double PartnerPair::v_plus(double x) const {
  const double w = w_.w(x);
  return w * w + w_.dw(x);
}

RealFunction PartnerPair::v_minus_fn() const {
  return [pair = *this](double x) { return pair.v_minus(x); };
}

RealFunction PartnerPair::v_plus_fn() const {
  return [pair = *this](double x) { return pair.v_plus(x); };
}

std::optional<DeltaSpike> PartnerPair::spike() const {
  if (auto c = w_.derivative_delta_weight()) return DeltaSpike{0.0, -*c, *c};
  return std::nullopt;
}

PartnerPair partner_potentials(const Superpotential& w) { return PartnerPair(w); }

SusyStatus susy_status(const Superpotential& w, double x_big) {
  double left = -x_big;
  double right = x_big;
  std::visit(overloaded{
                 [&](const CoulombRadial& f) {
                   const double nu = f.l + f.j + 1;
                   left = 1e-8;
                   right = std::max(x_big, 8.0 * nu * nu / f.e2);
                 },
                 [&](const WellCotangent& f) {
                   left = 1e-8 * f.L;
                   right = (1.0 - 1e-8) * f.L;
                 },
                 [&](const Tabulated& f) {
                   left = f.w.x0();
                   right = f.w.x_end();
                 },
                 [](const auto&) {},
             },
             w.family());
  const double wl = w.w(left);
  const double wr = w.w(right);
  if (wl < 0.0 && wr > 0.0) return {true, Sector::Minus};
  if (wl > 0.0 && wr < 0.0) return {true, Sector::Plus};
  return {false, std::nullopt};
}

GridFunction ground_state(const Superpotential& w, const GridSpec& grid) {
  const SusyStatus status = susy_status(w);
  if (!status.preserved) throw BrokenSusyError("SUSY is broken for " + w.name() + ": no normalizable zero mode");
  if (status.zero_mode != Sector::Minus)
    throw BrokenSusyError("the zero mode of " + w.name() + " lives in the plus sector; use -W");

  std::vector<double> expo(grid.count);
  for (std::size_t i = 0; i < grid.count; ++i) expo[i] = w.antiderivative(grid.x(i));
  const double shift = *std::min_element(expo.begin(), expo.end());
  for (double& e : expo) e = std::exp(-(e - shift));
  return GridFunction(grid, std::move(expo)).normalized();
}

double odd_monomial_norm(double g, int n) {
  if (!(g > 0.0) || n < 0) throw DomainError("odd_monomial_norm needs g > 0 and n >= 0");
  const double np1 = n + 1.0;
  const double log_inner = std::log(g) + (2.0 * n + 1.0) * std::log(np1) - 2.0 * np1 * log_gamma(1.0 / (2.0 * np1));
  return std::exp(log_inner / (4.0 * np1));
}

namespace {

GridFunction apply_ladder(const Superpotential& w, const GridFunction& psi, double deriv_sign, Diagnostics* diag) {
  if (psi.dx() > 0.1 && diag) diag->warnings.push_back("grid spacing above 0.1; ladder operator result is coarse");
  const GridFunction d = derivative4(psi);
  std::vector<double> out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double x = d.x(i);
    out[i] = w.w(x) * psi[i + 2] + deriv_sign * d[i];
  }
  return GridFunction(d.x0(), d.dx(), std::move(out));
}

}  // namespace

GridFunction apply_A(const Superpotential& w, const GridFunction& psi, Diagnostics* diag) {
  return apply_ladder(w, psi, 1.0, diag);
}

GridFunction apply_Adag(const Superpotential& w, const GridFunction& psi, Diagnostics* diag) {
  return apply_ladder(w, psi, -1.0, diag);
}

}  // namespace susyqm
