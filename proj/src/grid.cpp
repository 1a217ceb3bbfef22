#include <algorithm>
#include <cmath>

#include "susyqm/numerics.hpp"

namespace susyqm {

GridSpec GridSpec::span(double a, double b, double dx) {
  if (!(dx > 0.0) || !std::isfinite(dx)) throw GridError("grid spacing must be positive and finite");
  if (!(b > a)) throw GridError("grid span must have b > a");
  const double steps = std::round((b - a) / dx);
  return {a, dx, static_cast<std::size_t>(steps) + 1};
}

GridFunction::GridFunction(double x0, double dx, std::vector<double> values)
    : x0_(x0), dx_(dx), values_(std::move(values)) {
  if (values_.empty()) throw GridError("grid function needs at least one sample");
  if (!(dx_ > 0.0) || !std::isfinite(dx_)) throw GridError("grid spacing must be positive and finite");
  for (double v : values_)
    if (!std::isfinite(v)) throw GridError("grid function holds a non-finite sample");
}

GridFunction GridFunction::sample(const RealFunction& f, const GridSpec& grid) {
  std::vector<double> v(grid.count);
  for (std::size_t i = 0; i < grid.count; ++i) v[i] = f(grid.x(i));
  return GridFunction(grid, std::move(v));
}

double GridFunction::squared_norm() const {
  if (values_.size() == 1) return 0.0;
  double s = 0.5 * (values_.front() * values_.front() + values_.back() * values_.back());
  for (std::size_t i = 1; i + 1 < values_.size(); ++i) s += values_[i] * values_[i];
  return s * dx_;
}

double GridFunction::max_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

std::size_t GridFunction::nearest_index(double x) const {
  const double r = std::round((x - x0_) / dx_);
  if (r <= 0.0) return 0;
  const auto i = static_cast<std::size_t>(r);
  return std::min(i, values_.size() - 1);
}

double GridFunction::interpolate(double x) const {
  const std::size_t n = values_.size();
  if (n == 1 || x <= x0_) return values_.front();
  if (x >= x_end()) return values_.back();
  if (n < 4) {
    const auto i = static_cast<std::size_t>((x - x0_) / dx_);
    const std::size_t j = std::min(i, n - 2);
    const double t = (x - this->x(j)) / dx_;
    return (1.0 - t) * values_[j] + t * values_[j + 1];
  }
  // Four-point Lagrange on the stencil centred around the cell.
  auto cell = static_cast<std::ptrdiff_t>((x - x0_) / dx_);
  std::ptrdiff_t start = std::clamp<std::ptrdiff_t>(cell - 1, 0, static_cast<std::ptrdiff_t>(n) - 4);
  const double t = (x - this->x(static_cast<std::size_t>(start))) / dx_;
  const double* y = values_.data() + start;
  const double l0 = -(t - 1.0) * (t - 2.0) * (t - 3.0) / 6.0;
  const double l1 = t * (t - 2.0) * (t - 3.0) / 2.0;
  const double l2 = -t * (t - 1.0) * (t - 3.0) / 2.0;
  const double l3 = t * (t - 1.0) * (t - 2.0) / 6.0;
  return l0 * y[0] + l1 * y[1] + l2 * y[2] + l3 * y[3];
}

GridFunction GridFunction::normalized() const {
  const double n2 = squared_norm();
  if (!(n2 > 0.0) || !std::isfinite(n2)) throw GridError("cannot normalize a zero or non-finite function");
  return scaled(1.0 / std::sqrt(n2));
}

GridFunction GridFunction::scaled(double factor) const {
  std::vector<double> v(values_);
  for (double& y : v) y *= factor;
  return GridFunction(x0_, dx_, std::move(v));
}

double inner_product(const GridFunction& a, const GridFunction& b) {
  if (std::abs(a.dx() - b.dx()) > 1e-12 * a.dx()) throw GridError("inner product needs equal grid spacing");
  const double lo = std::max(a.x0(), b.x0());
  const double hi = std::min(a.x_end(), b.x_end());
  if (hi <= lo) return 0.0;
  const std::size_t ia = a.nearest_index(lo);
  const std::size_t ib = b.nearest_index(lo);
  const auto n = static_cast<std::size_t>(std::round((hi - lo) / a.dx())) + 1;
  double s = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double w = (k == 0 || k + 1 == n) ? 0.5 : 1.0;
    s += w * a[ia + k] * b[ib + k];
  }
  return s * a.dx();
}

int count_sign_changes(const GridFunction& f, std::size_t begin, std::size_t end) {
  end = std::min(end, f.size());
  int changes = 0;
  double prev = 0.0;
  for (std::size_t i = begin; i < end; ++i) {
    const double v = f[i];
    if (v == 0.0) continue;
    if (prev != 0.0 && (v > 0.0) != (prev > 0.0)) ++changes;
    prev = v;
  }
  return changes;
}

GridFunction derivative4(const GridFunction& f) {
  const std::size_t n = f.size();
  if (n < 5) throw GridError("fourth-order derivative needs at least five samples");
  const double h = f.dx();
  std::vector<double> d(n - 4);
  for (std::size_t i = 2; i + 2 < n; ++i)
    d[i - 2] = (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) / (12.0 * h);
  return GridFunction(f.x(2), h, std::move(d));
}

}  // namespace susyqm
