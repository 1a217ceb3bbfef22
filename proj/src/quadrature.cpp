#include <array>
#include <cmath>
#include <queue>
#include <vector>

#include "susyqm/numerics.hpp"

namespace susyqm {

namespace {

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd-indexed Kronrod abscissae (kXgk[1], [3], [5], [7]).
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error;
  int depth;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gauss_kronrod(const RealFunction& f, double a, double b, int depth) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const double fsum = f(c - dx) + f(c + dx);
    kronrod += kWgk[j] * fsum;
    if (j % 2 == 1) gauss += kWg[j / 2] * fsum;
  }
  kronrod *= h;
  gauss *= h;
  return {a, b, kronrod, std::abs(kronrod - gauss), depth};
}

double integrate_finite(const RealFunction& f, double a, double b, const QuadratureOptions& opts) {
  std::priority_queue<Segment> heap;
  Segment first = gauss_kronrod(f, a, b, 0);
  double total = first.value;
  double total_err = first.error;
  heap.push(first);
  while (true) {
    if (!std::isfinite(total)) throw AccuracyError("integrate: non-finite integrand value", total);
    if (total_err <= opts.tol * std::max(1.0, std::abs(total))) return total;
    Segment worst = heap.top();
    if (worst.depth >= opts.max_depth || heap.size() >= opts.max_intervals)
      throw AccuracyError("integrate: subdivision limit reached before tolerance", total);
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Segment left = gauss_kronrod(f, worst.a, mid, worst.depth + 1);
    Segment right = gauss_kronrod(f, mid, worst.b, worst.depth + 1);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    // Re-sum occasionally so the running totals do not drift.
    if (heap.size() % 64 == 0) {
      auto copy = heap;
      total = 0.0;
      total_err = 0.0;
      while (!copy.empty()) {
        total += copy.top().value;
        total_err += copy.top().error;
        copy.pop();
      }
    }
  }
}

}  // namespace

double integrate(const RealFunction& f, double a, double b, const QuadratureOptions& opts) {
  if (!(opts.tol > 0.0)) throw DomainError("integrate: tolerance must be positive");
  if (a == b) return 0.0;
  if (a > b) return -integrate(f, b, a, opts);

  const bool lo_inf = std::isinf(a);
  const bool hi_inf = std::isinf(b);
  if (lo_inf && hi_inf) {
    auto g = [&f](double t) {
      const double d = 1.0 - t * t;
      return f(t / d) * (1.0 + t * t) / (d * d);
    };
    return integrate_finite(g, -1.0, 1.0, opts);
  }
  if (hi_inf) {
    auto g = [&f, a](double t) {
      const double d = 1.0 - t * t;
      return f(a + t / d) * (1.0 + t * t) / (d * d);
    };
    return integrate_finite(g, 0.0, 1.0, opts);
  }
  if (lo_inf) {
    auto g = [&f, b](double t) {
      const double d = 1.0 - t * t;
      return f(b - t / d) * (1.0 + t * t) / (d * d);
    };
    return integrate_finite(g, 0.0, 1.0, opts);
  }
  return integrate_finite(f, a, b, opts);
}

}  // namespace susyqm
