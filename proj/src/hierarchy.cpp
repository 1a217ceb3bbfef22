#include "susyqm/hierarchy.hpp"

#include <cmath>
#include <map>
#include <numbers>

namespace susyqm {

HierarchyChain::HierarchyChain(std::vector<HierarchyMember> members) : members_(std::move(members)) {
  if (members_.empty()) throw DomainError("a hierarchy chain needs at least one member");
  for (std::size_t k = 1; k < members_.size(); ++k)
    if (members_[k].e0 < members_[k - 1].e0)
      throw DomainError("ground energies must be non-decreasing along the chain");
}

HierarchyChain HierarchyChain::shifted_oscillator(int depth, double g, int levels) {
  if (depth < 1 || levels < 1) throw DomainError("shifted_oscillator needs depth >= 1 and levels >= 1");
  std::vector<HierarchyMember> members;
  for (int k = 0; k < depth; ++k) {
    std::vector<double> spec;
    for (int i = 0; i < levels; ++i) spec.push_back(g * (1.0 + 2.0 * (k + i)));
    members.push_back({Superpotential::odd_monomial(g, 0), g * (1.0 + 2.0 * k), std::move(spec)});
  }
  return HierarchyChain(std::move(members));
}

double HierarchyChain::potential(int k, double x) const {
  const HierarchyMember& m = member(k);
  const double w = m.w.w(x);
  return w * w - m.w.dw(x) + m.e0;
}

double HierarchyChain::potential_from_w(int k, double x) const {
  double v = potential(0, x);
  for (int i = 0; i < k; ++i) v += 2.0 * member(i).w.dw(x);
  return v;
}

GridFunction HierarchyChain::potential_from_ground_states(int k, const GridSpec& grid) const {
  if (grid.count < 3) throw GridError("potential_from_ground_states needs at least three samples");
  std::vector<double> log_prod(grid.count, 0.0);
  for (int i = 0; i < k; ++i) {
    const GridFunction psi = ground_state(member(i).w, grid);
    for (std::size_t s = 0; s < grid.count; ++s) {
      if (!(psi[s] > 0.0)) throw GridError("ground state underflows on the grid; narrow it");
      log_prod[s] += std::log(psi[s]);
    }
  }
  const double h2 = grid.dx * grid.dx;
  std::vector<double> out(grid.count - 2);
  for (std::size_t s = 1; s + 1 < grid.count; ++s) {
    const double second = (log_prod[s - 1] - 2.0 * log_prod[s] + log_prod[s + 1]) / h2;
    out[s - 1] = potential(0, grid.x(s)) - 2.0 * second;
  }
  return GridFunction(grid.x(1), grid.dx, std::move(out));
}

PairingTable chain_energies(const HierarchyChain& chain, int max_level) {
  if (chain.depth() < 2) throw DomainError("chain_energies needs a chain of length >= 2");
  auto level_of = [&](int n, int k) -> std::optional<double> {
    const HierarchyMember& m = chain.member(n);
    if (k == 0) return m.e0;
    if (m.spectrum && k < static_cast<int>(m.spectrum->size())) return (*m.spectrum)[static_cast<std::size_t>(k)];
    return std::nullopt;
  };
  PairingTable table;
  for (int n = 0; n < chain.depth(); ++n)
    for (int k = 0; k <= max_level; ++k) {
      const auto e = level_of(n, k);
      if (!e) continue;
      for (int j = 0; j <= k && n + j < chain.depth(); ++j) {
        const auto shifted = level_of(n + j, k - j);
        if (!shifted) continue;
        table.rows.push_back({n, k, j, *shifted, *e});
        table.max_deviation = std::max(table.max_deviation, std::abs(*shifted - *e));
      }
    }
  return table;
}

ShapeInvariantModel oscillator_model() {
  return {"oscillator",
          [](double a) { return a; },
          [](double) { return 2.0; },
          [](double) { return Superpotential::odd_monomial(1.0, 0); },
          -5.0,
          5.0};
}

ShapeInvariantModel hydrogen_model(double e2) {
  if (!(e2 > 0.0)) throw DomainError("hydrogen_model needs e^2 > 0");
  const double e4 = e2 * e2;
  return {"hydrogen",
          [](double a) { return a + 1.0; },
          [e4](double a) {
            if (!(a > 0.0)) throw DomainError("hydrogen remainder needs a > 0");
            return e4 / (4.0 * a * a) - e4 / (4.0 * (a + 1.0) * (a + 1.0));
          },
          [e2](double a) {
            const long l = std::lround(a);
            if (l < 0 || std::abs(a - static_cast<double>(l)) > 1e-12)
              throw DomainError("hydrogen parameter must be a non-negative integer");
            return Superpotential::coulomb_radial(e2, static_cast<int>(l), 0);
          },
          0.5,
          20.0};
}

double shape_invariance_deviation(const ShapeInvariantModel& model, double a, int samples) {
  if (samples < 5) throw DomainError("shape invariance check needs at least five sample points");
  const double b = model.next_param(a);
  const PartnerPair here = partner_potentials(model.superpotential(a));
  const PartnerPair next = partner_potentials(model.superpotential(b));
  const double r = model.remainder(b);
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double x = model.sample_lo + (model.sample_hi - model.sample_lo) * i / (samples - 1);
    const double dev = here.v_plus(x) - next.v_minus(x) - r;
    // Relative to the potential scale so large centrifugal terms near r = 0 do not dominate.
    worst = std::max(worst, std::abs(dev) / std::max(1.0, std::abs(here.v_plus(x))));
  }
  return worst;
}

std::vector<double> shape_invariant_spectrum(const ShapeInvariantModel& model, double a, int levels) {
  if (levels < 0) throw DomainError("levels must be >= 0");
  std::vector<double> out{0.0};
  double param = a;
  double sum = 0.0;
  for (int j = 1; j <= levels; ++j) {
    if (shape_invariance_deviation(model, param) > 1e-9)
      throw DomainError("model '" + model.name + "' is not shape invariant at the requested parameter");
    param = model.next_param(param);
    sum += model.remainder(param);
    out.push_back(sum);
  }
  return out;
}

double hydrogen_levels(int l, int j, double e2) {
  if (l < 0 || j < 0 || !(e2 > 0.0)) throw DomainError("hydrogen_levels needs l, j >= 0 and e^2 > 0");
  const double a = 2.0 / e2;
  const double n = l + j + 1.0;
  return -1.0 / (a * a * n * n);
}

std::vector<double> hydrogen_levels_engine(int l, int levels, double e2) {
  if (l < 0) throw DomainError("hydrogen_levels_engine needs l >= 0");
  std::vector<double> e = shape_invariant_spectrum(hydrogen_model(e2), l, levels);
  const double shift = e2 * e2 / (4.0 * (l + 1.0) * (l + 1.0));
  for (double& v : e) v -= shift;
  return e;
}

HydrogenState hydrogen_wavefunction(int l, int j, double e2, const GridSpec& grid) {
  if (l < 0 || j < 0 || !(e2 > 0.0)) throw DomainError("hydrogen_wavefunction needs l, j >= 0 and e^2 > 0");
  if (!(grid.x0 > 0.0)) throw GridError("radial grids must start at r > 0");
  const double a = 2.0 / e2;
  const int n = l + j + 1;
  const double kappa = 1.0 / (a * n);

  // psi = sum_p c_p r^p exp(-kappa r)
  std::map<int, double> poly{{n, 1.0}};
  const double seed_log_norm = -0.5 * ((2.0 * n + 1.0) * std::log(a * n / 2.0) + log_gamma(2.0 * n + 1.0));
  double log_scale = seed_log_norm;
  const double energy = hydrogen_levels(l, j, e2);
  for (int q = j - 1; q >= 0; --q) {
    // A^dagger_q = W_q - d/dr with W_q = e^2/(2 nu) - nu/r, nu = l + q + 1.
    const double nu = l + q + 1.0;
    std::map<int, double> next;
    for (const auto& [p, c] : poly) {
      next[p] += c * (e2 / (2.0 * nu) + kappa);
      next[p - 1] += -c * (nu + p);
    }
    poly.clear();
    for (const auto& [p, c] : next)
      if (c != 0.0) poly[p] = c;
    log_scale -= 0.5 * std::log(energy - hydrogen_levels(l, q, e2));
  }

  std::vector<double> values(grid.count);
  for (std::size_t i = 0; i < grid.count; ++i) {
    const double r = grid.x(i);
    double s = 0.0;
    for (const auto& [p, c] : poly) s += c * std::exp(p * std::log(r) - kappa * r + log_scale);
    values[i] = s;
  }
  GridFunction psi(grid, std::move(values));
  const double norm2 = psi.squared_norm();
  // Drop roundoff-level sign flips in the far tail before counting nodes.
  const double floor = 1e-10 * psi.max_abs();
  GridFunction clipped = psi;
  for (std::size_t i = 0; i < clipped.size(); ++i)
    if (std::abs(clipped[i]) < floor) clipped[i] = 0.0;
  return {std::move(psi), energy, count_sign_changes(clipped), std::sqrt(norm2)};
}

WellPartner infinite_well_partner(double L, int n, const GridSpec& grid) {
  if (!(L > 0.0)) throw DomainError("infinite_well_partner needs L > 0");
  if (n < 0) throw DomainError("level index must be >= 0");
  if (n == 0) throw NoPartnerError("the zero-energy ground state of H- has no partner in H+");
  if (grid.count < 5) throw GridError("infinite_well_partner needs at least five samples");
  if (!(grid.x0 > 0.0) || !(grid.x_end() < L)) throw GridError("grid must lie inside the open interval (0, L)");

  const double k = std::numbers::pi / L;
  const double e = k * k * n * (n + 2.0);
  const double m = n + 1.0;
  const double amp = std::sqrt(2.0 / L);
  const GridFunction psi_minus = GridFunction::sample([&](double x) { return amp * std::sin(m * k * x); }, grid);

  const Superpotential w = Superpotential::well_cotangent(L);
  const GridFunction ladder = apply_A(w, psi_minus).scaled(1.0 / std::sqrt(e));
  const double pref = std::sqrt(2.0 / (n * (n + 2.0) * L));
  const GridFunction closed = GridFunction::sample(
      [&](double x) { return pref * (-std::sin(m * k * x) / std::tan(k * x) + m * std::cos(m * k * x)); },
      ladder.grid());

  double dev = 0.0;
  for (std::size_t i = 0; i < closed.size(); ++i) dev = std::max(dev, std::abs(closed[i] - ladder[i]));
  return {e, psi_minus, e, closed, ladder, dev};
}

}  // namespace susyqm
