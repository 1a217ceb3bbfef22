#include "susyqm/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <future>
#include <sstream>

#include "susyqm/heun.hpp"
#include "susyqm/hierarchy.hpp"
#include "susyqm/lpt.hpp"
#include "susyqm/reference_tables.hpp"
#include "susyqm/scattering.hpp"
#include "susyqm/shooting.hpp"
#include "susyqm/superalgebra.hpp"
#include "susyqm/superpotential.hpp"
#include "susyqm/variational.hpp"

namespace susyqm::experiments {

namespace {

using I = std::int64_t;

double percent_deviation(double value, double reference) { return 100.0 * std::abs(value - reference) / std::abs(reference); }

Cell opt(std::optional<double> v) { return v ? Cell(*v) : Cell(); }

std::optional<double> table_entry(const std::vector<std::vector<double>>& t, int m, int level) {
  if (m < 1 || m > static_cast<int>(t.size())) return std::nullopt;
  const auto& row = t[static_cast<std::size_t>(m - 1)];
  if (level >= static_cast<int>(row.size())) return std::nullopt;
  return row[static_cast<std::size_t>(level)];
}

// Published shooting value for level n of the given sector (E-_n = E+_{n-1}).
std::optional<double> shooting_reference(Sector s, int level) {
  const int idx = s == Sector::Minus ? level - 1 : level;
  if (idx < 0 || idx >= static_cast<int>(reference::kShooting.size())) return std::nullopt;
  return reference::kShooting[static_cast<std::size_t>(idx)];
}

std::optional<double> published_deviation(Sector s, int level) {
  const int idx = s == Sector::Minus ? level - 1 : level;
  const auto& t = s == Sector::Minus ? reference::kDeviationMinus : reference::kDeviationPlus;
  if (idx < 0 || idx >= static_cast<int>(t.size())) return std::nullopt;
  return t[static_cast<std::size_t>(idx)];
}

VariationalResult variational_eps_x2(Sector s, int m) {
  return solve_variational(build_pencil_eps_x2(m, s), {Envelope::CubicExp, m}, s);
}

}  // namespace

double grid_dx(double fallback) {
  const char* env = std::getenv("SUSYQM_GRID_DX");
  if (!env || !*env) return fallback;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(v > 0.0) || !std::isfinite(v))
    throw UsageError(std::string("SUSYQM_GRID_DX must be a positive number, got '") + env + "'");
  return v;
}

Sector parse_sector(const std::string& s) {
  if (s == "minus") return Sector::Minus;
  if (s == "plus") return Sector::Plus;
  throw UsageError("sector must be 'minus' or 'plus', got '" + s + "'");
}

std::optional<Sector> parse_sector_or_both(const std::string& s) {
  if (s == "both") return std::nullopt;
  return parse_sector(s);
}

Table run_partner(const PartnerConfig& c) {
  if (!(c.dx > 0.0)) throw UsageError("dx must be positive");
  std::optional<Superpotential> w;
  GridSpec grid;
  if (c.family == "odd-monomial" || c.family == "sign-monomial") {
    if (!c.g) throw UsageError("--g is required for the " + c.family + " family");
    if (c.n < 0) throw UsageError("--n must be >= 0");
    if (!(c.x_max > 0.0)) throw UsageError("--x-max must be positive");
    w = c.family == "odd-monomial" ? Superpotential::odd_monomial(*c.g, c.n) : Superpotential::sign_monomial(*c.g, c.n);
    grid = GridSpec::symmetric(c.x_max, c.dx);
  } else if (c.family == "well-cotangent") {
    if (!(c.L > 0.0) || !(c.L > 2.0 * c.dx)) throw UsageError("--L must exceed two grid steps");
    w = Superpotential::well_cotangent(c.L);
    grid = GridSpec::span(c.dx, c.L - c.dx, c.dx);
  } else {
    throw UsageError("unknown family '" + c.family + "' (odd-monomial, sign-monomial, well-cotangent)");
  }
  const PartnerPair pair = partner_potentials(*w);
  Table t{{"x", "v_minus", "v_plus", "w"}, {}, {}};
  for (std::size_t i = 0; i < grid.count; ++i) {
    const double x = grid.x(i);
    t.add_row({x, pair.v_minus(x), pair.v_plus(x), w->w(x)});
  }
  t.note("superpotential", w->name());
  if (const auto sp = pair.spike()) {
    std::ostringstream s;
    s << "x=" << format_double(sp->position) << ";minus=" << format_double(sp->minus_weight)
      << ";plus=" << format_double(sp->plus_weight);
    t.note("delta_spike", s.str());
  }
  return t;
}

Table run_variational(const VariationalConfig& c) {
  if (c.m_first < 1 || c.m_last < c.m_first) throw UsageError("basis size must satisfy 1 <= m_first <= m_last");
  const bool eps = c.problem == "eps-x2";
  if (!eps && c.problem != "quartic" && c.problem != "sho")
    throw UsageError("unknown problem '" + c.problem + "' (eps-x2, quartic, sho)");

  if (c.wavefunction) {
    if (c.m_first != c.m_last) throw UsageError("--wavefunction needs a single basis size");
    if (!(c.x_max > 0.0) || !(c.dx > 0.0)) throw UsageError("need x_max > 0 and dx > 0");
    const int m = c.m_first;
    const BasisSpec basis{eps ? Envelope::CubicExp : Envelope::Gaussian, m};
    const PartnerPair pair = partner_potentials(Superpotential::sign_monomial(1.0, 1));
    RealFunction pot = [](double x) { return x * x; };
    if (eps) pot = c.sector == Sector::Minus ? pair.v_minus_fn() : pair.v_plus_fn();
    if (c.problem == "quartic") pot = [](double x) { return 0.25 * x * x * x * x; };
    const VariationalResult r = eps ? variational_eps_x2(c.sector, m) : solve_variational(build_pencil_quadrature(basis, pot), basis);
    const int n = *c.wavefunction;
    if (n < 0 || n >= static_cast<int>(r.levels.size())) throw UsageError("--wavefunction level out of range for this basis");
    const GridFunction psi = r.wavefunction(n, GridSpec::symmetric(c.x_max, c.dx));
    const GridFunction res = residual(psi, r.levels[static_cast<std::size_t>(n)].energy, pot);
    Table t{{"x", "psi", "residual"}, {}, {}};
    for (std::size_t i = 0; i < psi.size(); ++i)
      t.add_row({psi.x(i), psi[i], i == 0 || i + 1 == psi.size() ? Cell() : Cell(res[i - 1])});
    t.note("energy", format_double(r.levels[static_cast<std::size_t>(n)].energy));
    return t;
  }

  std::vector<std::string> cols = {"m", "level", "parity", "energy", "deviation_percent"};
  if (c.compare) cols.insert(cols.end(), {"published", "abs_deviation"});
  if (c.coefficients) cols.push_back("coefficients");
  Table t{cols, {}, {}};
  if (c.m_last > 20) t.note("warning", "basis sizes above 20 are badly conditioned; Cholesky failure is likely");

  for (int m = c.m_first; m <= c.m_last; ++m) {
    VariationalResult r = [&] {
      if (eps) return variational_eps_x2(c.sector, m);
      const BasisSpec basis{Envelope::Gaussian, m};
      const RealFunction V = c.problem == "quartic" ? RealFunction([](double x) { return 0.25 * x * x * x * x; })
                                                    : RealFunction([](double x) { return x * x; });
      return solve_variational(build_pencil_quadrature(basis, V), basis);
    }();
    for (std::size_t n = 0; n < r.levels.size(); ++n) {
      const VariationalLevel& lv = r.levels[n];
      const int level = static_cast<int>(n);
      std::optional<double> exact, published;
      if (eps) {
        exact = shooting_reference(c.sector, level);
        published = table_entry(c.sector == Sector::Minus ? reference::kVariationalMinus : reference::kVariationalPlus, m, level);
      } else if (c.problem == "quartic") {
        if (level == 0) exact = reference::kQuarticExact;
        for (const auto& q : reference::kQuarticLadder)
          if (q.m == m && level == 0) published = q.energy;
      } else {
        exact = 2.0 * level + 1.0;
      }
      std::vector<Cell> row = {I(m), I(level), std::string(to_string(lv.parity)), lv.energy,
                               exact ? Cell(percent_deviation(lv.energy, *exact)) : Cell()};
      if (c.compare) {
        row.push_back(opt(published));
        row.push_back(published ? Cell(std::abs(lv.energy - *published)) : Cell());
      }
      if (c.coefficients) {
        std::ostringstream s;
        for (Eigen::Index j = 0; j < lv.coeffs.size(); ++j) s << (j ? ";" : "") << format_double(lv.coeffs[j]);
        row.push_back(s.str());
      }
      t.add_row(std::move(row));
    }
  }
  return t;
}

Table run_shoot(const ShootConfig& c) {
  if (c.levels < 1) throw UsageError("--levels must be >= 1");
  if (!(c.dx > 0.0)) throw UsageError("dx must be positive");
  std::vector<Sector> sectors;
  if (!c.sector || *c.sector == Sector::Minus) sectors.push_back(Sector::Minus);
  if (!c.sector || *c.sector == Sector::Plus) sectors.push_back(Sector::Plus);

  struct Job {
    Sector sector;
    int level;
    double e_var10;  // m = 10 estimate; NaN when that basis has no such level
    std::future<LevelResult> result;
  };
  std::vector<Job> jobs;
  const PartnerPair pair = partner_potentials(Superpotential::sign_monomial(1.0, 1));
  for (Sector s : sectors) {
    const int first = s == Sector::Minus ? 1 : 0;
    const int last = first + c.levels - 1;
    const std::vector<double> e10 = variational_eps_x2(s, 10).energies();
    const std::vector<double> bracket_src =
        last < static_cast<int>(e10.size()) ? e10 : variational_eps_x2(s, std::min(20, last + 4)).energies();
    if (last >= static_cast<int>(bracket_src.size())) throw UsageError("too many levels requested for the bracket basis");
    const RealFunction V = s == Sector::Minus ? pair.v_minus_fn() : pair.v_plus_fn();
    for (int n = first; n <= last; ++n) {
      const auto [lo, hi] = variational_bracket(bracket_src[static_cast<std::size_t>(n)]);
      const double ev = n < static_cast<int>(e10.size()) ? e10[static_cast<std::size_t>(n)] : std::nan("");
      jobs.push_back({s, n, ev, std::async(std::launch::async, [V, n, lo = lo, hi = hi, dx = c.dx] {
                        return find_level_n(V, n, lo, hi, dx);
                      })});
    }
  }

  std::vector<std::string> cols = {"sector", "level", "parity", "nodes", "energy", "variational_m10", "deviation_percent"};
  if (c.compare) cols.insert(cols.end(), {"published", "abs_deviation", "published_deviation_percent"});
  Table t{cols, {}, {}};
  std::vector<double> minus(static_cast<std::size_t>(c.levels + 1), std::nan("")), plus(minus);
  for (Job& j : jobs) {
    const LevelResult r = j.result.get();
    (j.sector == Sector::Minus ? minus : plus)[static_cast<std::size_t>(j.level)] = r.energy;
    const bool has_var = !std::isnan(j.e_var10);
    std::vector<Cell> row = {std::string(to_string(j.sector)), I(j.level), std::string(to_string(r.parity)), I(r.nodes),
                             r.energy, has_var ? Cell(j.e_var10) : Cell(),
                             has_var ? Cell(100.0 * (j.e_var10 - r.energy) / r.energy) : Cell()};
    if (c.compare) {
      const auto th = shooting_reference(j.sector, j.level);
      row.push_back(opt(th));
      row.push_back(th ? Cell(std::abs(r.energy - *th)) : Cell());
      row.push_back(opt(published_deviation(j.sector, j.level)));
    }
    t.add_row(std::move(row));
  }
  if (sectors.size() == 2) {
    double worst = 0.0;
    for (int n = 0; n + 1 <= c.levels; ++n) {
      const double a = minus[static_cast<std::size_t>(n + 1)], b = plus[static_cast<std::size_t>(n)];
      if (!std::isnan(a) && !std::isnan(b)) worst = std::max(worst, std::abs(a - b));
    }
    std::ostringstream s;
    s.precision(3);
    s << std::scientific << worst;
    t.note("max_pairing_deviation", s.str());
  }
  return t;
}

Table run_lpt(const LptConfig& c) {
  if (c.order < 1) throw UsageError("--order must be >= 1");
  std::vector<Reparametrization> reps;
  if (c.problem == "eps-x2") {
    if (!c.sector || *c.sector == Sector::Minus) reps.push_back(Reparametrization::eps_x2(Sector::Minus));
    if (!c.sector || *c.sector == Sector::Plus) reps.push_back(Reparametrization::eps_x2(Sector::Plus));
  } else if (c.problem == "quartic") {
    reps.push_back(Reparametrization::quartic());
  } else {
    throw UsageError("unknown problem '" + c.problem + "' (eps-x2, quartic)");
  }

  std::vector<std::string> cols = {"problem", "sector", "order", "delta", "energy", "closed_form_first_order",
                                   "reference", "deviation_percent"};
  if (c.compare) cols.insert(cols.end(), {"published", "abs_deviation"});
  Table t{cols, {}, {}};
  for (const Reparametrization& rep : reps) {
    const bool quartic = rep.family == Reparametrization::Family::Quartic;
    const Order0 o = order0_solve(rep);
    double energy;
    if (c.order == 1) {
      energy = o.b0 + c.delta * b1_quadrature(rep);
    } else {
      DeltaExpansion ex(rep);
      ex.extend_to(c.order);
      energy = ex.energy_at(c.delta);
    }
    const double closed = o.b0 + c.delta * b1_closed_form(rep);
    std::optional<double> ref, published;
    if (quartic) {
      ref = reference::kQuarticExact;
      published = reference::kLptQuartic;
    } else if (rep.sector == Sector::Minus) {
      ref = 0.0;
      published = reference::kLptMinus;
    } else {
      ref = reference::kShooting[0];
      published = reference::kLptPlus;
    }
    if (c.order != 1 || c.delta != 1.0) published.reset();
    std::vector<Cell> row = {c.problem, quartic ? Cell() : Cell(std::string(to_string(rep.sector))), I(c.order), c.delta,
                             energy, closed, opt(ref),
                             ref && *ref != 0.0 ? Cell(percent_deviation(energy, *ref)) : Cell()};
    if (c.compare) {
      row.push_back(opt(published));
      row.push_back(published ? Cell(std::abs(energy - *published)) : Cell());
    }
    t.add_row(std::move(row));
  }
  return t;
}

Table run_scatter(const ScatterConfig& c) {
  Table t{{"sector", "g", "energy", "k", "reflection", "transmission", "r_plus_t", "deviation_percent"}, {}, {}};
  for (Sector s : {Sector::Minus, Sector::Plus}) {
    if (c.sector && *c.sector != s) continue;
    const ScatteringSolution r = scatter(s, c.g, c.energy);
    const double sum = r.reflection + r.transmission;
    t.add_row({std::string(to_string(s)), c.g, c.energy, r.k, r.reflection, r.transmission, sum, 100.0 * std::abs(sum - 1.0)});
  }
  if (!c.sector || *c.sector == Sector::Minus) t.note("bound_state_energy", format_double(bound_state(c.g).energy));
  return t;
}

Table run_hydrogen(const HydrogenConfig& c) {
  if (c.l < 0 || c.levels < 1) throw UsageError("need --l >= 0 and --levels >= 1");
  if (!(c.e2 > 0.0) || !(c.dx > 0.0)) throw UsageError("need --e2 > 0 and dx > 0");
  const std::vector<double> engine = hydrogen_levels_engine(c.l, c.levels, c.e2);
  const double a = 2.0 / c.e2;
  Table t{{"n", "l", "j", "energy", "closed_form", "deviation_percent", "nodes", "norm"}, {}, {}};
  for (int j = 0; j < c.levels; ++j) {
    const int n = c.l + j + 1;
    const double closed = hydrogen_levels(c.l, j, c.e2);
    const GridSpec grid = GridSpec::span(c.dx, 8.0 * n * n * a + 40.0 * a, c.dx);
    const HydrogenState st = hydrogen_wavefunction(c.l, j, c.e2, grid);
    const double e = engine[static_cast<std::size_t>(j)];
    t.add_row({I(n), I(c.l), I(j), e, closed, percent_deviation(e, closed), I(st.nodes), st.grid_norm});
  }
  return t;
}

Table run_heun(const HeunConfig& c) {
  if (c.j_max < 3) throw UsageError("--j-max must be >= 3");
  if (!(c.g > 0.0)) throw UsageError("--g must be positive");
  const double a0 = c.parity == Parity::Even ? 1.0 : 0.0;
  const double a1 = 1.0 - a0;
  const FrobeniusSeries right = recurrence_coeffs(a0, a1, c.energy, c.g, 1, c.j_max);
  const FrobeniusSeries left = recurrence_coeffs(a0, a1, c.energy, c.g, -1, c.j_max);
  const HeunParameters hp = heun_parameters(c.g, c.energy);

  Table t;
  if (c.wavefunction) {
    if (!(c.x_max > 0.0) || !(c.dx > 0.0)) throw UsageError("need --x-max > 0 and dx > 0");
    Diagnostics diag;
    const GridFunction psi = evaluate_candidate(a0, a1, c.energy, c.g, GridSpec::symmetric(c.x_max, c.dx), c.j_max, &diag);
    t.columns = {"x", "psi"};
    for (std::size_t i = 0; i < psi.size(); ++i) t.add_row({psi.x(i), psi[i]});
    for (const std::string& w : diag.warnings) t.note("warning", w);
  } else {
    t.columns = {"j", "a_right", "a_left"};
    const int n = std::min(right.j_max(), left.j_max());
    for (int j = 0; j <= n; ++j) t.add_row({I(j), right.a[static_cast<std::size_t>(j)], left.a[static_cast<std::size_t>(j)]});
  }
  auto idx = [](std::optional<int> v) { return v ? std::to_string(*v) : std::string("none"); };
  t.note("truncation_index_right", idx(truncation_index(right)));
  t.note("truncation_index_left", idx(truncation_index(left)));
  t.note("consecutive_zero_index", idx(consecutive_zero_index(right)));
  if (right.overflow_at || left.overflow_at) t.note("overflow_at", idx(right.overflow_at ? right.overflow_at : left.overflow_at));
  std::ostringstream s;
  s.precision(12);
  s << "alpha=" << hp.alpha << ";beta=" << hp.beta << ";gamma=" << hp.gamma << ";z_scale=" << hp.z_scale;
  t.note("heun_parameters", s.str());
  return t;
}

Table run_superalgebra(const SuperalgebraConfig& c) {
  if (c.n_max < 3) throw UsageError("--n-max must be >= 3");
  const AlgebraReport r = check_superalgebra(c.n_max, c.tol);
  Table t{{"check", "level", "multiplicity", "deviation", "tolerance", "passed"}, {}, {}};
  auto add = [&](const char* name, double dev) {
    t.add_row({std::string(name), Cell(), Cell(), dev, c.tol, std::string(dev <= c.tol ? "true" : "false")});
  };
  add("anticommutator", r.anticommutator_deviation);
  add("nilpotency", r.nilpotency_deviation);
  add("commutator", r.commutator_deviation);
  for (const LevelDegeneracy& d : r.degeneracies) {
    const I expected = d.level == 0 ? 1 : 2;
    t.add_row({std::string("degeneracy"), I(d.level), I(d.multiplicity), double(d.multiplicity - expected), 0.0,
               std::string(d.multiplicity == expected ? "true" : "false")});
  }
  if (!r.passed()) t.note("status", "fail");
  return t;
}

}  // namespace susyqm::experiments
