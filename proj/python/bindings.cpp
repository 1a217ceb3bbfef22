#include <pybind11/pybind11.h>
#include <pybind11/complex.h>
#include <pybind11/stl.h>

#include <sstream>

#include "susyqm/experiments.hpp"
#include "susyqm/heun.hpp"
#include "susyqm/hierarchy.hpp"
#include "susyqm/lpt.hpp"
#include "susyqm/scattering.hpp"
#include "susyqm/shooting.hpp"
#include "susyqm/superalgebra.hpp"
#include "susyqm/superpotential.hpp"
#include "susyqm/variational.hpp"

namespace py = pybind11;
using namespace susyqm;
namespace ex = susyqm::experiments;

namespace {

Superpotential make_w(const std::string& family, double g, int n, double L) {
  if (family == "odd-monomial") return Superpotential::odd_monomial(g, n);
  if (family == "sign-monomial") return Superpotential::sign_monomial(g, n);
  if (family == "well-cotangent") return Superpotential::well_cotangent(L);
  throw ex::UsageError("unknown family '" + family + "'");
}

py::dict scatter_dict(const std::string& sector, double g, double energy) {
  const ScatteringSolution s = scatter(ex::parse_sector(sector), g, energy);
  py::dict d;
  d["k"] = s.k;
  d["reflection"] = s.reflection;
  d["transmission"] = s.transmission;
  d["b_over_a"] = s.b_over_a;
  d["c_over_a"] = s.c_over_a;
  return d;
}

// Runs a command-line style driver and returns its CSV text.
std::string table_csv(const Table& t) {
  std::ostringstream out;
  write_table(out, t, Format::Csv);
  return out.str();
}

}  // namespace

PYBIND11_MODULE(_susyqm, m) {
  m.doc() = "Supersymmetric quantum mechanics: partner potentials, spectra and scattering";

  py::register_exception<Error>(m, "SusyqmError", PyExc_RuntimeError);
  py::register_exception<ex::UsageError>(m, "UsageError", PyExc_ValueError);

  m.def(
      "partner_potentials",
      [](const std::string& family, const std::vector<double>& xs, double g, int n, double L) {
        const Superpotential w = make_w(family, g, n, L);
        const PartnerPair p = partner_potentials(w);
        std::vector<double> vm, vp, ws;
        for (double x : xs) {
          vm.push_back(p.v_minus(x));
          vp.push_back(p.v_plus(x));
          ws.push_back(w.w(x));
        }
        return py::make_tuple(vm, vp, ws);
      },
      py::arg("family"), py::arg("x"), py::arg("g") = 1.0, py::arg("n") = 0, py::arg("L") = 1.0,
      "Return (V-, V+, W) sampled at x.");

  m.def(
      "variational_energies",
      [](const std::string& sector, int size) {
        const Sector s = ex::parse_sector(sector);
        return solve_variational(build_pencil_eps_x2(size, s), {Envelope::CubicExp, size}, s).energies();
      },
      py::arg("sector"), py::arg("m"), "Rayleigh-Ritz energies for x^4 -+ 2|x| with m basis functions.");

  m.def(
      "shoot_level",
      [](const std::string& sector, int level, double e_lo, double e_hi, double dx) {
        const PartnerPair p = partner_potentials(Superpotential::sign_monomial(1.0, 1));
        const RealFunction V = ex::parse_sector(sector) == Sector::Minus ? p.v_minus_fn() : p.v_plus_fn();
        return find_level_n(V, level, e_lo, e_hi, dx).energy;
      },
      py::arg("sector"), py::arg("level"), py::arg("e_lo"), py::arg("e_hi"), py::arg("dx") = 1e-3,
      "Bound-state energy of x^4 -+ 2|x| by shooting within [e_lo, e_hi].");

  m.def(
      "lpt_first_order",
      [](const std::string& problem, const std::string& sector) {
        const Reparametrization rep =
            problem == "quartic" ? Reparametrization::quartic() : Reparametrization::eps_x2(ex::parse_sector(sector));
        if (problem != "quartic" && problem != "eps-x2") throw ex::UsageError("unknown problem '" + problem + "'");
        const Order0 o = order0_solve(rep);
        return py::make_tuple(o.b0 + b1_quadrature(rep), o.b0 + b1_closed_form(rep));
      },
      py::arg("problem") = "eps-x2", py::arg("sector") = "minus",
      "First-order delta-expansion energy as (quadrature, closed form).");

  m.def("scatter", &scatter_dict, py::arg("sector"), py::arg("g"), py::arg("energy"),
        "Reflection and transmission off the delta well (minus) or barrier (plus).");

  m.def("hydrogen_levels", &hydrogen_levels_engine, py::arg("l"), py::arg("levels"), py::arg("e2") = 2.0,
        "Hydrogen radial energies from the shape-invariance engine.");

  m.def(
      "heun_coefficients",
      [](double a0, double a1, double energy, double g, int sigma, int j_max) {
        const FrobeniusSeries s = recurrence_coeffs(a0, a1, energy, g, sigma, j_max);
        const auto t = truncation_index(s);
        return py::make_tuple(s.a, t ? py::object(py::int_(*t)) : py::object(py::none()));
      },
      py::arg("a0"), py::arg("a1"), py::arg("energy"), py::arg("g") = 1.0, py::arg("sigma") = 1, py::arg("j_max") = 200,
      "Frobenius coefficients and the truncation index (None when the series does not terminate).");

  m.def(
      "check_superalgebra",
      [](int n_max, double tol) {
        const AlgebraReport r = check_superalgebra(n_max, tol);
        py::dict d;
        d["passed"] = r.passed();
        d["anticommutator_deviation"] = r.anticommutator_deviation;
        d["nilpotency_deviation"] = r.nilpotency_deviation;
        d["commutator_deviation"] = r.commutator_deviation;
        std::vector<int> mult;
        for (const auto& lv : r.degeneracies) mult.push_back(lv.multiplicity);
        d["multiplicities"] = mult;
        return d;
      },
      py::arg("n_max") = 6, py::arg("tol") = 1e-12);

  m.def(
      "run_table",
      [](const std::string& command, const py::dict& options) {
        auto get = [&](const char* k, auto fallback) {
          using T = decltype(fallback);
          return options.contains(k) ? options[k].cast<T>() : fallback;
        };
        if (command == "variational") {
          ex::VariationalConfig c;
          c.problem = get("problem", std::string("eps-x2"));
          c.sector = ex::parse_sector(get("sector", std::string("minus")));
          c.m_first = get("m_first", 1);
          c.m_last = get("m_last", c.m_first);
          return table_csv(ex::run_variational(c));
        }
        if (command == "shoot") {
          ex::ShootConfig c;
          c.sector = ex::parse_sector_or_both(get("sector", std::string("minus")));
          c.levels = get("levels", 7);
          c.dx = get("dx", 1e-3);
          return table_csv(ex::run_shoot(c));
        }
        throw ex::UsageError("run_table supports 'variational' and 'shoot'");
      },
      py::arg("command"), py::arg("options") = py::dict(), "CSV text of a command-line table.");
}
