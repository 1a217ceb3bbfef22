#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "susyqm/experiments.hpp"

namespace ex = susyqm::experiments;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitComputation = 1;
constexpr int kExitUsage = 2;

// "a..b" or a single integer.
std::pair<int, int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return {v, v};
    }
    const std::string a = s.substr(0, dots), b = s.substr(dots + 2);
    const int lo = std::stoi(a, &used);
    if (used != a.size()) throw std::invalid_argument(s);
    const int hi = std::stoi(b, &used);
    if (used != b.size()) throw std::invalid_argument(s);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw ex::UsageError("--sweep expects 'first..last', got '" + s + "'");
  }
}

std::string sector_name(std::optional<susyqm::Sector> s) { return s ? std::string(susyqm::to_string(*s)) : "both"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Supersymmetric quantum mechanics toolkit: partner potentials, spectra and scattering"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "csv", output;
  bool verbose = false, compare = false;
  app.add_option("--format", format, "Output format: csv, tsv or json")->check(CLI::IsMember({"csv", "tsv", "json"}));
  app.add_option("--output,-o", output, "Write to this file instead of standard output");
  app.add_flag("--verbose,-v", verbose, "Print run metadata to standard error");
  app.add_flag("--compare-thesis", compare, "Add published values and absolute deviations");

  // Each subcommand fills `run` with a closure returning (table, config).
  std::function<std::pair<susyqm::Table, json>()> run;
  std::string command;

  ex::PartnerConfig partner;
  double partner_g = 0.0;
  auto* p = app.add_subcommand("partner", "Sample V-, V+ and W on a grid");
  p->add_option("--family", partner.family, "odd-monomial, sign-monomial or well-cotangent")->required();
  p->add_option("--n", partner.n, "Monomial index");
  auto* g_opt = p->add_option("--g", partner_g, "Coupling g");
  p->add_option("--L", partner.L, "Well width");
  p->add_option("--x-max", partner.x_max, "Half-width of the sampling window");
  p->callback([&] {
    command = "partner";
    run = [&] {
      if (*g_opt) partner.g = partner_g;
      partner.dx = ex::grid_dx(0.01);
      json cfg{{"family", partner.family}, {"n", partner.n}, {"g", partner.g ? json(*partner.g) : json()},
               {"L", partner.L}, {"x_max", partner.x_max}, {"dx", partner.dx}};
      return std::pair{ex::run_partner(partner), cfg};
    };
  });

  ex::VariationalConfig var;
  std::string var_sector = "minus", sweep;
  int var_m = 1;
  auto* v = app.add_subcommand("variational", "Rayleigh-Ritz energies in a polynomial-times-envelope basis");
  v->add_option("--sector", var_sector, "minus or plus (eps-x2 problem)");
  v->add_option("--m", var_m, "Basis size");
  v->add_option("--sweep", sweep, "Range of basis sizes, e.g. 1..10");
  v->add_option("--problem", var.problem, "eps-x2, quartic or sho");
  v->add_flag("--coefficients", var.coefficients, "Dump expansion coefficients");
  int var_wave = -1;
  auto* wave_opt = v->add_option("--wavefunction", var_wave, "Emit x, psi, residual for this level");
  v->callback([&] {
    command = "variational";
    run = [&] {
      var.sector = ex::parse_sector(var_sector);
      std::tie(var.m_first, var.m_last) = sweep.empty() ? std::pair{var_m, var_m} : parse_range(sweep);
      var.compare = compare;
      if (*wave_opt) {
        var.wavefunction = var_wave;
        var.dx = ex::grid_dx(0.01);
      }
      json cfg{{"problem", var.problem}, {"sector", var_sector}, {"m_first", var.m_first}, {"m_last", var.m_last}};
      return std::pair{ex::run_variational(var), cfg};
    };
  });

  ex::ShootConfig shoot;
  std::string shoot_sector = "minus";
  auto* s = app.add_subcommand("shoot", "Numerov shooting for the bound states of x^4 -+ 2|x|");
  s->add_option("--sector", shoot_sector, "minus, plus or both");
  s->add_option("--levels", shoot.levels, "Number of levels per sector");
  s->callback([&] {
    command = "shoot";
    run = [&] {
      shoot.sector = ex::parse_sector_or_both(shoot_sector);
      shoot.dx = ex::grid_dx(1e-3);
      shoot.compare = compare;
      json cfg{{"sector", shoot_sector}, {"levels", shoot.levels}, {"dx", shoot.dx}};
      return std::pair{ex::run_shoot(shoot), cfg};
    };
  });

  ex::LptConfig lpt;
  std::string lpt_sector = "both";
  auto* l = app.add_subcommand("lpt", "Logarithmic perturbation theory in the delta expansion");
  l->add_option("--problem", lpt.problem, "eps-x2 or quartic");
  l->add_option("--sector", lpt_sector, "minus, plus or both");
  l->add_option("--order", lpt.order, "Expansion order");
  l->add_option("--delta", lpt.delta, "Value of the bookkeeping parameter");
  l->callback([&] {
    command = "lpt";
    run = [&] {
      lpt.sector = ex::parse_sector_or_both(lpt_sector);
      lpt.compare = compare;
      json cfg{{"problem", lpt.problem}, {"sector", lpt_sector}, {"order", lpt.order}, {"delta", lpt.delta}};
      return std::pair{ex::run_lpt(lpt), cfg};
    };
  });

  ex::ScatterConfig sc;
  std::string sc_sector = "both";
  auto* c = app.add_subcommand("scatter", "Reflection and transmission off the delta well and barrier");
  c->add_option("--g", sc.g, "Coupling g")->required();
  c->add_option("--E", sc.energy, "Energy")->required();
  c->add_option("--sector", sc_sector, "minus, plus or both");
  c->callback([&] {
    command = "scatter";
    run = [&] {
      sc.sector = ex::parse_sector_or_both(sc_sector);
      json cfg{{"sector", sector_name(sc.sector)}, {"g", sc.g}, {"E", sc.energy}};
      return std::pair{ex::run_scatter(sc), cfg};
    };
  });

  ex::HydrogenConfig hy;
  auto* h = app.add_subcommand("hydrogen", "Hydrogen radial levels from shape invariance");
  h->add_option("--l", hy.l, "Angular momentum");
  h->add_option("--levels", hy.levels, "Number of levels");
  h->add_option("--e2", hy.e2, "Coupling e^2");
  h->callback([&] {
    command = "hydrogen";
    run = [&] {
      hy.dx = ex::grid_dx(1e-3);
      json cfg{{"l", hy.l}, {"levels", hy.levels}, {"e2", hy.e2}, {"dx", hy.dx}};
      return std::pair{ex::run_hydrogen(hy), cfg};
    };
  });

  ex::HeunConfig he;
  std::string parity = "even";
  auto* u = app.add_subcommand("heun", "Frobenius series of the triconfluent Heun reduction");
  u->add_option("--E", he.energy, "Energy")->required();
  u->add_option("--g", he.g, "Coupling g");
  u->add_option("--j-max", he.j_max, "Last coefficient index");
  u->add_option("--parity", parity, "even or odd")->check(CLI::IsMember({"even", "odd"}));
  u->add_flag("--wavefunction", he.wavefunction, "Emit psi(x) instead of the coefficients");
  u->add_option("--x-max", he.x_max, "Half-width for --wavefunction");
  u->callback([&] {
    command = "heun";
    run = [&] {
      he.parity = parity == "even" ? susyqm::Parity::Even : susyqm::Parity::Odd;
      he.dx = ex::grid_dx(0.01);
      json cfg{{"E", he.energy}, {"g", he.g}, {"j_max", he.j_max}, {"parity", parity}, {"wavefunction", he.wavefunction}};
      return std::pair{ex::run_heun(he), cfg};
    };
  });

  ex::SuperalgebraConfig sa;
  auto* a = app.add_subcommand("superalgebra", "Check the super-algebra on a truncated Fock space");
  a->add_option("--n-max", sa.n_max, "Boson truncation");
  a->add_option("--tol", sa.tol, "Tolerance");
  a->callback([&] {
    command = "superalgebra";
    run = [&] {
      json cfg{{"n_max", sa.n_max}, {"tol", sa.tol}};
      return std::pair{ex::run_superalgebra(sa), cfg};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    auto [table, cfg] = run();
    std::ostringstream buf;
    susyqm::write_table(buf, table, *susyqm::parse_format(format), command, cfg.dump());
    for (const auto& [k, val] : table.notes)
      if (k == "warning") std::cerr << "warning: " << val << '\n';
    if (output.empty()) {
      std::cout << buf.str();
    } else {
      std::ofstream f(output, std::ios::binary);
      if (!(f << buf.str())) {
        std::cerr << "error: cannot write " << output << '\n';
        return kExitComputation;
      }
    }
    if (verbose) {
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      std::cerr << "command=" << command << " config=" << cfg.dump() << " rows=" << table.rows.size()
                << " elapsed_s=" << secs << '\n';
    }
    for (const auto& [k, val] : table.notes)
      if (k == "status" && val == "fail") return kExitComputation;
    return 0;
  } catch (const ex::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitComputation;
  }
}
