// Command-line front end: tables, verdicts, orbit and pendulum data, SVG
// figures, and the verification battery.
#include <CLI11.hpp>
#include <complex>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "birkhoff/billiard_map.hpp"
#include "birkhoff/io.hpp"
#include "birkhoff/lazutkin.hpp"
#include "birkhoff/normal_form.hpp"
#include "birkhoff/numerics.hpp"
#include "birkhoff/orbits.hpp"
#include "birkhoff/pendulum.hpp"
#include "birkhoff/verify.hpp"

namespace {

using namespace birkhoff;

std::vector<std::string> provenance(const DomainSpec& spec,
                                    const std::string& generator) {
  return {"generator: birkhoff " + generator, "domain: " + spec.describe(),
          "domain-hash: " + domain_hash(spec), "chart-tolerance: 1e-10"};
}

void emit_table(const CsvTable& table, const std::string& csv_path,
                const std::string& json_path, bool to_stdout) {
  if (!csv_path.empty()) write_file(csv_path, format_csv(table));
  if (!json_path.empty()) write_file(json_path, format_json(table));
  if (to_stdout && csv_path.empty() && json_path.empty())
    std::cout << format_csv(table);
}

std::vector<std::complex<double>> boundary_outline(const BoundaryChart& chart,
                                                   int n = 512) {
  std::vector<std::complex<double>> outline;
  outline.reserve(n);
  for (int i = 0; i < n; ++i)
    outline.push_back(chart.point(chart.length() * i / n));
  return outline;
}

int run_lazutkin_table(const std::string& domain_path, int n,
                       const std::string& csv, const std::string& json) {
  const DomainSpec spec = load_domain_file(domain_path);
  LazutkinChart lc{BoundaryChart{spec}};
  CsvTable table;
  table.comments = provenance(spec, "lazutkin-table");
  {
    std::ostringstream c;
    c << std::setprecision(17) << "C_L: " << lc.lazutkin_constant();
    table.comments.push_back(c.str());
    const auto [i1, i2] = lc.marvizi_melrose();
    std::ostringstream c2;
    c2 << std::setprecision(17) << "C_BV: " << lc.c_bv() << "  I1: " << i1
       << "  I2: " << i2;
    table.comments.push_back(c2.str());
  }
  table.columns = {"s", "X0", "rho_al", "rho_L", "Y0"};
  const double len = lc.boundary().length();
  for (int i = 0; i <= n; ++i) {
    const double s = len * i / n;
    const double x0 = lc.x0(s);
    table.rows.push_back(
        {s, x0, lc.boundary().arc_jet(s).rho, lc.rho_l(x0), lc.y0_of_s(s)});
  }
  emit_table(table, csv, json, true);
  return 0;
}

int run_x1(const std::string& domain_path, int n, const std::string& csv,
           const std::string& json) {
  const DomainSpec spec = load_domain_file(domain_path);
  NormalForm nf{LazutkinChart{BoundaryChart{spec}}};
  CsvTable table;
  table.comments = provenance(spec, "x1");
  table.columns = {"s", "X1"};
  const double len = nf.lazutkin().boundary().length();
  for (int i = 0; i <= n; ++i) {
    const double s = len * i / n;
    table.rows.push_back({s, nf.x1(s)});
  }
  emit_table(table, csv, json, true);
  return 0;
}

int run_disc_test(const std::string& domain_path, double tol) {
  const DomainSpec spec = load_domain_file(domain_path);
  NormalForm nf{LazutkinChart{BoundaryChart{spec}}};
  const auto verdict = nf.disc_test(tol);
  std::cout << (verdict.is_disc ? "DISC" : "NOT A DISC") << " (sup|X1| = "
            << std::scientific << std::setprecision(3) << verdict.sup_x1
            << ", tol = " << tol << ")\n";
  return verdict.is_disc ? 0 : 1;
}

int run_orbit(const std::string& domain_path, double s, double phi, int n,
              const std::string& csv, const std::string& json,
              const std::string& svg) {
  const DomainSpec spec = load_domain_file(domain_path);
  BoundaryChart chart{spec};
  const auto orbit = billiard_orbit(chart, {s, phi}, n);
  CsvTable table;
  table.comments = provenance(spec, "orbit");
  table.columns = {"k", "s_k", "phi_k"};
  for (std::size_t k = 0; k < orbit.size(); ++k)
    table.rows.push_back({static_cast<double>(k), orbit[k].s, orbit[k].phi});
  emit_table(table, csv, json, svg.empty());
  if (!svg.empty()) {
    std::vector<std::complex<double>> pts;
    pts.reserve(orbit.size());
    for (const auto& state : orbit) pts.push_back(chart.point(state.s));
    SvgOptions opt;
    opt.outline = boundary_outline(chart);
    std::ostringstream cap;
    cap << "billiard orbit, " << n << " bounces, " << spec.describe();
    opt.caption = cap.str();
    write_file(svg, render_svg_polyline(pts, opt));
  }
  return 0;
}

int run_orbit_alpha(const std::string& domain_path,
                    const std::vector<int>& ladder, const std::string& csv,
                    const std::string& json) {
  const DomainSpec spec = load_domain_file(domain_path);
  NormalForm nf{LazutkinChart{BoundaryChart{spec}}};
  const auto val = cross_validate_x1(nf, ladder);
  CsvTable table;
  table.comments = provenance(spec, "orbit-alpha");
  {
    std::ostringstream c;
    c << "max relative deviation: " << std::setprecision(3) << std::scientific
      << val.max_rel_deviation;
    table.comments.push_back(c.str());
    std::ostringstream c2;
    c2 << "median per-doubling ratio: " << std::defaultfloat
       << val.median_doubling_ratio;
    table.comments.push_back(c2.str());
  }
  table.columns = {"k_over_q"};
  for (int q : val.qs) table.columns.push_back("alpha_hat_q" + std::to_string(q));
  table.columns.push_back("alpha_extrapolated");
  table.columns.push_back("minus_x1_over_y0_sq");
  for (std::size_t k = 0; k < val.fractions.size(); ++k) {
    std::vector<double> row{val.fractions[k]};
    for (std::size_t i = 0; i < val.qs.size(); ++i)
      row.push_back(val.alpha_hat[i][k]);
    row.push_back(val.alpha_extrapolated[k]);
    row.push_back(val.minus_x1_over_y0_sq[k]);
    table.rows.push_back(std::move(row));
  }
  emit_table(table, csv, json, true);
  return 0;
}

int run_pendulum(double energy, bool gamma, double c_star, int samples,
                 const std::string& csv, const std::string& json,
                 const std::string& svg) {
  namespace pn = pendulum;
  const auto lvl = pn::level(energy);
  std::cout << "E = " << energy << ", turning points (" << lvl.turning.lower
            << ", " << lvl.turning.upper << "), period " << std::setprecision(12)
            << lvl.period << ", theta " << lvl.theta << " (4 pi = "
            << 4 * kPi << ")\n";
  if (!csv.empty() || !json.empty()) {
    const auto traj = pn::integrate(energy, lvl.period);
    CsvTable table;
    table.comments = {"generator: birkhoff pendulum",
                      "energy: " + std::to_string(energy)};
    table.columns = {"tau", "zeta", "zeta_dot", "H"};
    for (std::size_t i = 0; i < traj.tau.size(); ++i)
      table.rows.push_back({traj.tau[i], traj.zeta[i], traj.zeta_dot[i],
                            pn::hamiltonian(traj.zeta[i], traj.zeta_dot[i])});
    emit_table(table, csv, json, false);
  }
  if (gamma || !svg.empty()) {
    const auto curve = pn::gamma_curve(energy, c_star, samples);
    std::cout << "gamma: turning angle " << std::setprecision(12)
              << curve.turning_angle << ", endpoint gap "
              << curve.endpoint_gap << ", polyline self-intersections "
              << curve.polyline_self_intersections << "\n";
    if (!svg.empty()) {
      SvgOptions opt;
      std::ostringstream cap;
      cap << "E = " << energy << ", turning angle 4 pi, endpoint gap "
          << std::setprecision(3) << curve.endpoint_gap;
      opt.caption = cap.str();
      write_file(svg, render_svg_polyline(curve.points, opt));
    }
  }
  return 0;
}

int run_expansion_check(const std::string& domain_path, double xi) {
  const DomainSpec spec = load_domain_file(domain_path);
  LazutkinChart lc{BoundaryChart{spec}};
  const AngularShift zero = AngularShift::zero();
  const auto closed = chord_expansion_closed(lc, zero, xi);
  const auto oracle = chord_expansion_numeric(lc, zero, xi);
  std::cout << "chord expansion at xi = " << xi << " for " << spec.describe()
            << " (zero shift)\n";
  std::cout << std::left << std::setw(8) << "name" << std::setw(24)
            << "closed form" << std::setw(24) << "oracle" << "rel error\n";
  bool ok = true;
  const auto row = [&](const std::string& name, double c, double o) {
    const double rel = std::abs(c - o) / std::max(0.5, std::abs(c));
    ok = ok && rel < 1e-6;
    std::cout << std::left << std::setw(8) << name << std::setw(24)
              << std::setprecision(15) << c << std::setw(24) << o
              << std::scientific << std::setprecision(2) << rel
              << std::defaultfloat << "\n";
  };
  for (int j = 0; j <= 5; ++j)
    row("S~" + std::to_string(j), closed.s_tilde[j], oracle.s_tilde[j]);
  for (int j = 0; j <= 4; ++j)
    row("C~" + std::to_string(j), closed.c_tilde[j], oracle.c_tilde[j]);
  const auto taylor = phi_taylor_numeric(lc, zero, xi);
  const double phi4 = phi4_closed_form(lc, 0.0, xi);
  row("phi_4", phi4, taylor.eta4);
  std::cout << (ok ? "all coefficients within tolerance\n"
                   : "some coefficients out of tolerance\n");
  return ok ? 0 : 1;
}

int run_verify_all(const std::string& domain_path,
                   const std::vector<int>& ladder, double tol) {
  const DomainSpec spec = load_domain_file(domain_path);
  VerifyOptions opt;
  if (!ladder.empty()) opt.q_ladder = ladder;
  opt.disc_tol = tol;
  std::cout << "domain checks for " << spec.describe() << "\n";
  const auto domain_checks = domain_check_battery(spec, opt);
  print_check_table(std::cout, domain_checks);
  std::cout << "pendulum checks (domain independent)\n";
  const auto pend_checks = pendulum_check_battery();
  print_check_table(std::cout, pend_checks);
  const bool ok = all_passed(domain_checks) && all_passed(pend_checks);
  std::cout << (ok ? "ALL CHECKS PASSED\n" : "SOME CHECKS FAILED\n");
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Birkhoff billiards in strictly convex planar domains: "
               "Lazutkin data, boundary-layer expansions, periodic orbits, "
               "disc detection and the auxiliary pendulum analysis"};
  app.require_subcommand(1);

  std::string domain_path, csv, json, svg;
  int n = 256;
  double tol = 1e-10;

  auto* lt = app.add_subcommand("lazutkin-table",
                                "emit s, X0, rho_al, rho_L, Y0 samples");
  lt->add_option("--domain", domain_path, "domain spec file")->required();
  lt->add_option("--n", n, "number of samples");
  lt->add_option("--csv", csv, "write CSV here");
  lt->add_option("--json", json, "write JSON here");

  auto* x1cmd = app.add_subcommand("x1", "emit the X1 coefficient along the boundary");
  x1cmd->add_option("--domain", domain_path)->required();
  x1cmd->add_option("--n", n);
  x1cmd->add_option("--csv", csv);
  x1cmd->add_option("--json", json);

  auto* dt = app.add_subcommand("disc-test", "decide disc-ness from sup|X1|");
  dt->add_option("--domain", domain_path)->required();
  dt->add_option("--tol", tol, "sup|X1| threshold");

  double s0 = 0.0, phi0 = 1.0;
  int bounces = 10;
  auto* orb = app.add_subcommand("orbit", "iterate the billiard map");
  orb->add_option("--domain", domain_path)->required();
  orb->add_option("--s", s0, "initial arc length");
  orb->add_option("--phi", phi0, "initial angle in (0, pi)")->required();
  orb->add_option("--n", bounces, "number of bounces")->required();
  orb->add_option("--csv", csv);
  orb->add_option("--json", json);
  orb->add_option("--svg", svg, "chord diagram");

  std::vector<int> ladder;
  auto* oa = app.add_subcommand(
      "orbit-alpha", "periodic-orbit distribution against X1");
  oa->add_option("--domain", domain_path)->required();
  oa->add_option("--q-ladder", ladder, "orbit periods (e.g. 32 64 128)")
      ->delimiter(',');
  oa->add_option("--csv", csv);
  oa->add_option("--json", json);

  double energy = 0.02, c_star = 1.0;
  int samples = 1200;
  bool gamma = false;
  auto* pend = app.add_subcommand("pendulum", "energy levels and curves");
  pend->add_option("--energy", energy, "energy in (0, 1/4)")->required();
  pend->add_flag("--gamma", gamma, "reconstruct the plane curve");
  pend->add_option("--c-star", c_star, "scaling constant");
  pend->add_option("--samples", samples, "curve samples");
  pend->add_option("--csv", csv);
  pend->add_option("--json", json);
  pend->add_option("--svg", svg);

  double xi = 0.25;
  auto* exp_cmd = app.add_subcommand(
      "expansion-check", "chord expansion: closed forms vs quadrature oracle");
  exp_cmd->add_option("--domain", domain_path)->required();
  exp_cmd->add_option("--xi", xi, "Lazutkin coordinate");

  auto* va = app.add_subcommand("verify-all", "run the full check battery");
  va->add_option("--domain", domain_path)->required();
  va->add_option("--q-ladder", ladder)->delimiter(',');
  va->add_option("--tol", tol, "disc verdict threshold");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (*lt) return run_lazutkin_table(domain_path, n, csv, json);
    if (*x1cmd) return run_x1(domain_path, n, csv, json);
    if (*dt) return run_disc_test(domain_path, tol);
    if (*orb) return run_orbit(domain_path, s0, phi0, bounces, csv, json, svg);
    if (*oa)
      return run_orbit_alpha(
          domain_path, ladder.empty() ? std::vector<int>{32, 64, 128} : ladder,
          csv, json);
    if (*pend) return run_pendulum(energy, gamma, c_star, samples, csv, json, svg);
    if (*exp_cmd) return run_expansion_check(domain_path, xi);
    if (*va) return run_verify_all(domain_path, ladder, tol);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
