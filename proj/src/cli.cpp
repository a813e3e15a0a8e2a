#include "specgap/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "specgap/asymptotics.hpp"
#include "specgap/csv.hpp"
#include "specgap/eigensolver.hpp"
#include "specgap/errors.hpp"
#include "specgap/hellmann_feynman.hpp"
#include "specgap/step_delta.hpp"

namespace specgap {

namespace {

void echo_config(std::ostream& os, const std::string& subcommand, const RunConfig& cfg) {
  os << "# specgap " << subcommand << "\n";
  for (const auto& [key, value] : cfg.entries()) os << "# " << key << " = " << value << "\n";
}

// Writes CSV either to cfg.out or to `out`; the config echo goes to whichever
// stream is not carrying CSV.
template <class Writer>
void emit_csv(const std::string& subcommand, const RunConfig& cfg, std::ostream& out, std::ostream& err,
              Writer&& write) {
  if (cfg.out.empty()) {
    echo_config(err, subcommand, cfg);
    write(out);
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open output file '" + cfg.out + "'");
  write(file);
  echo_config(out, subcommand, cfg);
  out << "wrote " << cfg.out << "\n";
}

const char* verdict(const BoundReport& r) {
  if (!r.hypothesis_met) return r.pass ? "UNEXPECTED-PASS" : "EXPECTED-FAIL";
  return r.pass ? "PASS" : "FAIL";
}

void print_report(std::ostream& os, const BoundReport& r) {
  os << std::left << std::setw(20) << r.name << std::setw(16) << verdict(r) << "worst margin "
     << format_double(r.worst_margin) << "  " << r.detail;
  if (!r.hypothesis_met) os << "  [hypothesis not met: counterexample class]";
  os << "\n";
}

void print_excluded(std::ostream& os, const GapCurve& curve) {
  for (const auto& ex : curve.excluded) os << "excluded L=" << format_double(ex.L) << ": " << ex.reason << "\n";
}

SolverSettings settings_of(const RunConfig& cfg) { return {cfg.resolution, cfg.workers}; }

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
  const auto spec = cfg.problem();
  const auto r = lowest_eigenvalues_fd(spec, cfg.k, cfg.resolution);
  echo_config(out, "solve", cfg);
  for (std::size_t j = 0; j < r.eigenvalues.size(); ++j) {
    out << "eps" << j << " = " << format_double(r.eigenvalues[j]) << " +- "
        << format_double(r.error_estimates[j]) << "  nodes " << eigenfunction_nodes(r, j) << "\n";
  }
  if (r.eigenvalues.size() >= 2) {
    const double gap = r.eigenvalues[1] - r.eigenvalues[0];
    const double err = r.error_estimates[0] + r.error_estimates[1];
    out << "gap = " << format_double(gap) << " +- " << format_double(err) << "\n";
    if (err > 0.1 * gap) {
      out << "gap not resolved at this resolution\n";
      return kExitFailure;
    }
  }
  return kExitOk;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto grid = cfg.l_grid();
  const auto curve = sweep(cfg.potential(), grid, settings_of(cfg));
  emit_csv("sweep", cfg, out, err, [&](std::ostream& os) { write_gap_curve(os, curve); });
  print_excluded(err, curve);
  return kExitOk;
}

int cmd_fit(const RunConfig& cfg, std::ostream& out) {
  if (cfg.in.empty()) throw std::invalid_argument("fit needs --in <csv>");
  std::ifstream file(cfg.in);
  if (!file) throw std::invalid_argument("cannot open '" + cfg.in + "'");
  const auto curve = read_gap_curve(file);
  FitWindow window = top_half_window(curve);
  if (cfg.fit_l_min) window.l_min = *cfg.fit_l_min;
  if (cfg.fit_l_max) window.l_max = *cfg.fit_l_max;
  const auto fit = fit_exponent(curve, window);
  echo_config(out, "fit", cfg);
  out << "p = " << format_double(fit.p) << "\n"
      << "log_c = " << format_double(fit.log_c) << "\n"
      << "prefactor = " << format_double(std::exp(fit.log_c)) << "\n"
      << "residual = " << format_double(fit.residual) << "\n"
      << "window = [" << format_double(fit.window.l_min) << ", " << format_double(fit.window.l_max)
      << "] (" << fit.rows << " rows)\n";
  return kExitOk;
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  const auto p = cfg.potential();
  const auto cls = classify(p);
  const auto curve = sweep(p, cfg.l_grid(), settings_of(cfg));
  echo_config(out, "check", cfg);
  out << "potential " << p.describe() << "\n";
  print_excluded(out, curve);

  bool ok = curve.excluded.empty();
  if (cls.short_range_C) {
    const auto r = check_upper_bound_short_range(curve, *cls.short_range_C);
    print_report(out, r);
    ok = ok && r.pass;
  } else {
    out << std::left << std::setw(20) << "upper-bound-I" << "N/A (not short range)\n";
  }
  if (cls.symmetric_single_well) {
    const auto r = check_upper_bound_symmetric(curve);
    print_report(out, r);
    ok = ok && r.pass;
  } else {
    out << std::left << std::setw(20) << "upper-bound-II" << "N/A (not symmetric single-well)\n";
  }
  if (cls.identically_zero) {
    out << std::left << std::setw(20) << "vanishing-rescaled" << "N/A (zero potential)\n";
  } else {
    const auto r = check_vanishing_rescaled(curve, cfg.max_ratio, HypothesisPolicy::Evaluate);
    print_report(out, r);
    if (r.hypothesis_met) ok = ok && r.pass;
  }
  const auto fit = fit_exponent(curve, top_half_window(curve));
  out << std::left << std::setw(20) << "exponent" << "p = " << format_double(fit.p) << " over ["
      << format_double(fit.window.l_min) << ", " << format_double(fit.window.l_max)
      << "], residual " << format_double(fit.residual) << "\n";
  return ok ? kExitOk : kExitFailure;
}

int cmd_step(const RunConfig& cfg, std::ostream& out) {
  const auto g = step_gap_scaled(cfg.v0, cfg.b, cfg.L);
  echo_config(out, "step-analytic", cfg);
  out << "omega0 = " << format_double(g.omega0) << "\n"
      << "omega1 = " << format_double(g.omega1) << "\n"
      << "scaled_gap = " << format_double(g.gap) << "\n"
      << "physical_gap = " << format_double(g.gap / (cfg.L * cfg.L)) << "\n";
  return kExitOk;
}

int cmd_delta(const RunConfig& cfg, std::ostream& out) {
  const auto d = delta_gap(cfg.L);
  echo_config(out, "delta", cfg);
  out << "k0 = " << format_double(d.k0) << "\n"
      << "gap = " << format_double(d.gap) << "\n"
      << "L_gap = " << format_double(cfg.L * d.gap) << "\n";
  return kExitOk;
}

int cmd_hf(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto rows = t_sweep(cfg.potential(), cfg.L, cfg.t_grid, cfg.resolution, cfg.workers);
  emit_csv("hf", cfg, out, err, [&](std::ostream& os) { write_t_sweep(os, rows); });
  return kExitOk;
}

}  // namespace

int run(const std::string& subcommand, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    cfg.validate();
    if (subcommand == "solve") return cmd_solve(cfg, out);
    if (subcommand == "sweep") return cmd_sweep(cfg, out, err);
    if (subcommand == "fit") return cmd_fit(cfg, out);
    if (subcommand == "check") return cmd_check(cfg, out);
    if (subcommand == "step-analytic") return cmd_step(cfg, out);
    if (subcommand == "delta") return cmd_delta(cfg, out);
    if (subcommand == "hf") return cmd_hf(cfg, out, err);
    err << "specgap: unknown subcommand '" << subcommand << "'\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "specgap " << subcommand << ": " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::invalid_argument& e) {
    err << "specgap " << subcommand << ": " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace specgap
