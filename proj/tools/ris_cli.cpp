// Command-line front end: optimal power allocation, active-vs-passive verdicts,
// parameter sweeps to CSV, and the half-split superiority check.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ris/ris.hpp"

namespace {

std::string fmt_w_dbm(double watts) {
  char buf[96];
  if (watts > 0.0) {
    std::snprintf(buf, sizeof(buf), "%.6g W (%.4f dBm)", watts, ris::watts_to_dbm(watts));
  } else {
    std::snprintf(buf, sizeof(buf), "%.6g W", watts);
  }
  return buf;
}

ris::SystemParams load_and_validate(const std::string& config_path) {
  ris::SystemParams p =
      config_path.empty() ? ris::default_params() : ris::load_params(config_path);
  for (const std::string& warning : ris::validate(p)) {
    std::cerr << "warning: " << warning << "\n";
  }
  return p;
}

std::vector<double> parse_value_range(const std::string& text) {
  double lo = 0.0, hi = 0.0, step = 0.0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%lf", &lo, &hi, &step) != 3 || step <= 0.0 ||
      hi < lo) {
    throw std::invalid_argument("--values expects LO:HI:STEP with STEP > 0 and HI >= LO");
  }
  std::vector<double> values;
  for (double v = lo; v <= hi + 0.5 * step; v += step) values.push_back(v);
  return values;
}

const char* winner_name(ris::Winner w) {
  switch (w) {
    case ris::Winner::active: return "active";
    case ris::Winner::passive: return "passive";
    case ris::Winner::tie: return "tie";
  }
  return "?";
}

void run_allocate(const ris::SystemParams& p) {
  const ris::ChannelGains g = ris::channel_gains(p);
  const auto d = ris::link_distances(p);
  const double c = ris::available_power(p);
  std::printf("n_elements      = %d\n", p.n_elements);
  std::printf("d_sr            = %.4f m, d_rd = %.4f m\n", d.d_sr, d.d_rd);
  std::printf("h_sr2           = %.6g (%.2f dB), h_rd2 = %.6g (%.2f dB)\n", g.h_sr2,
              ris::linear_to_db(g.h_sr2), g.h_rd2, ris::linear_to_db(g.h_rd2));
  std::printf("q_tot           = %s\n", fmt_w_dbm(p.q_tot).c_str());
  std::printf("available_power = %s\n", fmt_w_dbm(c).c_str());
  if (c <= 0.0) {
    std::printf("branch          = infeasible (hardware power exceeds the budget)\n");
    return;
  }
  const ris::AllocationResult r = ris::optimal_bs_power(c, p, g);
  std::printf("branch          = %s\n",
              r.branch == ris::AllocationBranch::equal_split ? "equal_split" : "closed_form");
  std::printf("p_bs_star       = %s\n", fmt_w_dbm(r.p_bs_star).c_str());
  std::printf("p_ris_star      = %s\n", fmt_w_dbm(r.p_ris_star).c_str());
  std::printf("rho2_star       = %.6g\n", r.rho2_star);
  std::printf("snr_act         = %.6g\n", r.snr_star);
  std::printf("rate_act        = %.6g bps/Hz\n", ris::rate(r.snr_star));
}

void run_compare(const ris::SystemParams& p) {
  const ris::ComparisonVerdict v = ris::compare(p);
  std::printf("winner            = %s\n", winner_name(v.winner));
  std::printf("gamma_act         = %.6g\n", v.gamma_act);
  std::printf("gamma_pas         = %.6g\n", v.gamma_pas);
  std::printf("rate_act          = %.6g bps/Hz\n", v.rate_act);
  std::printf("rate_pas          = %.6g bps/Hz\n", v.rate_pas);
  std::printf("g_of_c            = %.6g\n", v.g_of_c);
  std::printf("passive_condition = %s\n", v.passive_condition_holds ? "holds" : "does not hold");
  std::printf("active_condition  = %s\n", v.active_condition_holds ? "holds" : "does not hold");
}

void run_verify(const ris::SystemParams& p) {
  const ris::ChannelGains g = ris::channel_gains(p);
  const auto b = ris::equal_split_superiority_bounds(p, g);
  std::printf("rho2_achievable (half split) = %.6g\n", b.rho2_achievable);
  if (b.applicable) {
    std::printf("rho2_required (threshold)    = %.6g\n", b.rho2_required);
    std::printf("half-split test              = %s\n",
                b.rho2_achievable > b.rho2_required ? "active superior" : "inconclusive");
  } else {
    std::printf("rho2_required (threshold)    = inapplicable (denominator <= 0)\n");
  }
  const auto pr = ris::superiority_premises(p, g);
  std::printf("premise noise_powers_similar = %s\n", pr.noise_powers_similar ? "yes" : "no");
  std::printf("premise noise_below_dc       = %s\n", pr.noise_below_dc ? "yes" : "no");
  std::printf("premise aperture_gains_small = %s\n", pr.aperture_gains_small ? "yes" : "no");
  std::printf("premise budget_covers_dc     = %s\n", pr.budget_covers_dc ? "yes" : "no");
}

void run_sweep_command(const ris::SystemParams& base, const std::string& axis_text,
                       const std::string& values_text, const std::string& out_path,
                       bool baseline) {
  ris::SweepSpec spec;
  spec.base = base;
  spec.include_equal_baseline = baseline;
  spec.output_path = out_path;
  if (axis_text == "n") {
    spec.axis = ris::SweepAxis::n_elements;
  } else if (axis_text == "qtot") {
    spec.axis = ris::SweepAxis::q_tot_dbm;
  } else if (axis_text == "xris") {
    spec.axis = ris::SweepAxis::x_ris_m;
  } else {
    throw std::invalid_argument("--axis must be one of n, qtot, xris");
  }
  spec.values =
      values_text.empty() ? ris::default_axis_values(spec.axis) : parse_value_range(values_text);
  const auto rows = ris::run_sweep(spec);
  std::ofstream out(spec.output_path);
  if (!out) throw std::runtime_error("cannot open output file '" + spec.output_path + "'");
  ris::write_csv(out, spec, rows);
  std::printf("wrote %zu rows to %s\n", rows.size(), spec.output_path.c_str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Active vs. passive RIS under a shared power budget"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "parameter file (flat key/value or JSON)")
      ->check(CLI::ExistingFile);

  auto* allocate = app.add_subcommand("allocate", "optimal BS/RIS power split");
  auto* compare = app.add_subcommand("compare", "active vs. passive verdict");
  auto* verify = app.add_subcommand("verify", "half-split superiority check");

  auto* sweep = app.add_subcommand("sweep", "parameter sweep to CSV");
  std::string axis_text;
  std::string values_text;
  std::string out_path;
  std::string baseline_text = "on";
  sweep->add_option("--axis", axis_text, "sweep axis: n | qtot | xris")->required();
  sweep->add_option("--values", values_text, "grid as LO:HI:STEP (default grid if omitted)");
  sweep->add_option("--out", out_path, "output CSV path")->required();
  sweep->add_option("--baseline", baseline_text, "equal-split baseline column: on | off")
      ->check(CLI::IsMember({"on", "off"}));

  CLI11_PARSE(app, argc, argv);

  try {
    const ris::SystemParams params = load_and_validate(config_path);
    if (allocate->parsed()) {
      run_allocate(params);
    } else if (compare->parsed()) {
      run_compare(params);
    } else if (verify->parsed()) {
      run_verify(params);
    } else if (sweep->parsed()) {
      run_sweep_command(params, axis_text, values_text, out_path, baseline_text == "on");
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
