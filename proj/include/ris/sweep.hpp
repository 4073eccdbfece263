#pragma once

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ris/allocation.hpp"
#include "ris/comparison.hpp"
#include "ris/params.hpp"
#include "ris/power_snr.hpp"
#include "ris/units.hpp"

namespace ris {

enum class SweepAxis { n_elements, q_tot_dbm, x_ris_m };

inline const char* axis_name(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::n_elements: return "n_elements";
    case SweepAxis::q_tot_dbm: return "q_tot_dbm";
    case SweepAxis::x_ris_m: return "x_ris_m";
  }
  return "?";
}

struct SweepRow {
  double swept_value = 0.0;
  double rate_act_opt = 0.0;    // optimal split [bps/Hz]
  double rate_act_equal = 0.0;  // p_bs = p_ris = c/2 baseline [bps/Hz]
  double rate_pas = 0.0;        // [bps/Hz]
  double p_bs_star = 0.0;       // [W]
  double p_ris_star = 0.0;      // [W]
  double rho2_star = 0.0;
  double c = 0.0;               // available power [W]
  bool active_feasible = false;
  bool passive_feasible = false;
};

struct SweepSpec {
  SystemParams base;
  SweepAxis axis = SweepAxis::n_elements;
  std::vector<double> values;  // strictly ascending, non-empty
  bool include_equal_baseline = true;
  std::string output_path;  // used by the CLI; run_sweep itself does not write
};

inline SystemParams apply_axis(const SystemParams& base, SweepAxis axis, double value) {
  SystemParams p = base;
  switch (axis) {
    case SweepAxis::n_elements:
      p.n_elements = static_cast<int>(std::lround(value));
      if (p.n_elements < 1) throw std::invalid_argument("sweep: n_elements must be >= 1");
      break;
    case SweepAxis::q_tot_dbm:
      p.q_tot = dbm_to_watts(value);
      break;
    case SweepAxis::x_ris_m:
      p.ris_pos.x = value;
      break;
  }
  return p;
}

inline std::vector<double> default_axis_values(SweepAxis axis) {
  std::vector<double> v;
  switch (axis) {
    case SweepAxis::n_elements:
      for (double n = 16.0; n <= 4096.0; n *= 2.0) v.push_back(n);
      break;
    case SweepAxis::q_tot_dbm:
      for (double q = 20.0; q <= 40.0; q += 1.0) v.push_back(q);
      break;
    case SweepAxis::x_ris_m:
      for (double x = 10.0; x <= 90.0; x += 10.0) v.push_back(x);
      break;
  }
  return v;
}

inline void validate_spec(const SweepSpec& spec) {
  if (spec.values.empty()) throw std::invalid_argument("sweep: values must be non-empty");
  for (size_t i = 1; i < spec.values.size(); ++i) {
    if (!(spec.values[i] > spec.values[i - 1])) {
      throw std::invalid_argument("sweep: values must be strictly ascending");
    }
  }
}

inline std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  validate_spec(spec);
  std::vector<SweepRow> rows;
  rows.reserve(spec.values.size());
  for (double value : spec.values) {
    const SystemParams p = apply_axis(spec.base, spec.axis, value);
    SweepRow row;
    row.swept_value = value;
    row.passive_feasible = p.q_tot > p.n_elements * p.p_sw;
    if (!row.passive_feasible) {
      rows.push_back(row);
      continue;
    }
    const ChannelGains g = channel_gains(p);
    row.rate_pas = rate(snr_passive(p_bs_passive(p), g, p));
    row.c = available_power(p);
    row.active_feasible = row.c > 0.0;
    if (row.active_feasible) {
      const AllocationResult alloc = optimal_bs_power(row.c, p, g);
      row.rate_act_opt = rate(alloc.snr_star);
      row.p_bs_star = alloc.p_bs_star;
      row.p_ris_star = alloc.p_ris_star;
      row.rho2_star = alloc.rho2_star;
      if (spec.include_equal_baseline) {
        row.rate_act_equal = rate(active_snr_objective(0.5 * row.c, row.c, p, g));
      }
    }
    rows.push_back(row);
  }
  return rows;
}

namespace detail {

// Fixed 12-significant-digit formatting so identical sweeps serialize
// byte-identically.
inline std::string fmt_g12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

inline std::string fmt_dbm(double watts) {
  if (watts > 0.0) return fmt_g12(watts_to_dbm(watts));
  return watts == 0.0 ? "-inf" : "nan";
}

}  // namespace detail

inline void write_csv(std::ostream& os, const SweepSpec& spec,
                      const std::vector<SweepRow>& rows) {
  os << "axis,swept_value,rate_act_opt";
  if (spec.include_equal_baseline) os << ",rate_act_equal";
  os << ",rate_pas,p_bs_star_w,p_bs_star_dbm,p_ris_star_w,p_ris_star_dbm,rho2_star,"
        "c_w,c_dbm,active_feasible,passive_feasible\n";
  for (const SweepRow& r : rows) {
    using detail::fmt_dbm;
    using detail::fmt_g12;
    os << axis_name(spec.axis) << ',' << fmt_g12(r.swept_value) << ','
       << fmt_g12(r.rate_act_opt);
    if (spec.include_equal_baseline) os << ',' << fmt_g12(r.rate_act_equal);
    os << ',' << fmt_g12(r.rate_pas) << ',' << fmt_g12(r.p_bs_star) << ','
       << fmt_dbm(r.p_bs_star) << ',' << fmt_g12(r.p_ris_star) << ','
       << fmt_dbm(r.p_ris_star) << ',' << fmt_g12(r.rho2_star) << ',' << fmt_g12(r.c)
       << ',' << fmt_dbm(r.c) << ',' << (r.active_feasible ? '1' : '0') << ','
       << (r.passive_feasible ? '1' : '0') << '\n';
  }
}

}  // namespace ris
