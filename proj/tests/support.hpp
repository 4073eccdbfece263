#pragma once

#include <cmath>
#include <random>

#include "ris/ris.hpp"

namespace testsup {

// Expected values at the bundled default deployment, frozen from a
// high-precision evaluation of the closed forms (40-digit arithmetic,
// independent of this library).
namespace expected {
inline constexpr double h_sr2 = 1.2195121951219512e-07;
inline constexpr double h_rd2 = 5e-06;
inline constexpr double d_sr = 90.553851381374166;
inline constexpr double d_rd = 14.142135623730951;
inline constexpr double hardware_power = 0.10655430810031051;  // n*(p_sw + p_dc)
inline constexpr double c_avail = 0.89344569189968949;
inline constexpr double p_bs_pas = 0.9744;
inline constexpr double p_bs_star = 0.77271402160368290;
inline constexpr double p_ris_star = 0.12073167029600659;
inline constexpr double rho2_star = 4999.3745668116181;
inline constexpr double gamma_act = 208634.35241845642;
inline constexpr double rate_act = 17.670624111860361;
inline constexpr double gamma_pas = 389.37974634146341;
inline constexpr double rate_pas = 8.6087343947997329;
inline constexpr double rho2_equal_split = 31972.561485061827;
inline constexpr double rho2_required = 2.1873251183390385;
inline constexpr double g_default = 0.79301521100542170;
inline constexpr double g_at_1e6 = 0.86492182399829816;
inline constexpr double g_at_1e_9 = 6.1763987978115624e-09;
inline constexpr double g_limit = 0.86492189406417878;
inline constexpr double ris_noise_high_limit = 0.88923848078147055;
inline constexpr double p_star_sigma_r2_1e2 = 0.88923848077918932;
inline constexpr double p_star_sigma_r2_1e_22 = 5.7208711636580932e-06;
inline constexpr double dpbs_default = 0.86492187803624823;
inline constexpr double gap_slope_default = 0.72984375607249646;
inline constexpr double f4_limit_default = 0.070065886299268703;
}  // namespace expected

inline double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

struct Rng {
  std::mt19937_64 eng;

  explicit Rng(uint64_t seed) : eng(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(eng);
  }
  // Log-uniform over [10^lo_exp, 10^hi_exp].
  double log_uniform(double lo_exp, double hi_exp) {
    return std::pow(10.0, uniform(lo_exp, hi_exp));
  }
  int uniform_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(eng);
  }
};

// Gains for the default geometry with the RIS moved to x (height 10 m kept).
inline ris::ChannelGains gains_at_x(double x_ris) {
  ris::SystemParams p;
  p.ris_pos.x = x_ris;
  return ris::channel_gains(p);
}

// Random allocation problem: available power across 6 decades, both noise
// powers across 6 decades, RIS anywhere strictly between the endpoints.
struct AllocationDraw {
  double c;
  ris::SystemParams params;
  ris::ChannelGains gains;
};

inline AllocationDraw draw_allocation_problem(Rng& rng) {
  AllocationDraw d;
  d.c = rng.log_uniform(-3.0, 3.0);
  d.params = ris::default_params();
  d.params.sigma2 = rng.log_uniform(-13.0, -7.0);
  d.params.sigma_r2 = rng.log_uniform(-13.0, -7.0);
  d.params.ris_pos.x = rng.uniform(5.0, 95.0);
  d.gains = ris::channel_gains(d.params);
  return d;
}

}  // namespace testsup
