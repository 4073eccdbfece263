#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ris/allocation.hpp"
#include "ris/channel.hpp"
#include "ris/params.hpp"
#include "ris/power_snr.hpp"

namespace ris {

// SNRs closer than this (relative) are reported as a tie.
inline constexpr double kTieTol = 1e-9;

enum class Winner { active, passive, tie };

struct ComparisonVerdict {
  Winner winner = Winner::tie;
  double gamma_act = 0.0;
  double gamma_pas = 0.0;
  double rate_act = 0.0;  // [bps/Hz]
  double rate_pas = 0.0;  // [bps/Hz]
  // The analytic dichotomy: passive wins when n*h_rd2*sigma_r2/sigma2 exceeds
  // the BS power ratio g; otherwise active wins iff the optimal amplification
  // clears 1 / (g - n*h_rd2*sigma_r2/sigma2).
  bool passive_condition_holds = false;
  bool active_condition_holds = false;
  double g_of_c = 0.0;  // optimal active BS power / passive BS power
};

// Ratio of the optimal active BS power to the passive BS power at available
// power c (the passive budget moves with c: p_bs_passive = c + n*p_dc).
inline double bs_power_ratio(double c, const SystemParams& p, const ChannelGains& g) {
  if (!(c >= 0.0)) throw std::invalid_argument("bs_power_ratio: c must be >= 0");
  return detail::optimal_bs_power_value(c, p, g) / (c + p.n_elements * p.p_dc);
}

// c -> infinity limit of bs_power_ratio: sqrt(x)/(sqrt(x)+sqrt(y)), always in
// (0, 1) and approaching 1 as x/y grows.
inline double bs_power_ratio_limit(const SystemParams& p, const ChannelGains& g) {
  const auto ng = detail::noise_gain_products(p, g);
  const double rx = std::sqrt(ng.x);
  const double ry = std::sqrt(ng.y);
  return rx / (rx + ry);
}

enum class RatioShape { increasing, rise_then_fall };

// Shape of bs_power_ratio over c. Monotone when x >= y; when x < y the ratio
// either keeps rising or rises then falls, decided by the limiting slope sign.
inline RatioShape ratio_shape(const SystemParams& p, const ChannelGains& g) {
  const auto ng = detail::noise_gain_products(p, g);
  if (ng.x >= ng.y) return RatioShape::increasing;
  return ratio_slope_numerator_limit(p, g) >= 0.0 ? RatioShape::increasing
                                                  : RatioShape::rise_then_fall;
}

inline ComparisonVerdict compare(const SystemParams& p) {
  const ChannelGains g = channel_gains(p);
  const double p_pas = p_bs_passive(p);  // throws when passive is infeasible
  ComparisonVerdict v;
  v.gamma_pas = snr_passive(p_pas, g, p);
  v.rate_pas = rate(v.gamma_pas);

  const double noise_ratio = p.n_elements * g.h_rd2 * p.sigma_r2 / p.sigma2;
  const double c = available_power(p);
  if (c <= 0.0) {
    v.passive_condition_holds = true;  // g collapses to 0, noise_ratio > 0
    v.winner = Winner::passive;
    return v;
  }

  const AllocationResult alloc = optimal_bs_power(c, p, g);
  v.gamma_act = alloc.snr_star;
  v.rate_act = rate(v.gamma_act);
  v.g_of_c = alloc.p_bs_star / p_pas;
  v.passive_condition_holds = noise_ratio > v.g_of_c;
  v.active_condition_holds =
      !v.passive_condition_holds && alloc.rho2_star > 1.0 / (v.g_of_c - noise_ratio);

  if (std::abs(v.gamma_act - v.gamma_pas) <= kTieTol * std::max(v.gamma_act, v.gamma_pas)) {
    v.winner = Winner::tie;
  } else {
    v.winner = v.gamma_act > v.gamma_pas ? Winner::active : Winner::passive;
  }
  return v;
}

struct SuperiorityBounds {
  double rho2_achievable = 0.0;  // amplification available at the p_bs = c/2 split
  double rho2_required = 0.0;    // threshold active must clear (when applicable)
  bool applicable = false;       // false when the threshold denominator is <= 0
};

// The two sides of the half-split superiority test: the amplification that
// split affords versus the amplification active needs to beat passive.
inline SuperiorityBounds equal_split_superiority_bounds(const SystemParams& p,
                                                        const ChannelGains& g) {
  const double c = available_power(p);
  if (!(c > 0.0)) {
    throw std::domain_error("equal_split_superiority_bounds: available power must be > 0");
  }
  const double n = p.n_elements;
  SuperiorityBounds b;
  b.rho2_achievable = c / (c * n * g.h_sr2 + 2.0 * n * p.sigma_r2);
  const double den = c / (2.0 * (c + n * p.p_dc)) - n * g.h_rd2 * p.sigma_r2 / p.sigma2;
  if (den > 0.0) {
    b.rho2_required = 1.0 / den;
    b.applicable = true;
  }
  return b;
}

struct SuperiorityPremises {
  bool noise_powers_similar = false;  // sigma2 and sigma_r2 within ratio_bound
  bool noise_below_dc = false;        // both noise powers << p_dc
  bool aperture_gains_small = false;  // n*h_sr2 and n*h_rd2 << 1
  bool budget_covers_dc = false;      // c >= n*p_dc

  bool all() const {
    return noise_powers_similar && noise_below_dc && aperture_gains_small &&
           budget_covers_dc;
  }
};

// Checks the regime in which the half-split test is conclusive. "similar"
// means within ratio_bound, "<<" means the ratio is at most much_less.
inline SuperiorityPremises superiority_premises(const SystemParams& p, const ChannelGains& g,
                                                double ratio_bound = 2.0,
                                                double much_less = 0.01) {
  const double n = p.n_elements;
  const double c = available_power(p);
  SuperiorityPremises out;
  const double noise_ratio = p.sigma2 / p.sigma_r2;
  out.noise_powers_similar = noise_ratio <= ratio_bound && noise_ratio >= 1.0 / ratio_bound;
  out.noise_below_dc =
      p.sigma2 <= much_less * p.p_dc && p.sigma_r2 <= much_less * p.p_dc;
  out.aperture_gains_small = n * g.h_sr2 <= much_less && n * g.h_rd2 <= much_less;
  out.budget_covers_dc = c >= n * p.p_dc;
  return out;
}

struct CrossoverScan {
  std::optional<double> first_active_q;  // smallest budget where active wins [W]
  bool single_crossover = false;  // verdict pattern is passive..., active...
};

// Scans an ascending grid of total budgets and reports where active first
// overtakes passive. Every grid point must keep the passive system feasible.
inline CrossoverScan budget_crossover(const SystemParams& base,
                                      std::span<const double> q_grid_watts) {
  if (q_grid_watts.empty()) {
    throw std::invalid_argument("budget_crossover: empty budget grid");
  }
  for (size_t i = 1; i < q_grid_watts.size(); ++i) {
    if (!(q_grid_watts[i] > q_grid_watts[i - 1])) {
      throw std::invalid_argument("budget_crossover: grid must be strictly ascending");
    }
  }
  CrossoverScan scan;
  scan.single_crossover = true;
  for (double q : q_grid_watts) {
    SystemParams p = base;
    p.q_tot = q;
    const bool active_wins = compare(p).winner == Winner::active;
    if (active_wins && !scan.first_active_q) {
      scan.first_active_q = q;
    } else if (!active_wins && scan.first_active_q) {
      scan.single_crossover = false;  // fell back after overtaking
    }
  }
  return scan;
}

}  // namespace ris
