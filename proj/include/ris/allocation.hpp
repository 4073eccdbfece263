#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ris/channel.hpp"
#include "ris/params.hpp"
#include "ris/power_snr.hpp"

namespace ris {

// The split optimizer works on the noise-gain products
//   x = sigma_r2 * h_rd2   (RIS noise seen through the second hop)
//   y = sigma2  * h_sr2    (receiver noise seen through the first hop)
// The optimum is an equal split exactly when x = y; this tolerance decides
// when the two products count as equal.
inline constexpr double kDegeneracyTol = 1e-9;

enum class AllocationBranch { equal_split, closed_form, infeasible };

struct AllocationResult {
  double p_bs_star = 0.0;   // optimal BS transmit power [W]
  double p_ris_star = 0.0;  // optimal RIS output power [W]
  double rho2_star = 0.0;   // amplification at the optimum
  double snr_star = 0.0;
  AllocationBranch branch = AllocationBranch::infeasible;
};

namespace detail {

struct NoiseGainProducts {
  double x;  // sigma_r2 * h_rd2
  double y;  // sigma2 * h_sr2
};

inline NoiseGainProducts noise_gain_products(const SystemParams& p, const ChannelGains& g) {
  return {p.sigma_r2 * g.h_rd2, p.sigma2 * g.h_sr2};
}

inline bool degenerate(const NoiseGainProducts& ng) {
  return std::abs(ng.x - ng.y) <= kDegeneracyTol * std::max(ng.x, ng.y);
}

// Value of the maximizer for c >= 0. The stationarity quadratic has a single
// root inside (0, c); written as c*a/(a + sqrt(a*b)) it is subtraction-free,
// valid in both noise regimes, and continuous through x = y where it becomes
// c/2.
inline double optimal_bs_power_value(double c, const SystemParams& p, const ChannelGains& g) {
  if (c <= 0.0) return 0.0;
  const auto ng = noise_gain_products(p, g);
  if (degenerate(ng)) return 0.5 * c;
  const double cross = p.sigma2 * p.sigma_r2;
  const double a = c * ng.x + cross;
  const double b = c * ng.y + cross;
  return c * a / (a + std::sqrt(a * b));
}

}  // namespace detail

// SNR as a function of the BS power alone, the amplification having been
// pushed to the largest value the remaining budget c - p supports. Vanishes at
// both endpoints of [0, c].
inline double active_snr_objective(double p_bs, double c, const SystemParams& p,
                                   const ChannelGains& g) {
  const double num = p.n_elements * g.h_sr2 * g.h_rd2 * p_bs * (c - p_bs);
  const double den =
      p.sigma_r2 * g.h_rd2 * (c - p_bs) + p.sigma2 * (p_bs * g.h_sr2 + p.sigma_r2);
  return num / den;
}

inline AllocationResult optimal_bs_power(double c, const SystemParams& p,
                                         const ChannelGains& g) {
  AllocationResult r;
  if (!(c > 0.0)) return r;  // hardware swallows the budget; active system off
  const auto ng = detail::noise_gain_products(p, g);
  r.branch = detail::degenerate(ng) ? AllocationBranch::equal_split
                                    : AllocationBranch::closed_form;
  const double p_star = detail::optimal_bs_power_value(c, p, g);
  if (!(p_star > 0.0) || !(p_star < c)) {
    throw std::logic_error("optimal_bs_power: maximizer escaped (0, c)");
  }
  r.p_bs_star = p_star;
  r.p_ris_star = c - p_star;
  r.rho2_star = rho2_for_bs_power(p_star, c, p, g);
  r.snr_star = active_snr_objective(p_star, c, p, g);
  return r;
}

// Brute-force maximizer of the same objective: one uniform pass over [0, c]
// followed by three bracketing refinements around the best point. The
// objective is unimodal, so refinement is sound.
inline double grid_search_bs_power(double c, const SystemParams& p, const ChannelGains& g,
                                   int resolution = 100000) {
  if (!(c > 0.0)) throw std::invalid_argument("grid_search_bs_power: c must be > 0");
  if (resolution < 1000) {
    throw std::invalid_argument("grid_search_bs_power: resolution must be >= 1000");
  }
  double lo = 0.0;
  double hi = c;
  double best_p = 0.0;
  for (int round = 0; round < 4; ++round) {
    const double step = (hi - lo) / resolution;
    double best_v = -1.0;
    int best_i = 0;
    for (int i = 0; i <= resolution; ++i) {
      const double pt = lo + step * i;
      const double v = active_snr_objective(pt, c, p, g);
      if (v > best_v) {
        best_v = v;
        best_i = i;
      }
    }
    best_p = lo + step * best_i;
    lo = std::max(0.0, best_p - step);
    hi = std::min(c, best_p + step);
  }
  return best_p;
}

// Numerator of d(SNR)/d(p_bs): a quadratic in p_bs, positive at 0 and negative
// at c, whose root is the optimal split.
inline double snr_slope_numerator(double p_bs, double c, const SystemParams& p,
                                  const ChannelGains& g) {
  const auto ng = detail::noise_gain_products(p, g);
  const double cross = p.sigma2 * p.sigma_r2;
  const double a = c * ng.x + cross;
  return (ng.x - ng.y) * p_bs * p_bs - 2.0 * a * p_bs + c * a;
}

namespace detail {

// Square of the normalized slope term shared by both sensitivity formulas.
inline double sensitivity_kernel(double c, const SystemParams& p, const ChannelGains& g) {
  const auto ng = noise_gain_products(p, g);
  const double cross = p.sigma2 * p.sigma_r2;
  const double num = 2.0 * c * g.h_sr2 * g.h_rd2 + ng.y + ng.x;
  return num * num / (4.0 * (c * ng.y + cross) * (c * ng.x + cross));
}

}  // namespace detail

// d(p_bs_star)/dc. Tends to 1/2 as c -> 0 and stays positive for all c.
inline double bs_power_sensitivity(double c, const SystemParams& p, const ChannelGains& g) {
  if (!(c >= 0.0)) throw std::invalid_argument("bs_power_sensitivity: c must be >= 0");
  const auto ng = detail::noise_gain_products(p, g);
  if (detail::degenerate(ng)) return 0.5;
  const double cross = p.sigma2 * p.sigma_r2;
  return (ng.x - cross * std::sqrt(detail::sensitivity_kernel(c, p, g))) / (ng.x - ng.y);
}

inline double bs_power_sensitivity_limit(const SystemParams& p, const ChannelGains& g) {
  const auto ng = detail::noise_gain_products(p, g);
  if (detail::degenerate(ng)) return 0.5;
  return (ng.x - std::sqrt(ng.x * ng.y)) / (ng.x - ng.y);
}

// d(p_bs_star - p_ris_star)/dc. Positive when x > y, negative when x < y,
// and 0 in the c -> 0 limit.
inline double allocation_gap_sensitivity(double c, const SystemParams& p,
                                         const ChannelGains& g) {
  if (!(c >= 0.0)) throw std::invalid_argument("allocation_gap_sensitivity: c must be >= 0");
  const auto ng = detail::noise_gain_products(p, g);
  if (detail::degenerate(ng)) return 0.0;
  const double cross = p.sigma2 * p.sigma_r2;
  return (ng.x + ng.y - 2.0 * cross * std::sqrt(detail::sensitivity_kernel(c, p, g))) /
         (ng.x - ng.y);
}

struct RisNoiseLimits {
  double low;   // p_bs_star as sigma_r2 -> 0
  double high;  // p_bs_star as sigma_r2 -> infinity
};

// Limits of the optimal BS power as the RIS noise floor collapses or blows
// up. The high limit is c + s - sqrt(s*(c+s)) with s = sigma2/h_rd2, written
// subtraction-free.
inline RisNoiseLimits bs_power_ris_noise_limits(double c, const SystemParams& p,
                                                const ChannelGains& g) {
  if (!(c > 0.0)) throw std::invalid_argument("bs_power_ris_noise_limits: c must be > 0");
  const double s = p.sigma2 / g.h_rd2;
  const double high = c * (c + s) / (c + s + std::sqrt(s * (c + s)));
  return {0.0, high};
}

// Numerator of d/dc [p_bs_star / (c + n*p_dc)], up to the positive factor
// (c + n*p_dc)^2. Equals n*p_dc/2 at c = 0.
inline double ratio_slope_numerator(double c, const SystemParams& p, const ChannelGains& g) {
  if (!(c >= 0.0)) throw std::invalid_argument("ratio_slope_numerator: c must be >= 0");
  return (c + p.n_elements * p.p_dc) * bs_power_sensitivity(c, p, g) -
         detail::optimal_bs_power_value(c, p, g);
}

// c -> infinity value of ratio_slope_numerator; its sign classifies whether
// the active-to-passive BS power ratio keeps rising or eventually falls.
inline double ratio_slope_numerator_limit(const SystemParams& p, const ChannelGains& g) {
  const auto ng = detail::noise_gain_products(p, g);
  const double rx = std::sqrt(ng.x);
  const double ry = std::sqrt(ng.y);
  const double cross = p.sigma2 * p.sigma_r2;
  return (cross * (rx - ry) / (2.0 * rx * ry) + p.n_elements * p.p_dc * rx) / (rx + ry);
}

}  // namespace ris
