#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ris/channel.hpp"
#include "ris/params.hpp"

namespace ris {

// One operating point of the active system. rho2 is the squared amplification
// factor; a passive split carries rho2 = 1 and p_ris = 0.
struct PowerSplit {
  double p_bs = 0.0;   // BS transmit power [W]
  double p_ris = 0.0;  // RIS output signal power [W]
  double rho2 = 0.0;   // squared amplification factor
};

inline double total_power_active(double p_bs, double p_ris, const SystemParams& p) {
  return p_bs + p_ris + p.n_elements * (p.p_sw + p.p_dc);
}

inline double total_power_passive(double p_bs, const SystemParams& p) {
  return p_bs + p.n_elements * p.p_sw;
}

// Power left for the BS and the RIS amplifiers once per-element hardware is
// paid. Non-positive values are a valid state: the active system is then off.
inline double available_power(const SystemParams& p) {
  return p.q_tot - p.n_elements * (p.p_sw + p.p_dc);
}

inline double p_bs_passive(const SystemParams& p) {
  const double value = p.q_tot - p.n_elements * p.p_sw;
  if (!(value > 0.0)) {
    throw std::domain_error("p_bs_passive: budget does not cover the switch power");
  }
  return value;
}

// Largest amplification compatible with the RIS output-power share c - p_bs.
inline double rho2_for_bs_power(double p_bs, double c, const SystemParams& p,
                                const ChannelGains& g) {
  if (!(p_bs >= 0.0) || p_bs > c) {
    throw std::domain_error("rho2_for_bs_power: p_bs must lie in [0, c]");
  }
  return (c - p_bs) / (p.n_elements * (p_bs * g.h_sr2 + p.sigma_r2));
}

// RIS output power implied by a BS power and an amplification factor; equals
// c - p_bs when rho2 comes from rho2_for_bs_power.
inline double ris_output_power(double p_bs, double rho2, const SystemParams& p,
                               const ChannelGains& g) {
  return rho2 * p.n_elements * (p_bs * g.h_sr2 + p.sigma_r2);
}

inline double snr_active(double p_bs, double rho2, const ChannelGains& g,
                         const SystemParams& p) {
  if (!(p_bs >= 0.0)) throw std::invalid_argument("snr_active: p_bs must be >= 0");
  if (!(rho2 >= 0.0)) throw std::invalid_argument("snr_active: rho2 must be >= 0");
  if (rho2 == 0.0) return 0.0;  // nothing reaches the user
  const double n = p.n_elements;
  return n * n * p_bs * g.h_sr2 * g.h_rd2 /
         (n * p.sigma_r2 * g.h_rd2 + p.sigma2 / rho2);
}

inline double snr_passive(double p_bs, const ChannelGains& g, const SystemParams& p) {
  if (!(p_bs >= 0.0)) throw std::invalid_argument("snr_passive: p_bs must be >= 0");
  const double n = p.n_elements;
  return n * n * p_bs * g.h_sr2 * g.h_rd2 / p.sigma2;
}

inline double rate(double snr) {
  if (!(snr >= 0.0)) throw std::domain_error("rate: snr must be >= 0");
  return std::log1p(snr) / std::numbers::ln2;
}

inline PowerSplit active_split(double p_bs, double c, const SystemParams& p,
                               const ChannelGains& g) {
  return {p_bs, c - p_bs, rho2_for_bs_power(p_bs, c, p, g)};
}

inline PowerSplit passive_split(const SystemParams& p) {
  return {p_bs_passive(p), 0.0, 1.0};
}

}  // namespace ris
