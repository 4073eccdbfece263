#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "ris/params.hpp"

namespace ris {

// Carrier wavelength is never specified by the link budget: every rate-level
// quantity depends only on the modulus of the phase-aligned cascade, which is
// wavelength-independent. This constant exists so LoS vectors can be built.
inline constexpr double kDefaultWavelength = 0.1;  // [m]

// Squared amplitude gains of the two hops.
struct ChannelGains {
  double h_sr2;  // BS -> RIS
  double h_rd2;  // RIS -> user
};

inline double path_gain(double beta0, double d, double alpha) {
  if (!(beta0 > 0.0)) throw std::invalid_argument("path_gain: beta0 must be > 0");
  if (!(alpha > 0.0)) throw std::invalid_argument("path_gain: alpha must be > 0");
  if (!(d >= 1.0)) {
    throw std::domain_error("path_gain: d below the 1 m reference distance");
  }
  return beta0 * std::pow(d, -alpha);
}

inline ChannelGains channel_gains(const SystemParams& p) {
  const auto d = link_distances(p);
  return {path_gain(p.beta0, d.d_sr, p.alpha_sr), path_gain(p.beta0, d.d_rd, p.alpha_rd)};
}

// One LoS ULA channel: entry k is amplitude * exp(-j * 2*pi/wavelength * k * angle).
struct LosChannel {
  double amplitude = 0.0;
  double angle = 0.0;       // [rad]
  double wavelength = kDefaultWavelength;  // [m]
  std::vector<std::complex<double>> entries;

  int n_elements() const { return static_cast<int>(entries.size()); }
};

inline LosChannel los_vector(double amplitude, double angle, double wavelength, int n) {
  if (n < 1) throw std::invalid_argument("los_vector: n must be >= 1");
  if (!(wavelength > 0.0)) throw std::invalid_argument("los_vector: wavelength must be > 0");
  LosChannel ch{amplitude, angle, wavelength, {}};
  ch.entries.reserve(static_cast<size_t>(n));
  const double k = -2.0 * std::numbers::pi * angle / wavelength;
  for (int i = 0; i < n; ++i) {
    ch.entries.push_back(std::polar(amplitude, k * i));
  }
  return ch;
}

// Per-element phase shifts, each wrapped to [0, 2*pi).
struct PhaseProfile {
  std::vector<double> thetas;
};

inline double wrap_2pi(double theta) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double t = std::fmod(theta, two_pi);
  if (t < 0.0) t += two_pi;
  return t;
}

// Aligns the cascade: theta_n = arg(h_rd[n]) - arg(h_sr[n]).
inline PhaseProfile optimal_phases(const LosChannel& h_sr, const LosChannel& h_rd) {
  if (h_sr.entries.size() != h_rd.entries.size()) {
    throw std::invalid_argument("optimal_phases: channel length mismatch");
  }
  PhaseProfile profile;
  profile.thetas.reserve(h_sr.entries.size());
  for (size_t i = 0; i < h_sr.entries.size(); ++i) {
    profile.thetas.push_back(wrap_2pi(std::arg(h_rd.entries[i]) - std::arg(h_sr.entries[i])));
  }
  return profile;
}

// sum_n conj(h_rd[n]) * exp(j*theta_n) * h_sr[n]; with optimal phases the
// modulus equals n * |h_sr| * |h_rd|.
inline std::complex<double> cascaded_gain(const LosChannel& h_sr, const LosChannel& h_rd,
                                          const PhaseProfile& phases) {
  if (h_sr.entries.size() != h_rd.entries.size() ||
      h_sr.entries.size() != phases.thetas.size()) {
    throw std::invalid_argument("cascaded_gain: dimension mismatch");
  }
  std::complex<double> sum{0.0, 0.0};
  for (size_t i = 0; i < h_sr.entries.size(); ++i) {
    sum += std::conj(h_rd.entries[i]) * std::polar(1.0, phases.thetas[i]) * h_sr.entries[i];
  }
  return sum;
}

}  // namespace ris
