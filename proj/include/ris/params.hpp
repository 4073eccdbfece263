#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "ris/units.hpp"

namespace ris {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

inline double distance(const Vec3& a, const Vec3& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  const double dz = a.z - b.z;
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

// Full scalar description of one deployment. All powers are linear watts and
// all gains linear ratios; see config.hpp for the dBm/dB file format.
struct SystemParams {
  int n_elements = 256;                    // number of RIS elements
  double sigma2 = dbm_to_watts(-70.0);     // receiver noise power [W]
  double sigma_r2 = dbm_to_watts(-70.0);   // RIS amplifier noise power [W]
  double p_dc = dbm_to_watts(-5.0);        // per-element DC biasing power, active only [W]
  double p_sw = dbm_to_watts(-10.0);       // per-element switch/control power [W]
  double q_tot = dbm_to_watts(30.0);       // total power budget [W]
  double beta0 = db_to_linear(-30.0);      // reference path gain at 1 m
  double alpha_sr = 2.0;                   // BS-RIS path-loss exponent
  double alpha_rd = 2.0;                   // RIS-user path-loss exponent
  Vec3 bs_pos{0.0, 0.0, 0.0};              // [m]
  Vec3 user_pos{100.0, 0.0, 0.0};          // [m]
  Vec3 ris_pos{90.0, 0.0, 10.0};           // [m]
};

inline SystemParams default_params() { return SystemParams{}; }

inline bool finite(const Vec3& v) {
  return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

// Throws std::invalid_argument on hard violations; returns soft warnings
// (path-loss exponents outside the usual [2,4] range are legal but suspect).
inline std::vector<std::string> validate(const SystemParams& p) {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("invalid parameters: ") + what);
  };
  require(p.n_elements >= 1, "n_elements must be >= 1");
  require(p.sigma2 > 0.0, "sigma2 must be > 0");
  require(p.sigma_r2 > 0.0, "sigma_r2 must be > 0");
  require(p.p_dc > 0.0, "p_dc must be > 0");
  require(p.p_sw > 0.0, "p_sw must be > 0");
  require(p.q_tot > 0.0, "q_tot must be > 0");
  require(p.beta0 > 0.0, "beta0 must be > 0");
  require(p.alpha_sr > 0.0, "alpha_sr must be > 0");
  require(p.alpha_rd > 0.0, "alpha_rd must be > 0");
  require(finite(p.bs_pos) && finite(p.user_pos) && finite(p.ris_pos),
          "positions must be finite");

  std::vector<std::string> warnings;
  for (auto [alpha, name] : {std::pair{p.alpha_sr, "alpha_sr"}, {p.alpha_rd, "alpha_rd"}}) {
    if (alpha < 2.0 || alpha > 4.0) {
      warnings.push_back(std::string(name) + " = " + std::to_string(alpha) +
                         " lies outside the usual [2, 4] range");
    }
  }
  return warnings;
}

struct LinkDistances {
  double d_sr;  // BS -> RIS [m]
  double d_rd;  // RIS -> user [m]
};

inline LinkDistances link_distances(const SystemParams& p) {
  if (!finite(p.bs_pos) || !finite(p.user_pos) || !finite(p.ris_pos)) {
    throw std::invalid_argument("link_distances: positions must be finite");
  }
  const LinkDistances d{distance(p.bs_pos, p.ris_pos), distance(p.ris_pos, p.user_pos)};
  if (!(d.d_sr > 0.0) || !(d.d_rd > 0.0)) {
    throw std::domain_error("link_distances: RIS coincides with an endpoint");
  }
  return d;
}

}  // namespace ris
