#pragma once

#include <cmath>
#include <stdexcept>

namespace ris {

// Power conversions. Internals work in linear watts throughout; dBm/dB appear
// only at the CLI and config-file boundary.

inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

inline double watts_to_dbm(double watts) {
  if (!(watts > 0.0)) {
    throw std::domain_error("watts_to_dbm: power must be strictly positive");
  }
  return 30.0 + 10.0 * std::log10(watts);
}

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

inline double linear_to_db(double gain) {
  if (!(gain > 0.0)) {
    throw std::domain_error("linear_to_db: gain must be strictly positive");
  }
  return 10.0 * std::log10(gain);
}

}  // namespace ris
