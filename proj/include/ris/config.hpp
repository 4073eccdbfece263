#pragma once

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ris/params.hpp"
#include "ris/units.hpp"

namespace ris {

// Configuration files carry the field-power values in dBm, beta0 in dB, and
// positions in meters; everything is converted to linear units on load. Two
// layouts are accepted: a JSON object, or flat "key = value" lines with '#'
// comments. The key x_ris is shorthand for overriding ris_pos.x alone.

namespace detail {

inline void apply_scalar(SystemParams& p, const std::string& key, double v) {
  if (key == "n_elements") {
    p.n_elements = static_cast<int>(std::lround(v));
  } else if (key == "sigma2") {
    p.sigma2 = dbm_to_watts(v);
  } else if (key == "sigma_r2") {
    p.sigma_r2 = dbm_to_watts(v);
  } else if (key == "p_dc") {
    p.p_dc = dbm_to_watts(v);
  } else if (key == "p_sw") {
    p.p_sw = dbm_to_watts(v);
  } else if (key == "q_tot") {
    p.q_tot = dbm_to_watts(v);
  } else if (key == "beta0") {
    p.beta0 = db_to_linear(v);
  } else if (key == "alpha_sr") {
    p.alpha_sr = v;
  } else if (key == "alpha_rd") {
    p.alpha_rd = v;
  } else if (key == "x_ris") {
    p.ris_pos.x = v;
  } else {
    throw std::runtime_error("config: unknown key '" + key + "'");
  }
}

inline Vec3* position_field(SystemParams& p, const std::string& key) {
  if (key == "bs_pos") return &p.bs_pos;
  if (key == "user_pos") return &p.user_pos;
  if (key == "ris_pos") return &p.ris_pos;
  return nullptr;
}

}  // namespace detail

inline SystemParams params_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::runtime_error("config: JSON root must be an object");
  SystemParams p = default_params();
  for (const auto& [key, value] : j.items()) {
    if (Vec3* pos = detail::position_field(p, key)) {
      if (!value.is_array() || value.size() != 3) {
        throw std::runtime_error("config: '" + key + "' must be a 3-element array");
      }
      *pos = {value[0].get<double>(), value[1].get<double>(), value[2].get<double>()};
    } else if (value.is_number()) {
      detail::apply_scalar(p, key, value.get<double>());
    } else {
      throw std::runtime_error("config: '" + key + "' must be a number");
    }
  }
  return p;
}

inline SystemParams params_from_flat_text(const std::string& text) {
  SystemParams p = default_params();
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    for (char& ch : line) {
      if (ch == '=' || ch == ',') ch = ' ';
    }
    std::istringstream fields(line);
    std::string key;
    if (!(fields >> key)) continue;  // blank line
    std::vector<double> numbers;
    double v;
    while (fields >> v) numbers.push_back(v);
    if (Vec3* pos = detail::position_field(p, key)) {
      if (numbers.size() != 3) {
        throw std::runtime_error("config: '" + key + "' needs exactly 3 coordinates");
      }
      *pos = {numbers[0], numbers[1], numbers[2]};
    } else if (numbers.size() == 1) {
      detail::apply_scalar(p, key, numbers[0]);
    } else {
      throw std::runtime_error("config: cannot parse line '" + line + "'");
    }
  }
  return p;
}

inline SystemParams load_params(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw std::runtime_error("config: cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << file.rdbuf();
  const std::string text = buffer.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    return params_from_json(nlohmann::json::parse(text));
  }
  return params_from_flat_text(text);
}

}  // namespace ris
