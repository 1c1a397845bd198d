#pragma once

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "moserlab/zeros.hpp"

namespace fixtures {

inline std::string data_path(const std::string& name) {
  return std::string(MOSERLAB_TEST_DATA_DIR) + "/" + name;
}

inline std::string read_text(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("missing test data " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

/// key = value lines from the mpmath oracle file.
inline const std::map<std::string, double>& oracle() {
  static const std::map<std::string, double> values = [] {
    std::map<std::string, double> out;
    std::istringstream in(read_text(data_path("oracle_values.txt")));
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      const auto eq = line.find('=');
      std::string key = line.substr(0, eq);
      key.erase(key.find_last_not_of(' ') + 1);
      out[key] = std::strtod(line.c_str() + eq + 1, nullptr);
    }
    return out;
  }();
  return values;
}

inline double oracle_value(const std::string& key) {
  const auto it = oracle().find(key);
  if (it == oracle().end()) throw std::runtime_error("no oracle value " + key);
  return it->second;
}

inline std::vector<double> reference_zeros() {
  const moserlab::ZeroTable t = moserlab::ingest_zeros(read_text(data_path("zeros_first100.txt")));
  return {t.ordinates().begin(), t.ordinates().end()};
}

/// Zeros on [10, 20000], enough for spectral sums at t <= 1e4.
inline const moserlab::ZeroTable& desk_table() {
  static const moserlab::ZeroTable t = moserlab::scan_zeros(10.0, 20000.0);
  return t;
}

/// Zeros on [10, 3000].
inline const moserlab::ZeroTable& small_table() {
  static const moserlab::ZeroTable t = moserlab::scan_zeros(10.0, 3000.0);
  return t;
}

}  // namespace fixtures
