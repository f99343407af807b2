#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace geodom {

// Machine-readable result of one solver run. Serialized as a single JSON
// object per line with a fixed, sorted key set, or as CSV. Wall time is
// emitted only on request so that identical (instance, flags, seed) runs
// stay byte-identical.
struct RunReport {
  std::string problem;
  std::string digest;
  std::uint64_t seed = 0;
  double c = 0.0;
  double c_prime = 0.0;
  int swap_k = 0;
  int k = 0;
  double value = 0.0;
  std::optional<double> dp_cost;
  std::optional<double> oracle;
  std::optional<double> ratio;
  std::optional<long long> max_run;
  std::optional<double> time_ms;
  std::string trace_ref;
};

std::string report_json_line(const RunReport& r);
std::string report_csv_header();
std::string report_csv_line(const RunReport& r);

}  // namespace geodom
