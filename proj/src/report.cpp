#include "geodom/report.hpp"

#include "json.hpp"

namespace geodom {

namespace {

nlohmann::json to_json(const RunReport& r) {
  nlohmann::json j;
  j["problem"] = r.problem;
  j["digest"] = r.digest;
  j["seed"] = r.seed;
  j["c"] = r.c;
  j["cprime"] = r.c_prime;
  j["swap_k"] = r.swap_k;
  j["k"] = r.k;
  j["value"] = r.value;
  j["dp_cost"] = r.dp_cost ? nlohmann::json(*r.dp_cost) : nlohmann::json(nullptr);
  j["oracle"] = r.oracle ? nlohmann::json(*r.oracle) : nlohmann::json(nullptr);
  j["ratio"] = r.ratio ? nlohmann::json(*r.ratio) : nlohmann::json(nullptr);
  j["max_run"] = r.max_run ? nlohmann::json(*r.max_run) : nlohmann::json(nullptr);
  j["time_ms"] = r.time_ms ? nlohmann::json(*r.time_ms) : nlohmann::json(nullptr);
  j["trace"] = r.trace_ref;
  return j;
}

std::string opt_str(const std::optional<double>& v) {
  return v ? nlohmann::json(*v).dump() : std::string();
}

}  // namespace

std::string report_json_line(const RunReport& r) { return to_json(r).dump(); }

std::string report_csv_header() {
  return "problem,digest,seed,c,cprime,swap_k,k,value,dp_cost,oracle,ratio,max_run,time_ms,trace";
}

std::string report_csv_line(const RunReport& r) {
  std::string line;
  line += r.problem + "," + r.digest + "," + std::to_string(r.seed) + ",";
  line += nlohmann::json(r.c).dump() + "," + nlohmann::json(r.c_prime).dump() + ",";
  line += std::to_string(r.swap_k) + "," + std::to_string(r.k) + ",";
  line += nlohmann::json(r.value).dump() + "," + opt_str(r.dp_cost) + "," + opt_str(r.oracle) + ",";
  line += opt_str(r.ratio) + ",";
  line += (r.max_run ? std::to_string(*r.max_run) : std::string()) + ",";
  line += opt_str(r.time_ms) + "," + r.trace_ref;
  return line;
}

}  // namespace geodom
