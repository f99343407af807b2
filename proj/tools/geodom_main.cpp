#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "geodom/generator.hpp"
#include "geodom/graphs.hpp"
#include "geodom/instance.hpp"
#include "geodom/lkc.hpp"
#include "geodom/msds.hpp"
#include "geodom/mwds_lp.hpp"
#include "geodom/oracles.hpp"
#include "geodom/report.hpp"
#include "geodom/rng.hpp"
#include "geodom/sampling.hpp"

namespace {

using namespace geodom;

struct CommonOpts {
  std::string in_path;
  std::string out_path;
  std::string format = "json";
  std::uint64_t seed = 1;
  bool oracle = false;
  bool timing = false;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::fwrite(content.data(), 1, content.size(), stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
}

void emit_report(const CommonOpts& opts, const RunReport& report) {
  std::string body;
  if (opts.format == "csv") {
    body = report_csv_header() + "\n" + report_csv_line(report) + "\n";
  } else {
    body = report_json_line(report) + "\n";
  }
  write_output(opts.out_path, body);
}

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_oracle = true) {
  cmd->add_option("--in", opts.in_path, "instance file ('-' for stdin)")->required();
  cmd->add_option("--out", opts.out_path, "report destination (default stdout)");
  cmd->add_option("--format", opts.format, "report format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--seed", opts.seed, "random seed");
  if (with_oracle) {
    cmd->add_flag("--oracle", opts.oracle, "also solve exactly and report the ratio");
  }
  cmd->add_flag("--timing", opts.timing,
                "include wall time in the report (breaks byte determinism)");
}

void fill_ratio(RunReport& report, double value, std::optional<double> oracle_value) {
  report.value = value;
  if (oracle_value) {
    report.oracle = *oracle_value;
    report.ratio = value / *oracle_value;
  }
}

std::string trace_to_jsonl(const SamplingTrace& trace) {
  std::string out;
  for (const auto& b : trace.buckets) {
    nlohmann::json j;
    j["bucket_l"] = b.l;
    j["classes"] = b.class_count;
    out += j.dump() + "\n";
  }
  for (const auto& e : trace.elements) {
    nlohmann::json j;
    j["disk"] = e.disk_id;
    j["copy"] = e.copy;
    j["bucket_l"] = e.bucket_l;
    j["forced"] = e.forced;
    j["selected"] = e.selected;
    j["prob"] = e.prob;
    out += j.dump() + "\n";
  }
  return out;
}

// Deterministic parallel map over trial indices: every trial has its own seed
// and result slot, so worker scheduling cannot affect the aggregate.
template <typename Fn>
void parallel_trials(int trials, int workers, Fn&& fn) {
  if (workers <= 1) {
    for (int t = 0; t < trials; ++t) fn(t);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      while (true) {
        const int t = next.fetch_add(1);
        if (t >= trials) return;
        fn(t);
      }
    });
  }
  for (auto& th : pool) th.join();
}

int run_gen(const std::string& kind, const GenParams& params, const std::string& out_path) {
  GenParams p = params;
  p.kind = problem_from_name(kind);
  write_output(out_path, write_instance(generate(p)));
  return 0;
}

int run_mwds(const CommonOpts& opts, double c, double c_prime, long long stop_threshold,
             const std::string& trace_path) {
  const Instance inst = parse_instance(read_input(opts.in_path));
  if (inst.problem != ProblemKind::kMwds) throw std::runtime_error("expected an mwds instance");
  const auto g = build_containment_graph(inst.disks);

  SamplingConfig cfg;
  cfg.c = c;
  cfg.c_prime = c_prime;
  cfg.seed = opts.seed;
  cfg.stop_threshold = stop_threshold;
  SplitMix64 rng(opts.seed);
  SamplingTrace trace;

  Stopwatch watch;
  const auto chosen = iterated_mwds(g, cfg, rng, trace_path.empty() ? nullptr : &trace);
  if (!is_dominating(g, chosen)) throw std::runtime_error("solver output failed validation");
  double value = 0.0;
  for (int id : chosen) value += g.disks[id].weight;

  RunReport report;
  report.problem = "mwds";
  report.digest = instance_digest(inst);
  report.seed = opts.seed;
  report.c = c;
  report.c_prime = c_prime;
  std::optional<double> oracle_value;
  if (opts.oracle) oracle_value = exact_mwds(g).optimum;
  fill_ratio(report, value, oracle_value);
  if (opts.timing) report.time_ms = watch.ms();
  if (!trace_path.empty()) {
    write_output(trace_path, trace_to_jsonl(trace));
    report.trace_ref = trace_path;
  }
  emit_report(opts, report);
  return 0;
}

int run_msds(const CommonOpts& opts, int swap_k) {
  const Instance inst = parse_instance(read_input(opts.in_path));
  if (inst.problem != ProblemKind::kMsds) throw std::runtime_error("expected an msds instance");
  const auto dg = build_directed_graph(inst.disks);

  Stopwatch watch;
  const auto chosen = solve_msds(dg, swap_k);
  if (!is_strongly_dominating(dg, chosen)) {
    throw std::runtime_error("solver output failed validation");
  }

  RunReport report;
  report.problem = "msds";
  report.digest = instance_digest(inst);
  report.seed = opts.seed;
  report.swap_k = swap_k;
  std::optional<double> oracle_value;
  if (opts.oracle) oracle_value = exact_msds(dg).optimum;
  fill_ratio(report, static_cast<double>(chosen.size()), oracle_value);
  if (opts.timing) report.time_ms = watch.ms();
  emit_report(opts, report);
  return 0;
}

int run_lkc(const CommonOpts& opts, bool check_lemma4) {
  const Instance raw = parse_instance(read_input(opts.in_path));
  const LkcInstance inst = to_lkc(raw);
  if (inst.k > 4) throw std::runtime_error("k above the supported CLI limit of 4");
  {
    long long worst = 0;
    for (int i = 0; i < inst.num_points(); ++i) {
      long long cov = 0;
      for (const Disk& d : inst.disks) {
        if (contains(d, inst.points[i])) ++cov;
      }
      long long tuples = 1;
      for (int j = 0; j < inst.k; ++j) tuples = tuples * (cov - j) / (j + 1);
      worst = std::max(worst, tuples);
    }
    if (worst > 100000) {
      std::fprintf(stderr, "warning: up to %lld tuples per point; this may be slow\n", worst);
    }
  }

  Stopwatch watch;
  const auto sol = dp_solve(inst);
  if (!is_k_cover(inst, sol.chosen)) throw std::runtime_error("solver output failed validation");
  double value = 0.0;
  for (int id : sol.chosen) value += inst.disks[id].weight;

  RunReport report;
  report.problem = "lkc";
  report.digest = instance_digest(raw);
  report.seed = opts.seed;
  report.k = inst.k;
  report.dp_cost = sol.cost;
  std::optional<double> oracle_value;
  if (opts.oracle) oracle_value = exact_lkc(inst).optimum;
  fill_ratio(report, value, oracle_value);
  if (check_lemma4) {
    long long max_run = 0;
    for (int r : skyline_run_counts(inst, sol.chosen)) max_run = std::max<long long>(max_run, r);
    report.max_run = max_run;
  }
  if (opts.timing) report.time_ms = watch.ms();
  emit_report(opts, report);
  return 0;
}

int run_exact(const CommonOpts& opts, int cap) {
  const Instance inst = parse_instance(read_input(opts.in_path));
  Stopwatch watch;
  RunReport report;
  report.digest = instance_digest(inst);
  report.seed = opts.seed;
  switch (inst.problem) {
    case ProblemKind::kMwds:
      report.problem = "mwds";
      report.value =
          exact_mwds(build_containment_graph(inst.disks), cap > 0 ? cap : kMwdsOracleCap).optimum;
      break;
    case ProblemKind::kMsds:
      report.problem = "msds";
      report.value =
          exact_msds(build_directed_graph(inst.disks), cap > 0 ? cap : kMsdsOracleCap).optimum;
      break;
    case ProblemKind::kLkc:
      report.problem = "lkc";
      report.k = inst.k;
      report.value = exact_lkc(to_lkc(inst), cap > 0 ? cap : kLkcOracleCap).optimum;
      break;
  }
  if (opts.timing) report.time_ms = watch.ms();
  emit_report(opts, report);
  return 0;
}

int run_sampling_stats(const CommonOpts& opts, int trials, long long l_flag, double c,
                       double c_prime, int workers) {
  const Instance inst = parse_instance(read_input(opts.in_path));
  const auto g = build_containment_graph(inst.disks);
  DiskMultiset dominators;
  dominators.counts.assign(g.size(), 1);

  long long l = l_flag;
  if (l <= 0) {
    l = g.size();
    for (int d = 0; d < g.size(); ++d) l = std::min(l, multiplicity(dominators, g, d));
  }
  if (l < 2) throw std::runtime_error("instance too sparse for the sampling process (L < 2)");

  SamplingConfig cfg;
  cfg.c = c;
  cfg.c_prime = c_prime;

  std::vector<std::vector<char>> selected(trials, std::vector<char>(g.size(), 0));
  std::vector<long long> per_trial_size(trials, 0);
  SplitMix64 seeder(opts.seed);
  std::vector<std::uint64_t> trial_seeds(trials);
  for (int t = 0; t < trials; ++t) trial_seeds[t] = seeder.next_u64();

  parallel_trials(trials, workers, [&](int t) {
    SplitMix64 rng(trial_seeds[t]);
    const auto out = uniform_sampling_process(dominators, g, l, cfg, rng);
    for (int d = 0; d < g.size(); ++d) {
      if (out.counts[d] > 0) {
        selected[t][d] = 1;
        ++per_trial_size[t];
      }
    }
  });

  const double p_bound = std::min(1.0, c * std::log2(static_cast<double>(l)) / l);
  const double margin = 3.0 * std::sqrt(p_bound * (1.0 - p_bound) / trials);
  long long sum_selected = 0;
  for (int t = 0; t < trials; ++t) sum_selected += per_trial_size[t];

  std::string body;
  const bool csv = opts.format == "csv";
  if (csv) body = "disk,selected,trials,freq,bound,margin,violation\n";
  int violations = 0;
  for (int d = 0; d < g.size(); ++d) {
    long long count = 0;
    for (int t = 0; t < trials; ++t) count += selected[t][d];
    const double freq = static_cast<double>(count) / trials;
    const bool violation = freq > p_bound + margin;
    violations += violation ? 1 : 0;
    if (csv) {
      body += std::to_string(d) + "," + std::to_string(count) + "," + std::to_string(trials) +
              "," + nlohmann::json(freq).dump() + "," + nlohmann::json(p_bound).dump() + "," +
              nlohmann::json(margin).dump() + "," + (violation ? "1" : "0") + "\n";
    } else {
      nlohmann::json j;
      j["disk"] = d;
      j["selected"] = count;
      j["trials"] = trials;
      j["freq"] = freq;
      j["bound"] = p_bound;
      j["margin"] = margin;
      j["violation"] = violation;
      body += j.dump() + "\n";
    }
  }
  if (!csv) {
    nlohmann::json j;
    j["digest"] = instance_digest(inst);
    j["l"] = l;
    j["c"] = c;
    j["trials"] = trials;
    j["sum_selected"] = sum_selected;
    j["violations"] = violations;
    body += j.dump() + "\n";
  }
  write_output(opts.out_path, body);
  return 0;
}

int run_bench(const std::string& kind, const std::vector<int>& sizes, int trials,
              const CommonOpts& opts, int swap_k, double c, double c_prime, int workers) {
  const ProblemKind problem = problem_from_name(kind);
  std::string body = "problem,n,seed,value,oracle,ratio";
  if (opts.timing) body += ",time_ms";
  body += "\n";

  struct Combo {
    int n;
    std::uint64_t seed;
  };
  std::vector<Combo> combos;
  for (int n : sizes) {
    for (int t = 0; t < trials; ++t) {
      combos.push_back(
          {n, opts.seed + static_cast<std::uint64_t>(t) + 1000ULL * static_cast<std::uint64_t>(n)});
    }
  }

  // One row slot per combo: rows come out in sweep order however the workers
  // are scheduled.
  std::vector<std::string> rows(combos.size());
  parallel_trials(static_cast<int>(combos.size()), workers, [&](int idx) {
    const Combo combo = combos[static_cast<size_t>(idx)];
    GenParams p;
    p.kind = problem;
    p.num_disks = combo.n;
    p.num_points = std::max(2, combo.n - 2);
    p.k = 1;
    p.seed = combo.seed;
    Instance inst;
    try {
      inst = generate(p);
    } catch (const std::exception&) {
      return;  // lkc feasibility resampling can give up at tiny sizes
    }

    Stopwatch watch;
    double value = 0.0;
    std::optional<double> oracle_value;
    if (problem == ProblemKind::kMwds) {
      const auto g = build_containment_graph(inst.disks);
      SamplingConfig cfg;
      cfg.c = c;
      cfg.c_prime = c_prime;
      SplitMix64 rng(p.seed);
      for (int id : iterated_mwds(g, cfg, rng)) value += g.disks[id].weight;
      if (opts.oracle && g.size() <= kMwdsOracleCap) oracle_value = exact_mwds(g).optimum;
    } else if (problem == ProblemKind::kMsds) {
      const auto dg = build_directed_graph(inst.disks);
      value = static_cast<double>(solve_msds(dg, swap_k).size());
      if (opts.oracle && dg.size() <= kMsdsOracleCap) oracle_value = exact_msds(dg).optimum;
    } else {
      const auto li = to_lkc(inst);
      const auto sol = dp_solve(li);
      for (int id : sol.chosen) value += li.disks[id].weight;
      if (opts.oracle && li.num_disks() <= kLkcOracleCap) oracle_value = exact_lkc(li).optimum;
    }

    std::string row = kind + "," + std::to_string(combo.n) + "," + std::to_string(combo.seed) +
                      "," + nlohmann::json(value).dump() + ",";
    if (oracle_value) {
      row += nlohmann::json(*oracle_value).dump() + "," +
             nlohmann::json(value / *oracle_value).dump();
    } else {
      row += ",";
    }
    if (opts.timing) row += "," + nlohmann::json(watch.ms()).dump();
    rows[static_cast<size_t>(idx)] = row + "\n";
  });
  for (const std::string& row : rows) body += row;
  write_output(opts.out_path, body);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"geodom: geometric domination and coverage solvers"};
  app.require_subcommand(1);

  GenParams gen_params;
  std::string gen_kind = "mwds", gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "generate a random instance");
  gen_cmd->add_option("--kind", gen_kind, "mwds, msds or lkc")
      ->check(CLI::IsMember({"mwds", "msds", "lkc"}));
  gen_cmd->add_option("--disks", gen_params.num_disks, "number of disks");
  gen_cmd->add_option("--points", gen_params.num_points, "number of points (lkc)");
  gen_cmd->add_option("--k", gen_params.k, "coverage multiplicity (lkc)");
  gen_cmd->add_option("--density", gen_params.density, "crowding knob");
  gen_cmd->add_option("--rmin", gen_params.radius_min, "minimum radius");
  gen_cmd->add_option("--rmax", gen_params.radius_max, "maximum radius");
  gen_cmd->add_option("--wmin", gen_params.weight_min, "minimum weight");
  gen_cmd->add_option("--wmax", gen_params.weight_max, "maximum weight");
  gen_cmd->add_option("--seed", gen_params.seed, "random seed");
  gen_cmd->add_option("--out", gen_out, "output file (default stdout)");

  CommonOpts mwds_opts;
  double mwds_c = 4.0, mwds_cprime = 32.0;
  long long mwds_stop = 2;
  std::string mwds_trace;
  auto* mwds_cmd = app.add_subcommand("mwds", "randomized min-weight dominating set");
  add_common(mwds_cmd, mwds_opts);
  mwds_cmd->add_option("--c", mwds_c, "selection-probability constant");
  mwds_cmd->add_option("--cprime", mwds_cprime, "class-count constant");
  mwds_cmd->add_option("--stop-threshold", mwds_stop, "keep everything once L drops here");
  mwds_cmd->add_option("--trace", mwds_trace, "write a sampling trace to this file");

  CommonOpts msds_opts;
  int msds_swap_k = 3;
  auto* msds_cmd = app.add_subcommand("msds", "strongly dominating set via local search");
  add_common(msds_cmd, msds_opts);
  msds_cmd->add_option("--swap-k", msds_swap_k, "local-search swap size");

  CommonOpts lkc_opts;
  bool lkc_lemma4 = false;
  auto* lkc_cmd = app.add_subcommand("lkc", "weighted linear K-cover dynamic program");
  add_common(lkc_cmd, lkc_opts);
  lkc_cmd->add_flag("--check-lemma4", lkc_lemma4, "report the max skyline run count");

  CommonOpts exact_opts;
  int exact_cap = 0;
  auto* exact_cmd = app.add_subcommand("exact", "exact oracle for any instance kind");
  add_common(exact_cmd, exact_opts, /*with_oracle=*/false);
  exact_cmd->add_option("--cap", exact_cap, "override the oracle size cap");

  CommonOpts stats_opts;
  int stats_trials = 2000, stats_workers = static_cast<int>(std::thread::hardware_concurrency());
  long long stats_l = 0;
  double stats_c = 4.0, stats_cprime = 32.0;
  auto* stats_cmd =
      app.add_subcommand("sampling-stats", "per-disk selection frequencies vs the bound");
  add_common(stats_cmd, stats_opts, /*with_oracle=*/false);
  stats_cmd->add_option("--trials", stats_trials, "number of seeded runs");
  stats_cmd->add_option("--l", stats_l, "sampling parameter L (default: min multiplicity)");
  stats_cmd->add_option("--c", stats_c, "selection-probability constant");
  stats_cmd->add_option("--cprime", stats_cprime, "class-count constant");
  stats_cmd->add_option("--workers", stats_workers, "worker threads");

  CommonOpts bench_opts;
  std::string bench_kind = "mwds";
  std::vector<int> bench_sizes{8, 10, 12};
  int bench_trials = 3, bench_swap_k = 3;
  int bench_workers = static_cast<int>(std::thread::hardware_concurrency());
  double bench_c = 4.0, bench_cprime = 32.0;
  auto* bench_cmd = app.add_subcommand("bench", "sweep sizes and emit plot-ready CSV");
  bench_cmd->add_option("--kind", bench_kind, "mwds, msds or lkc")
      ->check(CLI::IsMember({"mwds", "msds", "lkc"}));
  bench_cmd->add_option("--sizes", bench_sizes, "instance sizes")->delimiter(',');
  bench_cmd->add_option("--trials", bench_trials, "instances per size");
  bench_cmd->add_option("--seed", bench_opts.seed, "base seed");
  bench_cmd->add_option("--swap-k", bench_swap_k, "msds swap size");
  bench_cmd->add_option("--c", bench_c, "mwds sampling constant");
  bench_cmd->add_option("--cprime", bench_cprime, "mwds class-count constant");
  bench_cmd->add_flag("--oracle", bench_opts.oracle, "include oracle values and ratios");
  bench_cmd->add_flag("--timing", bench_opts.timing, "include wall time");
  bench_cmd->add_option("--workers", bench_workers, "worker threads");
  bench_cmd->add_option("--out", bench_opts.out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (gen_cmd->parsed()) return run_gen(gen_kind, gen_params, gen_out);
    if (mwds_cmd->parsed()) return run_mwds(mwds_opts, mwds_c, mwds_cprime, mwds_stop, mwds_trace);
    if (msds_cmd->parsed()) return run_msds(msds_opts, msds_swap_k);
    if (lkc_cmd->parsed()) return run_lkc(lkc_opts, lkc_lemma4);
    if (exact_cmd->parsed()) return run_exact(exact_opts, exact_cap);
    if (stats_cmd->parsed()) {
      return run_sampling_stats(stats_opts, stats_trials, stats_l, stats_c, stats_cprime,
                                stats_workers);
    }
    if (bench_cmd->parsed()) {
      return run_bench(bench_kind, bench_sizes, bench_trials, bench_opts, bench_swap_k, bench_c,
                       bench_cprime, bench_workers);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
