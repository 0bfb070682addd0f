// Command-line surface: decompose, verify, gen, fuzz, oracle, bench.
// Exit codes: 0 success / checks pass, 1 verification failure, 2 bad input.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "convexdecomp/convexdecomp.hpp"

namespace cdc = convexdecomp;

namespace {

constexpr int kExitVerifyFail = 1;
constexpr int kExitBadInput = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw cdc::Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw cdc::Error("cannot write " + path);
  out << content;
}

cdc::PointSet load_points(const std::string& path) {
  return cdc::parse_point_set(read_file(path));
}

cdc::Decomposition run_algorithm(const std::string& algorithm,
                                 const cdc::PointSet& ps) {
  if (algorithm == "baseline") return cdc::baseline_decompose(ps);
  if (algorithm == "pm") return cdc::pm_decompose(ps);
  if (algorithm == "main") return cdc::decompose(ps);
  throw cdc::Error("unknown algorithm '" + algorithm + "'");
}

std::string archive_dir() {
  if (const char* env = std::getenv("CONVEXDECOMP_ARCHIVE_DIR")) {
    return env;
  }
  return "./convexdecomp-archive";
}

struct TrialResult {
  std::uint64_t seed = 0;
  int n = 0;
  int c = 0;
  int k = 0;
  std::string branch;
  long long cells = 0;
  long long bound = 0;
  long long slack = 0;
  bool pass = true;
  int fallbacks = 0;
  int discrepancies = 0;
  double ms = 0.0;
  std::string failure;
  std::string points_text;  // only kept for failures
};

TrialResult run_trial(std::uint64_t corpus_seed, long long trial,
                      int n_min, int n_max, const std::string& algorithm) {
  auto rng = cdc::detail::seeded_rng(corpus_seed,
                                     static_cast<std::uint64_t>(trial), 77);
  TrialResult res;
  res.seed = rng();
  const int span = n_max - n_min + 1;
  res.n = n_min + static_cast<int>(rng() % static_cast<std::uint64_t>(span));
  cdc::PointSet ps = [&] {
    if (algorithm == "pm") {
      return cdc::gen_pm_set(std::max(res.n, 5), res.seed);
    }
    return cdc::gen_random(res.n, res.seed, 1'000'000);
  }();
  res.n = ps.size();
  const auto t0 = std::chrono::steady_clock::now();
  cdc::Decomposition d = run_algorithm(algorithm, ps);
  const auto t1 = std::chrono::steady_clock::now();
  res.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  const cdc::VerificationReport rep = cdc::verify_decomposition(d, ps);
  res.c = rep.counts.c;
  res.k = rep.counts.k;
  res.cells = rep.counts.cells;
  res.bound = rep.counts.target_main;
  res.slack = rep.counts.slack_main;
  res.branch = d.acct.branch.empty() ? d.source : d.acct.branch;
  res.fallbacks = d.acct.fallbacks;
  res.discrepancies = static_cast<int>(d.discrepancies.size());
  const bool want_minimal = algorithm == "main";
  res.pass = want_minimal ? rep.all_pass() : rep.valid();
  if (!res.pass) {
    res.failure = cdc::report_lines(rep);
    res.points_text = cdc::serialize_point_set(ps);
  }
  if (algorithm == "baseline" && d.acct.fallbacks == 0 &&
      rep.counts.cells != rep.counts.target_baseline) {
    res.pass = false;
    res.failure += "baseline cardinality mismatch\n";
    res.points_text = cdc::serialize_point_set(ps);
  }
  return res;
}

std::vector<TrialResult> run_corpus(long long trials, int n_min, int n_max,
                                    std::uint64_t seed,
                                    const std::string& algorithm, int jobs) {
  std::vector<TrialResult> results(static_cast<size_t>(trials));
  if (jobs < 1) jobs = 1;
  std::vector<std::thread> workers;
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      for (long long t = w; t < trials; t += jobs) {
        results[static_cast<size_t>(t)] =
            run_trial(seed, t, n_min, n_max, algorithm);
      }
    });
  }
  for (auto& th : workers) th.join();
  return results;
}

int cmd_decompose(const std::string& input, const std::string& algorithm,
                  bool verify, const std::string& svg_path,
                  const std::string& out_path) {
  const cdc::PointSet ps = load_points(input);
  cdc::Decomposition d = run_algorithm(algorithm, ps);
  if (d.acct.c == 0) d.acct.c = cdc::convex_hull(ps).size();
  const std::string text = cdc::serialize_decomposition(d);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
  if (!svg_path.empty()) {
    write_file(svg_path, cdc::render_svg(d, ps));
  }
  if (verify) {
    const cdc::VerificationReport rep = cdc::verify_decomposition(d, ps);
    std::ostream& os = out_path.empty() ? std::cerr : std::cout;
    os << cdc::report_lines(rep);
    const bool ok = algorithm == "main" ? rep.all_pass() : rep.valid();
    if (!ok) return kExitVerifyFail;
  }
  return 0;
}

int cmd_verify(const std::string& input, const std::string& cells_path) {
  const cdc::PointSet ps = load_points(input);
  cdc::Decomposition d = cdc::parse_decomposition(read_file(cells_path));
  if (d.acct.n != ps.size()) {
    throw cdc::Error("decomposition is for n=" + std::to_string(d.acct.n) +
                     " but the point set has " + std::to_string(ps.size()) +
                     " points");
  }
  const cdc::VerificationReport rep = cdc::verify_decomposition(d, ps);
  std::cout << cdc::report_lines(rep);
  return rep.all_pass() ? 0 : kExitVerifyFail;
}

int cmd_gen(const std::string& kind, int n, std::uint64_t seed,
            long long range, const std::string& out_path) {
  const cdc::PointSet ps =
      kind == "pm" ? cdc::gen_pm_set(n, seed)
                   : cdc::gen_random(n, seed, static_cast<cdc::Coord>(range));
  const std::string text = cdc::serialize_point_set(ps);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
  return 0;
}

int cmd_fuzz(long long trials, int n_min, int n_max, std::uint64_t seed,
             const std::string& algorithm, int jobs) {
  const auto results = run_corpus(trials, n_min, n_max, seed, algorithm, jobs);
  long long failures = 0;
  long long fallbacks = 0;
  long long discrepancies = 0;
  std::map<long long, long long> slack_hist;
  for (size_t t = 0; t < results.size(); ++t) {
    const TrialResult& r = results[t];
    ++slack_hist[r.slack];
    fallbacks += r.fallbacks;
    discrepancies += r.discrepancies;
    if (!r.pass) {
      ++failures;
      std::filesystem::create_directories(archive_dir());
      const std::string stem = archive_dir() + "/fail_" +
                               std::to_string(seed) + "_" + std::to_string(t);
      write_file(stem + ".pts", r.points_text);
      write_file(stem + ".report.txt", r.failure);
      std::cout << "FAIL trial=" << t << " seed=" << r.seed << " n=" << r.n
                << " archived " << stem << ".pts\n";
    }
  }
  std::cout << "fuzz trials=" << results.size() << " algorithm=" << algorithm
            << " failures=" << failures << " fallbacks=" << fallbacks
            << " discrepancies=" << discrepancies << "\n";
  std::cout << "slack histogram vs floor(10n/7)-c:\n";
  for (const auto& [slack, count] : slack_hist) {
    std::cout << "  slack " << slack << ": " << count << "\n";
  }
  return failures == 0 ? 0 : kExitVerifyFail;
}

int cmd_oracle(const std::string& input) {
  const cdc::PointSet ps = load_points(input);
  if (ps.size() > cdc::kOracleCap) {
    throw cdc::Error("oracle cap is n <= " + std::to_string(cdc::kOracleCap));
  }
  const cdc::OracleResult res = cdc::min_convex_decomposition(ps);
  const bool bound_ok = cdc::theorem_bound_check(ps, res);
  const int c = cdc::convex_hull(ps).size();
  std::cout << "min=" << res.min_cells
            << " bound_check=" << (bound_ok ? "true" : "false")
            << (bound_ok ? "" : " (small-n regime)")
            << " target=" << (10LL * ps.size()) / 7 - c
            << " triangulations=" << res.triangulations
            << " partitions=" << res.partitions << "\n";
  const cdc::Decomposition db = cdc::baseline_decompose(ps);
  const cdc::Decomposition dm = cdc::decompose(ps);
  std::cout << "baseline=" << db.cells.size();
  const cdc::RadialStructure rs = cdc::build_radial_structure(ps);
  if (cdc::is_pm_set(rs)) {
    std::cout << " pm=" << cdc::pm_decompose(ps).cells.size();
  }
  std::cout << " main=" << dm.cells.size() << "\n";
  return 0;
}

int cmd_bench(long long trials, int n_min, int n_max, std::uint64_t seed,
              const std::string& algorithm, const std::string& csv_path,
              int jobs) {
  const auto results = run_corpus(trials, n_min, n_max, seed, algorithm, jobs);
  std::ostringstream csv;
  csv << "seed,n,c,k,branch,cells,bound,slack,ms\n";
  for (const TrialResult& r : results) {
    csv << r.seed << ',' << r.n << ',' << r.c << ',' << r.k << ',' << r.branch
        << ',' << r.cells << ',' << r.bound << ',' << r.slack << ','
        << r.ms << "\n";
  }
  if (csv_path.empty()) {
    std::cout << csv.str();
  } else {
    write_file(csv_path, csv.str());
  }
  double total_ms = 0;
  for (const TrialResult& r : results) total_ms += r.ms;
  std::cerr << "bench trials=" << results.size() << " total_ms=" << total_ms
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimal convex decompositions of planar point sets"};
  app.require_subcommand(1);

  // decompose
  std::string in_path, out_path, svg_path, algorithm = "main";
  bool do_verify = false;
  auto* dec = app.add_subcommand("decompose",
                                 "decompose a point set file into convex cells");
  dec->add_option("--input", in_path, "point set file")->required();
  dec->add_option("--algorithm", algorithm, "baseline | pm | main")
      ->check(CLI::IsMember({"baseline", "pm", "main"}))
      ->required();
  dec->add_flag("--verify", do_verify, "run the verifier on the result");
  dec->add_option("--svg", svg_path, "also render the cells to this SVG file");
  dec->add_option("--out", out_path, "decomposition file (default: stdout)");

  // verify
  std::string cells_path;
  auto* ver = app.add_subcommand("verify", "verify a decomposition file");
  ver->add_option("--input", in_path, "point set file")->required();
  ver->add_option("--cells", cells_path, "decomposition file")->required();

  // gen
  int gen_n = 10;
  std::uint64_t gen_seed = 1;
  long long gen_range = 1'000'000;
  auto* gen = app.add_subcommand("gen", "generate point sets");
  auto* gen_random_cmd = gen->add_subcommand("random", "uniform general-position set");
  gen_random_cmd->add_option("--n", gen_n, "point count")->required();
  gen_random_cmd->add_option("--seed", gen_seed, "seed")->required();
  gen_random_cmd->add_option("--range", gen_range, "coordinate range [0,R]");
  gen_random_cmd->add_option("--out", out_path, "output file (default: stdout)");
  auto* gen_pm_cmd = gen->add_subcommand("pm", "alternating-sign set");
  gen_pm_cmd->add_option("--n", gen_n, "point count")->required();
  gen_pm_cmd->add_option("--seed", gen_seed, "seed")->required();
  gen_pm_cmd->add_option("--out", out_path, "output file (default: stdout)");
  gen->require_subcommand(1);

  // fuzz
  long long trials = 100;
  int n_min = 4, n_max = 50, jobs = 0;
  auto* fuzz = app.add_subcommand("fuzz",
                                  "generate, decompose and verify in bulk");
  fuzz->add_option("--trials", trials)->required();
  fuzz->add_option("--n-min", n_min)->required();
  fuzz->add_option("--n-max", n_max)->required();
  fuzz->add_option("--seed", gen_seed)->required();
  fuzz->add_option("--algorithm", algorithm, "baseline | pm | main")
      ->check(CLI::IsMember({"baseline", "pm", "main"}));
  fuzz->add_option("--jobs", jobs, "worker threads (default: hardware)");

  // oracle
  auto* orc = app.add_subcommand("oracle",
                                 "exhaustive minimum for tiny point sets");
  orc->add_option("--input", in_path, "point set file")->required();

  // bench
  std::string csv_path;
  auto* bench = app.add_subcommand("bench", "timings and counts as CSV");
  bench->add_option("--trials", trials)->required();
  bench->add_option("--n-min", n_min)->required();
  bench->add_option("--n-max", n_max)->required();
  bench->add_option("--seed", gen_seed)->required();
  bench->add_option("--algorithm", algorithm, "baseline | pm | main")
      ->check(CLI::IsMember({"baseline", "pm", "main"}));
  bench->add_option("--csv", csv_path, "CSV output file (default: stdout)");
  bench->add_option("--jobs", jobs, "worker threads (default: hardware)");

  CLI11_PARSE(app, argc, argv);

  const int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs <= 0) jobs = std::max(1, hw);

  try {
    if (dec->parsed()) {
      return cmd_decompose(in_path, algorithm, do_verify, svg_path, out_path);
    }
    if (ver->parsed()) return cmd_verify(in_path, cells_path);
    if (gen->parsed()) {
      const std::string kind = gen_random_cmd->parsed() ? "random" : "pm";
      return cmd_gen(kind, gen_n, gen_seed, gen_range, out_path);
    }
    if (fuzz->parsed()) {
      return cmd_fuzz(trials, n_min, n_max, gen_seed, algorithm, jobs);
    }
    if (orc->parsed()) return cmd_oracle(in_path);
    if (bench->parsed()) {
      return cmd_bench(trials, n_min, n_max, gen_seed, algorithm, csv_path,
                       jobs);
    }
  } catch (const cdc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return 0;
}
