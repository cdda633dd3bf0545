#include "lcekit/cli.hpp"

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lcekit/lce.hpp"
#include "lcekit/oracle.hpp"
#include "lcekit/runs.hpp"
#include "lcekit/textgen.hpp"

namespace lcekit::cli {

namespace {

using ordered_json = nlohmann::ordered_json;
using clock_type = std::chrono::steady_clock;

double ms_since(clock_type::time_point start) {
  return std::chrono::duration<double, std::milli>(clock_type::now() - start)
      .count();
}

std::vector<std::uint32_t> load_symbols(const std::string& path, bool ints) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open text file: " + path);
  std::vector<std::uint32_t> symbols;
  if (ints) {
    std::uint64_t v;
    while (in >> v) {
      if (v > 0xFFFFFFFFull)
        throw std::invalid_argument("symbol out of range in " + path);
      symbols.push_back(static_cast<std::uint32_t>(v));
    }
    if (!in.eof()) throw std::invalid_argument("bad integer in " + path);
  } else {
    std::ostringstream buf;
    buf << in.rdbuf();
    for (unsigned char c : buf.str()) symbols.push_back(c);
  }
  if (symbols.empty()) throw std::invalid_argument("empty text: " + path);
  return symbols;
}

std::vector<std::pair<std::size_t, std::size_t>> load_queries(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open query file: " + path);
  std::vector<std::pair<std::size_t, std::size_t>> queries;
  std::uint64_t i, j;
  while (in >> i) {
    if (!(in >> j))
      throw std::invalid_argument("odd number of values in " + path);
    queries.emplace_back(i, j);
  }
  if (!in.eof()) throw std::invalid_argument("bad integer in " + path);
  return queries;
}

Mode parse_mode(const std::string& mode) {
  if (mode == "ordered") return Mode::ordered;
  if (mode == "unordered") return Mode::unordered;
  throw std::invalid_argument("unknown mode: " + mode);
}

IndexConfig parse_config(const std::string& engine, std::size_t block_len) {
  IndexConfig config;
  if (engine == "base4")
    config.engine = EngineKind::base4;
  else if (engine == "pow2")
    config.engine = EngineKind::pow2;
  else
    throw std::invalid_argument("unknown engine: " + engine);
  if (block_len != 0) config.block_len = block_len;
  return config;
}

std::string checksum_hex(const std::vector<std::size_t>& answers) {
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t v : answers) {
    std::uint64_t x = v;
    for (int b = 0; b < 8; ++b) {
      h ^= x & 0xFF;
      h *= 1099511628211ull;
      x >>= 8;
    }
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

ordered_json counters_json(const StatsSnapshot& s) {
  return ordered_json{
      {"queries", s.queries},
      {"order_comparisons", s.order_comparisons},
      {"equality_tests", s.equality_tests},
      {"symbol_comparisons", s.symbol_comparisons()},
      {"memo_hits", s.memo_hits},
      {"dsu_finds", s.dsu_finds},
      {"dsu_unions", s.dsu_unions},
      {"shortlce_calls_by_level", s.shortlce_calls_by_level},
      {"unions_by_level", s.unions_by_level},
  };
}

void write_report(const ordered_json& report, const std::string& path,
                  bool to_stdout) {
  if (to_stdout) std::cout << report.dump(2) << '\n';
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write report: " + path);
  out << report.dump(2) << '\n';
}

ordered_json index_report(const std::string& command, const std::string& source,
                          LceIndex& index, const std::string& engine,
                          const std::string& mode) {
  ordered_json report;
  report["command"] = command;
  report["input"] = ordered_json{{"n", index.n()}, {"mode", mode},
                                 {"source", source}};
  report["config"] =
      ordered_json{{"engine", engine},
                   {"block_len", index.block_len()},
                   {"coarse", index.has_coarse()},
                   {"top_level", index.top_level()}};
  return report;
}

struct QueryOpts {
  std::string text_path, query_path, report_path;
  std::string engine = "base4", mode = "ordered";
  std::size_t block_len = 0;
  bool ints = false;
};

int cmd_query(const QueryOpts& opt) {
  Text text(load_symbols(opt.text_path, opt.ints), parse_mode(opt.mode));
  const auto queries = load_queries(opt.query_path);
  auto start = clock_type::now();
  LceIndex index(text, parse_config(opt.engine, opt.block_len));
  const double build_ms = ms_since(start);

  LceIndex::BatchResult result;
  try {
    start = clock_type::now();
    result = index.batch(queries);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  const double batch_ms = ms_since(start);

  for (std::size_t v : result.answers) std::cout << v << '\n';

  if (!opt.report_path.empty()) {
    ordered_json report =
        index_report("query", opt.text_path, index, opt.engine, opt.mode);
    report["preprocessing"] = counters_json(index.preprocessing_cost());
    report["preprocessing"]["wall_ms"] = build_ms;
    report["query_phase"] = counters_json(result.cost);
    report["query_phase"]["wall_ms"] = batch_ms;
    report["totals"] = counters_json(index.total_cost());
    report["answers"] = ordered_json{{"count", result.answers.size()},
                                     {"checksum", checksum_hex(result.answers)}};
    write_report(report, opt.report_path, false);
  }
  return 0;
}

struct RunsOpts {
  std::string text_path, report_path;
  std::string engine = "base4";
  std::size_t block_len = 0;
  bool ints = false;
};

int cmd_runs(const RunsOpts& opt) {
  Text text(load_symbols(opt.text_path, opt.ints), Mode::ordered);
  const auto start = clock_type::now();
  RunsResult result = compute_runs(text, parse_config(opt.engine, opt.block_len));
  const double wall_ms = ms_since(start);

  for (const Run& run : result.runs)
    std::cout << run.start << ' ' << run.end << ' ' << run.period << '\n';

  if (!opt.report_path.empty()) {
    ordered_json report;
    report["command"] = "runs";
    report["input"] = ordered_json{{"n", text.size()},
                                   {"mode", "ordered"},
                                   {"source", opt.text_path}};
    report["config"] = ordered_json{{"engine", opt.engine}};
    report["preprocessing"] = counters_json(result.preprocessing);
    report["detection"] = counters_json(result.query_cost);
    report["detection"]["lce_queries"] = result.lce_queries;
    report["detection"]["wall_ms"] = wall_ms;
    ordered_json list = ordered_json::array();
    for (const Run& run : result.runs)
      list.push_back(ordered_json{
          {"start", run.start}, {"end", run.end}, {"period", run.period}});
    report["runs"] = ordered_json{{"count", result.runs.size()},
                                  {"list", std::move(list)}};
    write_report(report, opt.report_path, false);
  }
  return 0;
}

struct VerifyOpts {
  std::string text_path;
  std::size_t samples = 200000;
  std::uint64_t seed = 1;
  bool ints = false;
};

int cmd_verify(const VerifyOpts& opt) {
  const auto symbols = load_symbols(opt.text_path, opt.ints);
  const std::size_t n = symbols.size();

  Text t_base4(symbols, Mode::ordered);
  Text t_pow2(symbols, Mode::ordered);
  Text t_unordered(symbols, Mode::unordered);
  LceIndex base4(t_base4, {EngineKind::base4, {}});
  LceIndex pow2(t_pow2, {EngineKind::pow2, {}});
  LceIndex unordered(t_unordered, {EngineKind::base4, {}});

  auto check = [&](std::size_t i, std::size_t j) -> bool {
    const std::size_t expected = naive_lce(symbols, i, j);
    const std::size_t a = base4.lce(i, j);
    const std::size_t b = pow2.lce(i, j);
    const std::size_t c = unordered.lce_unordered(i, j);
    if (a == expected && b == expected && c == expected) return true;
    std::cerr << "mismatch at (" << i << ", " << j << "): expected "
              << expected << ", base4 " << a << ", pow2 " << b
              << ", unordered " << c << '\n';
    return false;
  };

  std::size_t checked = 0;
  if (n <= 512) {
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = i; j <= n; ++j, ++checked)
        if (!check(i, j)) return 1;
  } else {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<std::size_t> pick(1, n);
    for (; checked < opt.samples; ++checked)
      if (!check(pick(rng), pick(rng))) return 1;
  }
  std::cout << "lce: " << checked << " pairs agree with the reference\n";

  if (n <= 1024) {
    Text t_runs(symbols, Mode::ordered);
    const RunsResult got = compute_runs(t_runs);
    const std::vector<Run> expected = naive_runs(symbols);
    if (got.runs != expected) {
      std::cerr << "runs mismatch: got " << got.runs.size() << ", expected "
                << expected.size() << '\n';
      return 1;
    }
    std::cout << "runs: " << expected.size()
              << " runs agree with the reference\n";
  }
  return 0;
}

struct BenchOpts {
  std::string family = "random";
  std::size_t n = 10000;
  std::uint32_t sigma = 4;
  std::size_t period = 8;
  std::size_t q = 0;
  std::uint64_t seed = 1;
  std::string engine = "base4", mode = "ordered";
  std::size_t block_len = 0;
  std::string report_path;
};

int cmd_bench(const BenchOpts& opt) {
  Text text(generate_family(opt.family, opt.n, opt.sigma, opt.period, opt.seed),
            parse_mode(opt.mode));
  auto start = clock_type::now();
  LceIndex index(text, parse_config(opt.engine, opt.block_len));
  const double build_ms = ms_since(start);

  const std::size_t q = opt.q == 0 ? opt.n : opt.q;
  std::mt19937_64 rng(opt.seed * 0x9E3779B97F4A7C15ull + 1);
  std::uniform_int_distribution<std::size_t> pick(1, opt.n);
  std::vector<std::pair<std::size_t, std::size_t>> queries(q);
  for (auto& [i, j] : queries) {
    i = pick(rng);
    j = pick(rng);
  }

  start = clock_type::now();
  const LceIndex::BatchResult result = index.batch(queries);
  const double batch_ms = ms_since(start);

  ordered_json report =
      index_report("bench", opt.family, index, opt.engine, opt.mode);
  report["input"]["sigma"] = opt.sigma;
  report["input"]["seed"] = opt.seed;
  report["preprocessing"] = counters_json(index.preprocessing_cost());
  report["preprocessing"]["wall_ms"] = build_ms;
  report["query_phase"] = counters_json(result.cost);
  report["query_phase"]["wall_ms"] = batch_ms;
  report["totals"] = counters_json(index.total_cost());
  report["answers"] = ordered_json{{"count", result.answers.size()},
                                   {"checksum", checksum_hex(result.answers)}};
  write_report(report, opt.report_path, true);
  return 0;
}

}  // namespace

int run_command(int argc, const char* const* argv) {
  CLI::App app{"LCE queries, runs, and comparison accounting"};
  app.require_subcommand(1);

  QueryOpts query_opts;
  CLI::App* query = app.add_subcommand("query", "answer LCE queries");
  query->add_option("--text", query_opts.text_path, "text file")->required();
  query->add_option("--queries", query_opts.query_path,
                    "file of 1-based position pairs")
      ->required();
  query->add_flag("--ints", query_opts.ints, "parse text as integers");
  query->add_option("--mode", query_opts.mode, "ordered|unordered");
  query->add_option("--engine", query_opts.engine, "base4|pow2");
  query->add_option("--block-len", query_opts.block_len,
                    "coarse block length (power of 4)");
  query->add_option("--report", query_opts.report_path, "write a JSON report");

  RunsOpts runs_opts;
  CLI::App* runs = app.add_subcommand("runs", "list all runs of the text");
  runs->add_option("--text", runs_opts.text_path, "text file")->required();
  runs->add_flag("--ints", runs_opts.ints, "parse text as integers");
  runs->add_option("--engine", runs_opts.engine, "base4|pow2");
  runs->add_option("--block-len", runs_opts.block_len,
                   "coarse block length (power of 4)");
  runs->add_option("--report", runs_opts.report_path, "write a JSON report");

  VerifyOpts verify_opts;
  CLI::App* verify =
      app.add_subcommand("verify", "check answers against the references");
  verify->add_option("--text", verify_opts.text_path, "text file")->required();
  verify->add_flag("--ints", verify_opts.ints, "parse text as integers");
  verify->add_option("--samples", verify_opts.samples,
                     "sampled pairs for large texts");
  verify->add_option("--seed", verify_opts.seed, "sampling seed");

  BenchOpts bench_opts;
  CLI::App* bench =
      app.add_subcommand("bench", "generate input, query, report counters");
  bench->add_option("--family", bench_opts.family,
                    "random|periodic|fibonacci|thue-morse");
  bench->add_option("--n", bench_opts.n, "text length");
  bench->add_option("--sigma", bench_opts.sigma, "alphabet size");
  bench->add_option("--period", bench_opts.period, "period of the periodic family");
  bench->add_option("--q", bench_opts.q, "number of queries (default n)");
  bench->add_option("--seed", bench_opts.seed, "generation seed");
  bench->add_option("--mode", bench_opts.mode, "ordered|unordered");
  bench->add_option("--engine", bench_opts.engine, "base4|pow2");
  bench->add_option("--block-len", bench_opts.block_len,
                    "coarse block length (power of 4)");
  bench->add_option("--report", bench_opts.report_path, "also write the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (query->parsed()) return cmd_query(query_opts);
    if (runs->parsed()) return cmd_runs(runs_opts);
    if (verify->parsed()) return cmd_verify(verify_opts);
    if (bench->parsed()) return cmd_bench(bench_opts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace lcekit::cli
