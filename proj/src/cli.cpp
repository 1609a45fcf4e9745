#include "warp_lis/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "warp_lis/dtw_dp.hpp"
#include "warp_lis/index_io.hpp"
#include "warp_lis/reduction.hpp"
#include "warp_lis/selftest.hpp"
#include "warp_lis/semilocal_index.hpp"
#include "warp_lis/solvers.hpp"

namespace warp_lis::cli {
namespace {

using Json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

TimeSeries load_series(const std::string& path) {
  return parse_time_series(read_file(path), ends_with(path, ".json") ? SeriesFormat::json : SeriesFormat::csv);
}

DissimilaritySpec parse_diss(const std::string& text, std::optional<std::int64_t> cap) {
  if (text == "abs") return DissimilaritySpec::absolute(cap);
  if (text == "sq") return DissimilaritySpec::squared(cap);
  if (text.rfind("matrix:", 0) == 0) {
    return DissimilaritySpec::explicit_grid(parse_matrix_json(read_file(text.substr(7))), cap);
  }
  throw CLI::ValidationError("--diss", "expected abs, sq or matrix:FILE, got " + text);
}

// Flags shared by every command that reads a pair of series.
struct PairArgs {
  std::string a;
  std::string b;
  std::string diss = "abs";
  std::optional<std::int64_t> c;

  void add_to(CLI::App* app, bool need_b) {
    app->add_option("--a", a, "series A (CSV, or JSON when the name ends in .json)")->required();
    if (need_b) app->add_option("--b", b, "series B")->required();
    app->add_option("--diss", diss, "abs | sq | matrix:FILE")->capture_default_str();
    app->add_option("--c", c, "dissimilarity cap; defaults to the largest entry");
  }

  DissimilarityTable table(std::ostream& err) const {
    const TimeSeries sa = load_series(a);
    const TimeSeries sb = b.empty() ? sa : load_series(b);
    DissimilarityTable t = build_dissimilarity(sa, sb, parse_diss(diss, c));
    for (const auto& w : t.warnings()) err << "warning: " << w << '\n';
    return t;
  }
};

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::invariant_violation:
    case Errc::oracle_inconsistency:
      return internal_error;
    default:
      return data_error;
  }
}

Json error_object(std::string_view code, const std::string& message) {
  return Json{{"error", Json{{"code", code}, {"message", message}}}};
}

int thread_cap() {
  const char* env = std::getenv("WARP_LIS_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1) {
    throw CLI::ValidationError("WARP_LIS_THREADS", "must be a positive integer");
  }
  // Every stage runs sequentially, so the cap never needs more than one thread.
  return 1;
}

std::vector<int> parse_sizes(const std::string& text) {
  std::vector<int> sizes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      sizes.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--n", "expected a comma-separated list of sizes");
    }
    if (sizes.back() < 1) throw CLI::ValidationError("--n", "sizes must be positive");
  }
  if (sizes.empty()) throw CLI::ValidationError("--n", "no sizes given");
  return sizes;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Json bench(const std::vector<int>& sizes, int c, std::uint64_t seed, int queries, bool with_circular) {
  Json rows = Json::array();
  std::mt19937_64 rng(seed);
  for (const int n : sizes) {
    std::uniform_int_distribution<int> value(0, c);
    std::vector<double> a(static_cast<std::size_t>(n));
    std::vector<double> b(static_cast<std::size_t>(n));
    for (auto& x : a) x = value(rng);
    for (auto& x : b) x = value(rng);
    const DissimilarityTable t =
        build_dissimilarity(TimeSeries(a), TimeSeries(b), DissimilaritySpec::absolute(c));

    auto start = std::chrono::steady_clock::now();
    const SemiLocalDtwIndex index = build_index(t);
    const double build = seconds_since(start);

    std::uniform_int_distribution<int> pick(1, n);
    std::vector<double> times;
    for (int q = 0; q < queries; ++q) {
      int i1 = pick(rng);
      int i2 = pick(rng);
      if (i1 > i2) std::swap(i1, i2);
      start = std::chrono::steady_clock::now();
      const auto d = index.distance(SubstringVsWholeB{i1, i2});
      times.push_back(seconds_since(start));
      if (d < 0) throw Error(Errc::invariant_violation, "negative distance");
    }
    std::sort(times.begin(), times.end());
    Json row{{"n", n}, {"c", c}, {"W", index.width()}, {"build_seconds", build},
             {"median_query_seconds", times.empty() ? 0.0 : times[times.size() / 2]}};
    if (with_circular) {
      start = std::chrono::steady_clock::now();
      const CircularResult r = circular_dtw(t);
      row["circular_seconds"] = seconds_since(start);
      row["circular_distance"] = r.distance;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"DTW through banded LIS: distances, semi-local index and solvers", "warp-lis"};
  app.require_subcommand(1);
  Json result;

  PairArgs dtw_args;
  auto* dtw = app.add_subcommand("dtw", "DTW distance and one optimal path");
  dtw_args.add_to(dtw, true);

  PairArgs reduce_args;
  auto* reduce = app.add_subcommand("reduce", "the LIS sequence S and its lookup arrays");
  reduce_args.add_to(reduce, true);

  auto* index = app.add_subcommand("index", "build or query a semi-local index");
  index->require_subcommand(1);
  PairArgs build_args;
  std::string out_path;
  auto* index_build = index->add_subcommand("build", "build an index and write it as JSON");
  build_args.add_to(index_build, true);
  index_build->add_option("--out", out_path, "index file to write")->required();

  std::string idx_path;
  std::string shape;
  std::optional<int> i1, i2, j1, j2;
  auto* index_query = index->add_subcommand("query", "answer one semi-local query");
  index_query->add_option("--idx", idx_path, "index file")->required();
  index_query->add_option("--shape", shape, "sub-a | sub-b | pre-suf | suf-pre")
      ->required()
      ->check(CLI::IsMember({"sub-a", "sub-b", "pre-suf", "suf-pre"}));
  index_query->add_option("--i1", i1, "first index into A");
  index_query->add_option("--i2", i2, "last index into A");
  index_query->add_option("--j1", j1, "first index into B");
  index_query->add_option("--j2", j2, "last index into B");

  PairArgs circular_args;
  auto* circular = app.add_subcommand("circular", "best circular shift of A against B");
  circular_args.add_to(circular, true);

  PairArgs sqrt_args;
  auto* sqrt_cmd = app.add_subcommand("sqrt", "best split of A into two similar halves");
  sqrt_args.add_to(sqrt_cmd, false);

  PairArgs periodic_args;
  auto* periodic = app.add_subcommand("periodic", "cut B into repeated occurrences of A");
  periodic_args.add_to(periodic, true);

  SelftestOptions st;
  auto* selftest = app.add_subcommand("selftest", "randomized equivalence suites");
  selftest->add_option("--max-len", st.max_len, "longest random series")->capture_default_str()->check(CLI::PositiveNumber);
  selftest->add_option("--trials", st.trials, "instances per suite")->capture_default_str()->check(CLI::NonNegativeNumber);
  selftest->add_option("--seed", st.seed, "random seed")->capture_default_str();

  std::string bench_sizes = "100,200,400";
  int bench_c = 4;
  std::uint64_t bench_seed = 1;
  int bench_queries = 1000;
  bool bench_circular = false;
  auto* bench_cmd = app.add_subcommand("bench", "index build and query timings on random series");
  bench_cmd->add_option("--n", bench_sizes, "comma-separated series lengths")->capture_default_str();
  bench_cmd->add_option("--c", bench_c, "values are drawn from 0..c")->capture_default_str()->check(CLI::Range(1, 1000));
  bench_cmd->add_option("--seed", bench_seed, "random seed")->capture_default_str();
  bench_cmd->add_option("--queries", bench_queries, "timed queries per size")->capture_default_str()->check(CLI::NonNegativeNumber);
  bench_cmd->add_flag("--circular", bench_circular, "also time the circular solver");

  try {
    app.parse(argc, argv);
    const int threads = thread_cap();

    if (*dtw) {
      const DissimilarityTable t = dtw_args.table(err);
      const auto [distance, path] = dtw_alignment(t.ints(), SubRange{1, t.rows(), 1, t.cols()});
      Json pairs = Json::array();
      for (const auto& [i, j] : path.pairs) pairs.push_back({i, j});
      result = Json{{"distance", distance}, {"path", pairs}};
    } else if (*reduce) {
      const DtwSequence s = build_dtw_sequence(WeightedReduction(reduce_args.table(err)));
      result = Json{{"S", s.seq}, {"W", s.size()}, {"Gl", s.row_first_pos}, {"Gr", s.row_last_pos},
                    {"Hl", s.col_low_value}, {"Hr", s.col_high_value}};
    } else if (*index_build) {
      const SemiLocalDtwIndex built = build_index(build_args.table(err));
      std::ofstream file(out_path, std::ios::binary);
      if (!file) throw Error(Errc::io_error, "cannot write " + out_path);
      save_index(built, file);
      result = Json{{"out", out_path}, {"m", built.rows()}, {"n", built.cols()}, {"c", built.cap()},
                    {"W", built.width()}};
    } else if (*index_query) {
      std::ifstream file(idx_path, std::ios::binary);
      if (!file) throw Error(Errc::io_error, "cannot open " + idx_path);
      const SemiLocalDtwIndex loaded = load_index(file);
      const auto need = [&](const std::optional<int>& v, const char* flag) {
        if (!v) throw CLI::RequiredError(std::string(flag) + " is required for --shape " + shape);
        return *v;
      };
      QueryShape q;
      if (shape == "sub-a") q = SubstringVsWholeB{need(i1, "--i1"), need(i2, "--i2")};
      else if (shape == "sub-b") q = WholeAVsSubstring{need(j1, "--j1"), need(j2, "--j2")};
      else if (shape == "pre-suf") q = PrefixAVsSuffixB{need(i2, "--i2"), need(j1, "--j1")};
      else q = SuffixAVsPrefixB{need(i1, "--i1"), need(j2, "--j2")};
      const QueryResult r = loaded.query(q);
      result = Json{{"distance", r.distance}, {"fallback", r.fallback}};
    } else if (*circular) {
      const CircularResult r = circular_dtw(circular_args.table(err));
      result = Json{{"distance", r.distance}, {"shift", r.shift}};
    } else if (*sqrt_cmd) {
      const SqrtResult r = sqrt_dtw(sqrt_args.table(err));
      result = Json{{"distance", r.distance}, {"split", r.split}};
    } else if (*periodic) {
      const PeriodicResult r = periodic_dtw(periodic_args.table(err));
      result = Json{{"cost", r.cost}, {"ell", r.ell}, {"cuts", r.cuts}, {"i_first", r.i_first},
                    {"i_last", r.i_last}};
    } else if (*selftest) {
      const SelftestReport rep = run_selftest(st);
      Json suites = Json::array();
      for (const auto& s : rep.suites) {
        Json j{{"name", s.name}, {"trials", s.trials}, {"failures", s.failures}};
        if (!s.first_failure.empty()) j["first_failure"] = s.first_failure;
        suites.push_back(j);
      }
      result = Json{{"passed", rep.passed}, {"suites", suites}};
      out << result.dump() << '\n';
      return rep.passed ? ok : internal_error;
    } else if (*bench_cmd) {
      result = Json{{"threads", threads},
                    {"runs", bench(parse_sizes(bench_sizes), bench_c, bench_seed, bench_queries, bench_circular)}};
    }
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    out << error_object("usage", e.what()).dump() << '\n';
    return usage;
  } catch (const Error& e) {
    out << error_object(to_string(e.code()), e.what()).dump() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    out << error_object("internal", e.what()).dump() << '\n';
    return internal_error;
  }
  out << result.dump() << '\n';
  return ok;
}

}  // namespace warp_lis::cli
