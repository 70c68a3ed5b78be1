#include "bivar/cli.hpp"

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "bivar/multiplicity.hpp"
#include "bivar/oracles.hpp"
#include "bivar/serialize.hpp"

namespace bivar::cli {

const char* to_string(BenchMode m) {
  switch (m) {
    case BenchMode::SingleWeight: return "single_weight";
    case BenchMode::FullTable: return "full_table";
    case BenchMode::DominantTable: return "dominant_table";
  }
  return "?";
}

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Target {
  std::string family;
  int rank = 0;
  int k = 0;
  int l = 0;
};

void add_target_options(CLI::App* sub, Target& t) {
  sub->add_option("--family", t.family, "A, B, C or D")->required();
  sub->add_option("--rank", t.rank, "rank n")->required();
  sub->add_option("--k", t.k, "first row length")->required();
  sub->add_option("--l", t.l, "second row length")->required();
}

AlgebraSpec checked_spec(const Target& t) {
  AlgebraSpec spec{parse_family(t.family), t.rank};
  validate(spec);
  if (t.l < 0 || t.k < t.l) {
    throw Error(ErrorKind::InvalidHighestWeight, "highest weight requires k >= l >= 0, got k=" +
                                                     std::to_string(t.k) + ", l=" + std::to_string(t.l));
  }
  return spec;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

int parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw UsageError("bad integer '" + s + "' in " + what);
  return v;
}

Weight parse_weight(const std::string& s) {
  Weight mu;
  for (const std::string& part : split(s, ',')) mu.push_back(parse_int(part, "--mu"));
  return mu;
}

int default_threads() {
  const char* env = std::getenv("BIVAR_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  const int v = parse_int(env, "BIVAR_THREADS");
  if (v < 1) throw UsageError("BIVAR_THREADS must be positive");
  return v;
}

std::string host_note() {
  char name[256] = {};
  if (gethostname(name, sizeof name - 1) != 0) std::snprintf(name, sizeof name, "unknown");
  return std::string(name) + " (" + std::to_string(std::thread::hardware_concurrency()) + " hw threads)";
}

void write_text(const std::string& path, const std::string& text, std::ostream& out, bool append = false) {
  if (path == "stdout" || path == "-") {
    out << text;
    out.flush();
    return;
  }
  std::ofstream f(path, append ? std::ios::app : std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << text;
  f.flush();
  if (!f) throw IoError("write to '" + path + "' failed");
}

bool file_is_empty(const std::string& path) {
  std::ifstream f(path);
  return !f || f.peek() == std::ifstream::traits_type::eof();
}

template <class F>
double median_seconds(int repeat, F&& body) {
  std::vector<double> times;
  for (int i = 0; i < repeat; ++i) {
    const auto start = std::chrono::steady_clock::now();
    body();
    times.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  std::sort(times.begin(), times.end());
  const std::size_t m = times.size() / 2;
  return times.size() % 2 ? times[m] : (times[m - 1] + times[m]) / 2;
}

std::string weight_field(const Weight& mu) {
  std::string s;
  for (std::size_t i = 0; i < mu.size(); ++i) s += (i ? ";" : "") + std::to_string(mu[i]);
  return s;
}

// ---------------------------------------------------------------------------
// verify

struct Verifier {
  std::ostream& out;
  long comparisons = 0;
  long mismatches = 0;

  void compare(const char* oracle, const GridPoint& p, const Weight& mu, const BigInt& lhs, const BigInt& rhs) {
    ++comparisons;
    if (lhs == rhs) return;
    ++mismatches;
    out << "MISMATCH oracle=" << oracle << " spec=" << p.spec.name() << " k=" << p.k << " l=" << p.l
        << " mu=" << bivar::to_string(mu) << " lhs=" << lhs.get_str() << " rhs=" << rhs.get_str() << '\n';
  }
};

std::vector<Weight> verify_weights(const GridPoint& p) {
  std::vector<Weight> ws = candidate_dominants(p.spec, p.k, p.l);
  if (p.spec.family == Family::D) {
    const std::size_t n = ws.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (ws[i].back() > 0) {
        Weight bar = ws[i];
        bar.back() = -bar.back();
        ws.push_back(std::move(bar));
      }
    }
  }
  return ws;
}

void verify_point(const GridPoint& p, bool freudenthal, bool convolution, bool kostka, Verifier& v) {
  const std::vector<Weight> weights = verify_weights(p);
  std::vector<BigInt> lhs;
  lhs.reserve(weights.size());
  for (const Weight& mu : weights) lhs.push_back(mult_bivariate(p.spec, p.k, p.l, mu));

  // Single-weight answers against the rows of the table builder.
  const MultiplicityTable table = build_table(p.spec, p.k, p.l, true);
  for (const TableRow& row : table.rows) {
    v.compare("table", p, row.mu, mult_bivariate(p.spec, p.k, p.l, row.mu), row.mult);
  }
  const DimensionAudit audit = dimension_audit(table);
  v.compare("dimension", p, {}, audit.computed, audit.expected);

  if (freudenthal) {
    const WeightDiagram d = freudenthal_diagram(p.spec, bivariate_highest_weight(p.spec, p.k, p.l));
    for (std::size_t i = 0; i < weights.size(); ++i) v.compare("freudenthal", p, weights[i], lhs[i], d.at(weights[i]));
    for (const auto& [mu, m] : d.entries) v.compare("freudenthal", p, mu, mult_bivariate(p.spec, p.k, p.l, mu), m);
  }
  if (convolution) {
    for (std::size_t i = 0; i < weights.size(); ++i) {
      v.compare("convolution", p, weights[i], lhs[i], convolution_mult(p.spec, p.k, p.l, weights[i]));
      v.compare("convolution-tensor", p, weights[i], tensor_mult(p.spec, p.k, p.l, weights[i]),
                convolution_tensor_mult(p.spec, p.k, p.l, weights[i]));
    }
  }
  if (kostka && p.spec.family == Family::A) {
    const int shape[2] = {p.k, p.l};
    for (std::size_t i = 0; i < weights.size(); ++i) {
      v.compare("kostka", p, weights[i], lhs[i], kostka_count(std::span<const int>(shape, p.l > 0 ? 2 : 1), weights[i]));
    }
  }
}

// ---------------------------------------------------------------------------
// bench

struct BenchPoint {
  AlgebraSpec spec;
  int k;
  int l;
};

BenchRecord time_table(const BenchPoint& p, Engine engine, bool dominant_only, int repeat) {
  BenchRecord r;
  r.spec = p.spec;
  r.k = p.k;
  r.l = p.l;
  r.engine = engine;
  r.mode = dominant_only ? BenchMode::DominantTable : BenchMode::FullTable;
  BuildOptions opt;
  opt.engine = engine;
  r.elapsed = median_seconds(repeat, [&] { r.rows = static_cast<long>(build_table(p.spec, p.k, p.l, dominant_only, opt).rows.size()); });
  return r;
}

BenchRecord time_single(const BenchPoint& p, Engine engine, const Weight& mu, int repeat) {
  BenchRecord r;
  r.spec = p.spec;
  r.k = p.k;
  r.l = p.l;
  r.engine = engine;
  r.mode = BenchMode::SingleWeight;
  r.rows = 1;
  r.weight = weight_field(mu);
  BigInt sink;
  if (engine == Engine::Bivariate) {
    r.elapsed = median_seconds(repeat, [&] { sink = mult_bivariate(p.spec, p.k, p.l, mu); });
  } else {
    const Weight hw = bivariate_highest_weight(p.spec, p.k, p.l);
    r.elapsed = median_seconds(repeat, [&] { sink = freudenthal_diagram(p.spec, hw).at(mu); });
  }
  return r;
}

std::vector<BenchRecord> suite_table2(int repeat) {
  std::vector<BenchRecord> out;
  for (int l = 0; l <= 7; ++l) {
    const BenchPoint p{{Family::D, 4}, 14 - l, l};
    for (Engine e : {Engine::Bivariate, Engine::Freudenthal}) out.push_back(time_table(p, e, false, repeat));
  }
  return out;
}

std::vector<BenchRecord> suite_table1(int repeat) {
  struct Row {
    int k, l, max_rank;
  };
  const Row rows[] = {{5, 3, 7}, {10, 3, 4}, {6, 6, 4}, {10, 6, 3}};
  std::vector<BenchRecord> out;
  for (const Row& row : rows) {
    for (Family f : {Family::B, Family::C, Family::D}) {
      for (int n = 3; n <= row.max_rank; ++n) {
        const BenchPoint p{{f, n}, row.k, row.l};
        for (Engine e : {Engine::Bivariate, Engine::Freudenthal}) out.push_back(time_table(p, e, false, repeat));
        if (f == Family::D) out.push_back(time_table(p, Engine::Bivariate, true, repeat));
      }
    }
  }
  const BenchPoint probe{{Family::D, 5}, 20, 6};
  const Weight probes[] = {{0, 0, 0, 0, 0}, {6, 6, 6, 4, 2}, {10, 8, 4, 2, 0}, {20, 6, 0, 0, 0}, {3, 3, 2, 1, 1}};
  for (const Weight& mu : probes) out.push_back(time_single(probe, Engine::Bivariate, mu, repeat));
  out.push_back(time_single(probe, Engine::Freudenthal, probes[0], repeat));
  return out;
}

}  // namespace

std::string bench_csv_header() {
  return "family,rank,k,l,engine,mode,weight,elapsed_seconds,rows,engine_version,host\n";
}

std::string bench_csv_line(const BenchRecord& r, const std::string& host) {
  std::ostringstream os;
  os << family_letter(r.spec.family) << ',' << r.spec.rank << ',' << r.k << ',' << r.l << ','
     << bivar::to_string(r.engine) << ',' << to_string(r.mode) << ',' << r.weight << ',' << r.elapsed << ','
     << r.rows << ',' << kEngineVersion << ",\"" << host << "\"\n";
  return os.str();
}

std::vector<GridPoint> parse_grid(const std::string& text) {
  std::vector<Family> families;
  std::vector<int> ranks;
  int maxsum = -1;
  for (const std::string& clause : split(text, ';')) {
    if (clause.empty()) continue;
    const auto eq = clause.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::InvalidArgument, "grid clause without '=': " + clause);
    const std::string key = clause.substr(0, eq);
    const std::string value = clause.substr(eq + 1);
    try {
      if (key == "families") {
        for (const std::string& f : split(value, ',')) families.push_back(parse_family(f));
      } else if (key == "ranks") {
        for (const std::string& r : split(value, ',')) ranks.push_back(parse_int(r, "ranks"));
      } else if (key == "maxsum") {
        maxsum = parse_int(value, "maxsum");
      } else {
        throw Error(ErrorKind::InvalidArgument, "unknown grid key '" + key + "'");
      }
    } catch (const UsageError& e) {
      throw Error(ErrorKind::InvalidArgument, e.what());
    }
  }
  if (families.empty() || ranks.empty() || maxsum < 0) {
    throw Error(ErrorKind::InvalidArgument, "grid needs families=, ranks= and a non-negative maxsum=");
  }
  std::vector<GridPoint> out;
  for (Family f : families) {
    for (int n : ranks) {
      const AlgebraSpec spec{f, n};
      try {
        validate(spec);
      } catch (const Error&) {
        continue;
      }
      for (int s = 0; s <= maxsum; ++s) {
        for (int l = 0; 2 * l <= s; ++l) out.push_back({spec, s - l, l});
      }
    }
  }
  if (out.empty()) throw Error(ErrorKind::InvalidArgument, "grid contains no valid (family, rank) pair");
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weight multiplicities of bivariate representations of classical Lie algebras"};
  app.name("bivar");
  app.require_subcommand(1);

  Target target;
  std::string mu_text;
  CLI::App* mult = app.add_subcommand("mult", "multiplicity of a single weight");
  add_target_options(mult, target);
  mult->add_option("--mu", mu_text, "comma-separated coordinates")->required();

  Target ztarget;
  CLI::App* zero = app.add_subcommand("zero", "multiplicity of the zero weight (closed form, B/C/D)");
  add_target_options(zero, ztarget);

  Target ttarget;
  bool dominant_only = false;
  std::string format = "json";
  std::string out_path = "stdout";
  std::string engine_name = "bivariate";
  std::string bench_path;
  int parallel = 0;
  CLI::App* table = app.add_subcommand("table", "full or dominant weight table");
  add_target_options(table, ttarget);
  table->add_flag("--dominant-only", dominant_only, "dominant weights only");
  table->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  table->add_option("--out", out_path, "output path or stdout");
  table->add_option("--parallel", parallel, "worker threads (default BIVAR_THREADS or 1)")->check(CLI::PositiveNumber);
  table->add_option("--engine", engine_name)->check(CLI::IsMember({"bivariate", "freudenthal"}));
  table->add_option("--bench", bench_path, "append a timing record to this CSV");

  std::string grid = "families=A,B,C,D;ranks=2,3;maxsum=4";
  std::string oracle = "all";
  CLI::App* verify = app.add_subcommand("verify", "cross-check against the reference oracles");
  verify->add_option("--grid", grid, "families=...;ranks=...;maxsum=...");
  verify->add_option("--oracle", oracle)->check(CLI::IsMember({"freudenthal", "convolution", "kostka", "all"}));

  std::string suite = "table2";
  int repeat = 1;
  std::string bench_out = "stdout";
  Target btarget{"D", 4, 5, 3};
  std::string bench_mode = "full";
  std::string bench_mu;
  CLI::App* bench = app.add_subcommand("bench", "timing harness for both engines");
  bench->add_option("--suite", suite)->check(CLI::IsMember({"table1", "table2", "custom"}));
  bench->add_option("--repeat", repeat)->check(CLI::PositiveNumber);
  bench->add_option("--out", bench_out);
  bench->add_option("--family", btarget.family);
  bench->add_option("--rank", btarget.rank);
  bench->add_option("--k", btarget.k);
  bench->add_option("--l", btarget.l);
  bench->add_option("--mode", bench_mode)->check(CLI::IsMember({"full", "dominant", "single"}));
  bench->add_option("--mu", bench_mu, "weight for --mode single");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*mult) {
      const AlgebraSpec spec = checked_spec(target);
      const Weight mu = parse_weight(mu_text);
      check_length(spec, mu);
      out << mult_bivariate(spec, target.k, target.l, mu).get_str() << '\n';
      return kOk;
    }
    if (*zero) {
      const AlgebraSpec spec = checked_spec(ztarget);
      if (spec.family == Family::A) throw UsageError("the zero weight is not a weight of type A bivariate representations");
      out << mult_zero_weight(spec, ztarget.k, ztarget.l).get_str() << '\n';
      return kOk;
    }
    if (*table) {
      const AlgebraSpec spec = checked_spec(ttarget);
      BuildOptions opt;
      opt.threads = parallel > 0 ? parallel : default_threads();
      opt.engine = engine_name == "freudenthal" ? Engine::Freudenthal : Engine::Bivariate;
      const MultiplicityTable t = build_table(spec, ttarget.k, ttarget.l, dominant_only, opt);
      write_text(out_path, format == "csv" ? to_csv(t) : to_json(t), out);
      if (!bench_path.empty()) {
        BenchRecord r;
        r.spec = spec;
        r.k = ttarget.k;
        r.l = ttarget.l;
        r.engine = opt.engine;
        r.mode = dominant_only ? BenchMode::DominantTable : BenchMode::FullTable;
        r.elapsed = t.meta.elapsed_seconds;
        r.rows = static_cast<long>(t.rows.size());
        const bool header = file_is_empty(bench_path);
        write_text(bench_path, (header ? bench_csv_header() : "") + bench_csv_line(r, host_note()), out, true);
      }
      return kOk;
    }
    if (*verify) {
      std::vector<GridPoint> points;
      try {
        points = parse_grid(grid);
      } catch (const Error& e) {
        err << "error: invalid grid: " << e.what() << '\n';
        return kUsage;
      }
      if (oracle == "kostka") {
        for (const GridPoint& p : points) {
          if (p.spec.family != Family::A) {
            err << "error: the kostka oracle is restricted to family A (grid contains " << p.spec.name() << ")\n";
            return kUsage;
          }
        }
      }
      const bool all = oracle == "all";
      Verifier v{out};
      for (const GridPoint& p : points) {
        verify_point(p, all || oracle == "freudenthal", all || oracle == "convolution", all || oracle == "kostka", v);
      }
      out << "verify: " << points.size() << " representations, " << v.comparisons << " comparisons, "
          << v.mismatches << " mismatches\n";
      return v.mismatches == 0 ? kOk : kMismatch;
    }
    if (*bench) {
      std::vector<BenchRecord> records;
      if (suite == "table2") {
        records = suite_table2(repeat);
      } else if (suite == "table1") {
        records = suite_table1(repeat);
      } else {
        const AlgebraSpec spec = checked_spec(btarget);
        const BenchPoint p{spec, btarget.k, btarget.l};
        if (bench_mode == "single") {
          const Weight mu = bench_mu.empty() ? Weight(spec.weight_length(), 0) : parse_weight(bench_mu);
          check_length(spec, mu);
          for (Engine e : {Engine::Bivariate, Engine::Freudenthal}) records.push_back(time_single(p, e, mu, repeat));
        } else {
          for (Engine e : {Engine::Bivariate, Engine::Freudenthal}) {
            records.push_back(time_table(p, e, bench_mode == "dominant", repeat));
          }
        }
      }
      std::string text = bench_csv_header();
      const std::string host = host_note();
      for (const BenchRecord& r : records) text += bench_csv_line(r, host);
      write_text(bench_out, text, out);
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  }
  return kUsage;
}

}  // namespace bivar::cli
