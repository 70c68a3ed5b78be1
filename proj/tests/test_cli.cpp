#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bivar/cli.hpp"
#include "bivar/multiplicity.hpp"
#include "bivar/serialize.hpp"
#include "doctest.h"

using namespace bivar;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("bivar_test_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST_CASE("mult command") {
  Result r = run({"mult", "--family", "C", "--rank", "2", "--k", "1", "--l", "1", "--mu", "0,0"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");

  r = run({"mult", "--family", "B", "--rank", "2", "--k", "3", "--l", "1", "--mu", "3,1"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");

  r = run({"mult", "--family", "D", "--rank", "2", "--k", "1", "--l", "0", "--mu", "0,0"});
  CHECK(r.code == 2);
  CHECK(r.err.find("rank out of range") != std::string::npos);

  r = run({"mult", "--family", "C", "--rank", "2", "--k", "1", "--l", "2", "--mu", "0,0"});
  CHECK(r.code == 2);
  CHECK(r.err.find("k >= l") != std::string::npos);

  r = run({"mult", "--family", "C", "--rank", "2", "--k", "1", "--l", "1", "--mu", "0,0,0"});
  CHECK(r.code == 2);
  CHECK(r.err.find("length") != std::string::npos);

  CHECK(run({"mult", "--family", "Q", "--rank", "2", "--k", "1", "--l", "1", "--mu", "0,0"}).code == 2);
  CHECK(run({"mult", "--family", "C", "--rank", "2", "--k", "1", "--l", "1", "--mu", "0,x"}).code == 2);
  CHECK(run({"mult", "--family", "C", "--rank", "2"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("zero command") {
  Result r = run({"zero", "--family", "D", "--rank", "4", "--k", "1", "--l", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "4\n");
  CHECK(run({"zero", "--family", "A", "--rank", "3", "--k", "1", "--l", "1"}).code == 2);
}

TEST_CASE("table command") {
  Result r = run({"table", "--family", "C", "--rank", "2", "--k", "1", "--l", "1", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).size() == 6);

  r = run({"table", "--family", "B", "--rank", "2", "--k", "1", "--l", "0", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"dimension\":\"5\"") != std::string::npos);

  const Result dom = run({"table", "--family", "D", "--rank", "3", "--k", "2", "--l", "2", "--dominant-only", "--format", "json"});
  const Result full = run({"table", "--family", "D", "--rank", "3", "--k", "2", "--l", "2", "--format", "json"});
  REQUIRE(dom.code == 0);
  REQUIRE(full.code == 0);
  const MultiplicityTable d = table_from_json(dom.out);
  BigInt orbit_rows = 0;
  for (const TableRow& row : d.rows) {
    if (!row.mirror) orbit_rows += orbit_size(d.spec, row.mu);
  }
  CHECK(orbit_rows == static_cast<long>(table_from_json(full.out).rows.size()));

  CHECK(run({"table", "--family", "C", "--rank", "2", "--k", "1", "--l", "1", "--format", "xml"}).code == 2);
  CHECK(run({"table", "--family", "C", "--rank", "2", "--k", "1", "--l", "1", "--parallel", "0"}).code == 2);
  CHECK(run({"table", "--family", "C", "--rank", "2", "--k", "1", "--l", "1", "--out", "/nonexistent-dir/x.json"}).code == 3);
}

TEST_CASE("table output equals single-weight answers") {
  const Result t = run({"table", "--family", "B", "--rank", "3", "--k", "3", "--l", "2", "--format", "json"});
  REQUIRE(t.code == 0);
  for (const TableRow& row : table_from_json(t.out).rows) {
    std::string mu;
    for (std::size_t i = 0; i < row.mu.size(); ++i) mu += (i ? "," : "") + std::to_string(row.mu[i]);
    const Result m = run({"mult", "--family", "B", "--rank", "3", "--k", "3", "--l", "2", "--mu=" + mu});
    CHECK(m.out == row.mult.get_str() + "\n");
  }
}

TEST_CASE("table output is independent of threads and bench instrumentation") {
  const std::vector<std::string> base = {"table", "--family", "C", "--rank", "3", "--k", "4", "--l", "2", "--format", "csv"};
  const Result plain = run(base);
  std::vector<std::string> par = base;
  par.insert(par.end(), {"--parallel", "4"});
  CHECK(run(par).out == plain.out);

  const auto bench = temp_path("bench.csv");
  std::filesystem::remove(bench);
  std::vector<std::string> timed = base;
  timed.insert(timed.end(), {"--bench", bench.string()});
  CHECK(run(timed).out == plain.out);
  CHECK(run(timed).out == plain.out);
  const auto rows = lines(slurp(bench));
  CHECK(rows.size() == 3);
  CHECK(rows[0] == lines(cli::bench_csv_header())[0]);
  std::filesystem::remove(bench);

  ::setenv("BIVAR_THREADS", "3", 1);
  CHECK(run(base).out == plain.out);
  ::setenv("BIVAR_THREADS", "zero", 1);
  CHECK(run(base).code == 2);
  ::unsetenv("BIVAR_THREADS");

  const auto out = temp_path("table.csv");
  std::vector<std::string> to_file = base;
  to_file.insert(to_file.end(), {"--out", out.string()});
  const Result written = run(to_file);
  CHECK(written.code == 0);
  CHECK(written.out.empty());
  CHECK(slurp(out) == plain.out);
  std::filesystem::remove(out);
}

TEST_CASE("verify command") {
  Result r = run({"verify"});
  CHECK(r.code == 0);
  CHECK(r.out.find(" 0 mismatches") != std::string::npos);

  r = run({"verify", "--grid", "families=A;ranks=2,3;maxsum=5", "--oracle", "kostka"});
  CHECK(r.code == 0);

  r = run({"verify", "--grid", "families=C;ranks=2;maxsum=3", "--oracle", "kostka"});
  CHECK(r.code == 2);
  CHECK(r.err.find("family A") != std::string::npos);

  CHECK(run({"verify", "--grid", "families=C;ranks=2"}).code == 2);
  CHECK(run({"verify", "--grid", "families=C;ranks=2;maxsum=x"}).code == 2);
  CHECK(run({"verify", "--grid", "colors=C;ranks=2;maxsum=2"}).code == 2);
  CHECK(run({"verify", "--grid", "families=D;ranks=2;maxsum=2"}).code == 2);
  CHECK(run({"verify", "--oracle", "crystal"}).code == 2);
}

TEST_CASE("grid parsing") {
  const auto points = cli::parse_grid("families=B,D;ranks=2,3;maxsum=2");
  // B2, B3, D3, each with (0,0), (1,0), (2,0), (1,1).
  CHECK(points.size() == 12);
}

TEST_CASE("bench command") {
  Result r = run({"bench", "--suite", "custom", "--family", "D", "--rank", "3", "--k", "3", "--l", "1", "--repeat", "1"});
  REQUIRE(r.code == 0);
  const auto one = lines(r.out);
  r = run({"bench", "--suite", "custom", "--family", "D", "--rank", "3", "--k", "3", "--l", "1", "--repeat", "5"});
  const auto five = lines(r.out);
  REQUIRE(one.size() == 3);
  REQUIRE(five.size() == 3);
  const auto rows_field = [](const std::string& line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string c; std::getline(ss, c, ',');) cells.push_back(c);
    return cells.at(8);
  };
  for (int i = 1; i <= 2; ++i) CHECK(rows_field(one[i]) == rows_field(five[i]));
  CHECK(one[1].find(",bivariate,full_table,") != std::string::npos);
  CHECK(one[2].find(",freudenthal,full_table,") != std::string::npos);

  r = run({"bench", "--suite", "custom", "--family", "D", "--rank", "5", "--k", "20", "--l", "6", "--mode", "single",
           "--mu", "2,2,2,0,0"});
  CHECK(r.code == 0);
  CHECK(r.out.find(",single_weight,2;2;2;0;0,") != std::string::npos);

  CHECK(run({"bench", "--suite", "table9"}).code == 2);
  CHECK(run({"bench", "--suite", "custom", "--repeat", "0"}).code == 2);
}

TEST_CASE("bench table2 suite") {
  const Result r = run({"bench", "--suite", "table2", "--repeat", "1"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  CHECK(rows.size() == 17);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].rfind("D,4,", 0) == 0);
}
