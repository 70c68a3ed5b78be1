#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bivar/root_systems.hpp"
#include "bivar/weight_tables.hpp"

namespace bivar::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2, kIo = 3 };

/*
  Entry point shared by the `bivar` executable and the tests. `args`
  excludes the program name. Subcommands: mult, zero, table, verify, bench.
*/
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

enum class BenchMode { SingleWeight, FullTable, DominantTable };

const char* to_string(BenchMode m);

struct BenchRecord {
  AlgebraSpec spec{Family::D, 4};
  int k = 0;
  int l = 0;
  Engine engine = Engine::Bivariate;
  BenchMode mode = BenchMode::FullTable;
  double elapsed = 0.0;  // median wall seconds
  long rows = 0;
  std::string weight;  // single_weight mode only
};

std::string bench_csv_header();
std::string bench_csv_line(const BenchRecord& r, const std::string& host);

struct GridPoint {
  AlgebraSpec spec;
  int k;
  int l;
};

/*
  Parses "families=A,B;ranks=2,3;maxsum=4" into every valid (spec, k, l)
  with k >= l >= 0 and k + l <= maxsum. Invalid (family, rank) pairs such
  as D2 are skipped. Throws Error(InvalidArgument) on malformed input or
  when no valid point remains.
*/
std::vector<GridPoint> parse_grid(const std::string& text);

}  // namespace bivar::cli
