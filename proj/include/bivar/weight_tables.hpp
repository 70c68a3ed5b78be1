#pragma once

#include <string>
#include <vector>

#include "bivar/common.hpp"
#include "bivar/root_systems.hpp"

namespace bivar {

inline constexpr const char* kEngineVersion = "bivar 1.0.0";

enum class Engine { Bivariate, Freudenthal };

const char* to_string(Engine e);

struct TableRow {
  Weight mu;
  BigInt mult;
  bool mirror = false;  // type D dominant-only: (a_1, ..., -a_n) companion of a row with a_n > 0

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct TableMeta {
  std::string generated_at;  // UTC, ISO 8601
  std::string engine_version = kEngineVersion;
  Engine engine = Engine::Bivariate;
  double elapsed_seconds = 0.0;
};

/*
  Weights of pi_{k e1 + l e2} with their multiplicities, rows sorted
  lexicographically, no duplicates, no zero multiplicities. Type-A rows
  use the representative with non-negative coordinates summing to k + l.
  Metadata is informational and never serialized into the table body.
*/
struct MultiplicityTable {
  AlgebraSpec spec{Family::B, 2};
  int k = 0;
  int l = 0;
  bool dominant_only = false;
  std::vector<TableRow> rows;
  TableMeta meta;
};

/*
  Candidate dominant weights: weakly decreasing non-negative vectors of
  one-norm at most k + l (same parity as k + l for C and D), or for type A
  weakly decreasing non-negative (n+1)-vectors summing to k + l. Ordered
  by one-norm, then reverse-lexicographically.
*/
std::vector<Weight> candidate_dominants(const AlgebraSpec& spec, int k, int l);

struct BuildOptions {
  int threads = 1;
  Engine engine = Engine::Bivariate;
};

MultiplicityTable build_table(const AlgebraSpec& spec, int k, int l, bool dominant_only,
                              const BuildOptions& options = {});

struct DimensionAudit {
  BigInt computed;
  BigInt expected;
  bool ok = false;
};

/// Sum of multiplicities (weighted by Weyl orbit size in dominant mode) against the Weyl dimension.
DimensionAudit dimension_audit(const MultiplicityTable& table);

}  // namespace bivar
